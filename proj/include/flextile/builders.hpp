#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "flextile/complex.hpp"
#include "flextile/pot.hpp"
#include "flextile/spectrum.hpp"

namespace flextile {

enum class Algorithm { path, cycle, star, divalg, bipartite, auto_select };

/// "path", "cycle", ... "auto"; throws PreconditionError on unknown names.
Algorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm algorithm);

// All builders take role-ordered distributions (R1, R2, R3) and return graphs
// whose vertex tiles and edge directions refer to the source pot
// (`SingleBondPot::pot()`). They throw PreconditionError naming the violated
// condition, and BuilderInvariantError if an internal half-edge count
// disagrees with the closed-form ledger.

class BuilderInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Alternating path on 2 R2 - 1 vertices, extra t1 copies hung on the t2
/// vertices, leftover ends paired, then the one-armed tiles. Needs
/// 1 + R2 (e2 - 1) >= R1. With R1 < R2 the roles of t1 and t2 swap for the
/// spine. R2 = 0 is only accepted for the star (1, 0, e1).
LabeledMultigraph build_path(const SingleBondPot& pot, const TileDistribution& dist);

/// Alternating cycle on 2 R1 vertices, the e2 - 2 remaining ends of each
/// cycle t2 split between its neighbors, extra t2 copies hung on the t1
/// vertices, leftover ends paired, then the one-armed tiles. Needs
/// 1 <= R1 <= R2.
LabeledMultigraph build_cycle(const SingleBondPot& pot, const TileDistribution& dist);

/// One t1 joined to e1 one-armed tiles; distribution (1, 0, e1).
LabeledMultigraph build_star(const SingleBondPot& pot);

/// One t1 joined by e2 parallel edges to each of q t2 copies and singly to r
/// one-armed tiles, where e1 = q e2 + r.
LabeledMultigraph build_divalg(const SingleBondPot& pot);

/// K_{e2,e1}: e2 copies of t1, each bonded once to each of e1 copies of t2.
LabeledMultigraph build_bipartite(const SingleBondPot& pot);

struct AutoBuild {
  TileDistribution dist;  // role order
  Algorithm algorithm;
  LabeledMultigraph graph;
};

/// Picks a witness of order n and a builder whose precondition holds.
/// Throws InfeasibleError if n is not realizable and PreconditionError when
/// every witness is forced disconnected.
AutoBuild build_auto(const SingleBondPot& pot, std::int64_t n);

/// Runs `algorithm` on an explicit distribution; auto tries the exact
/// specializations, then cycle, then path.
LabeledMultigraph build(const SingleBondPot& pot, const TileDistribution& dist, Algorithm algorithm);

}  // namespace flextile
