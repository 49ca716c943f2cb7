#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "flextile/pot.hpp"
#include "flextile/spectrum.hpp"

namespace flextile {

struct Vertex {
  std::int64_t id = 0;
  std::size_t tile = 0;  // 0-based pot index

  auto operator<=>(const Vertex&) const = default;
};

/// A bonded pair of ends; `from` carries the unhatted end, `to` the hatted one.
struct Edge {
  std::int64_t from = 0;
  std::int64_t to = 0;
  char label = 'a';

  auto operator<=>(const Edge&) const = default;
};

/// A complete complex: tile-labeled vertices and directed labeled edges.
/// Parallel edges are allowed.
struct LabeledMultigraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  /// Appends a vertex with the next free id (the current vertex count).
  std::int64_t add_vertex(std::size_t tile);
  void add_edge(std::int64_t from, std::int64_t to, char label) { edges.push_back({from, to, label}); }
  std::size_t order() const noexcept { return vertices.size(); }

  bool operator==(const LabeledMultigraph&) const = default;
};

/// Disjoint union; `b`'s vertex ids are shifted past `a`'s largest id.
LabeledMultigraph disjoint_union(const LabeledMultigraph& a, const LabeledMultigraph& b);

using EndCounts = std::map<CohesiveEnd, std::int64_t>;

struct EndViolation {
  std::int64_t vertex = 0;
  EndCounts expected;
  EndCounts observed;
};

struct RealizationCheck {
  std::vector<EndViolation> violations;
  std::vector<std::string> structural;

  bool ok() const noexcept { return violations.empty() && structural.empty(); }
};

/// Checks that every vertex's incident ends (outgoing = unhatted, incoming =
/// hatted) match its tile exactly and that there are no loops or dangling
/// edges. Throws PreconditionError on a tile index outside the pot.
RealizationCheck validate_realization(const LabeledMultigraph& graph, const Pot& pot);

/// Connected components ignoring direction. Each is sorted and they are ordered by smallest id.
std::vector<std::vector<std::int64_t>> components(const LabeledMultigraph& graph);

/// Vertex count per tile; throws PreconditionError if the graph is not a
/// valid realization.
TileDistribution tile_distribution_of(const LabeledMultigraph& graph, const Pot& pot);

/// 1 + R2 (e2 - 1) < R1 for a role-ordered distribution: every realization
/// is then disconnected.
bool forced_disconnected(const TileDistribution& dist, const SingleBondPot& pot);

using Decomposition = std::vector<TileDistribution>;

/// All multisets of >= 2 nonzero balanced distributions summing to `dist`.
/// Parts are listed in nonincreasing lexicographic order; decompositions are
/// ordered by their part sequences, largest first.
std::vector<Decomposition> decompose_distribution(const Pot& pot, const TileDistribution& dist,
                                                  std::uint64_t budget = 10'000'000);

/// Sum of >= 2 orders that are each realizable (d != 1 only).
bool gcd_disconnected_order(const SingleBondPot& pot, std::int64_t n);
/// n = n_1 + ... + n_l with l >= 2 and every n_i >= zeta (d = 1 only).
/// Sufficient for a disconnected realization, not necessary.
bool zeta_disconnected_order(const SingleBondPot& pot, std::int64_t n);

inline constexpr std::int64_t kDefaultMaxHalfEdges = 12;

/// Every realization of `dist` up to multigraph isomorphism, each relabeled to
/// its canonical vertex order and sorted by canonical code. Throws
/// BudgetExceeded when the half-edge count exceeds `max_half_edges`.
std::vector<LabeledMultigraph> enumerate_realizations(const Pot& pot, const TileDistribution& dist,
                                                      std::int64_t max_half_edges = kDefaultMaxHalfEdges);

/// Isomorphism-invariant code: equal iff the graphs are isomorphic
/// (tile- and label-preserving, direction-preserving).
struct CanonicalForm {
  std::vector<std::int64_t> code;
  LabeledMultigraph graph;  // vertices renumbered 0..n-1 in canonical order
};

CanonicalForm canonical_form(const LabeledMultigraph& graph);
bool isomorphic(const LabeledMultigraph& a, const LabeledMultigraph& b);

}  // namespace flextile
