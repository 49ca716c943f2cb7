#include "flextile/builders.hpp"

#include <optional>
#include <sstream>

#include "flextile/errors.hpp"
#include "flextile/feasibility.hpp"

namespace flextile {

Algorithm parse_algorithm(std::string_view name) {
  if (name == "path") return Algorithm::path;
  if (name == "cycle") return Algorithm::cycle;
  if (name == "star") return Algorithm::star;
  if (name == "divalg") return Algorithm::divalg;
  if (name == "bipartite") return Algorithm::bipartite;
  if (name == "auto") return Algorithm::auto_select;
  throw PreconditionError("unknown algorithm '" + std::string(name) + "'");
}

std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::path: return "path";
    case Algorithm::cycle: return "cycle";
    case Algorithm::star: return "star";
    case Algorithm::divalg: return "divalg";
    case Algorithm::bipartite: return "bipartite";
    case Algorithm::auto_select: return "auto";
  }
  return "auto";
}

namespace {

constexpr std::size_t kBig = 0;  // t1 = {a^e1}
constexpr std::size_t kMid = 1;  // t2 = {a*^e2}
constexpr std::size_t kOne = 2;  // t3 = {a*}

// Graph under construction in role terms, tracking unmatched ends per vertex.
class RoleGraph {
 public:
  explicit RoleGraph(const SingleBondPot& pot) : pot_(pot) {}

  std::size_t add(std::size_t role) {
    roles_.push_back(role);
    free_.push_back(role == kBig ? pot_.e1() : role == kMid ? pot_.e2() : 1);
    return roles_.size() - 1;
  }

  /// Bonds an unhatted end of `big` to a hatted end of `hatted`.
  void bond(std::size_t big, std::size_t hatted) {
    if (roles_.at(big) != kBig || roles_.at(hatted) == kBig) {
      throw BuilderInvariantError("bond must join t1 to a hatted tile");
    }
    if (free_[big] <= 0 || free_[hatted] <= 0) {
      throw BuilderInvariantError("bond on a vertex with no unmatched ends");
    }
    --free_[big];
    --free_[hatted];
    bonds_.emplace_back(big, hatted);
  }

  std::size_t size() const { return roles_.size(); }
  std::size_t role(std::size_t v) const { return roles_[v]; }
  std::int64_t free(std::size_t v) const { return free_[v]; }

  std::int64_t free_total(std::size_t role) const {
    std::int64_t total = 0;
    for (std::size_t v = 0; v < roles_.size(); ++v) {
      if (roles_[v] == role) total += free_[v];
    }
    return total;
  }

  /// Pairs every unmatched end on `role` vertices with t1 ends, lowest ids first.
  void pair_residual(std::size_t role) {
    std::size_t big = 0;
    for (std::size_t v = 0; v < roles_.size(); ++v) {
      if (roles_[v] != role) continue;
      while (free_[v] > 0) {
        while (big < roles_.size() && (roles_[big] != kBig || free_[big] == 0)) ++big;
        if (big == roles_.size()) throw BuilderInvariantError("ran out of unmatched t1 ends");
        bond(big, v);
      }
    }
  }

  /// Hangs a one-armed tile on every unmatched t1 end; returns how many.
  std::int64_t attach_leaves() {
    std::int64_t leaves = 0;
    const std::size_t spine = roles_.size();
    for (std::size_t v = 0; v < spine; ++v) {
      while (roles_[v] == kBig && free_[v] > 0) {
        bond(v, add(kOne));
        ++leaves;
      }
    }
    return leaves;
  }

  LabeledMultigraph finish() const {
    for (auto f : free_) {
      if (f != 0) throw BuilderInvariantError("unmatched half-edges remain");
    }
    LabeledMultigraph graph;
    for (std::size_t v = 0; v < roles_.size(); ++v) {
      graph.vertices.push_back({static_cast<std::int64_t>(v), pot_.tile_of_role(roles_[v])});
    }
    for (const auto& [big, hatted] : bonds_) {
      const auto b = static_cast<std::int64_t>(big);
      const auto h = static_cast<std::int64_t>(hatted);
      if (pot_.hat_swapped()) graph.add_edge(h, b, pot_.label());
      else graph.add_edge(b, h, pot_.label());
    }
    return graph;
  }

 private:
  const SingleBondPot& pot_;
  std::vector<std::size_t> roles_;
  std::vector<std::int64_t> free_;
  std::vector<std::pair<std::size_t, std::size_t>> bonds_;
};

void expect_ledger(bool holds, const std::string& what) {
  if (!holds) throw BuilderInvariantError("ledger check failed: " + what);
}

void require_balanced(const SingleBondPot& pot, const TileDistribution& dist) {
  if (!is_balanced(pot, dist)) {
    throw PreconditionError("distribution " + to_string(dist) + " fails e1 R1 = e2 R2 + R3 with e1 = " +
                            std::to_string(pot.e1()) + ", e2 = " + std::to_string(pot.e2()));
  }
  if (dist.order() == 0) throw PreconditionError("distribution has order 0");
}

std::string inequality(std::int64_t lhs, const char* op, std::int64_t rhs) {
  std::ostringstream out;
  out << lhs << ' ' << op << ' ' << rhs;
  return out.str();
}

}  // namespace

LabeledMultigraph build_path(const SingleBondPot& pot, const TileDistribution& dist) {
  require_balanced(pot, dist);
  const std::int64_t r1 = dist[0], r2 = dist[1], r3 = dist[2];
  const std::int64_t e1 = pot.e1(), e2 = pot.e2();
  if (r2 == 0) {
    if (r1 == 1) return build_star(pot);
    throw PreconditionError("path algorithm needs R2 >= 1 unless the distribution is the star (1,0,e1); "
                            "with R2 = 0 the " + std::to_string(r1) + " copies of t1 cannot share a component");
  }
  if (1 + r2 * (e2 - 1) < r1) {
    throw PreconditionError("path algorithm needs 1 + R2(e2-1) >= R1, got " + inequality(1 + r2 * (e2 - 1), "<", r1));
  }

  // With R1 < R2 the spine alternates the other way round.
  const bool swapped = r1 < r2;
  const std::size_t odd_role = swapped ? kBig : kMid;
  const std::size_t even_role = swapped ? kMid : kBig;
  const std::int64_t odd_count = swapped ? r1 : r2;
  const std::int64_t even_total = swapped ? r2 : r1;

  RoleGraph g(pot);
  auto join = [&](std::size_t u, std::size_t v) {
    if (g.role(u) == kBig) g.bond(u, v);
    else g.bond(v, u);
  };

  // Step 1: spine v1..v_{2s-1}.
  std::vector<std::size_t> odd_vertices;
  for (std::int64_t k = 1; k <= 2 * odd_count - 1; ++k) {
    const std::size_t v = g.add(k % 2 == 1 ? odd_role : even_role);
    if (k % 2 == 1) odd_vertices.push_back(v);
    if (k > 1) join(v - 1, v);
  }

  // Steps 2-3: hang the remaining copies on v1, v3, ... as far as each has
  // unmatched ends (e2-1 at the ends of the spine, e2-2 inside).
  std::int64_t counter = even_total - (odd_count - 1);
  for (std::size_t v : odd_vertices) {
    const std::int64_t take = std::min(counter, g.free(v));
    for (std::int64_t c = 0; c < take; ++c) join(v, g.add(even_role));
    counter -= take;
    if (counter == 0) break;
  }
  expect_ledger(counter == 0, "all copies attached to the spine");
  expect_ledger(g.free_total(kBig) == (e1 - 1) * r1 - r2 + 1, "unmatched a after step 3 = (e1-1)R1 - R2 + 1");
  expect_ledger(g.free_total(kMid) == (e2 - 1) * r2 - r1 + 1, "unmatched a* after step 3 = (e2-1)R2 - R1 + 1");

  // Step 4.
  g.pair_residual(kMid);
  expect_ledger(g.free_total(kBig) == e1 * r1 - e2 * r2, "residual a after step 4 = e1 R1 - e2 R2");
  expect_ledger(g.free_total(kBig) == r3, "residual a after step 4 = R3");

  // Step 5.
  expect_ledger(g.attach_leaves() == r3, "one-armed tiles attached = R3");
  return g.finish();
}

LabeledMultigraph build_cycle(const SingleBondPot& pot, const TileDistribution& dist) {
  require_balanced(pot, dist);
  const std::int64_t r1 = dist[0], r2 = dist[1], r3 = dist[2];
  const std::int64_t e1 = pot.e1(), e2 = pot.e2();
  if (r1 < 1) throw PreconditionError("cycle algorithm needs R1 >= 1, got R1 = " + std::to_string(r1));
  if (r1 > r2) throw PreconditionError("cycle algorithm needs R1 <= R2, got " + inequality(r1, ">", r2));

  RoleGraph g(pot);
  // Step 1: v_{2k-1} = t1, v_{2k} = t2; with R1 = 1 this is a double edge.
  const std::size_t len = static_cast<std::size_t>(2 * r1);
  for (std::size_t i = 0; i < len; ++i) g.add(i % 2 == 0 ? kBig : kMid);
  for (std::size_t i = 1; i < len; i += 2) {
    g.bond(i - 1, i);
    g.bond((i + 1) % len, i);
  }

  // Step 2: split each cycle t2's remaining e2-2 ends between its neighbors.
  const std::int64_t back = (e2 - 2) / 2;
  const std::int64_t ahead = (e2 - 2) - back;
  for (std::size_t i = 1; i < len; i += 2) {
    for (std::int64_t c = 0; c < back; ++c) g.bond(i - 1, i);
    for (std::int64_t c = 0; c < ahead; ++c) g.bond((i + 1) % len, i);
  }
  for (std::size_t i = 0; i < len; i += 2) expect_ledger(g.free(i) == e1 - e2, "each cycle t1 has e1-e2 unmatched a");
  expect_ledger(g.free_total(kMid) == 0, "cycle t2 ends all matched");

  // Steps 3-4.
  const std::int64_t extra = r2 - r1;
  expect_ledger(extra <= r1 * (e1 - e2) && (extra == 0 || extra < r1 * (e1 - e2)), "R2 - R1 < R1(e1 - e2)");
  std::int64_t counter = extra;
  for (std::size_t i = 0; i < len && counter > 0; i += 2) {
    const std::int64_t take = std::min(counter, g.free(i));
    for (std::int64_t c = 0; c < take; ++c) g.bond(i, g.add(kMid));
    counter -= take;
  }
  expect_ledger(counter == 0, "all extra t2 copies attached");
  expect_ledger(g.free_total(kMid) == extra * (e2 - 1), "extra t2 copies have (R2-R1)(e2-1) unmatched a*");

  // Step 5.
  g.pair_residual(kMid);
  expect_ledger(g.free_total(kBig) == r1 * (e1 - e2) - e2 * extra, "residual a = R1(e1-e2) - e2(R2-R1)");
  expect_ledger(g.free_total(kBig) == r3, "residual a = R3");

  // Step 6.
  expect_ledger(g.attach_leaves() == r3, "one-armed tiles attached = R3");
  return g.finish();
}

LabeledMultigraph build_star(const SingleBondPot& pot) {
  RoleGraph g(pot);
  const std::size_t center = g.add(kBig);
  for (std::int64_t k = 0; k < pot.e1(); ++k) g.bond(center, g.add(kOne));
  return g.finish();
}

LabeledMultigraph build_divalg(const SingleBondPot& pot) {
  const auto [q, r] = division_form(pot);
  RoleGraph g(pot);
  const std::size_t center = g.add(kBig);
  for (std::int64_t k = 0; k < q; ++k) {
    const std::size_t v = g.add(kMid);
    for (std::int64_t c = 0; c < pot.e2(); ++c) g.bond(center, v);
  }
  for (std::int64_t k = 0; k < r; ++k) g.bond(center, g.add(kOne));
  return g.finish();
}

LabeledMultigraph build_bipartite(const SingleBondPot& pot) {
  RoleGraph g(pot);
  std::vector<std::size_t> bigs, mids;
  for (std::int64_t k = 0; k < pot.e2(); ++k) bigs.push_back(g.add(kBig));
  for (std::int64_t k = 0; k < pot.e1(); ++k) mids.push_back(g.add(kMid));
  for (auto b : bigs) {
    for (auto m : mids) g.bond(b, m);
  }
  return g.finish();
}

namespace {

std::optional<Algorithm> applicable_algorithm(const SingleBondPot& pot, const TileDistribution& dist) {
  const auto canonical = canonical_distributions(pot);
  if (dist == canonical[1]) return Algorithm::star;
  if (dist == canonical[0]) return Algorithm::divalg;
  if (dist[0] >= 1 && dist[0] <= dist[1]) return Algorithm::cycle;
  if (dist[1] >= 1 && 1 + dist[1] * (pot.e2() - 1) >= dist[0]) return Algorithm::path;
  return std::nullopt;
}

void require_exact(const TileDistribution& dist, const TileDistribution& expected, Algorithm algorithm) {
  if (dist != expected) {
    throw PreconditionError(std::string(algorithm_name(algorithm)) + " builds only the distribution " +
                            to_string(expected) + ", got " + to_string(dist));
  }
}

}  // namespace

LabeledMultigraph build(const SingleBondPot& pot, const TileDistribution& dist, Algorithm algorithm) {
  require_balanced(pot, dist);
  const auto canonical = canonical_distributions(pot);
  switch (algorithm) {
    case Algorithm::path: return build_path(pot, dist);
    case Algorithm::cycle: return build_cycle(pot, dist);
    case Algorithm::star: require_exact(dist, canonical[1], algorithm); return build_star(pot);
    case Algorithm::divalg: require_exact(dist, canonical[0], algorithm); return build_divalg(pot);
    case Algorithm::bipartite: require_exact(dist, canonical[2], algorithm); return build_bipartite(pot);
    case Algorithm::auto_select: break;
  }
  const auto chosen = applicable_algorithm(pot, dist);
  if (!chosen) {
    throw PreconditionError("no connected builder applies to " + to_string(dist) +
                            (forced_disconnected(dist, pot)
                                 ? ": 1 + R2(e2-1) < R1, so every realization is disconnected"
                                 : ""));
  }
  return build(pot, dist, *chosen);
}

AutoBuild build_auto(const SingleBondPot& pot, std::int64_t n) {
  const auto witnesses = realizing_distributions(pot, n);
  if (witnesses.empty()) throw InfeasibleError("order " + std::to_string(n) + " is not realizable");
  for (const auto& dist : witnesses) {
    if (const auto chosen = applicable_algorithm(pot, dist)) return {dist, *chosen, build(pot, dist, *chosen)};
  }
  throw PreconditionError("every distribution of order " + std::to_string(n) +
                          " satisfies 1 + R2(e2-1) < R1, so every realization is disconnected");
}

}  // namespace flextile
