#include "flextile/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "flextile/errors.hpp"
#include "flextile/feasibility.hpp"

namespace flextile {

std::int64_t LabeledMultigraph::add_vertex(std::size_t tile) {
  std::int64_t id = 0;
  for (const auto& v : vertices) id = std::max(id, v.id + 1);
  vertices.push_back({id, tile});
  return id;
}

LabeledMultigraph disjoint_union(const LabeledMultigraph& a, const LabeledMultigraph& b) {
  std::int64_t shift = 0;
  for (const auto& v : a.vertices) shift = std::max(shift, v.id + 1);
  LabeledMultigraph out = a;
  for (const auto& v : b.vertices) out.vertices.push_back({v.id + shift, v.tile});
  for (const auto& e : b.edges) out.edges.push_back({e.from + shift, e.to + shift, e.label});
  return out;
}

RealizationCheck validate_realization(const LabeledMultigraph& graph, const Pot& pot) {
  RealizationCheck check;
  std::unordered_map<std::int64_t, std::size_t> index;
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    const auto& v = graph.vertices[i];
    if (v.tile >= pot.size()) {
      throw PreconditionError("vertex " + std::to_string(v.id) + " uses unknown tile index " +
                              std::to_string(v.tile + 1));
    }
    if (!index.emplace(v.id, i).second) check.structural.push_back("duplicate vertex id " + std::to_string(v.id));
  }
  std::vector<EndCounts> observed(graph.vertices.size());
  for (const auto& e : graph.edges) {
    const auto from = index.find(e.from);
    const auto to = index.find(e.to);
    if (from == index.end() || to == index.end()) {
      check.structural.push_back("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                                 " references an unknown vertex");
      continue;
    }
    if (e.from == e.to) {
      check.structural.push_back("loop at vertex " + std::to_string(e.from));
    }
    ++observed[from->second][{e.label, false}];
    ++observed[to->second][{e.label, true}];
  }
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    const auto& tile = pot.tile(graph.vertices[i].tile);
    EndCounts expected(tile.ends().begin(), tile.ends().end());
    if (expected != observed[i]) check.violations.push_back({graph.vertices[i].id, expected, observed[i]});
  }
  return check;
}

std::vector<std::vector<std::int64_t>> components(const LabeledMultigraph& graph) {
  std::unordered_map<std::int64_t, std::size_t> index;
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) index.emplace(graph.vertices[i].id, i);
  std::vector<std::size_t> parent(graph.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : graph.edges) {
    const auto a = index.find(e.from);
    const auto b = index.find(e.to);
    if (a == index.end() || b == index.end()) continue;
    parent[find(a->second)] = find(b->second);
  }
  std::map<std::size_t, std::vector<std::int64_t>> groups;
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) groups[find(i)].push_back(graph.vertices[i].id);
  std::vector<std::vector<std::int64_t>> out;
  for (auto& [root, ids] : groups) {
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

TileDistribution tile_distribution_of(const LabeledMultigraph& graph, const Pot& pot) {
  if (!validate_realization(graph, pot).ok()) throw PreconditionError("graph is not a valid realization of the pot");
  TileDistribution dist{std::vector<std::int64_t>(pot.size(), 0)};
  for (const auto& v : graph.vertices) ++dist.counts[v.tile];
  return dist;
}

bool forced_disconnected(const TileDistribution& dist, const SingleBondPot& pot) {
  if (dist.counts.size() != 3) throw PreconditionError("single-bond distributions have 3 components");
  return 1 + dist[1] * (pot.e2() - 1) < dist[0];
}

std::vector<Decomposition> decompose_distribution(const Pot& pot, const TileDistribution& dist,
                                                  std::uint64_t budget) {
  if (!is_balanced(pot, dist)) throw PreconditionError("distribution " + to_string(dist) + " is not balanced");
  const std::size_t p = pot.size();
  __extension__ using u128 = unsigned __int128;
  u128 candidates = 1;
  for (auto r : dist.counts) {
    candidates *= static_cast<u128>(r + 1);
    if (candidates > budget) throw BudgetExceeded("decomposition search exceeds the enumeration budget");
  }

  // Every proper nonzero balanced sub-distribution, largest first.
  std::vector<TileDistribution> parts;
  TileDistribution current{std::vector<std::int64_t>(p, 0)};
  auto collect = [&](auto&& self, std::size_t j) -> void {
    if (j == p) {
      if (current.order() > 0 && current != dist && is_balanced(pot, current)) parts.push_back(current);
      return;
    }
    for (std::int64_t c = 0; c <= dist[j]; ++c) {
      current.counts[j] = c;
      self(self, j + 1);
    }
    current.counts[j] = 0;
  };
  collect(collect, 0);
  std::sort(parts.rbegin(), parts.rend());

  std::vector<Decomposition> out;
  Decomposition chosen;
  std::uint64_t nodes = 0;
  auto search = [&](auto&& self, std::size_t first, std::vector<std::int64_t>& remaining) -> void {
    if (++nodes > budget) throw BudgetExceeded("decomposition search exceeds the enumeration budget");
    if (std::all_of(remaining.begin(), remaining.end(), [](std::int64_t r) { return r == 0; })) {
      out.push_back(chosen);
      return;
    }
    for (std::size_t k = first; k < parts.size(); ++k) {
      const auto& part = parts[k];
      bool fits = true;
      for (std::size_t j = 0; j < p && fits; ++j) fits = part[j] <= remaining[j];
      if (!fits) continue;
      for (std::size_t j = 0; j < p; ++j) remaining[j] -= part[j];
      chosen.push_back(part);
      self(self, k, remaining);
      chosen.pop_back();
      for (std::size_t j = 0; j < p; ++j) remaining[j] += part[j];
    }
  };
  std::vector<std::int64_t> remaining = dist.counts;
  search(search, 0, remaining);
  return out;
}

bool gcd_disconnected_order(const SingleBondPot& pot, std::int64_t n) {
  if (gcd_classifier(pot) == 1) throw PreconditionError("gcd(e1+1, e2-1) = 1; use zeta_disconnected_order");
  if (n < 1) return false;
  // split[k]: k is a sum of >= 2 realizable orders.
  std::vector<bool> realizable(n + 1, false);
  std::vector<bool> split(n + 1, false);
  for (std::int64_t k = 1; k <= n; ++k) {
    realizable[k] = is_realizable(pot, k).has_value();
    for (std::int64_t a = 1; a < k && !split[k]; ++a) {
      split[k] = realizable[a] && (realizable[k - a] || split[k - a]);
    }
  }
  return split[n];
}

bool zeta_disconnected_order(const SingleBondPot& pot, std::int64_t n) {
  const auto z = zeta(pot);
  if (!z) throw PreconditionError("gcd(e1+1, e2-1) != 1; use gcd_disconnected_order");
  // n = zeta + (n - zeta) is the tightest two-part split.
  return n >= 2 * *z;
}

namespace {

class RealizationEnumerator {
 public:
  RealizationEnumerator(const Pot& pot, const TileDistribution& dist) {
    for (std::size_t j = 0; j < pot.size(); ++j) {
      for (std::int64_t k = 0; k < dist[j]; ++k) base_.add_vertex(j);
    }
    const std::size_t n = base_.order();
    history_.resize(n);
    for (char label : pot.bond_edge_types()) {
      std::vector<std::int64_t> out(n), in(n);
      std::int64_t out_total = 0, in_total = 0;
      for (std::size_t v = 0; v < n; ++v) {
        const auto& tile = pot.tile(base_.vertices[v].tile);
        out[v] = tile.count({label, false});
        in[v] = tile.count({label, true});
        out_total += out[v];
        in_total += in[v];
      }
      if (out_total != in_total) {
        consistent_ = false;
        return;
      }
      std::vector<std::size_t> sinks;
      for (std::size_t v = 0; v < n; ++v) {
        if (in[v] > 0) sinks.push_back(v);
      }
      for (std::size_t v = 0; v < n; ++v) {
        if (out[v] > 0) rows_.push_back({label, v, out[v], sinks});
      }
      capacity_[label] = in;
    }
    pure_sink_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      const auto& ends = pot.tile(base_.vertices[v].tile).ends();
      pure_sink_[v] = std::all_of(ends.begin(), ends.end(), [](const auto& e) { return e.first.hatted; });
    }
  }

  std::vector<LabeledMultigraph> run() {
    if (!consistent_) return {};
    row(0);
    std::vector<LabeledMultigraph> out;
    for (auto& [code, graph] : found_) out.push_back(std::move(graph));
    return out;
  }

 private:
  struct Row {
    char label;
    std::size_t source;
    std::int64_t degree;
    std::vector<std::size_t> sinks;
  };

  void row(std::size_t r) {
    if (r == rows_.size()) {
      emit();
      return;
    }
    const Row& current = rows_[r];
    // Interchangeable sinks take nonincreasing amounts. They carry only hatted ends and share tile and history.
    std::vector<std::ptrdiff_t> twin_prev(current.sinks.size(), -1);
    for (std::size_t k = 0; k < current.sinks.size(); ++k) {
      const std::size_t v = current.sinks[k];
      for (std::size_t m = k; m-- > 0;) {
        const std::size_t w = current.sinks[m];
        if (pure_sink_[v] && pure_sink_[w] && base_.vertices[v].tile == base_.vertices[w].tile &&
            history_[v] == history_[w]) {
          twin_prev[k] = static_cast<std::ptrdiff_t>(m);
          break;
        }
      }
    }
    std::vector<std::int64_t> amounts(current.sinks.size(), 0);
    cell(r, 0, current.degree, amounts, twin_prev);
  }

  void cell(std::size_t r, std::size_t k, std::int64_t left, std::vector<std::int64_t>& amounts,
            const std::vector<std::ptrdiff_t>& twin_prev) {
    const Row& current = rows_[r];
    auto& cap = capacity_[current.label];
    if (k == current.sinks.size()) {
      if (left != 0) return;
      for (std::size_t v = 0; v < history_.size(); ++v) history_[v].push_back(0);
      for (std::size_t m = 0; m < current.sinks.size(); ++m) {
        history_[current.sinks[m]].back() = amounts[m];
        for (std::int64_t c = 0; c < amounts[m]; ++c) {
          base_.add_edge(base_.vertices[current.source].id, base_.vertices[current.sinks[m]].id, current.label);
        }
      }
      row(r + 1);
      for (std::size_t m = 0; m < current.sinks.size(); ++m) {
        base_.edges.resize(base_.edges.size() - static_cast<std::size_t>(amounts[m]));
      }
      for (auto& h : history_) h.pop_back();
      return;
    }
    std::int64_t room = 0;
    for (std::size_t m = k; m < current.sinks.size(); ++m) {
      if (current.sinks[m] != current.source) room += cap[current.sinks[m]];
    }
    if (room < left) return;
    const std::size_t v = current.sinks[k];
    std::int64_t most = v == current.source ? 0 : std::min(left, cap[v]);
    if (twin_prev[k] >= 0) most = std::min(most, amounts[static_cast<std::size_t>(twin_prev[k])]);
    for (std::int64_t a = most; a >= 0; --a) {
      amounts[k] = a;
      cap[v] -= a;
      cell(r, k + 1, left - a, amounts, twin_prev);
      cap[v] += a;
    }
    amounts[k] = 0;
  }

  void emit() {
    if (++labeled_ > kGraphBudget) throw BudgetExceeded("realization enumeration exceeds its graph budget");
    CanonicalForm form = canonical_form(base_);
    found_.emplace(std::move(form.code), std::move(form.graph));
  }

  static constexpr std::uint64_t kGraphBudget = 5'000'000;

  LabeledMultigraph base_;
  bool consistent_ = true;
  std::vector<Row> rows_;
  std::map<char, std::vector<std::int64_t>> capacity_;
  std::vector<std::vector<std::int64_t>> history_;
  std::vector<bool> pure_sink_;
  std::map<std::vector<std::int64_t>, LabeledMultigraph> found_;
  std::uint64_t labeled_ = 0;
};

}  // namespace

std::vector<LabeledMultigraph> enumerate_realizations(const Pot& pot, const TileDistribution& dist,
                                                      std::int64_t max_half_edges) {
  if (dist.counts.size() != pot.size()) throw PreconditionError("distribution size does not match the pot");
  std::int64_t half_edges = 0;
  for (std::size_t j = 0; j < pot.size(); ++j) {
    if (dist[j] < 0) throw PreconditionError("negative tile count");
    half_edges += dist[j] * pot.tile(j).arms();
  }
  if (half_edges > max_half_edges) {
    throw BudgetExceeded(std::to_string(half_edges) + " half-edges exceed the enumeration limit of " +
                         std::to_string(max_half_edges));
  }
  return RealizationEnumerator(pot, dist).run();
}

}  // namespace flextile
