#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_map>

#include "flextile/complex.hpp"
#include "flextile/errors.hpp"

// Canonical labeling by individualization-refinement: color refinement from
// the tile partition, then branch on every vertex of the first non-singleton
// cell and keep the lexicographically smallest leaf code. Twin vertices
// (identical neighborhoods) in a cell are interchangeable, so only one of
// them is branched on.

namespace flextile {

namespace {

constexpr std::uint64_t kLeafBudget = 2'000'000;

struct Arc {
  std::size_t nbr;
  int dir;  // 0 = outgoing (unhatted side), 1 = incoming
  char label;
  std::int64_t mult;

  auto operator<=>(const Arc&) const = default;
};

struct IndexedGraph {
  std::size_t n = 0;
  std::vector<std::size_t> tile;
  std::vector<std::vector<Arc>> adj;
  std::vector<std::tuple<std::size_t, std::size_t, char, std::int64_t>> bonds;  // (from, to, label, mult)
};

IndexedGraph index_graph(const LabeledMultigraph& g) {
  IndexedGraph out;
  out.n = g.vertices.size();
  std::unordered_map<std::int64_t, std::size_t> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (!index.emplace(g.vertices[i].id, i).second) throw PreconditionError("duplicate vertex id");
    out.tile.push_back(g.vertices[i].tile);
  }
  std::map<std::tuple<std::size_t, std::size_t, char>, std::int64_t> mult;
  for (const auto& e : g.edges) {
    auto f = index.find(e.from);
    auto t = index.find(e.to);
    if (f == index.end() || t == index.end()) throw PreconditionError("edge references an unknown vertex");
    ++mult[{f->second, t->second, e.label}];
  }
  out.adj.resize(out.n);
  for (const auto& [key, m] : mult) {
    const auto [u, v, label] = key;
    out.adj[u].push_back({v, 0, label, m});
    out.adj[v].push_back({u, 1, label, m});
    out.bonds.emplace_back(u, v, label, m);
  }
  for (auto& list : out.adj) std::sort(list.begin(), list.end());
  return out;
}

using Coloring = std::vector<std::size_t>;

template <typename Key>
std::pair<Coloring, std::size_t> rank_keys(const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Coloring colors(keys.size());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    colors[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
  }
  return {colors, sorted.size()};
}

// Colors are dense ranks; each round's key starts with the old color, so
// cells only split and keep their relative order.
Coloring refine(const IndexedGraph& g, Coloring colors, std::size_t cells) {
  using Signature = std::pair<std::size_t, std::vector<std::tuple<int, char, std::int64_t, std::size_t>>>;
  while (cells < g.n) {
    std::vector<Signature> keys(g.n);
    for (std::size_t v = 0; v < g.n; ++v) {
      keys[v].first = colors[v];
      for (const auto& a : g.adj[v]) keys[v].second.emplace_back(a.dir, a.label, a.mult, colors[a.nbr]);
      std::sort(keys[v].second.begin(), keys[v].second.end());
    }
    auto [next, count] = rank_keys(keys);
    if (count == cells) break;
    colors = std::move(next);
    cells = count;
  }
  return colors;
}

std::size_t cell_count(const Coloring& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

class LeafSearch {
 public:
  explicit LeafSearch(const IndexedGraph& g) : g_(g) {}

  void run(const Coloring& colors) {
    const std::size_t cells = cell_count(colors);
    if (cells == g_.n) {
      leaf(colors);
      return;
    }
    std::vector<std::size_t> sizes(cells, 0);
    for (auto c : colors) ++sizes[c];
    const std::size_t target =
        static_cast<std::size_t>(std::find_if(sizes.begin(), sizes.end(), [](std::size_t s) { return s > 1; }) -
                                 sizes.begin());
    std::vector<std::size_t> explored;
    for (std::size_t v = 0; v < g_.n; ++v) {
      if (colors[v] != target) continue;
      const bool twin = std::any_of(explored.begin(), explored.end(),
                                    [&](std::size_t w) { return g_.adj[w] == g_.adj[v]; });
      if (twin) continue;
      explored.push_back(v);
      std::vector<std::pair<std::size_t, int>> keys(g_.n);
      for (std::size_t u = 0; u < g_.n; ++u) keys[u] = {colors[u], u == v ? 0 : 1};
      auto [split, count] = rank_keys(keys);
      run(refine(g_, std::move(split), count));
    }
  }

  const std::vector<std::int64_t>& best_code() const { return best_; }
  const Coloring& best_positions() const { return best_positions_; }

 private:
  void leaf(const Coloring& pos) {
    if (++leaves_ > kLeafBudget) throw BudgetExceeded("canonical labeling exceeded its search budget");
    std::vector<std::int64_t> code;
    code.push_back(static_cast<std::int64_t>(g_.n));
    std::vector<std::size_t> tile_at(g_.n);
    for (std::size_t v = 0; v < g_.n; ++v) tile_at[pos[v]] = g_.tile[v];
    for (auto t : tile_at) code.push_back(static_cast<std::int64_t>(t));
    std::vector<std::tuple<std::size_t, std::size_t, char, std::int64_t>> bonds;
    for (const auto& [u, v, label, m] : g_.bonds) bonds.emplace_back(pos[u], pos[v], label, m);
    std::sort(bonds.begin(), bonds.end());
    code.push_back(static_cast<std::int64_t>(bonds.size()));
    for (const auto& [u, v, label, m] : bonds) {
      code.insert(code.end(), {static_cast<std::int64_t>(u), static_cast<std::int64_t>(v), label, m});
    }
    if (best_positions_.empty() || code < best_) {
      best_ = std::move(code);
      best_positions_ = pos;
    }
  }

  const IndexedGraph& g_;
  std::vector<std::int64_t> best_;
  Coloring best_positions_;
  std::uint64_t leaves_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const LabeledMultigraph& graph) {
  const IndexedGraph g = index_graph(graph);
  CanonicalForm out;
  if (g.n == 0) {
    out.code = {0, 0};
    return out;
  }
  auto [initial, cells] = rank_keys(g.tile);
  LeafSearch search(g);
  search.run(refine(g, std::move(initial), cells));
  out.code = search.best_code();
  const Coloring& pos = search.best_positions();
  std::vector<std::size_t> tile_at(g.n);
  for (std::size_t v = 0; v < g.n; ++v) tile_at[pos[v]] = g.tile[v];
  for (std::size_t i = 0; i < g.n; ++i) out.graph.vertices.push_back({static_cast<std::int64_t>(i), tile_at[i]});
  std::vector<Edge> edges;
  for (const auto& [u, v, label, m] : g.bonds) {
    for (std::int64_t k = 0; k < m; ++k) {
      edges.push_back({static_cast<std::int64_t>(pos[u]), static_cast<std::int64_t>(pos[v]), label});
    }
  }
  std::sort(edges.begin(), edges.end());
  out.graph.edges = std::move(edges);
  return out;
}

bool isomorphic(const LabeledMultigraph& a, const LabeledMultigraph& b) {
  if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) return false;
  return canonical_form(a).code == canonical_form(b).code;
}

}  // namespace flextile
