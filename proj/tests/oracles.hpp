#pragma once

// Brute-force reference implementations used only by tests. None of these
// call into the library's search or algebra code.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Triple = std::array<std::int64_t, 3>;

/// Every (R1,R2,R3) with R1+R2+R3 = n and e1 R1 = e2 R2 + R3, by double loop.
inline std::vector<Triple> single_bond_distributions(std::int64_t e1, std::int64_t e2, std::int64_t n) {
  std::vector<Triple> out;
  for (std::int64_t a = 0; a <= n; ++a) {
    for (std::int64_t b = 0; a + b <= n; ++b) {
      const std::int64_t c = n - a - b;
      if (e1 * a - e2 * b - c == 0) out.push_back({a, b, c});
    }
  }
  return out;
}

inline bool single_bond_realizable(std::int64_t e1, std::int64_t e2, std::int64_t n) {
  return !single_bond_distributions(e1, e2, n).empty();
}

/// Undirected-for-connectivity multigraph on vertices 0..n-1 with tile roles.
struct SmallGraph {
  std::vector<int> role;                          // 0 = t1, 1 = t2, 2 = t3
  std::vector<std::vector<std::int64_t>> mult;    // mult[u][v]: edges u -> v
};

inline bool connected(const SmallGraph& g) {
  const std::size_t n = g.role.size();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (!seen[v] && (g.mult[u][v] > 0 || g.mult[v][u] > 0)) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

/// Minimum over all role-preserving vertex permutations of the flattened
/// (roles, adjacency) matrix.
inline std::vector<std::int64_t> brute_canonical(const SmallGraph& g) {
  const std::size_t n = g.role.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return g.role[a] < g.role[b]; });
  // Permute within role blocks: iterate the product of block permutations.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && g.role[order[j]] == g.role[order[i]]) ++j;
    blocks.push_back({i, j});
    i = j;
  }
  std::vector<std::int64_t> best;
  auto evaluate = [&] {
    std::vector<std::int64_t> code;
    for (std::size_t i = 0; i < n; ++i) code.push_back(g.role[order[i]]);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) code.push_back(g.mult[order[i]][order[j]]);
    }
    if (best.empty() || code < best) best = code;
  };
  auto recurse = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      evaluate();
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
    std::sort(first, last);
    do {
      self(self, b + 1);
    } while (std::next_permutation(first, last));
  };
  recurse(recurse, 0);
  return best;
}

struct RealizationClass {
  std::vector<std::int64_t> code;
  bool connected;
};

/// Isomorphism classes of loop-free realizations of (R1,R2,R3) for
/// {a^e1},{a*^e2},{a*}: every arrangement of hatted owners against the
/// unhatted half-edges, deduplicated by brute-force canonical form.
inline std::vector<RealizationClass> realization_classes(std::int64_t e1, std::int64_t e2, Triple dist) {
  SmallGraph base;
  std::vector<std::size_t> a_owner, hat_owner;
  for (int role = 0; role < 3; ++role) {
    for (std::int64_t k = 0; k < dist[static_cast<std::size_t>(role)]; ++k) {
      const std::size_t v = base.role.size();
      base.role.push_back(role);
      const std::int64_t arms = role == 0 ? e1 : role == 1 ? e2 : 1;
      for (std::int64_t h = 0; h < arms; ++h) (role == 0 ? a_owner : hat_owner).push_back(v);
    }
  }
  const std::size_t n = base.role.size();
  base.mult.assign(n, std::vector<std::int64_t>(n, 0));
  std::vector<RealizationClass> out;
  if (a_owner.size() != hat_owner.size()) return out;
  std::set<std::vector<std::int64_t>> seen;
  std::sort(hat_owner.begin(), hat_owner.end());
  do {
    SmallGraph g = base;
    for (std::size_t i = 0; i < a_owner.size(); ++i) ++g.mult[a_owner[i]][hat_owner[i]];
    auto code = brute_canonical(g);
    if (seen.insert(code).second) out.push_back({code, connected(g)});
  } while (std::next_permutation(hat_owner.begin(), hat_owner.end()));
  return out;
}

}  // namespace oracle
