#include "flextile/feasibility.hpp"

#include <algorithm>
#include <numeric>

#include "flextile/errors.hpp"

namespace flextile {

namespace {

__extension__ using u128 = unsigned __int128;

// C(n + k, k) saturated at cap + 1.
std::uint64_t bounded_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  u128 value = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    value = value * (n + i) / i;
    if (value > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(value);
}

}  // namespace

std::vector<TileDistribution> distributions_for_order(const Pot& pot, std::int64_t n, std::uint64_t budget) {
  if (n < 1) throw PreconditionError("order n must be >= 1");
  const std::size_t p = pot.size();
  const std::uint64_t candidates = bounded_binomial(static_cast<std::uint64_t>(n), p - 1, budget);
  if (candidates > budget) {
    throw BudgetExceeded("enumerating order " + std::to_string(n) + " over " + std::to_string(p) +
                         " tile types exceeds the budget of " + std::to_string(budget) + " candidates");
  }
  const auto& labels = pot.bond_edge_types();
  std::vector<std::vector<std::int64_t>> net(labels.size(), std::vector<std::int64_t>(p));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < p; ++j) net[i][j] = pot.tile(j).net(labels[i]);
  }

  std::vector<TileDistribution> out;
  std::vector<std::int64_t> counts(p, 0);
  std::vector<std::int64_t> partial(labels.size(), 0);
  // Depth-first over compositions; the last component absorbs the remainder.
  auto recurse = [&](auto&& self, std::size_t j, std::int64_t remaining) -> void {
    if (j + 1 == p) {
      counts[j] = remaining;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (partial[i] + remaining * net[i][j] != 0) return;
      }
      out.push_back(TileDistribution{counts});
      return;
    }
    for (std::int64_t c = 0; c <= remaining; ++c) {
      counts[j] = c;
      for (std::size_t i = 0; i < labels.size(); ++i) partial[i] += c * net[i][j];
      self(self, j + 1, remaining - c);
      for (std::size_t i = 0; i < labels.size(); ++i) partial[i] -= c * net[i][j];
    }
  };
  recurse(recurse, 0, n);
  return out;
}

namespace {

// For fixed x, (e1+1) x + (1-e2) y = n pins y; z = n - x - y.
std::optional<TileDistribution> witness_at(const SingleBondPot& pot, std::int64_t n, std::int64_t x) {
  const std::int64_t numerator = (pot.e1() + 1) * x - n;
  if (numerator < 0 || numerator % (pot.e2() - 1) != 0) return std::nullopt;
  const std::int64_t y = numerator / (pot.e2() - 1);
  const std::int64_t z = n - x - y;
  if (z < 0) return std::nullopt;
  return TileDistribution{{x, y, z}};
}

}  // namespace

std::optional<TileDistribution> is_realizable(const SingleBondPot& pot, std::int64_t n) {
  if (n < 1) return std::nullopt;
  for (std::int64_t x = 0; x <= n; ++x) {
    if (auto w = witness_at(pot, n, x)) return w;
  }
  return std::nullopt;
}

std::vector<TileDistribution> realizing_distributions(const SingleBondPot& pot, std::int64_t n) {
  std::vector<TileDistribution> out;
  if (n < 1) return out;
  for (std::int64_t x = 0; x <= n; ++x) {
    if (auto w = witness_at(pot, n, x)) out.push_back(*w);
  }
  return out;
}

std::int64_t gcd_classifier(const SingleBondPot& pot) { return std::gcd(pot.e1() + 1, pot.e2() - 1); }

std::int64_t min_order(const SingleBondPot& pot) {
  // e1 + e2 is always realizable by (e2, e1, 0).
  for (std::int64_t n = 1;; ++n) {
    if (is_realizable(pot, n)) return n;
  }
}

Rational eta_bound(const SingleBondPot& pot) {
  const std::int64_t e1 = pot.e1();
  const std::int64_t e2 = pot.e2();
  const Rational a = make_rational((e1 + 1) * (e1 + e2), e1);
  const Rational b = make_rational((e2 - 1) * (e1 + e2), e2);
  return a > b ? a : b;
}

std::optional<Rational> eta(const SingleBondPot& pot) {
  if (gcd_classifier(pot) != 1) return std::nullopt;
  return eta_bound(pot);
}

std::optional<std::int64_t> zeta(const SingleBondPot& pot) {
  if (gcd_classifier(pot) != 1) return std::nullopt;
  // Every order >= ceil(eta) is realizable, so only the finite window below it matters.
  const std::int64_t bound = ceil(eta_bound(pot)).get_si();
  for (std::int64_t n = bound - 1; n >= 1; --n) {
    if (!is_realizable(pot, n)) return n + 1;
  }
  return 1;
}

DivisionForm division_form(const SingleBondPot& pot) { return {pot.e1() / pot.e2(), pot.e1() % pot.e2()}; }

std::array<TileDistribution, 3> canonical_distributions(const SingleBondPot& pot) {
  const auto [q, r] = division_form(pot);
  return {TileDistribution{{1, q, r}}, TileDistribution{{1, 0, pot.e1()}},
          TileDistribution{{pot.e2(), pot.e1(), 0}}};
}

std::vector<OrderEntry> order_table(const SingleBondPot& pot, std::int64_t max_order) {
  std::vector<OrderEntry> table;
  for (std::int64_t n = 1; n <= max_order; ++n) table.push_back({n, is_realizable(pot, n)});
  return table;
}

FeasibilityReport analyze(const SingleBondPot& pot, std::int64_t max_order) {
  FeasibilityReport report;
  report.d = gcd_classifier(pot);
  report.min_order = min_order(pot);
  report.eta = eta_bound(pot);
  report.zeta = zeta(pot);
  report.division = division_form(pot);
  report.canonical = canonical_distributions(pot);
  report.orders = order_table(pot, max_order);
  return report;
}

}  // namespace flextile
