#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "flextile/pot.hpp"
#include "flextile/rational.hpp"
#include "flextile/spectrum.hpp"

namespace flextile {

/// Candidate-vector budget of the brute-force enumerations.
inline constexpr std::uint64_t kEnumerationBudget = 10'000'000;

/// All nonnegative (R_1..R_p) with sum n and zero net ends per label, in
/// lexicographic order. Throws BudgetExceeded when C(n+p-1, p-1) > budget.
std::vector<TileDistribution> distributions_for_order(const Pot& pot, std::int64_t n,
                                                      std::uint64_t budget = kEnumerationBudget);

/// Witness of order n for the single-bond pot in role order, minimal R1 then
/// minimal R2; nullopt when n is not realizable.
std::optional<TileDistribution> is_realizable(const SingleBondPot& pot, std::int64_t n);

/// Every witness of order n, ordered by R1.
std::vector<TileDistribution> realizing_distributions(const SingleBondPot& pot, std::int64_t n);

/// d = gcd(e1 + 1, e2 - 1).
std::int64_t gcd_classifier(const SingleBondPot& pot);

/// m_P, the smallest realizable order.
std::int64_t min_order(const SingleBondPot& pot);

/// max{(e1+1)(e1+e2)/e1, (e2-1)(e1+e2)/e2}; nullopt when d != 1.
std::optional<Rational> eta(const SingleBondPot& pot);
/// The bound without the d = 1 guard.
Rational eta_bound(const SingleBondPot& pot);

/// Smallest n such that every order >= n is realizable; nullopt when d != 1.
std::optional<std::int64_t> zeta(const SingleBondPot& pot);

struct DivisionForm {
  std::int64_t q = 0;
  std::int64_t r = 0;
};

/// e1 = e2 q + r, 0 <= r < e2.
DivisionForm division_form(const SingleBondPot& pot);

/// (1,q,r) of order q+r+1, (1,0,e1) of order 1+e1, (e2,e1,0) of order e1+e2,
/// all in role order.
std::array<TileDistribution, 3> canonical_distributions(const SingleBondPot& pot);

struct OrderEntry {
  std::int64_t n = 0;
  std::optional<TileDistribution> witness;
};

struct FeasibilityReport {
  std::int64_t d = 1;
  std::int64_t min_order = 0;
  Rational eta;  // meaningful only when d == 1
  std::optional<std::int64_t> zeta;
  DivisionForm division;
  std::array<TileDistribution, 3> canonical;
  std::vector<OrderEntry> orders;
};

/// Order table for n in [1, max_order]; witnesses in role order.
std::vector<OrderEntry> order_table(const SingleBondPot& pot, std::int64_t max_order);

FeasibilityReport analyze(const SingleBondPot& pot, std::int64_t max_order);

}  // namespace flextile
