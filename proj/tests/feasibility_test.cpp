#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "doctest.h"
#include "flextile/errors.hpp"
#include "flextile/feasibility.hpp"
#include "flextile/pot.hpp"
#include "oracles.hpp"

using namespace flextile;

namespace {

using D = TileDistribution;

std::vector<D> as_dists(const std::vector<oracle::Triple>& triples) {
  std::vector<D> out;
  for (const auto& t : triples) out.push_back(D{{t[0], t[1], t[2]}});
  return out;
}

}  // namespace

TEST_CASE("distributions for an order") {
  CHECK(distributions_for_order(parse_pot("{a^3};{a*^3};{a*}"), 4) == std::vector<D>{D{{1, 0, 3}}, D{{2, 2, 0}}});
  CHECK(distributions_for_order(parse_pot("{a^6};{a*^4};{a*}"), 6).empty());
  CHECK(distributions_for_order(parse_pot("{a^6};{a*^4};{a*}"), 4) == std::vector<D>{D{{1, 1, 2}}});
  // Two labels.
  CHECK(distributions_for_order(parse_pot("{a,b};{a*};{b*}"), 6) == std::vector<D>{D{{2, 2, 2}}});
  CHECK(distributions_for_order(parse_pot("{a,b};{a*};{b*}"), 5).empty());
  CHECK_THROWS_AS(distributions_for_order(parse_pot("{a};{a*}"), 0), PreconditionError);
}

TEST_CASE("oracle budget") {
  const Pot wide = parse_pot("{a};{a*};{b};{b*};{c};{c*};{d};{d*}");
  // C(n+7, 7) candidates; n = 40 gives 314457495.
  CHECK_THROWS_AS(distributions_for_order(wide, 40), BudgetExceeded);
  CHECK_NOTHROW(distributions_for_order(wide, 10));
  CHECK_THROWS_AS(distributions_for_order(wide, 10, 1000), BudgetExceeded);
}

TEST_CASE("is_realizable examples") {
  const SingleBondPot p64(6, 4);
  CHECK(is_realizable(p64, 4) == D{{1, 1, 2}});
  CHECK_FALSE(is_realizable(p64, 6).has_value());
  CHECK(is_realizable(p64, 5) == D{{2, 3, 0}});
  CHECK_FALSE(is_realizable(SingleBondPot(3, 3), 5).has_value());
  CHECK(realizing_distributions(SingleBondPot(3, 3), 4) == std::vector<D>{D{{1, 0, 3}}, D{{2, 2, 0}}});
  CHECK(realizing_distributions(p64, 19) == std::vector<D>{D{{4, 3, 12}}, D{{7, 10, 2}}});
  CHECK(is_realizable(p64, 19) == D{{4, 3, 12}});
}

TEST_CASE("classifier, minimum order and bounds") {
  CHECK(gcd_classifier(SingleBondPot(3, 3)) == 2);
  CHECK(gcd_classifier(SingleBondPot(6, 4)) == 1);
  CHECK(gcd_classifier(SingleBondPot(9, 6)) == 5);

  CHECK(min_order(SingleBondPot(6, 4)) == 4);
  CHECK(min_order(SingleBondPot(3, 3)) == 2);
  CHECK(min_order(SingleBondPot(7, 4)) == 5);

  CHECK(eta(SingleBondPot(6, 4)) == make_rational(35, 3));
  CHECK(eta(SingleBondPot(7, 4)) == make_rational(88, 7));
  CHECK(eta(SingleBondPot(2, 2)) == make_rational(6));
  CHECK_FALSE(eta(SingleBondPot(3, 3)).has_value());
  CHECK(eta_bound(SingleBondPot(3, 3)) == make_rational(8));

  CHECK(zeta(SingleBondPot(7, 4)) == 7);
  CHECK(zeta(SingleBondPot(6, 4)) == 7);
  CHECK_FALSE(zeta(SingleBondPot(3, 3)).has_value());
}

TEST_CASE("division form and canonical distributions") {
  auto df = division_form(SingleBondPot(9, 6));
  CHECK(std::tie(df.q, df.r) == std::tuple<std::int64_t, std::int64_t>{1, 3});
  df = division_form(SingleBondPot(6, 4));
  CHECK(std::tie(df.q, df.r) == std::tuple<std::int64_t, std::int64_t>{1, 2});
  df = division_form(SingleBondPot(6, 3));
  CHECK(std::tie(df.q, df.r) == std::tuple<std::int64_t, std::int64_t>{2, 0});

  using A = std::array<D, 3>;
  CHECK(canonical_distributions(SingleBondPot(9, 6)) == A{D{{1, 1, 3}}, D{{1, 0, 9}}, D{{6, 9, 0}}});
  CHECK(canonical_distributions(SingleBondPot(6, 4)) == A{D{{1, 1, 2}}, D{{1, 0, 6}}, D{{4, 6, 0}}});
  CHECK(canonical_distributions(SingleBondPot(3, 3)) == A{D{{1, 1, 0}}, D{{1, 0, 3}}, D{{3, 3, 0}}});
}

TEST_CASE("frozen order tables") {
  const auto table = order_table(SingleBondPot(6, 4), 8);
  REQUIRE(table.size() == 8);
  const std::vector<std::optional<D>> expected = {std::nullopt,  std::nullopt,  std::nullopt, D{{1, 1, 2}},
                                                  D{{2, 3, 0}},  std::nullopt,  D{{1, 0, 6}}, D{{2, 2, 4}}};
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(table[i].n == static_cast<std::int64_t>(i + 1));
    CHECK(table[i].witness == expected[i]);
  }
  // (7,4): exactly 1,2,3,4,6 fail.
  std::set<std::int64_t> missing;
  for (const auto& e : order_table(SingleBondPot(7, 4), 40)) {
    if (!e.witness) missing.insert(e.n);
  }
  CHECK(missing == std::set<std::int64_t>{1, 2, 3, 4, 6});
  for (const auto& e : order_table(SingleBondPot(9, 6), 40)) CHECK(e.witness.has_value() == (e.n % 5 == 0));
  for (const auto& e : order_table(SingleBondPot(3, 3), 40)) CHECK(e.witness.has_value() == (e.n % 2 == 0));
}

TEST_CASE("analyze report") {
  const auto rep = analyze(SingleBondPot(7, 4), 20);
  CHECK(rep.d == 1);
  CHECK(rep.min_order == 5);
  CHECK(rep.eta == make_rational(88, 7));
  CHECK(rep.zeta == 7);
  CHECK(rep.division.q == 1);
  CHECK(rep.division.r == 3);
  CHECK(rep.orders.size() == 20);
  const auto gcd = analyze(SingleBondPot(3, 3), 10);
  CHECK(gcd.d == 2);
  CHECK_FALSE(gcd.zeta.has_value());
  for (const auto& e : gcd.orders) {
    if (e.witness) CHECK(e.n % gcd.d == 0);
  }
}

TEST_CASE("fast check agrees with the oracle") {
  for (std::int64_t e1 = 2; e1 <= 9; ++e1) {
    for (std::int64_t e2 = 2; e2 <= e1; ++e2) {
      const SingleBondPot p(e1, e2);
      for (std::int64_t n = 1; n <= 40; ++n) {
        const auto expected = as_dists(oracle::single_bond_distributions(e1, e2, n));
        const auto all = realizing_distributions(p, n);
        CHECK(all == expected);
        const auto witness = is_realizable(p, n);
        CHECK(witness.has_value() == !expected.empty());
        CHECK(distributions_for_order(p.pot(), n).empty() == expected.empty());
        if (witness) {
          CHECK(std::find(expected.begin(), expected.end(), *witness) != expected.end());
          // Smallest x, then smallest y.
          CHECK(*witness == *std::min_element(expected.begin(), expected.end()));
        }
      }
    }
  }
}

TEST_CASE("realizable orders are multiples of d") {
  // Necessity holds everywhere. Sufficiency above m_P fails at exactly one
  // place in range: (9,7) has d = 2, m_P = 4, but order 6 is not realizable.
  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> gaps;
  for (std::int64_t e1 = 2; e1 <= 9; ++e1) {
    for (std::int64_t e2 = 2; e2 <= e1; ++e2) {
      const SingleBondPot p(e1, e2);
      const auto d = gcd_classifier(p);
      CHECK(d == std::gcd(e1 + 1, e2 - 1));
      if (d == 1) continue;
      const auto m = min_order(p);
      for (std::int64_t n = 1; n <= 60; ++n) {
        const bool realizable = oracle::single_bond_realizable(e1, e2, n);
        if (realizable) CHECK(n % d == 0);
        if (!realizable && n % d == 0 && n >= m) gaps.insert({e1, e2, n});
      }
    }
  }
  CHECK(gaps == std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>>{{9, 7, 6}});
}

TEST_CASE("every order from ceil(eta) on is realizable") {
  for (std::int64_t e1 = 2; e1 <= 9; ++e1) {
    for (std::int64_t e2 = 2; e2 <= e1; ++e2) {
      const SingleBondPot p(e1, e2);
      if (gcd_classifier(p) != 1) continue;
      const auto top = ceil(*eta(p)).get_si();
      for (std::int64_t n = top; n <= top + 60; ++n) CHECK(oracle::single_bond_realizable(e1, e2, n));
      const auto z = zeta(p);
      REQUIRE(z.has_value());
      CHECK(*z <= top);
      CHECK(*z >= min_order(p));
      // zeta is the inclusive threshold.
      CHECK((*z == min_order(p) || !oracle::single_bond_realizable(e1, e2, *z - 1)));
      for (std::int64_t n = *z; n <= top + 60; ++n) CHECK(is_realizable(p, n).has_value());
    }
  }
}

TEST_CASE("canonical distributions are balanced") {
  for (std::int64_t e1 = 2; e1 <= 20; ++e1) {
    for (std::int64_t e2 = 2; e2 <= e1; ++e2) {
      const SingleBondPot p(e1, e2);
      const auto [q, r] = division_form(p);
      CHECK(e1 == e2 * q + r);
      CHECK(0 <= r);
      CHECK(r < e2);
      const auto c = canonical_distributions(p);
      const std::array<std::int64_t, 3> orders{q + r + 1, 1 + e1, e1 + e2};
      for (std::size_t i = 0; i < 3; ++i) {
        CHECK(e1 * c[i][0] - e2 * c[i][1] - c[i][2] == 0);
        CHECK(c[i].order() == orders[i]);
      }
    }
  }
}
