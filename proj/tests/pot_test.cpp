#include <random>
#include <set>
#include <string>

#include "doctest.h"
#include "flextile/errors.hpp"
#include "flextile/pot.hpp"

using namespace flextile;

namespace {

TileType tile(std::initializer_list<TileType::Entry> ends) { return TileType(std::vector<TileType::Entry>(ends)); }

std::size_t parse_error_position(const std::string& text) {
  try {
    parse_pot(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected a parse error for " << text);
  return 0;
}

std::string parse_error_message(const std::string& text) {
  try {
    parse_pot(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse the three-armed pot") {
  const Pot pot = parse_pot("{a^3};{a*^3};{a*}");
  REQUIRE(pot.size() == 3);
  CHECK(pot.tile(0) == tile({{{'a', false}, 3}}));
  CHECK(pot.tile(1) == tile({{{'a', true}, 3}}));
  CHECK(pot.tile(2) == tile({{{'a', true}, 1}}));
  CHECK(pot.bond_edge_types() == std::vector<char>{'a'});
  CHECK(pot.total_arms() == 7);
}

TEST_CASE("parse the (6,4) pot") {
  const Pot pot = parse_pot("{a^6};{a*^4};{a*}");
  CHECK(pot.tile(0).count({'a', false}) == 6);
  CHECK(pot.tile(1).count({'a', true}) == 4);
  CHECK(pot.tile(2).arms() == 1);
  CHECK(pot.tile(1).net('a') == -4);
}

TEST_CASE("closure violation is rejected") {
  CHECK_THROWS_AS(parse_pot("{a}"), ParseError);
  CHECK(parse_error_message("{a}").find("complement") != std::string::npos);
  CHECK_THROWS_AS(Pot({tile({{{'b', true}, 2}})}), PotError);
}

TEST_CASE("whitespace and aggregation") {
  const Pot pot = parse_pot("  { a ^ 2 , a , b* } ;\n{a*^3 ,b}\t");
  CHECK(pot.tile(0).count({'a', false}) == 3);
  CHECK(pot.tile(0).count({'b', true}) == 1);
  CHECK(pot.tile(0).net('b') == -1);
  CHECK(pot.bond_edge_types() == std::vector<char>{'a', 'b'});
  CHECK(render_pot(pot) == "{a^3,b*};{a*^3,b}");
}

TEST_CASE("mixed tiles are allowed in a general pot") {
  const Pot pot = parse_pot("{a,a*}");
  CHECK(pot.tile(0).net('a') == 0);
  CHECK_THROWS_AS(as_single_bond(pot), PotError);
}

TEST_CASE("syntax errors report positions") {
  CHECK(parse_error_position("") == 0);
  CHECK(parse_error_position("{a^3};") == 6);
  CHECK(parse_error_position("{a^3}{a*}") == 5);
  CHECK(parse_error_position("{A}") == 1);
  CHECK(parse_error_position("{a^}") == 3);
  CHECK(parse_error_position("{a,}") == 3);
  CHECK(parse_error_position("{a*^3") == 5);
  CHECK(parse_error_message("{a^0};{a*}").find("zero multiplicity") != std::string::npos);
  CHECK(parse_error_message("{};{a}").find("empty tile") != std::string::npos);
  CHECK(parse_error_message("{a^99999999999};{a*}").find("too large") != std::string::npos);
}

TEST_CASE("duplicate tile types") {
  const auto msg = parse_error_message("{a^2};{a*};{a,a};{a*}");
  CHECK(msg.find("duplicate tile type") != std::string::npos);
  CHECK(msg.find("t1") != std::string::npos);
  CHECK(msg.find("t3") != std::string::npos);
}

TEST_CASE("as_single_bond recognizes the family") {
  SUBCASE("plain") {
    const auto sb = as_single_bond(parse_pot("{a^6};{a*^4};{a*}"));
    CHECK(sb.e1() == 6);
    CHECK(sb.e2() == 4);
    CHECK_FALSE(sb.hat_swapped());
  }
  SUBCASE("hat swapped") {
    const auto sb = as_single_bond(parse_pot("{a*^6};{a^4};{a}"));
    CHECK(sb.e1() == 6);
    CHECK(sb.e2() == 4);
    CHECK(sb.hat_swapped());
    CHECK(render_pot(sb.pot()) == "{a*^6};{a^4};{a}");
  }
  SUBCASE("reordered, other letter") {
    const Pot pot = parse_pot("{q*};{q^5};{q*^2}");
    const auto sb = as_single_bond(pot);
    CHECK(sb.e1() == 5);
    CHECK(sb.e2() == 2);
    CHECK(sb.label() == 'q');
    CHECK(sb.tile_of_role(0) == 1);
    CHECK(sb.tile_of_role(1) == 2);
    CHECK(sb.tile_of_role(2) == 0);
    CHECK(sb.pot() == pot);
    CHECK(sb.to_pot_order({1, 2, 3}) == std::vector<std::int64_t>{3, 1, 2});
    CHECK(sb.to_role_order({3, 1, 2}) == std::vector<std::int64_t>{1, 2, 3});
  }
  SUBCASE("e1 == e2") {
    const auto sb = as_single_bond(parse_pot("{a^3};{a*^3};{a*}"));
    CHECK(sb.e1() == 3);
    CHECK(sb.e2() == 3);
  }
}

TEST_CASE("as_single_bond errors") {
  auto message = [](const std::string& text) {
    try {
      as_single_bond(parse_pot(text));
    } catch (const PotError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("{a^3};{a*^3}").find("missing 1-armed tile") != std::string::npos);
  CHECK(message("{a^3};{a*^3};{a*};{b};{b*}").find("not a single-bond-type") != std::string::npos);
  CHECK(message("{a^3};{a*^2};{a*^4}").find("1-armed") != std::string::npos);
  CHECK(message("{a};{a*}").find("outside") != std::string::npos);
  CHECK(message("{a^2};{a*^3};{a*}").find("e1 >= e2") != std::string::npos);
  CHECK_THROWS_AS(SingleBondPot(3, 1), PreconditionError);
  CHECK_THROWS_AS(SingleBondPot(2, 3), PreconditionError);
}

TEST_CASE("SingleBondPot::pot round trip") {
  for (std::int64_t e1 = 2; e1 <= 9; ++e1) {
    for (std::int64_t e2 = 2; e2 <= e1; ++e2) {
      const SingleBondPot sb(e1, e2);
      const auto back = as_single_bond(sb.pot());
      CHECK(back.e1() == e1);
      CHECK(back.e2() == e2);
      CHECK(render_pot(sb.pot()) == "{a^" + std::to_string(e1) + "};{a*^" + std::to_string(e2) + "};{a*}");
    }
  }
}

TEST_CASE("render then parse is the identity on random pots") {
  std::mt19937 rng(20240611);
  int accepted = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<int> tiles(1, 5), ends(1, 3), letter(0, 2), mult(1, 4), coin(0, 1);
    std::set<TileType> seen;
    std::vector<TileType> pot_tiles;
    const int p = tiles(rng);
    for (int j = 0; j < p; ++j) {
      std::vector<TileType::Entry> es;
      const int m = ends(rng);
      for (int i = 0; i < m; ++i) {
        es.push_back({{static_cast<char>('a' + letter(rng)), coin(rng) == 1}, mult(rng)});
      }
      TileType t(es);
      if (seen.insert(t).second) pot_tiles.push_back(t);
    }
    try {
      const Pot pot(pot_tiles);
      ++accepted;
      CHECK(parse_pot(render_pot(pot)) == pot);
    } catch (const PotError&) {
    }
  }
  CHECK(accepted > 50);
}

TEST_CASE("fuzzed text never yields an unclosed pot") {
  // Mutations of valid texts, so a good share still parses.
  std::mt19937 rng(7);
  const std::vector<std::string> seeds = {"{a^3};{a*^3};{a*}", "{a^6};{a*^4};{a*}", "{a,b*};{a*,b}",
                                          "{a^2,b};{a*^2};{b*}", "{c};{c*^2};{c^3,c*}"};
  const std::string alphabet = "{}ab*^;,0123 ";
  std::uniform_int_distribution<std::size_t> which(0, seeds.size() - 1), pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> edits(0, 2), op(0, 2);
  int accepted = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    std::string text = seeds[which(rng)];
    for (int e = edits(rng); e > 0; --e) {
      std::uniform_int_distribution<std::size_t> at(0, text.size());
      const auto i = at(rng);
      switch (op(rng)) {
        case 0: text.insert(i, 1, alphabet[pick(rng)]); break;
        case 1: if (i < text.size()) text.erase(i, 1); break;
        default: if (i < text.size()) text[i] = alphabet[pick(rng)]; break;
      }
    }
    try {
      const Pot pot = parse_pot(text);
      ++accepted;
      for (char label : pot.bond_edge_types()) {
        bool plain = false, hat = false;
        for (const auto& t : pot.tiles()) {
          plain = plain || t.count({label, false}) > 0;
          hat = hat || t.count({label, true}) > 0;
        }
        CHECK(plain);
        CHECK(hat);
      }
      CHECK(parse_pot(render_pot(pot)) == pot);
    } catch (const ParseError& e) {
      CHECK(e.position() <= text.size());
    }
  }
  CHECK(accepted > 2000);
}

TEST_CASE("single-bond recognition always yields e1 >= e2 > 1") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> arms(1, 8), coin(0, 1);
  for (int trial = 0; trial < 300; ++trial) {
    const int a = arms(rng), b = arms(rng);
    const bool hat = coin(rng) == 1;
    const std::string x = hat ? "a*" : "a", y = hat ? "a" : "a*";
    const std::string text = "{" + x + "^" + std::to_string(a) + "};{" + y + "^" + std::to_string(b) + "};{" + y + "}";
    try {
      const auto sb = as_single_bond(parse_pot(text));
      CHECK(sb.e1() >= sb.e2());
      CHECK(sb.e2() > 1);
      CHECK(sb.hat_swapped() == hat);
    } catch (const Error&) {
      CHECK((b == 1 || a < b || (a == 1 && b == 1)));
    }
  }
}
