#include "flextile/pot.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "flextile/errors.hpp"

namespace flextile {

TileType::TileType(const std::vector<Entry>& ends) {
  std::map<CohesiveEnd, std::int64_t> merged;
  for (const auto& [end, mult] : ends) {
    if (end.label < 'a' || end.label > 'z') {
      throw PotError(std::string("cohesive-end label must be a-z, got '") + end.label + "'");
    }
    if (mult <= 0) throw PotError("cohesive-end multiplicity must be positive");
    merged[end] += mult;
  }
  if (merged.empty()) throw PotError("a tile needs at least one arm");
  ends_.assign(merged.begin(), merged.end());
}

std::int64_t TileType::count(CohesiveEnd end) const {
  for (const auto& [e, mult] : ends_) {
    if (e == end) return mult;
  }
  return 0;
}

std::int64_t TileType::arms() const {
  std::int64_t total = 0;
  for (const auto& entry : ends_) total += entry.second;
  return total;
}

Pot::Pot(std::vector<TileType> tiles) : tiles_(std::move(tiles)) {
  if (tiles_.empty()) throw PotError("a pot needs at least one tile");
  for (std::size_t i = 0; i < tiles_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (tiles_[i] == tiles_[j]) {
        throw PotError("duplicate tile type: t" + std::to_string(j + 1) + " and t" +
                       std::to_string(i + 1));
      }
    }
  }
  std::set<CohesiveEnd> present;
  for (const auto& tile : tiles_) {
    for (const auto& [end, mult] : tile.ends()) {
      present.insert(end);
      if (std::find(labels_.begin(), labels_.end(), end.label) == labels_.end()) {
        labels_.push_back(end.label);
      }
    }
  }
  for (const auto& end : present) {
    if (!present.contains({end.label, !end.hatted})) {
      std::string missing(1, end.label);
      if (!end.hatted) missing += '*';
      throw PotError("complement closure violated: no tile carries " + missing);
    }
  }
}

std::int64_t Pot::total_arms() const {
  std::int64_t total = 0;
  for (const auto& tile : tiles_) total += tile.arms();
  return total;
}

namespace {

class PotParser {
 public:
  explicit PotParser(std::string_view text) : text_(text) {}

  Pot parse() {
    std::vector<TileType> tiles;
    tiles.push_back(tile());
    while (peek() == ';') {
      ++pos_;
      tiles.push_back(tile());
    }
    if (peek() != '\0') fail("expected ';' or end of input");
    return Pot(std::move(tiles));
  }

 private:
  char peek() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  TileType tile() {
    const std::size_t start = pos_;
    expect('{');
    if (peek() == '}') fail("empty tile");
    std::vector<TileType::Entry> ends;
    ends.push_back(end());
    while (peek() == ',') {
      ++pos_;
      ends.push_back(end());
    }
    expect('}');
    try {
      return TileType(ends);
    } catch (const PotError& e) {
      throw ParseError(start, e.what());
    }
  }

  TileType::Entry end() {
    const char c = peek();
    if (c < 'a' || c > 'z') fail("expected a cohesive-end letter a-z");
    ++pos_;
    CohesiveEnd e{c, false};
    if (peek() == '*') {
      e.hatted = true;
      ++pos_;
    }
    std::int64_t mult = 1;
    if (peek() == '^') {
      ++pos_;
      mult = integer();
      if (mult == 0) fail("zero multiplicity");
    }
    return {e, mult};
  }

  std::int64_t integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > (std::numeric_limits<std::int32_t>::max() - 9) / 10) fail("multiplicity too large");
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Pot parse_pot(std::string_view text) {
  PotParser parser(text);
  try {
    return parser.parse();
  } catch (const ParseError&) {
    throw;
  } catch (const PotError& e) {
    // Pot-level validation has no single offending offset; report the end.
    throw ParseError(text.size(), e.what());
  }
}

std::string render_pot(const Pot& pot) {
  std::ostringstream out;
  for (std::size_t j = 0; j < pot.size(); ++j) {
    if (j) out << ';';
    out << '{';
    bool first = true;
    for (const auto& [end, mult] : pot.tile(j).ends()) {
      if (!first) out << ',';
      first = false;
      out << end.label;
      if (end.hatted) out << '*';
      if (mult != 1) out << '^' << mult;
    }
    out << '}';
  }
  return out.str();
}

SingleBondPot::SingleBondPot(std::int64_t e1, std::int64_t e2) : SingleBondPot(e1, e2, 'a', false, {0, 1, 2}) {}

SingleBondPot::SingleBondPot(std::int64_t e1, std::int64_t e2, char label, bool hat_swapped,
                             std::array<std::size_t, 3> tile_of_role)
    : e1_(e1), e2_(e2), label_(label), hat_swapped_(hat_swapped), tile_of_role_(tile_of_role) {
  if (e2_ <= 1) throw PreconditionError("single-bond pot needs e2 > 1");
  if (e1_ < e2_) throw PreconditionError("single-bond pot needs e1 >= e2");
  if (label_ < 'a' || label_ > 'z') throw PreconditionError("bond-edge label must be a-z");
  auto sorted = tile_of_role_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<std::size_t, 3>{0, 1, 2}) {
    throw PreconditionError("tile_of_role must be a permutation of 0,1,2");
  }
}

Pot SingleBondPot::pot() const {
  std::vector<TileType> tiles(3);
  tiles[tile_of_role_[0]] = TileType({{{label_, hat_swapped_}, e1_}});
  tiles[tile_of_role_[1]] = TileType({{{label_, !hat_swapped_}, e2_}});
  tiles[tile_of_role_[2]] = TileType({{{label_, !hat_swapped_}, 1}});
  return Pot(std::move(tiles));
}

std::vector<std::int64_t> SingleBondPot::to_pot_order(const std::vector<std::int64_t>& by_role) const {
  if (by_role.size() != 3) throw PreconditionError("single-bond distributions have 3 components");
  std::vector<std::int64_t> out(3);
  for (std::size_t role = 0; role < 3; ++role) out[tile_of_role_[role]] = by_role[role];
  return out;
}

std::vector<std::int64_t> SingleBondPot::to_role_order(const std::vector<std::int64_t>& by_tile) const {
  if (by_tile.size() != 3) throw PreconditionError("single-bond distributions have 3 components");
  std::vector<std::int64_t> out(3);
  for (std::size_t role = 0; role < 3; ++role) out[role] = by_tile[tile_of_role_[role]];
  return out;
}

SingleBondPot as_single_bond(const Pot& pot) {
  if (pot.bond_edge_types().size() != 1) {
    throw PotError("not a single-bond-type pot: " + std::to_string(pot.bond_edge_types().size()) +
                   " bond-edge types");
  }
  const char label = pot.bond_edge_types().front();
  std::vector<std::size_t> unhatted;
  std::vector<std::size_t> hatted;
  bool has_one_armed = false;
  for (std::size_t j = 0; j < pot.size(); ++j) {
    const auto& tile = pot.tile(j);
    if (tile.ends().size() != 1) {
      throw PotError("tile t" + std::to_string(j + 1) + " carries both ends and may form loops; outside the studied family");
    }
    (tile.ends().front().first.hatted ? hatted : unhatted).push_back(j);
    has_one_armed = has_one_armed || tile.arms() == 1;
  }
  const bool swapped = hatted.size() == 1 && unhatted.size() == 2;
  if (!swapped && !(unhatted.size() == 1 && hatted.size() == 2)) {
    if (!has_one_armed) throw PotError("missing 1-armed tile");
    throw PotError("tile shape outside the studied family {x^e1},{x*^e2},{x*}");
  }
  const std::size_t big = swapped ? hatted[0] : unhatted[0];
  auto pair = swapped ? unhatted : hatted;
  if (pot.tile(pair[0]).arms() != 1) std::swap(pair[0], pair[1]);
  if (pot.tile(pair[0]).arms() != 1) throw PotError("missing 1-armed tile");
  const std::int64_t e1 = pot.tile(big).arms();
  const std::int64_t e2 = pot.tile(pair[1]).arms();
  if (e1 < e2) {
    throw PotError("e1 = " + std::to_string(e1) + " < e2 = " + std::to_string(e2) +
                   ": outside the studied family (needs e1 >= e2)");
  }
  return SingleBondPot(e1, e2, label, swapped, {big, pair[1], pair[0]});
}

}  // namespace flextile
