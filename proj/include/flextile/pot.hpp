#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flextile {

/// One cohesive end: a bond-edge letter, hatted when it is the complement.
struct CohesiveEnd {
  char label = 'a';
  bool hatted = false;

  auto operator<=>(const CohesiveEnd&) const = default;
};

/// A tile type: a multiset of cohesive ends, stored canonically as
/// (end, multiplicity) pairs sorted by label with the unhatted end first.
class TileType {
 public:
  using Entry = std::pair<CohesiveEnd, std::int64_t>;

  TileType() = default;
  /// Aggregates repeated ends; throws PotError on empty tiles, bad labels or
  /// non-positive multiplicities.
  explicit TileType(const std::vector<Entry>& ends);

  const std::vector<Entry>& ends() const noexcept { return ends_; }
  std::int64_t count(CohesiveEnd end) const;
  std::int64_t arms() const;
  /// Net cohesive-end count for `label`: unhatted minus hatted.
  std::int64_t net(char label) const { return count({label, false}) - count({label, true}); }

  auto operator<=>(const TileType&) const = default;

 private:
  std::vector<Entry> ends_;
};

/// A pot of distinct tile types closed under complementation. Tile order is
/// significant: index j is tile type t_{j+1} everywhere in the library.
class Pot {
 public:
  /// Validates distinctness and complement closure; throws PotError.
  explicit Pot(std::vector<TileType> tiles);

  const std::vector<TileType>& tiles() const noexcept { return tiles_; }
  std::size_t size() const noexcept { return tiles_.size(); }
  const TileType& tile(std::size_t index) const { return tiles_.at(index); }
  /// Distinct labels in order of first appearance.
  const std::vector<char>& bond_edge_types() const noexcept { return labels_; }
  std::int64_t total_arms() const;

  bool operator==(const Pot&) const = default;

 private:
  std::vector<TileType> tiles_;
  std::vector<char> labels_;
};

Pot parse_pot(std::string_view text);
/// Canonical text: ends in TileType order, multiplicity 1 omitted.
std::string render_pot(const Pot& pot);

/// The pot {x^e1},{x̂^e2},{x̂} (up to tile order and hat orientation), with
/// e1 >= e2 > 1. Roles: 0 = the e1-armed tile, 1 = the e2-armed tile,
/// 2 = the one-armed tile.
class SingleBondPot {
 public:
  /// The canonical pot {a^e1};{a*^e2};{a*}.
  SingleBondPot(std::int64_t e1, std::int64_t e2);
  SingleBondPot(std::int64_t e1, std::int64_t e2, char label, bool hat_swapped,
                std::array<std::size_t, 3> tile_of_role);

  std::int64_t e1() const noexcept { return e1_; }
  std::int64_t e2() const noexcept { return e2_; }
  char label() const noexcept { return label_; }
  /// True when the e1-armed tile carries the hatted ends in the source pot.
  bool hat_swapped() const noexcept { return hat_swapped_; }
  /// Pot index of the tile playing `role`.
  std::size_t tile_of_role(std::size_t role) const { return tile_of_role_.at(role); }

  /// Rebuilds the source pot in its original tile order and orientation.
  Pot pot() const;

  /// Converts a role-ordered (R1,R2,R3) to the source pot's tile order and back.
  std::vector<std::int64_t> to_pot_order(const std::vector<std::int64_t>& by_role) const;
  std::vector<std::int64_t> to_role_order(const std::vector<std::int64_t>& by_tile) const;

 private:
  std::int64_t e1_;
  std::int64_t e2_;
  char label_ = 'a';
  bool hat_swapped_ = false;
  std::array<std::size_t, 3> tile_of_role_{0, 1, 2};
};

/// Recognizes the single-bond family; throws PotError when the pot is outside it.
SingleBondPot as_single_bond(const Pot& pot);

}  // namespace flextile
