#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flextile/pot.hpp"
#include "flextile/rational.hpp"

namespace flextile {

/// Dense rational matrix [A | b]: `vars()` coefficient columns plus one
/// augmented column.
class AugmentedMatrix {
 public:
  AugmentedMatrix(std::size_t rows, std::size_t vars);
  AugmentedMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t vars() const noexcept { return vars_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_.at(r * (vars_ + 1) + c); }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_.at(r * (vars_ + 1) + c); }
  const Rational& rhs(std::size_t r) const { return (*this)(r, vars_); }

  bool operator==(const AugmentedMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t vars_;
  std::vector<Rational> data_;
};

using ConstructionMatrix = AugmentedMatrix;

/// Rows "[ c1 c2 ... | b ]", one per line.
std::string render_matrix(const AugmentedMatrix& m);

/// One row per bond-edge type (z_ij = unhatted - hatted, rhs 0) followed by
/// the all-ones row with rhs 1.
ConstructionMatrix construction_matrix(const Pot& pot);

/// Reduced row echelon form over the whole augmented matrix. Columns are
/// scanned left to right; a row swap happens only when the current row has a
/// zero in the pivot column.
AugmentedMatrix rref(const AugmentedMatrix& m);

/// Affine solution set x = particular + sum_k t_k basis[k] of a system.
struct SolutionSpace {
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> basis;
  std::vector<std::size_t> pivot_vars;
  std::vector<std::size_t> free_vars;
};

/// nullopt when the system is inconsistent.
std::optional<SolutionSpace> solve(const AugmentedMatrix& m);

struct SpectrumPoint {
  std::vector<Rational> proportions;

  bool operator==(const SpectrumPoint&) const = default;
};

/// Exact membership in S(P): entries in [0,1] summing to 1 with zero net ends per label.
bool in_spectrum(const Pot& pot, const SpectrumPoint& point);

struct SpectrumParameters {
  std::int64_t k = 1;
  Rational z;
};

/// Closed-form point of the single-bond spectrum, in role order (t1,t2,t3):
/// 1/(k(e1+e2)) <k e2 - (e2-1) z, k e1 - (e1+1) z, (e1+e2) z>.
/// Throws PreconditionError unless k >= 1 and 0 <= z <= k e1/(e1+1).
SpectrumPoint single_bond_spectrum(const SingleBondPot& pot, const SpectrumParameters& params);

/// Human-readable closed form, e.g. "1/(10k) <4k - 3z, 6k - 7z, 10z>".
std::string describe_single_bond_spectrum(const SingleBondPot& pot);

/// Integer tile counts (R_1..R_p).
struct TileDistribution {
  std::vector<std::int64_t> counts;

  std::int64_t order() const;
  std::int64_t operator[](std::size_t j) const { return counts.at(j); }
  auto operator<=>(const TileDistribution&) const = default;
};

/// "(1,1,2)"
std::string to_string(const TileDistribution& dist);

/// Nonnegative counts with sum_j R_j z_ij = 0 for every label.
bool is_balanced(const Pot& pot, const TileDistribution& dist);
/// Role-ordered check e1 R1 - e2 R2 - R3 = 0 with nonnegative counts.
bool is_balanced(const SingleBondPot& pot, const TileDistribution& dist);

/// (n r_1, ..., n r_p); throws NonIntegralError naming the first fractional
/// component, PreconditionError when n < 1.
TileDistribution scale_to_distribution(const SpectrumPoint& point, std::int64_t n);

}  // namespace flextile
