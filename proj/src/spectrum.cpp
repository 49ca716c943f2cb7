#include "flextile/spectrum.hpp"

#include <numeric>
#include <sstream>

#include "flextile/errors.hpp"

namespace flextile {

AugmentedMatrix::AugmentedMatrix(std::size_t rows, std::size_t vars)
    : rows_(rows), vars_(vars), data_(rows * (vars + 1)) {}

AugmentedMatrix::AugmentedMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), vars_(rows.size() ? rows.begin()->size() - 1 : 0) {
  for (const auto& row : rows) {
    if (row.size() != vars_ + 1) throw PreconditionError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

std::string render_matrix(const AugmentedMatrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << "[";
    for (std::size_t c = 0; c < m.vars(); ++c) out << ' ' << to_string(m(r, c));
    out << " | " << to_string(m.rhs(r)) << " ]\n";
  }
  return out.str();
}

ConstructionMatrix construction_matrix(const Pot& pot) {
  const auto& labels = pot.bond_edge_types();
  ConstructionMatrix m(labels.size() + 1, pot.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < pot.size(); ++j) m(i, j) = pot.tile(j).net(labels[i]);
  }
  const std::size_t last = labels.size();
  for (std::size_t j = 0; j <= pot.size(); ++j) m(last, j) = 1;
  return m;
}

AugmentedMatrix rref(const AugmentedMatrix& input) {
  AugmentedMatrix m = input;
  const std::size_t cols = m.vars() + 1;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < m.rows(); ++c) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(pivot, k), m(lead, k));
    }
    const Rational inv = 1 / m(lead, c);
    for (std::size_t k = 0; k < cols; ++k) m(lead, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t k = 0; k < cols; ++k) m(r, k) -= factor * m(lead, k);
    }
    ++lead;
  }
  return m;
}

std::optional<SolutionSpace> solve(const AugmentedMatrix& m) {
  const AugmentedMatrix reduced = rref(m);
  SolutionSpace space;
  space.particular.assign(m.vars(), Rational(0));
  std::vector<std::size_t> pivot_row(m.vars(), m.rows());
  for (std::size_t r = 0; r < reduced.rows(); ++r) {
    std::size_t c = 0;
    while (c <= m.vars() && reduced(r, c) == 0) ++c;
    if (c == m.vars()) return std::nullopt;  // 0 = nonzero
    if (c > m.vars()) continue;
    pivot_row[c] = r;
    space.pivot_vars.push_back(c);
    space.particular[c] = reduced.rhs(r);
  }
  for (std::size_t f = 0; f < m.vars(); ++f) {
    if (pivot_row[f] != m.rows()) continue;
    space.free_vars.push_back(f);
    std::vector<Rational> direction(m.vars(), Rational(0));
    direction[f] = 1;
    for (std::size_t p : space.pivot_vars) direction[p] = -reduced(pivot_row[p], f);
    space.basis.push_back(std::move(direction));
  }
  return space;
}

bool in_spectrum(const Pot& pot, const SpectrumPoint& point) {
  if (point.proportions.size() != pot.size()) return false;
  Rational sum = 0;
  for (const auto& r : point.proportions) {
    if (r < 0 || r > 1) return false;
    sum += r;
  }
  if (sum != 1) return false;
  for (char label : pot.bond_edge_types()) {
    Rational net = 0;
    for (std::size_t j = 0; j < pot.size(); ++j) net += point.proportions[j] * pot.tile(j).net(label);
    if (net != 0) return false;
  }
  return true;
}

SpectrumPoint single_bond_spectrum(const SingleBondPot& pot, const SpectrumParameters& params) {
  const std::int64_t e1 = pot.e1();
  const std::int64_t e2 = pot.e2();
  if (params.k < 1) throw PreconditionError("spectrum parameter k must be >= 1");
  const Rational k = params.k;
  const Rational& z = params.z;
  const Rational z_max = k * e1 / Rational(e1 + 1);
  if (z < 0 || z > z_max) {
    throw PreconditionError("spectrum parameter z = " + to_string(z) + " outside [0, " + to_string(z_max) + "]");
  }
  const Rational scale = 1 / (k * (e1 + e2));
  return SpectrumPoint{{scale * (k * e2 - (e2 - 1) * z), scale * (k * e1 - (e1 + 1) * z),
                        scale * ((e1 + e2) * z)}};
}

namespace {

// "4k - 3z", "3k - z", "6z"
std::string affine_term(std::int64_t k_coef, std::int64_t z_coef) {
  std::ostringstream out;
  if (k_coef != 0) out << k_coef << 'k';
  if (z_coef != 0) {
    if (k_coef != 0) out << (z_coef < 0 ? " - " : " + ");
    else if (z_coef < 0) out << '-';
    const std::int64_t mag = z_coef < 0 ? -z_coef : z_coef;
    if (mag != 1) out << mag;
    out << 'z';
  }
  if (k_coef == 0 && z_coef == 0) out << '0';
  return out.str();
}

}  // namespace

std::string describe_single_bond_spectrum(const SingleBondPot& pot) {
  const std::int64_t e1 = pot.e1();
  const std::int64_t e2 = pot.e2();
  std::ostringstream out;
  out << "1/(" << e1 + e2 << "k) <" << affine_term(e2, -(e2 - 1)) << ", " << affine_term(e1, -(e1 + 1))
      << ", " << affine_term(0, e1 + e2) << ">, k >= 1, z in [0, " << e1 << "k/" << e1 + 1 << "]";
  return out.str();
}

std::int64_t TileDistribution::order() const { return std::accumulate(counts.begin(), counts.end(), std::int64_t{0}); }

std::string to_string(const TileDistribution& dist) {
  std::string out = "(";
  for (std::size_t j = 0; j < dist.counts.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(dist.counts[j]);
  }
  return out + ")";
}

bool is_balanced(const Pot& pot, const TileDistribution& dist) {
  if (dist.counts.size() != pot.size()) return false;
  for (auto c : dist.counts) {
    if (c < 0) return false;
  }
  for (char label : pot.bond_edge_types()) {
    std::int64_t net = 0;
    for (std::size_t j = 0; j < pot.size(); ++j) net += dist.counts[j] * pot.tile(j).net(label);
    if (net != 0) return false;
  }
  return true;
}

bool is_balanced(const SingleBondPot& pot, const TileDistribution& dist) {
  if (dist.counts.size() != 3) return false;
  const auto& r = dist.counts;
  if (r[0] < 0 || r[1] < 0 || r[2] < 0) return false;
  return pot.e1() * r[0] - pot.e2() * r[1] - r[2] == 0;
}

TileDistribution scale_to_distribution(const SpectrumPoint& point, std::int64_t n) {
  if (n < 1) throw PreconditionError("order n must be >= 1");
  TileDistribution dist;
  for (std::size_t j = 0; j < point.proportions.size(); ++j) {
    const Rational scaled = point.proportions[j] * n;
    if (!is_integer(scaled)) {
      throw NonIntegralError(j, "component " + std::to_string(j + 1) + ": " + std::to_string(n) + " * " +
                                    to_string(point.proportions[j]) + " = " + to_string(scaled) +
                                    " is not an integer");
    }
    if (scaled < 0) throw PreconditionError("component " + std::to_string(j + 1) + " is negative");
    dist.counts.push_back(scaled.get_num().get_si());
  }
  return dist;
}

}  // namespace flextile
