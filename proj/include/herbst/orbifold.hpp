#pragma once

#include "herbst/criterion.hpp"
#include "herbst/errors.hpp"
#include "herbst/lattice.hpp"
#include "herbst/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace herbst {

/// A finite diagonal action on C^n, recorded as the lattice L ⊂ Q^n of
/// exponents t with exp(2πi t) in the image group (so L ⊇ Z^n). Stored as
/// `basis` = Hermite form of exponent * L, where exponent is the smallest
/// positive integer with exponent * L ⊆ Z^n. `coordinates` names the axes.
struct ActionLattice {
  BigInteger exponent = 1;
  std::vector<std::size_t> coordinates;
  IntMatrix basis;

  friend bool operator==(const ActionLattice &, const ActionLattice &) = default;
};

namespace detail {

// Lattice generated by the rows of `generators` together with Z^n.
inline IntMatrix integral_span(const RatMatrix &generators, const BigInteger &scale) {
  const std::size_t n = generators.cols();
  IntMatrix rows(0, n);
  std::vector<BigInteger> buf(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(buf.begin(), buf.end(), BigInteger(0));
    buf[j] = scale;
    rows.append_row(buf);
  }
  for (std::size_t i = 0; i < generators.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational x = generators(i, j) * scale;
      buf[j] = numerator(x);
    }
    rows.append_row(buf);
  }
  return hermite_normal_form(rows);
}

} // namespace detail

/// Canonical form of the action generated by the rows of `generators` (plus
/// Z^n). Axes are sorted by `labels`. With `remove_reflections`, the
/// subgroup generated by pseudo-reflections is quotiented out first: an axis
/// fixed by an order-k reflection subgroup is replaced by its k-th power, so
/// that C^n/G ≅ C^n/G' with G' reflection-free.
inline ActionLattice normalize_action(const RatMatrix &generators,
                                      const std::vector<std::size_t> &labels,
                                      bool remove_reflections) {
  const std::size_t n = generators.cols();
  if (labels.size() != n) throw Error(ErrorKind::DimensionMismatch, "one label per coordinate");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return labels[a] < labels[b]; });

  RatMatrix gens = generators.select_columns(order);
  BigInteger scale = 1;
  for (std::size_t i = 0; i < gens.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) scale = lcm(scale, denominator(gens(i, j)));

  ActionLattice out;
  for (auto k : order) out.coordinates.push_back(labels[k]);
  if (n == 0) {
    out.basis = IntMatrix(0, 0);
    return out;
  }

  // lattice = scale * L, full rank, contains scale * Z^n
  IntMatrix lattice = detail::integral_span(gens, scale);
  if (remove_reflections) {
    RatMatrix inv = invert_rational(lattice);
    for (std::size_t j = 0; j < n; ++j) {
      // smallest c with c * e_j in lattice
      BigInteger c = 1;
      for (std::size_t k = 0; k < n; ++k) c = lcm(c, denominator(inv(j, k)));
      BigInteger k_j = scale / c;
      if (k_j != 1)
        for (std::size_t i = 0; i < n; ++i) lattice(i, j) *= k_j;
    }
  }

  BigInteger exponent = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      exponent = lcm(exponent, scale / gcd(scale, lattice(i, j)));
  // exponent * L = (exponent / scale) * lattice
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) lattice(i, j) = lattice(i, j) * exponent / scale;
  out.exponent = exponent;
  out.basis = hermite_normal_form(lattice);
  return out;
}

/// The finite group of an LG phase: Γ ≅ ⊕ Z_{d_a}, generator a acting on LG
/// coordinate j by exp(2πi * action_exponents(a, j) / d_a).
struct OrbifoldData {
  std::vector<BigInteger> invariant_factors;
  IntMatrix action_exponents;
  BigInteger group_order = 1;
  /// Field indices of the LG coordinates, ascending.
  std::vector<std::size_t> lg_coordinates;
  /// Per LG coordinate: smallest field index whose divisor is the same
  /// facet of the moment cone. Identifies coordinates across phases.
  std::vector<std::size_t> ray_labels;
  SmithDecomposition smith;
  ActionLattice canonical_lattice;
};

/// Plain image lattice of the action in the LG-coordinate order: m = lcm(d_a),
/// Hermite form of the rows m*e_j and (m/d_a) * action row a.
inline IntMatrix image_lattice(const std::vector<BigInteger> &factors, const IntMatrix &exponents) {
  const std::size_t n = exponents.cols();
  BigInteger m = 1;
  for (const auto &d : factors) m = lcm(m, d);
  RatMatrix gens(exponents.rows(), n);
  for (std::size_t a = 0; a < exponents.rows(); ++a)
    for (std::size_t j = 0; j < n; ++j) gens(a, j) = Rational(exponents(a, j), factors[a]);
  if (n == 0) return IntMatrix(0, 0);
  return detail::integral_span(gens, m);
}

inline IntMatrix image_lattice(const OrbifoldData &od) {
  return image_lattice(od.invariant_factors, od.action_exponents);
}

/// Reflection-free, facet-ordered canonical form of the action. Phases of the
/// same charge matrix have equal canonical actions.
inline ActionLattice canonical_action(const std::vector<BigInteger> &factors,
                                      const IntMatrix &exponents,
                                      const std::vector<std::size_t> &labels) {
  RatMatrix gens(exponents.rows(), exponents.cols());
  for (std::size_t a = 0; a < exponents.rows(); ++a)
    for (std::size_t j = 0; j < exponents.cols(); ++j)
      gens(a, j) = Rational(exponents(a, j), factors[a]);
  return normalize_action(gens, labels, true);
}

inline ActionLattice canonical_action(const OrbifoldData &od) {
  return canonical_action(od.invariant_factors, od.action_exponents, od.ray_labels);
}

/// Assemble orbifold data from a presentation ⊕ Z_{d_a} and its exponents.
/// Exponents are reduced into [0, d_a) per row. Default labels are 0..n-1.
inline OrbifoldData make_orbifold_data(std::vector<BigInteger> factors, const IntMatrix &exponents,
                                       std::vector<std::size_t> lg_coordinates = {},
                                       std::vector<std::size_t> ray_labels = {}) {
  if (factors.size() != exponents.rows())
    throw Error(ErrorKind::DimensionMismatch, "one invariant factor per action row");
  const std::size_t n = exponents.cols();
  if (lg_coordinates.empty()) {
    lg_coordinates.resize(n);
    std::iota(lg_coordinates.begin(), lg_coordinates.end(), std::size_t{0});
  }
  if (ray_labels.empty()) ray_labels = lg_coordinates;
  if (lg_coordinates.size() != n || ray_labels.size() != n)
    throw Error(ErrorKind::DimensionMismatch, "coordinate labels do not match action width");

  OrbifoldData od;
  od.action_exponents = IntMatrix(factors.size(), n);
  for (std::size_t a = 0; a < factors.size(); ++a) {
    if (factors[a] <= 0) throw Error(ErrorKind::InvalidArgument, "invariant factors must be positive");
    od.group_order *= factors[a];
    for (std::size_t j = 0; j < n; ++j) od.action_exponents(a, j) = floor_mod(exponents(a, j), factors[a]);
  }
  od.invariant_factors = std::move(factors);
  od.lg_coordinates = std::move(lg_coordinates);
  od.ray_labels = std::move(ray_labels);
  od.canonical_lattice = canonical_action(od);
  return od;
}

/// Facet label of each LG coordinate of a witness. A chosen field lies on the
/// facet of LG coordinate j iff its row of R^{-1} Q is supported on j alone.
inline std::vector<std::size_t> ray_labels(const HerbstWitness &w) {
  std::vector<std::size_t> labels = w.remaining;
  for (std::size_t i = 0; i < w.chosen.size(); ++i) {
    std::size_t support = w.remaining.size();
    std::size_t count = 0;
    for (std::size_t k = 0; k < w.remaining.size(); ++k)
      if (w.reduced_q(i, w.remaining[k]) != 0) {
        support = k;
        ++count;
      }
    if (count == 1) labels[support] = std::min(labels[support], w.chosen[i]);
  }
  return labels;
}

/// Γ = cok R^t via the Smith form D = U R V; generator a acts on the LG
/// coordinates through row a of U * S, reduced mod d_a. R and S are the
/// chosen and remaining columns of the original charges, so a subgroup of
/// the gauge group acting trivially on every field is kept.
inline OrbifoldData orbifold_group(const HerbstWitness &w) {
  if (!w.charges.full_rank())
    throw Error(ErrorKind::RankDeficientGaugeGroup,
                "gauge rank " + std::to_string(w.charges.gauge_rank()) + " exceeds charge rank " +
                    std::to_string(w.charges.rank()) + "; the stabilizer is not finite");
  const IntMatrix &q = w.charges.charges();
  SmithDecomposition sd = smith_normal_form(q.select_columns(w.chosen));
  OrbifoldData od = make_orbifold_data(sd.diagonal(), sd.U * q.select_columns(w.remaining),
                                       w.remaining, ray_labels(w));
  od.smith = std::move(sd);
  return od;
}

/// Invariant factors with the trivial Z_1 summands dropped.
inline std::vector<BigInteger> effective_factors(const OrbifoldData &od) {
  std::vector<BigInteger> out;
  for (const auto &d : od.invariant_factors)
    if (d != 1) out.push_back(d);
  return out;
}

inline bool actions_equivalent(const OrbifoldData &a, const OrbifoldData &b) {
  if (a.action_exponents.cols() != b.action_exponents.cols())
    throw Error(ErrorKind::DimensionMismatch, "actions on different numbers of coordinates");
  return canonical_action(a) == canonical_action(b);
}

} // namespace herbst
