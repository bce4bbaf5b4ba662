#pragma once

#include "herbst/criterion.hpp"
#include "herbst/errors.hpp"
#include "herbst/lattice.hpp"
#include "herbst/linalg.hpp"
#include "herbst/orbifold.hpp"

#include <optional>
#include <vector>

namespace herbst {

/// { m : normal · m + offset >= 0 }
struct HalfSpace {
  RatVector normal;
  Rational offset;
};

/// P_s = { m in M_R : A m + lift >= 0 }, one half-space per field.
struct MomentPolyhedron {
  IntMatrix A;
  RatVector lift;
  std::vector<HalfSpace> half_spaces;

  bool contains(const RatVector &m) const {
    for (const auto &h : half_spaces) {
      Rational v = h.offset;
      for (std::size_t k = 0; k < m.size(); ++k) v += h.normal[k] * m[k];
      if (v < 0) return false;
    }
    return true;
  }
};

/// A lift s~ in Q^N with Q s~ = s. With a witness, the chosen coordinates
/// carry R^{-1} s (in reduced coordinates) and the rest are zero; without
/// one, the pivot solution of the reduced system is used.
inline RatVector lift_level(const ChargeMatrix &cm, const RatVector &s,
                            const HerbstWitness *witness = nullptr) {
  auto t = cm.reduce_level(s);
  if (!t) throw Error(ErrorKind::LevelNotInImage, "level is not in the image of Q");
  if (witness == nullptr) {
    auto x = solve_pivot(to_rational(cm.reduced()), *t);
    return *x; // reduced has full row rank, so the system is consistent
  }
  RatVector sigma = invert_rational(witness->R) * *t;
  RatVector lift(cm.field_count());
  for (std::size_t i = 0; i < witness->chosen.size(); ++i) lift[witness->chosen[i]] = sigma[i];
  return lift;
}

inline MomentPolyhedron moment_polyhedron(const ChargeMatrix &cm, const RatVector &s,
                                          const HerbstWitness *witness = nullptr) {
  MomentPolyhedron p;
  p.lift = lift_level(cm, s, witness);
  p.A = integer_kernel(cm.charges());
  for (std::size_t i = 0; i < p.A.rows(); ++i) {
    IntVector row = p.A.row(i);
    p.half_spaces.push_back({to_rational(row), p.lift[i]});
  }
  return p;
}

enum class PhaseMembership { Interior, Boundary, Outside };

/// Position of s relative to Cone(R): σ = R^{-1} s in reduced coordinates.
inline PhaseMembership is_in_phase_cone(const HerbstWitness &w, const RatVector &s) {
  auto t = w.charges.reduce_level(s);
  if (!t) return PhaseMembership::Outside;
  RatVector sigma = invert_rational(w.R) * *t;
  bool zero = false;
  for (const auto &x : sigma) {
    if (x < 0) return PhaseMembership::Outside;
    if (x == 0) zero = true;
  }
  return zero ? PhaseMembership::Boundary : PhaseMembership::Interior;
}

/// The block N of the kernel written as A = (N over 1) after a rational change
/// of basis of M: rows of A at `chosen` times the inverse of the rows at the
/// other fields. r x n.
inline RatMatrix kernel_block(const ChargeMatrix &cm, const std::vector<std::size_t> &chosen,
                              const IntMatrix *kernel = nullptr) {
  IntMatrix a = kernel ? *kernel : integer_kernel(cm.charges());
  auto rest = detail::complement(chosen, cm.field_count());
  IntMatrix bottom = a.select_rows(rest);
  if (determinant(bottom) == 0)
    throw Error(ErrorKind::SingularChoice, "chosen columns are linearly dependent");
  return to_rational(a.select_rows(chosen)) * invert_rational(bottom);
}

/// Certify that P_s is a top-dimensional simplicial cone: in the basis where
/// A = (N over 1), the n coordinate half-spaces m_j >= 0 cut out the positive
/// orthant, and the chosen half-spaces N_i · m >= -σ_i are redundant because
/// N >= 0 and σ > 0. Uses only the integer kernel and the witness lift.
inline bool verify_simplicial_cone(const HerbstWitness &w, const RatVector &s) {
  if (is_in_phase_cone(w, s) != PhaseMembership::Interior)
    throw Error(ErrorKind::NotInterior, "level is not interior to the phase cone");
  MomentPolyhedron p = moment_polyhedron(w.charges, s, &w);
  IntMatrix bottom = p.A.select_rows(w.remaining);
  if (determinant(bottom) == 0) return false;
  RatMatrix change = invert_rational(bottom);
  RatMatrix a_new = to_rational(p.A) * change;
  for (std::size_t k = 0; k < w.remaining.size(); ++k) {
    for (std::size_t l = 0; l < w.remaining.size(); ++l)
      if (a_new(w.remaining[k], l) != (k == l ? 1 : 0)) return false;
    if (p.lift[w.remaining[k]] != 0) return false;
  }
  for (std::size_t c : w.chosen) {
    if (p.lift[c] <= 0) return false;
    for (std::size_t l = 0; l < a_new.cols(); ++l)
      if (a_new(c, l) < 0) return false;
  }
  return true;
}

/// Cone(R) in the original gauge coordinates.
struct PhaseConeReport {
  IntMatrix generators;     // rho x r, chosen columns of Q
  RatVector interior_sample; // sum of the generators
  bool full_rank = true;
};

inline PhaseConeReport phase_cone(const HerbstWitness &w) {
  PhaseConeReport rep;
  rep.generators = w.charges.charges().select_columns(w.chosen);
  rep.interior_sample.assign(rep.generators.rows(), Rational(0));
  for (std::size_t i = 0; i < rep.generators.rows(); ++i)
    for (std::size_t j = 0; j < rep.generators.cols(); ++j)
      rep.interior_sample[i] += rep.generators(i, j);
  rep.full_rank = w.charges.full_rank();
  return rep;
}

namespace detail {

inline bool positive_multiple(const IntVector &a, const IntVector &b) {
  std::size_t p = 0;
  while (p < b.size() && b[p] == 0) ++p;
  if (p == b.size()) return false;
  if (a[p] == 0 || (a[p] > 0) != (b[p] > 0)) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] * b[p] != a[p] * b[k]) return false;
  return true;
}

} // namespace detail

/// The same quotient read off the moment cone instead of the group: N = M^∨
/// written in the basis of primitive facet normals (the rows of A at the LG
/// coordinates, divided by their content). Independent of the Smith route.
inline ActionLattice cone_action_lattice(const HerbstWitness &w) {
  IntMatrix a = integer_kernel(w.charges.charges());
  const std::size_t n = w.remaining.size();
  IntMatrix facets(n, n);
  std::vector<std::size_t> labels(n);
  for (std::size_t k = 0; k < n; ++k) {
    IntVector row = a.row(w.remaining[k]);
    BigInteger g = 0;
    for (const auto &x : row) g = gcd(g, x);
    for (std::size_t l = 0; l < n; ++l) facets(k, l) = row[l] / g;
    labels[k] = w.remaining[k];
    for (std::size_t f = 0; f < a.rows(); ++f)
      if (f < labels[k] && detail::positive_multiple(a.row(f), row)) labels[k] = f;
  }
  RatMatrix gens = n == 0 ? RatMatrix(0, 0) : invert_rational(facets);
  return normalize_action(gens, labels, false);
}

} // namespace herbst
