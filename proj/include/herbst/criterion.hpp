#pragma once

#include "herbst/errors.hpp"
#include "herbst/lattice.hpp"
#include "herbst/linalg.hpp"
#include "herbst/matrix.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace herbst {

/// A rho x N charge matrix with its rank and the saturated row-space
/// reduction the criterion is evaluated on.
class ChargeMatrix {
public:
  const IntMatrix &charges() const noexcept { return q_; }
  /// r x N, rank r, same integer kernel as charges().
  const IntMatrix &reduced() const noexcept { return reduced_; }
  std::size_t gauge_rank() const noexcept { return q_.rows(); }
  std::size_t field_count() const noexcept { return q_.cols(); }
  std::size_t rank() const noexcept { return reduced_.rows(); }
  std::size_t lg_dimension() const noexcept { return field_count() - rank(); }
  bool full_rank() const noexcept { return rank() == gauge_rank(); }

  /// charges() == basis_change() * reduced(); rho x r, rational.
  const RatMatrix &basis_change() const noexcept { return basis_change_; }

  /// Coordinates of a level s in R^rho with respect to the reduced rows, i.e.
  /// the unique t with basis_change() * t == s. Empty when s is not in im Q.
  std::optional<RatVector> reduce_level(const RatVector &s) const {
    if (s.size() != gauge_rank())
      throw Error(ErrorKind::DimensionMismatch,
                  "level has length " + std::to_string(s.size()) + ", expected " +
                      std::to_string(gauge_rank()));
    return solve_pivot(basis_change_, s);
  }

  friend ChargeMatrix make_charge_matrix(IntMatrix q);

private:
  IntMatrix q_;
  IntMatrix reduced_;
  RatMatrix basis_change_;
};

inline ChargeMatrix make_charge_matrix(IntMatrix q) {
  if (q.rows() == 0 || q.cols() == 0)
    throw Error(ErrorKind::EmptyMatrix, "charge matrix must have at least one row and column");
  ChargeMatrix cm;
  cm.reduced_ = row_space_reduce(q);
  auto ef = rref(to_rational(cm.reduced_));
  // Q and reduced share a kernel, so Q = G * reduced; read G off the pivot block.
  IntMatrix block = cm.reduced_.select_columns(ef.pivots);
  cm.basis_change_ = to_rational(q.select_columns(ef.pivots)) * invert_rational(block);
  cm.q_ = std::move(q);
  return cm;
}

/// A column choice satisfying the criterion. `chosen` is ascending; R and S
/// are the chosen / remaining columns of the reduced matrix; reduced_q is
/// R^{-1} * reduced, which is the identity on chosen columns and <= 0 elsewhere.
struct HerbstWitness {
  ChargeMatrix charges;
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> remaining;
  IntMatrix R;
  IntMatrix S;
  RatMatrix reduced_q;
};

namespace detail {

enum class ChoiceStatus { Ok, Singular, Positive };

struct ChoiceResult {
  ChoiceStatus status = ChoiceStatus::Ok;
  std::size_t row = 0;
  std::size_t col = 0;
  std::optional<HerbstWitness> witness;
};

inline std::vector<std::size_t> complement(std::span<const std::size_t> chosen, std::size_t n) {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (k < chosen.size() && chosen[k] == j) {
      ++k;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

// `chosen` must be sorted, distinct, in range and of size rank.
inline ChoiceResult evaluate_choice(const ChargeMatrix &cm, std::span<const std::size_t> chosen) {
  ChoiceResult res;
  IntMatrix r = cm.reduced().select_columns(chosen);
  if (determinant(r) == 0) {
    res.status = ChoiceStatus::Singular;
    return res;
  }
  RatMatrix reduced_q = invert_rational(r) * to_rational(cm.reduced());
  auto remaining = complement(chosen, cm.field_count());
  for (std::size_t j : remaining)
    for (std::size_t i = 0; i < reduced_q.rows(); ++i)
      if (reduced_q(i, j) > 0) {
        res.status = ChoiceStatus::Positive;
        res.row = i;
        res.col = j;
        return res;
      }
  HerbstWitness w{cm,
                  std::vector<std::size_t>(chosen.begin(), chosen.end()),
                  remaining,
                  std::move(r),
                  cm.reduced().select_columns(remaining),
                  std::move(reduced_q)};
  res.witness = std::move(w);
  return res;
}

} // namespace detail

/// Verify that `chosen` (any order) satisfies the criterion: the chosen
/// columns of the reduced matrix are independent and every other column lies
/// in their negative cone.
inline HerbstWitness check_witness(const ChargeMatrix &cm, std::vector<std::size_t> chosen) {
  std::sort(chosen.begin(), chosen.end());
  if (std::adjacent_find(chosen.begin(), chosen.end()) != chosen.end())
    throw Error(ErrorKind::InvalidArgument, "chosen indices must be distinct");
  if (!chosen.empty() && chosen.back() >= cm.field_count())
    throw Error(ErrorKind::InvalidArgument,
                "column index " + std::to_string(chosen.back()) + " out of range [0, " +
                    std::to_string(cm.field_count()) + ")");
  if (chosen.size() != cm.rank())
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(cm.rank()) +
                                                  " chosen columns, got " +
                                                  std::to_string(chosen.size()));
  auto res = detail::evaluate_choice(cm, chosen);
  switch (res.status) {
  case detail::ChoiceStatus::Singular:
    throw Error(ErrorKind::SingularChoice, "chosen columns are linearly dependent");
  case detail::ChoiceStatus::Positive:
    throw Error(ErrorKind::NotNegativeCone,
                "entry (" + std::to_string(res.row) + ", " + std::to_string(res.col) +
                    ") of R^-1 Q is positive",
                std::pair{res.row, res.col});
  case detail::ChoiceStatus::Ok: break;
  }
  return std::move(*res.witness);
}

/// Columns that can ever be chosen: nonzero and occurring exactly once.
inline std::vector<std::size_t> candidate_columns(const ChargeMatrix &cm) {
  const IntMatrix &red = cm.reduced();
  std::map<IntVector, std::size_t> multiplicity;
  for (std::size_t j = 0; j < red.cols(); ++j) ++multiplicity[red.column(j)];
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < red.cols(); ++j)
    if (!red.column_is_zero(j) && multiplicity[red.column(j)] == 1) out.push_back(j);
  return out;
}

/// Every r-subset (of the candidate columns when `prune` is set, else of all
/// columns) passing the criterion, in lexicographic order. Empty iff no
/// affine stable point exists.
inline std::vector<HerbstWitness> enumerate_phases(const ChargeMatrix &cm, bool prune = true) {
  std::vector<std::size_t> pool;
  if (prune) {
    pool = candidate_columns(cm);
  } else {
    for (std::size_t j = 0; j < cm.field_count(); ++j) pool.push_back(j);
  }
  const std::size_t r = cm.rank();
  std::vector<HerbstWitness> out;
  if (pool.size() < r) return out;

  std::vector<std::size_t> pos(r);
  for (std::size_t k = 0; k < r; ++k) pos[k] = k;
  std::vector<std::size_t> subset(r);
  for (;;) {
    for (std::size_t k = 0; k < r; ++k) subset[k] = pool[pos[k]];
    auto res = detail::evaluate_choice(cm, subset);
    if (res.witness) out.push_back(std::move(*res.witness));

    // next combination
    std::size_t k = r;
    while (k > 0 && pos[k - 1] == pool.size() - r + (k - 1)) --k;
    if (k == 0) break;
    ++pos[k - 1];
    for (std::size_t m = k; m < r; ++m) pos[m] = pos[m - 1] + 1;
  }
  return out;
}

/// True iff every monomial (exponent vector over the N fields) has zero
/// charge under every gauge factor.
inline bool check_superpotential_invariance(const ChargeMatrix &cm,
                                            const std::vector<IntVector> &monomials) {
  for (const auto &m : monomials) {
    if (m.size() != cm.field_count())
      throw Error(ErrorKind::DimensionMismatch, "monomial has " + std::to_string(m.size()) +
                                                    " exponents, expected " +
                                                    std::to_string(cm.field_count()));
    for (const auto &e : m)
      if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent in monomial");
  }
  for (const auto &m : monomials) {
    for (const auto &charge : cm.charges() * m)
      if (charge != 0) return false;
  }
  return true;
}

struct VevSplit {
  std::vector<std::size_t> vev;
  std::vector<std::size_t> lg;
};

/// Chosen fields acquire expectation values; the rest are LG coordinates.
inline VevSplit vev_split(const HerbstWitness &w) { return {w.chosen, w.remaining}; }

} // namespace herbst
