#pragma once

#include "herbst/criterion.hpp"
#include "herbst/errors.hpp"
#include "herbst/linalg.hpp"
#include "herbst/matrix.hpp"
#include "herbst/splitmix.hpp"

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace herbst {

struct GeneratorConfig {
  std::size_t r = 2;
  std::size_t n = 3;
  std::int64_t entry_bound = 3;  // |R_ij| <= entry_bound
  std::int64_t sample_bound = 3; // S columns drawn from [-sample_bound, sample_bound]^r
  std::uint64_t seed = 0;
  bool allow_zero_columns = false;
  std::size_t pad_dependent_rows = 0;
};

inline constexpr std::size_t kDeterminantBudget = 100000;
inline constexpr std::size_t kRejectionBudget = 1000000;

/// Q = (R S) with det R != 0 and every column of S in Cone(-R), drawn from a
/// SplitMix64 stream seeded by cfg.seed. Draw order: R row-major until
/// nonsingular, then S column by column, then the padding rows. Padding rows
/// are rational combinations of the rows of (R S) cleared to integers and
/// appended below.
inline IntMatrix random_lg_model(const GeneratorConfig &cfg) {
  if (cfg.r == 0) throw Error(ErrorKind::InvalidArgument, "r must be at least 1");
  if (cfg.entry_bound < 1 || cfg.sample_bound < 1)
    throw Error(ErrorKind::InvalidArgument, "bounds must be at least 1");
  SplitMix64 rng(cfg.seed);
  const std::size_t r = cfg.r;

  IntMatrix R(r, r);
  BigInteger det = 0;
  for (std::size_t attempt = 0;; ++attempt) {
    if (attempt == kDeterminantBudget)
      throw Error(ErrorKind::RejectionBudgetExceeded,
                  "no nonsingular R within " + std::to_string(kDeterminantBudget) + " draws");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) R(i, j) = rng.uniform(-cfg.entry_bound, cfg.entry_bound);
    det = determinant(R);
    if (det != 0) break;
  }

  // R^{-1} c <= 0  <=>  sign(det) * adj(R) c <= 0
  const IntMatrix adj = adjugate(R);
  const int det_sign = sign(det);
  IntMatrix Q(r, r + cfg.n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) Q(i, j) = R(i, j);

  IntVector c(r);
  for (std::size_t col = 0; col < cfg.n; ++col) {
    bool accepted = false;
    for (std::size_t attempt = 0; attempt < kRejectionBudget && !accepted; ++attempt) {
      bool zero = true;
      for (auto &x : c) {
        x = rng.uniform(-cfg.sample_bound, cfg.sample_bound);
        if (x != 0) zero = false;
      }
      if (zero && !cfg.allow_zero_columns) continue;
      accepted = true;
      for (std::size_t i = 0; i < r && accepted; ++i) {
        BigInteger v = 0;
        for (std::size_t k = 0; k < r; ++k) v += adj(i, k) * c[k];
        if (v.sign() * det_sign > 0) accepted = false;
      }
    }
    if (!accepted)
      throw Error(ErrorKind::RejectionBudgetExceeded,
                  "no column of Cone(-R) found in the sample box within " +
                      std::to_string(kRejectionBudget) + " draws");
    for (std::size_t i = 0; i < r; ++i) Q(i, r + col) = c[i];
  }

  const std::int64_t b = cfg.entry_bound;
  IntVector padded(Q.cols());
  for (std::size_t p = 0; p < cfg.pad_dependent_rows; ++p) {
    std::vector<Rational> coef(r);
    BigInteger common = 1;
    for (auto &x : coef) {
      std::int64_t num = rng.uniform(-b, b);
      std::int64_t den = rng.uniform(1, b);
      x = Rational(num, den);
      common = lcm(common, denominator(x));
    }
    for (std::size_t j = 0; j < Q.cols(); ++j) {
      Rational v = 0;
      for (std::size_t i = 0; i < r; ++i) v += coef[i] * Q(i, j);
      padded[j] = numerator(v * common);
    }
    Q.append_row(padded);
  }
  return Q;
}

/// The witness the generator built in: columns {0, ..., r-1}.
inline HerbstWitness witness_of_construction(const IntMatrix &q, const GeneratorConfig &cfg) {
  std::vector<std::size_t> chosen(cfg.r);
  std::iota(chosen.begin(), chosen.end(), std::size_t{0});
  return check_witness(make_charge_matrix(q), chosen);
}

} // namespace herbst
