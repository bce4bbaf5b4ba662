#include "herbst/herbst.hpp"
#include "oracles.hpp"
#include "random_inputs.hpp"

#include <gtest/gtest.h>

#include <set>

namespace {

using namespace herbst;

template <class F>
ErrorKind kind_of(F &&f) {
  try {
    f();
  } catch (const Error &e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an herbst::Error";
  return ErrorKind::ParseError;
}

RatMatrix rat(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<RatVector> v;
  for (auto r : rows) v.emplace_back(r);
  return RatMatrix::from_rows(v);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(int_matrix({{1, 1, -2}})), 1u);
  EXPECT_EQ(rank(int_matrix({{0, 0, 1, 1, 1, 1, -4}, {1, 1, 0, 0, 0, -2, 0}})), 2u);
  EXPECT_EQ(rank(IntMatrix(3, 4)), 0u);
  EXPECT_EQ(rank(IntMatrix(0, 0)), 0u);
}

TEST(Rank, MatchesEliminationOracle) {
  SplitMix64 rng(11);
  for (int t = 0; t < 300; ++t) {
    std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(6);
    IntMatrix m = testgen::random_matrix(rng, rows, cols, 2);
    if (rng.below(3) == 0 && rows > 1) m.append_row(testgen::random_dependent_row(rng, m));
    EXPECT_EQ(rank(m), oracle::rank_q(m));
  }
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(int_matrix({{1, -4}, {-2, 0}})), -8);
  EXPECT_EQ(determinant(int_matrix({{0, -4}, {1, 0}})), 4);
  for (std::size_t n = 0; n < 5; ++n) EXPECT_EQ(determinant(IntMatrix::identity(n)), 1);
  EXPECT_EQ(kind_of([] { determinant(IntMatrix(2, 3)); }), ErrorKind::NotSquare);
}

TEST(Determinant, MatchesLaplaceExpansion) {
  SplitMix64 rng(12);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 1 + rng.below(6);
    IntMatrix m = testgen::random_matrix(rng, n, n, 10);
    EXPECT_EQ(determinant(m), oracle::laplace_det(m));
  }
}

TEST(Invert, Examples) {
  EXPECT_EQ(invert_rational(int_matrix({{-2}})), rat({{Rational(-1, 2)}}));
  RatMatrix inv = invert_rational(int_matrix({{1, -4}, {-2, 0}}));
  EXPECT_EQ(inv, rat({{0, Rational(-1, 2)}, {Rational(-1, 4), Rational(-1, 8)}}));
  EXPECT_EQ(to_rational(int_matrix({{1, -4}, {-2, 0}})) * inv, to_rational(IntMatrix::identity(2)));
  EXPECT_EQ(invert_rational(IntMatrix::identity(3)), to_rational(IntMatrix::identity(3)));
  EXPECT_EQ(kind_of([] { invert_rational(int_matrix({{1, 2}, {2, 4}})); }),
            ErrorKind::SingularMatrix);
}

TEST(Invert, ProductIsIdentity) {
  SplitMix64 rng(13);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng.below(6);
    IntMatrix m = testgen::random_nonsingular(rng, n, 10);
    RatMatrix inv = invert_rational(m);
    EXPECT_EQ(to_rational(m) * inv, to_rational(IntMatrix::identity(n)));
    EXPECT_EQ(inv * to_rational(m), to_rational(IntMatrix::identity(n)));
  }
}

TEST(Smith, Examples) {
  auto s = smith_normal_form(int_matrix({{-2}}));
  EXPECT_EQ(s.D, int_matrix({{2}}));

  IntMatrix r = int_matrix({{1, -4}, {-2, 0}});
  auto sd = smith_normal_form(r);
  EXPECT_EQ(sd.D, int_matrix({{1, 0}, {0, 8}}));
  EXPECT_EQ(sd.U * r * sd.V, sd.D);

  // the decomposition written out in the worked example (descending layout)
  IntMatrix U = int_matrix({{2, 1}, {1, 1}});
  IntMatrix V = int_matrix({{4, -1}, {-1, 0}});
  EXPECT_EQ(U * r * V, int_matrix({{8, 0}, {0, 1}}));
  auto diag = sd.diagonal();
  std::multiset<BigInteger> got(diag.begin(), diag.end()), paper{8, 1};
  EXPECT_EQ(got, paper);

  auto id = smith_normal_form(IntMatrix::identity(3));
  EXPECT_EQ(id.D, IntMatrix::identity(3));

  EXPECT_EQ(kind_of([] { smith_normal_form(IntMatrix(2, 3)); }), ErrorKind::NotSquare);
  EXPECT_EQ(kind_of([] { smith_normal_form(int_matrix({{1, 2}, {2, 4}})); }),
            ErrorKind::SingularMatrix);
}

void expect_valid_smith(const IntMatrix &r, const SmithDecomposition &sd) {
  ASSERT_EQ(sd.U * r * sd.V, sd.D);
  EXPECT_EQ(abs(determinant(sd.U)), 1);
  EXPECT_EQ(abs(determinant(sd.V)), 1);
  for (std::size_t i = 0; i < sd.D.rows(); ++i)
    for (std::size_t j = 0; j < sd.D.cols(); ++j)
      if (i != j) { EXPECT_EQ(sd.D(i, j), 0); }
  auto d = sd.diagonal();
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (d[i] != 0) { EXPECT_EQ(d[i + 1] % d[i], 0) << "divisibility at " << i; }
}

TEST(Smith, RandomNonsingularProperties) {
  SplitMix64 rng(14);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 1 + rng.below(6);
    IntMatrix r = testgen::random_nonsingular(rng, n, 10);
    auto sd = smith_normal_form(r);
    expect_valid_smith(r, sd);
    BigInteger prod = 1;
    for (const auto &d : sd.diagonal()) {
      EXPECT_GT(d, 0);
      prod *= d;
    }
    EXPECT_EQ(prod, abs(oracle::laplace_det(r)));
  }
}

TEST(Smith, RectangularAndSingular) {
  SplitMix64 rng(15);
  for (int t = 0; t < 200; ++t) {
    std::size_t rows = 1 + rng.below(4), cols = 1 + rng.below(5);
    IntMatrix m = testgen::random_matrix(rng, rows, cols, 4);
    if (rng.below(2) == 0) m.append_row(testgen::random_dependent_row(rng, m));
    auto sd = smith_decompose(m);
    expect_valid_smith(m, sd);
    EXPECT_EQ(smith_invariants(m).size(), oracle::rank_q(m));
  }
}

// Invariant factors determine #{g : k g = 0} for every k; compare against the
// cokernel enumerated element by element.
TEST(Smith, AgreesWithEnumeratedCokernel) {
  SplitMix64 rng(16);
  int checked = 0;
  while (checked < 150) {
    std::size_t n = 1 + rng.below(4);
    IntMatrix r = testgen::random_nonsingular(rng, n, 4);
    BigInteger det = abs(oracle::laplace_det(r));
    if (det > 64) continue;
    auto g = oracle::enumerate_cokernel_transpose(r);
    ASSERT_EQ(BigInteger(g.elements.size()), det);
    auto factors = smith_normal_form(r).diagonal();
    for (BigInteger k = 1; k <= det; ++k)
      if (det % k == 0) { EXPECT_EQ(BigInteger(g.killed_by(k)), oracle::killed_by_factors(factors, k)); }
    ++checked;
  }
}

TEST(Hermite, Examples) {
  EXPECT_EQ(hermite_normal_form(int_matrix({{2, 0}, {0, 2}})), int_matrix({{2, 0}, {0, 2}}));
  EXPECT_EQ(hermite_normal_form(int_matrix({{0, 2}, {2, 0}})), int_matrix({{2, 0}, {0, 2}}));
  EXPECT_EQ(hermite_normal_form(int_matrix({{2, 1}, {0, 3}})), int_matrix({{2, 1}, {0, 3}}));
}

TEST(Hermite, UniqueUnderUnimodularRowOperations) {
  SplitMix64 rng(17);
  const IntMatrix base = int_matrix({{2, 1}, {0, 3}});
  for (int t = 0; t < 100; ++t) {
    IntMatrix u = testgen::random_unimodular(rng, 2, 20);
    EXPECT_EQ(hermite_normal_form(u * base), base);
  }
  for (int t = 0; t < 200; ++t) {
    std::size_t rows = 1 + rng.below(4), cols = 1 + rng.below(5);
    IntMatrix m = testgen::random_matrix(rng, rows, cols, 5);
    IntMatrix h = hermite_normal_form(m);
    IntMatrix u = testgen::random_unimodular(rng, rows, 20);
    EXPECT_EQ(hermite_normal_form(u * m), h);
    EXPECT_EQ(hermite_normal_form(h), h);
  }
}

TEST(Hermite, ShapeAndLatticeOracle) {
  SplitMix64 rng(18);
  for (int t = 0; t < 200; ++t) {
    std::size_t rows = 1 + rng.below(4), cols = 1 + rng.below(4);
    IntMatrix m = testgen::random_matrix(rng, rows, cols, 5);
    if (m.is_zero()) continue;
    IntMatrix h = hermite_normal_form(m);
    EXPECT_TRUE(oracle::is_hermite_form(h));
    EXPECT_TRUE(oracle::same_row_lattice(m, h));
    auto hd = hermite_decompose(m);
    EXPECT_EQ(hd.transform * m, hd.echelon);
    EXPECT_EQ(abs(determinant(hd.transform)), 1);
  }
}

TEST(Kernel, Examples) {
  IntMatrix a = integer_kernel(int_matrix({{1, 1, -2}}));
  ASSERT_EQ(a.rows(), 3u);
  ASSERT_EQ(a.cols(), 2u);
  EXPECT_TRUE((int_matrix({{1, 1, -2}}) * a).is_zero());
  EXPECT_EQ(oracle::gcd_of_maximal_row_minors(a), 1);
  EXPECT_EQ(a, int_matrix({{1, 0}, {1, 2}, {1, 1}}));

  IntMatrix none = integer_kernel(IntMatrix::identity(3));
  EXPECT_EQ(none.rows(), 3u);
  EXPECT_EQ(none.cols(), 0u);

  EXPECT_EQ(integer_kernel(IntMatrix(1, 2)), IntMatrix::identity(2));
}

TEST(Kernel, RandomProperties) {
  SplitMix64 rng(19);
  for (int t = 0; t < 200; ++t) {
    std::size_t rho = 1 + rng.below(4), n = 1 + rng.below(8);
    IntMatrix q = testgen::random_matrix(rng, rho, n, 4);
    IntMatrix a = integer_kernel(q);
    std::size_t r = oracle::rank_q(q);
    ASSERT_EQ(a.rows(), n);
    ASSERT_EQ(a.cols(), n - r);
    EXPECT_TRUE((q * a).is_zero());
    EXPECT_EQ(oracle::rank_q(a), n - r);
    if (n > r) { EXPECT_EQ(oracle::gcd_of_maximal_row_minors(a), 1); }
  }
}

TEST(RowSpaceReduce, Examples) {
  EXPECT_EQ(row_space_reduce(int_matrix({{2, 2, -4}, {1, 1, -2}})), int_matrix({{1, 1, -2}}));
  IntMatrix q = int_matrix({{0, 1, 1, 1, 1, -4}, {1, 0, 0, 0, -2, 0}});
  IntMatrix dup = q;
  dup.append_row(q.row(0));
  EXPECT_EQ(row_space_reduce(dup), row_space_reduce(q));
  EXPECT_EQ(rank(row_space_reduce(q)), 2u);
}

TEST(RowSpaceReduce, SameKernelAndSaturated) {
  SplitMix64 rng(20);
  for (int t = 0; t < 200; ++t) {
    std::size_t rho = 1 + rng.below(3), n = 2 + rng.below(5);
    IntMatrix q = testgen::random_matrix(rng, rho, n, 4);
    if (rng.below(2) == 0) q.append_row(testgen::random_dependent_row(rng, q));
    IntMatrix red = row_space_reduce(q);
    EXPECT_EQ(red.rows(), oracle::rank_q(q));
    EXPECT_TRUE((red * integer_kernel(q)).is_zero());
    EXPECT_EQ(integer_kernel(red), integer_kernel(q));
    if (red.rows() > 0) { EXPECT_EQ(oracle::gcd_of_maximal_col_minors(red), 1); }
    EXPECT_TRUE(oracle::is_hermite_form(red));
  }
}

} // namespace
