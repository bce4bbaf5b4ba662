#include "herbst/herbst.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

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

// Published reference outputs for seed 1234567.
TEST(SplitMix64, ReferenceVectors) {
  SplitMix64 rng(1234567);
  const std::uint64_t expected[] = {6457827717110365317ULL, 3203168211198807973ULL,
                                    9817491932198370423ULL, 4593380528125082431ULL,
                                    16408922859458223821ULL};
  for (auto e : expected) EXPECT_EQ(rng(), e);
}

TEST(SplitMix64, BoundedDrawsStayInRange) {
  SplitMix64 rng(5);
  int hits[7] = {};
  for (int k = 0; k < 7000; ++k) {
    auto x = rng.uniform(-3, 3);
    ASSERT_GE(x, -3);
    ASSERT_LE(x, 3);
    ++hits[x + 3];
  }
  for (int h : hits) EXPECT_GT(h, 800);
  EXPECT_THROW(rng.below(0), std::invalid_argument);
}

TEST(Generator, Deterministic) {
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL, 0xFFFFFFFFFFFFFFFFULL}) {
    GeneratorConfig cfg;
    cfg.r = 3;
    cfg.n = 4;
    cfg.seed = seed;
    cfg.pad_dependent_rows = 1;
    EXPECT_EQ(random_lg_model(cfg), random_lg_model(cfg));
  }
  GeneratorConfig a, b;
  a.seed = 1;
  b.seed = 2;
  EXPECT_NE(random_lg_model(a), random_lg_model(b));
}

TEST(Generator, ConstructionalWitnessIsFound) {
  SplitMix64 meta(61);
  for (int t = 0; t < 500; ++t) {
    GeneratorConfig cfg;
    cfg.r = 1 + meta.below(3);
    cfg.n = meta.below(6);
    cfg.seed = meta();
    IntMatrix q = random_lg_model(cfg);
    ASSERT_EQ(q.rows(), cfg.r);
    ASSERT_EQ(q.cols(), cfg.r + cfg.n);
    for (std::size_t j = 0; j < q.cols(); ++j)
      for (std::size_t i = 0; i < q.rows(); ++i) EXPECT_LE(abs(q(i, j)), 3);
    auto w = witness_of_construction(q, cfg);
    auto phases = enumerate_phases(make_charge_matrix(q));
    std::vector<std::size_t> expected(cfg.r);
    for (std::size_t i = 0; i < cfg.r; ++i) expected[i] = i;
    EXPECT_TRUE(std::any_of(phases.begin(), phases.end(),
                            [&](const HerbstWitness &p) { return p.chosen == expected; }));
    EXPECT_EQ(w.chosen, expected);
    // independent check: Cramer's rule on the drawn R
    IntMatrix R = q.select_columns(expected);
    for (std::size_t j = cfg.r; j < q.cols(); ++j) {
      auto x = oracle::cramer(R, q.column(j));
      ASSERT_TRUE(x);
      for (const auto &c : *x) EXPECT_LE(c, 0);
    }
  }
}

TEST(Generator, PaddingLeavesWitnessUnchanged) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GeneratorConfig cfg;
    cfg.r = 2;
    cfg.n = 3;
    cfg.seed = seed;
    IntMatrix plain = random_lg_model(cfg);
    cfg.pad_dependent_rows = 2;
    IntMatrix padded = random_lg_model(cfg);
    ASSERT_EQ(padded.rows(), 4u);
    EXPECT_EQ(padded.select_rows(std::vector<std::size_t>{0, 1}), plain);
    EXPECT_EQ(oracle::rank_q(padded), 2u);
    EXPECT_EQ(row_space_reduce(padded), row_space_reduce(plain));
    EXPECT_EQ(witness_of_construction(padded, cfg).reduced_q,
              witness_of_construction(plain, cfg).reduced_q);
  }
}

TEST(Generator, NegativeControl) {
  // (1, 1) is not in the negative cone of the identity
  IntMatrix q = int_matrix({{1, 0, 1}, {0, 1, 1}});
  EXPECT_EQ(kind_of([&] { check_witness(make_charge_matrix(q), {0, 1}); }),
            ErrorKind::NotNegativeCone);
  GeneratorConfig cfg;
  cfg.r = 2;
  EXPECT_EQ(kind_of([&] { witness_of_construction(q, cfg); }), ErrorKind::NotNegativeCone);
}

TEST(Generator, RankOneSignStructure) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GeneratorConfig cfg;
    cfg.r = 1;
    cfg.n = 4;
    cfg.seed = seed;
    IntMatrix q = random_lg_model(cfg);
    ASSERT_NE(q(0, 0), 0);
    for (std::size_t j = 1; j < q.cols(); ++j) {
      EXPECT_NE(q(0, j), 0);
      EXPECT_LT(sign(q(0, j)) * sign(q(0, 0)), 0);
    }
  }
  GeneratorConfig zeros;
  zeros.r = 1;
  zeros.n = 30;
  zeros.allow_zero_columns = true;
  IntMatrix q = random_lg_model(zeros);
  bool any_zero = false;
  for (std::size_t j = 1; j < q.cols(); ++j) any_zero = any_zero || q(0, j) == 0;
  EXPECT_TRUE(any_zero);
}

// With R drawn from [-(m+1), m+1] and S from [-1, 1], a draw of R = -(m+1)
// forces every S column to be 1: the canonical bundle of P^m.
TEST(Generator, ReproducesCanonicalBundleFamily) {
  for (long long m = 1; m <= 4; ++m) {
    bool hit = false;
    for (std::uint64_t seed = 0; seed < 2000 && !hit; ++seed) {
      GeneratorConfig cfg;
      cfg.r = 1;
      cfg.n = static_cast<std::size_t>(m + 1);
      cfg.entry_bound = m + 1;
      cfg.sample_bound = 1;
      cfg.seed = seed;
      IntMatrix q = random_lg_model(cfg);
      if (q(0, 0) != -m - 1) continue;
      hit = true;
      for (std::size_t j = 1; j < q.cols(); ++j) EXPECT_EQ(q(0, j), 1);
      auto w = enumerate_phases(make_charge_matrix(q));
      ASSERT_EQ(w.size(), 1u);
      EXPECT_EQ(w[0].chosen, (std::vector<std::size_t>{0}));
      EXPECT_EQ(orbifold_group(w[0]).invariant_factors, (std::vector<BigInteger>{m + 1}));
    }
    EXPECT_TRUE(hit) << m;
  }
}

TEST(Generator, NoLGFields) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GeneratorConfig cfg;
    cfg.r = 3;
    cfg.n = 0;
    cfg.seed = seed;
    IntMatrix q = random_lg_model(cfg);
    ASSERT_EQ(q.cols(), 3u);
    auto w = enumerate_phases(make_charge_matrix(q));
    ASSERT_EQ(w.size(), 1u);
    EXPECT_EQ(w[0].chosen, (std::vector<std::size_t>{0, 1, 2}));
    auto od = orbifold_group(w[0]);
    EXPECT_EQ(od.group_order, abs(oracle::laplace_det(q)));
    EXPECT_EQ(od.action_exponents.cols(), 0u);
  }
}

TEST(Generator, InvalidConfig) {
  GeneratorConfig cfg;
  cfg.r = 0;
  EXPECT_EQ(kind_of([&] { random_lg_model(cfg); }), ErrorKind::InvalidArgument);
  cfg.r = 2;
  cfg.entry_bound = 0;
  EXPECT_EQ(kind_of([&] { random_lg_model(cfg); }), ErrorKind::InvalidArgument);
  cfg.entry_bound = 2;
  cfg.sample_bound = 0;
  EXPECT_EQ(kind_of([&] { random_lg_model(cfg); }), ErrorKind::InvalidArgument);
}

} // namespace
