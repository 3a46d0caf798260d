#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "rsentropy/catalogue.hpp"
#include "rsentropy/errors.hpp"
#include "rsentropy/spectral.hpp"
#include "support.hpp"

using namespace rsentropy;

namespace {

void expect_perron(const RandomSubstitution& sub, double lambda, std::vector<double> right) {
  const auto p = perron_data(substitution_matrix(sub));
  EXPECT_NEAR(p.lambda, lambda, 1e-10);
  ASSERT_EQ(p.right.size(), right.size());
  for (std::size_t i = 0; i < right.size(); ++i) {
    EXPECT_NEAR(p.right[i], right[i], 1e-10);
  }
}

}  // namespace

TEST(Perron, PeriodDoubling) { expect_perron(support::rpd(), 2.0, {2.0 / 3.0, 1.0 / 3.0}); }

TEST(Perron, ThueMorse) { expect_perron(support::rtm(), 2.0, {0.5, 0.5}); }

TEST(Perron, Fibonacci) {
  const double tau = support::kTau;
  expect_perron(support::rf(), tau, {tau / (1 + tau), 1 / (1 + tau)});
  EXPECT_NEAR(tau, 1.6180339887, 1e-10);
}

TEST(Perron, MatchesQuadraticFormula) {
  for (const auto& name : example_names()) {
    const auto m = substitution_matrix(get_example(name).substitution);
    if (m.size() != 2) continue;
    const double expected = oracle::eigenvalue_2x2(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
    EXPECT_NEAR(perron_data(m).lambda, expected, 1e-10) << name;
  }
}

TEST(Perron, ResidualsAndNormalisation) {
  for (const auto& name : example_names()) {
    const auto m = substitution_matrix(get_example(name).substitution);
    const auto p = perron_data(m);
    EXPECT_LT(p.residual, 1e-10) << name;
    double r_sum = 0.0;
    double lr = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      EXPECT_GT(p.right[i], 0.0);
      EXPECT_GT(p.left[i], 0.0);
      r_sum += p.right[i];
      lr += p.left[i] * p.right[i];
    }
    EXPECT_NEAR(r_sum, 1.0, 1e-12) << name;
    EXPECT_NEAR(lr, 1.0, 1e-12) << name;
    // 1ᵀMR = λ‖R‖₁ = λ
    double one_mr = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        one_mr += static_cast<double>(m(i, j)) * p.right[j];
      }
    }
    EXPECT_NEAR(one_mr, p.lambda, 1e-10) << name;
  }
}

TEST(Perron, RejectsDegenerateMatrices) {
  EXPECT_THROW(perron_data(SubstitutionMatrix(2, {1, 0, 0, 1})), ValidationError);
  // Primitive with λ = 1.
  EXPECT_THROW(perron_data(SubstitutionMatrix(1, {1})), ValidationError);
}

TEST(LengthVector, Examples) {
  EXPECT_EQ(length_vector(substitution_matrix(support::rf()), 2).entries,
            (std::vector<std::uint64_t>{3, 2}));
  EXPECT_EQ(length_vector(substitution_matrix(support::rtm()), 3).entries,
            (std::vector<std::uint64_t>{8, 8}));
  for (const auto& name : example_names()) {
    const auto m = substitution_matrix(get_example(name).substitution);
    const auto l1 = length_vector(m, 1);
    for (std::size_t j = 0; j < m.size(); ++j) {
      EXPECT_EQ(l1.entries[j], m.column_sum(j)) << name;
    }
  }
}

TEST(LengthVector, OverflowAndExactMode) {
  const auto m = substitution_matrix(support::rtm());
  EXPECT_THROW(length_vector(m, 64), OverflowError);
  const auto exact = length_vector_exact(m, 64);
  EXPECT_EQ(exact[0], BigInt(1) << 64);
  EXPECT_EQ(length_vector(m, 63).entries[0], std::uint64_t{1} << 63);
}

TEST(LengthVector, ApproachesLeftEigenvector) {
  for (const auto& name : example_names()) {
    const auto m = substitution_matrix(get_example(name).substitution);
    const auto p = perron_data(m);
    double previous = INFINITY;
    for (int level = 4; level <= 10; ++level) {
      const auto l = length_vector(m, level);
      double err = 0.0;
      for (std::size_t i = 0; i < m.size(); ++i) {
        err = std::max(err, std::abs(static_cast<double>(l.entries[i]) / std::pow(p.lambda, level) -
                                     p.left[i]));
      }
      EXPECT_LE(err, previous + 1e-12) << name << " m=" << level;
      previous = err;
    }
  }
}
