#include <gtest/gtest.h>

#include <chrono>

#include "fractree/verify.hpp"

using namespace fractree;

TEST(Verify, CaseKeys) {
  EXPECT_EQ(vertical_case_keys().size(), 8u);
  EXPECT_EQ(horizontal_case_keys().size(), 12u);
  for (const CaseKey& k : vertical_case_keys()) EXPECT_NE(k.a, ACase::A8);
}

TEST(Verify, DrawsLandInTheirCase) {
  std::mt19937_64 rng(1);
  for (const CaseKey& key : horizontal_case_keys()) {
    for (int k = 0; k < 200; ++k) {
      const TreeParams p = draw_params(rng, key, 10);
      EXPECT_EQ(horizontal_case(p), key);
      EXPECT_GE(p.P, 1);
      EXPECT_LE(p.P, 10);
      EXPECT_NO_THROW(validate(p));
    }
  }
}

TEST(Verify, NormwiseError) {
  EXPECT_DOUBLE_EQ(normwise_error({1.0, 2.0}, {1.0, 2.0}), 0.0);
  EXPECT_DOUBLE_EQ(normwise_error({1.0, 2.5}, {1.0, 2.0}), 0.25);
}

TEST(Verify, DefaultRunPasses) {
  const auto start = std::chrono::steady_clock::now();
  const VerifyReport report = verify_oracles();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_TRUE(report.pass);
  ASSERT_EQ(report.cases.size(), 20u);
  for (const CaseReport& c : report.cases) {
    EXPECT_TRUE(c.pass) << c.key.label();
    EXPECT_EQ(c.draws, 50);
    EXPECT_LT(c.max_error_pvw, 1e-12) << c.key.label();
    EXPECT_LT(c.max_error_stiffness, 1e-9) << c.key.label();
  }
  EXPECT_LT(seconds, 120.0);
}

TEST(Verify, SignFlipIsLocalised) {
  // Flip the horizontal axial term, but only in the u = 4 branch.
  Evaluators broken;
  broken.horizontal = [](const TreeParams& p, std::uint64_t w) {
    Displacement d = horizontal_displacement(p, w);
    if (horizontal_case(p).u == UCase::U4) d = Displacement::from_terms(d.bending, -d.axial, d.shear);
    return d;
  };
  VerifyOptions options;
  options.draws = 10;
  options.stiffness = false;
  const VerifyReport report = verify_oracles(options, broken);
  EXPECT_FALSE(report.pass);
  for (const CaseReport& c : report.cases) {
    const bool affected = c.kind == Direction::Horizontal && c.key.u == UCase::U4;
    EXPECT_EQ(c.pass, !affected) << c.key.label();
  }
}

TEST(Verify, DeterministicForFixedSeed) {
  VerifyOptions options;
  options.draws = 8;
  options.seed = 7;
  const VerifyReport a = verify_oracles(options);
  const VerifyReport b = verify_oracles(options);
  ASSERT_EQ(a.cases.size(), b.cases.size());
  for (std::size_t k = 0; k < a.cases.size(); ++k) {
    EXPECT_EQ(a.cases[k].max_error_pvw, b.cases[k].max_error_pvw);
    EXPECT_EQ(a.cases[k].max_error_stiffness, b.cases[k].max_error_stiffness);
  }
}
