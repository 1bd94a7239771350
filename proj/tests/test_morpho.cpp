#include <gtest/gtest.h>

#include "tles/core/rng.hpp"
#include "tles/morpho/baseline.hpp"
#include "tles/morpho/record.hpp"
#include "tles/morpho/rules.hpp"

namespace {

using namespace tles::morpho;

MorphokineticRecord timings(double tpnf, double t3, double t5) {
  MorphokineticRecord r;
  r.tpnf = tpnf;
  r.t3 = t3;
  r.t5 = t5;
  return r;
}

MorphokineticRecord full_record(double tb = 100.0, Grade icm = Grade::A, Grade te = Grade::A,
                                int pn = 2) {
  MorphokineticRecord r;
  r.pn = pn;
  r.tpnf = 22.0;
  r.t2 = 26.0;
  r.t3 = 36.0;
  r.t5 = 48.0;
  r.tb = tb;
  r.icm = icm;
  r.te = te;
  return r;
}

TEST(DirectCleavage, RuleApplication) {
  EXPECT_EQ(classify_direct_cleavage(timings(22, 26, 36)), CleavagePattern::dc1_3);
  EXPECT_EQ(classify_direct_cleavage(timings(22, 28, 31)), CleavagePattern::dc2_5);
  EXPECT_EQ(classify_direct_cleavage(timings(22, 28, 36)), CleavagePattern::no_dc);
  MorphokineticRecord missing = timings(22, 28, 36);
  missing.t5.reset();
  EXPECT_EQ(classify_direct_cleavage(missing), CleavagePattern::undetermined);
  missing = timings(22, 28, 36);
  missing.tpnf.reset();
  EXPECT_EQ(classify_direct_cleavage(missing), CleavagePattern::undetermined);
  missing = timings(22, 28, 36);
  missing.t3.reset();
  EXPECT_EQ(classify_direct_cleavage(missing), CleavagePattern::undetermined);
}

TEST(DirectCleavage, StrictBoundaryAtExactlyFiveHours) {
  // Differences of exactly 5.0 h are NOT direct cleavage.
  EXPECT_EQ(classify_direct_cleavage(timings(22.0, 27.0, 40.0)), CleavagePattern::no_dc);
  EXPECT_EQ(classify_direct_cleavage(timings(22.0, 28.0, 33.0)), CleavagePattern::no_dc);
  // Epsilon below the threshold flips the call.
  EXPECT_EQ(classify_direct_cleavage(timings(22.0, 26.9999, 40.0)), CleavagePattern::dc1_3);
  EXPECT_EQ(classify_direct_cleavage(timings(22.0, 28.0, 32.9999)), CleavagePattern::dc2_5);
}

TEST(DirectCleavage, Dc13TakesPrecedence) {
  EXPECT_EQ(classify_direct_cleavage(timings(22.0, 24.0, 26.0)), CleavagePattern::dc1_3);
}

TEST(DirectCleavage, PartitionProperty) {
  tles::Rng rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const double tpnf = rng.uniform(15.0, 30.0);
    const double t3 = tpnf + rng.uniform(0.0, 12.0);
    const double t5 = t3 + rng.uniform(0.0, 12.0);
    const auto p = classify_direct_cleavage(timings(tpnf, t3, t5));
    int matches = 0;
    if (t3 - tpnf < 5.0) matches += p == CleavagePattern::dc1_3;
    else if (t5 - t3 < 5.0) matches += p == CleavagePattern::dc2_5;
    else matches += p == CleavagePattern::no_dc;
    ASSERT_EQ(matches, 1);
    ASSERT_NE(p, CleavagePattern::undetermined);
  }
}

TEST(DirectCleavage, T2NotRequired) {
  MorphokineticRecord r = timings(22, 28, 36);
  ASSERT_FALSE(r.t2.has_value());
  EXPECT_NE(classify_direct_cleavage(r), CleavagePattern::undetermined);
}

TEST(TbGroup, BinsAndBoundaries) {
  MorphokineticRecord r;
  r.tb = 99.9;
  EXPECT_EQ(tb_group(r), TbGroup::under_100);
  r.tb = 100.0;
  EXPECT_EQ(tb_group(r), TbGroup::g100_105);
  r.tb = 105.0;  // half-open lower-inclusive bins
  EXPECT_EQ(tb_group(r), TbGroup::g105_110);
  r.tb = 110.0;
  EXPECT_EQ(tb_group(r), TbGroup::g110_115);
  r.tb = 115.0;
  EXPECT_EQ(tb_group(r), TbGroup::over_115);
  r.tb.reset();
  EXPECT_EQ(tb_group(r), TbGroup::absent);
}

TEST(TbGroup, BinsPartitionPositiveReals) {
  tles::Rng rng(32);
  for (int trial = 0; trial < 1000; ++trial) {
    MorphokineticRecord r;
    r.tb = rng.uniform(0.001, 200.0);
    EXPECT_NE(tb_group(r), TbGroup::absent);
  }
}

TEST(Baseline, RequiresAllSevenInputs) {
  auto r = full_record();
  EXPECT_TRUE(baseline_score(r).has_value());
  for (int field = 0; field < 7; ++field) {
    auto broken = full_record();
    switch (field) {
      case 0: broken.pn.reset(); break;
      case 1: broken.t2.reset(); break;
      case 2: broken.t3.reset(); break;
      case 3: broken.t5.reset(); break;
      case 4: broken.tb.reset(); break;
      case 5: broken.icm.reset(); break;
      case 6: broken.te.reset(); break;
    }
    EXPECT_FALSE(baseline_score(broken).has_value()) << "field " << field;
  }
  // tPNf is not required.
  auto no_tpnf = full_record();
  no_tpnf.tpnf.reset();
  EXPECT_TRUE(baseline_score(no_tpnf).has_value());
}

TEST(Baseline, MonotoneInTb) {
  const auto early = baseline_score(full_record(104.0));
  const auto late = baseline_score(full_record(112.0));
  ASSERT_TRUE(early && late);
  EXPECT_GT(*early, *late);
}

TEST(Baseline, MonotoneInGrades) {
  const auto icm_a = baseline_score(full_record(100, Grade::A, Grade::B));
  const auto icm_c = baseline_score(full_record(100, Grade::C, Grade::B));
  ASSERT_TRUE(icm_a && icm_c);
  EXPECT_GT(*icm_a, *icm_c);
  const auto te_a = baseline_score(full_record(100, Grade::B, Grade::A));
  const auto te_c = baseline_score(full_record(100, Grade::B, Grade::C));
  EXPECT_GT(*te_a, *te_c);
}

TEST(Baseline, MonotonicityProperty) {
  tles::Rng rng(33);
  auto random_grade = [&]() {
    const auto g = rng.uniform_int(0, 2);
    return g == 0 ? Grade::A : g == 1 ? Grade::B : Grade::C;
  };
  for (int trial = 0; trial < 500; ++trial) {
    const double tb = rng.uniform(90.0, 130.0);
    const auto icm = random_grade();
    const auto te = random_grade();
    const auto base = baseline_score(full_record(tb, icm, te));
    ASSERT_TRUE(base.has_value());
    // Non-increasing in tB.
    const auto later = baseline_score(full_record(tb + rng.uniform(0.0, 10.0), icm, te));
    ASSERT_LE(*later, *base);
    // Non-decreasing when a grade improves to A.
    const auto promoted = baseline_score(full_record(tb, Grade::A, te));
    ASSERT_GE(*promoted, *base);
    ASSERT_GE(*base, 1.0);
    ASSERT_LE(*base, 9.9);
  }
}

TEST(Baseline, FloorAndLowBands) {
  auto non_2pn = full_record();
  non_2pn.pn = 3;
  EXPECT_DOUBLE_EQ(*baseline_score(non_2pn), 1.0);

  auto dc13 = full_record();
  dc13.t3 = 26.0;  // t3 - tPNf = 4 < 5
  dc13.t5 = 48.0;
  EXPECT_DOUBLE_EQ(*baseline_score(dc13), 2.0);

  auto dc25 = full_record();
  dc25.t3 = 36.0;
  dc25.t5 = 39.0;  // t5 - t3 = 3 < 5
  EXPECT_DOUBLE_EQ(*baseline_score(dc25), 2.5);
}

// Frozen regression table for the documented rules.
TEST(Baseline, GoldenValues) {
  EXPECT_DOUBLE_EQ(*baseline_score(full_record(96.0, Grade::A, Grade::A)), 9.8);
  EXPECT_DOUBLE_EQ(*baseline_score(full_record(120.0, Grade::C, Grade::C)), 5.0);
  EXPECT_DOUBLE_EQ(*baseline_score(full_record(108.0, Grade::B, Grade::B)), 7.4);
  EXPECT_DOUBLE_EQ(*baseline_score(full_record(102.0, Grade::A, Grade::B)), 8.6);
}

TEST(Record, ValidationCatchesDisorderedTimings) {
  MorphokineticRecord r;
  r.t2 = 30.0;
  r.t3 = 20.0;
  EXPECT_THROW(validate(r), tles::Error);
  MorphokineticRecord neg;
  neg.t2 = -1.0;
  EXPECT_THROW(validate(neg), tles::Error);
  EXPECT_NO_THROW(validate(full_record()));
}

}  // namespace
