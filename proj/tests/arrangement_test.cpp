#include "mvv/arrangement.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "mvv/generate.hpp"
#include "mvv/verify.hpp"

namespace {

using mvv::center_arrangement;
using mvv::subspace;

subspace unit_point(int ambient, int index) {
  mvv::matrix m(1, static_cast<std::size_t>(ambient) + 1);
  m(0, static_cast<std::size_t>(index)) = 1;
  return subspace::span_rows(ambient, m);
}

subspace coord_line(int ambient, int a, int b) {
  mvv::matrix m(2, static_cast<std::size_t>(ambient) + 1);
  m(0, static_cast<std::size_t>(a)) = 1;
  m(1, static_cast<std::size_t>(b)) = 1;
  return subspace::span_rows(ambient, m);
}

TEST(Partitions, EnumerationCountsMatchBellNumbers) {
  const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (int n = 1; n <= 7; ++n) {
    long count = 0;
    mvv::for_each_partition(n, [&](std::span<const std::uint32_t> blocks) {
      ++count;
      std::uint32_t all = 0;
      for (std::uint32_t b : blocks) {
        EXPECT_NE(b, 0u);
        EXPECT_EQ(all & b, 0u);  // disjoint
        all |= b;
      }
      EXPECT_EQ(all, (1u << n) - 1);  // covering
    });
    EXPECT_EQ(count, bell[n]);
  }
}

TEST(Lattice, MatchesDirectMeets) {
  center_arrangement arr = mvv::random_arrangement_through_core(4, {2, 2, 1}, 0, 61);
  for (std::uint32_t mask = 1; mask < 8; ++mask) {
    std::vector<subspace> chosen;
    for (int i = 0; i < 3; ++i)
      if (mask & (1u << i)) chosen.push_back(arr.center(i));
    EXPECT_EQ(arr.lattice_dim(mask), mvv::meet_many(chosen).dim());
  }
  // monotone: larger index sets meet in no more dimensions
  for (std::uint32_t a = 1; a < 8; ++a)
    for (std::uint32_t b = 1; b < 8; ++b)
      if ((a & b) == a) EXPECT_GE(arr.lattice_dim(a), arr.lattice_dim(b));
}

TEST(EllClosedForm, SingleCenter) {
  center_arrangement arr(3, {unit_point(3, 0)});
  EXPECT_EQ(mvv::ell_closed_form(arr, 0).value, 1);  // dim c + k + 1
  EXPECT_EQ(mvv::ell_closed_form(arr, 1).value, 2);
  EXPECT_FALSE(mvv::is_triangulable(arr, 0));
}

TEST(EllClosedForm, TwoLineCentersInP3) {
  center_arrangement disjoint(3, {coord_line(3, 0, 1), coord_line(3, 2, 3)});
  EXPECT_EQ(mvv::ell_closed_form(disjoint, 0).value, 1);
  center_arrangement meeting(3, {coord_line(3, 0, 1), coord_line(3, 1, 2)});
  EXPECT_EQ(mvv::ell_closed_form(meeting, 0).value, 1);
  EXPECT_FALSE(mvv::is_triangulable(disjoint, 0));
}

TEST(EllClosedForm, TwoPointCentersInP3) {
  center_arrangement arr(3, {unit_point(3, 0), unit_point(3, 1)});
  EXPECT_EQ(mvv::ell_closed_form(arr, 1).value, 1);
  EXPECT_TRUE(mvv::is_triangulable(arr, 1));
  EXPECT_EQ(mvv::ell_closed_form(arr, 0).value, 0);
}

TEST(EllClosedForm, ThreeGenericPointsViaOracle) {
  center_arrangement arr = mvv::random_arrangement(3, {0, 0, 0}, 77);
  EXPECT_EQ(mvv::ell_closed_form(arr, 0).value, 0);
  EXPECT_EQ(mvv::ell_sampled(arr, 0, 20, 78), 0);
}

TEST(EllClosedForm, WitnessAttainsTheValue) {
  center_arrangement arr = mvv::random_arrangement_through_core(4, {1, 1, 2}, 0, 79);
  const mvv::ell_value got = mvv::ell_closed_form(arr, 0);
  long value = 0;
  for (std::uint32_t mask : got.witness.blocks) value += arr.lattice_dim(mask);
  value -= static_cast<long>(got.witness.blocks.size()) * (arr.ambient_dim() - 0 - 1);
  EXPECT_EQ(arr.ambient_dim() + value, got.value);
}

TEST(EllClosedForm, MaximalKGivesTheWholeSpace) {
  // k = N-1 with point centers: every back-projection is all of P^N
  center_arrangement arr(2, {unit_point(2, 0), unit_point(2, 1)});
  EXPECT_EQ(mvv::ell_closed_form(arr, 1).value, 2);
  EXPECT_EQ(mvv::ell_sampled(arr, 1, 5, 301), 2);
  EXPECT_FALSE(mvv::is_triangulable(arr, 1));
}

TEST(EllClosedForm, HyperplaneCenterForcesFullBackProjection) {
  // a codimension-1 center joined with any point spans everything
  center_arrangement arr(2, {coord_line(2, 0, 1), unit_point(2, 0)});
  EXPECT_EQ(mvv::ell_closed_form(arr, 0).value, 1);
  EXPECT_EQ(mvv::ell_sampled(arr, 0, 10, 302), 1);
}

TEST(EllClosedForm, RejectsInvalidK) {
  center_arrangement arr(3, {coord_line(3, 0, 1)});
  EXPECT_THROW(mvv::ell_closed_form(arr, 2), mvv::error);  // k > N-1-dim c
  EXPECT_THROW(mvv::ell_closed_form(arr, -1), mvv::error);
}

TEST(EllClosedForm, PartitionBudget) {
  std::vector<int> dims(13, 0);
  center_arrangement arr = mvv::random_arrangement(3, dims, 80);
  EXPECT_THROW(mvv::ell_closed_form(arr, 0), mvv::partition_budget_exceeded);
  EXPECT_NO_THROW(mvv::ell_closed_form(arr, 0, 13));
}

TEST(EllTwoView, MatchesHandValues) {
  center_arrangement points(3, {unit_point(3, 0), unit_point(3, 1)});
  EXPECT_EQ(mvv::ell_two_view(points, 1), 1);
  EXPECT_EQ(mvv::ell_two_view(points, 0), 0);
  center_arrangement meeting(3, {coord_line(3, 0, 1), coord_line(3, 1, 2)});
  EXPECT_EQ(mvv::ell_two_view(meeting, 0), 1);
  subspace line = mvv::sample_subspace(3, 1, 81);
  center_arrangement identical(3, {line, line});
  EXPECT_EQ(mvv::ell_two_view(identical, 0), 2);  // dim c + k + 1
}

TEST(EllTwoView, WrongArity) {
  center_arrangement arr(3, {unit_point(3, 0)});
  EXPECT_THROW(mvv::ell_two_view(arr, 0), mvv::wrong_arity);
}

TEST(EllSampled, SingleCenterEveryTrial) {
  center_arrangement arr(4, {mvv::sample_subspace(4, 1, 82)});
  EXPECT_EQ(mvv::ell_sampled(arr, 0, 5, 83), 2);  // dim c + k + 1
  EXPECT_EQ(mvv::ell_sampled(arr, 1, 5, 84), 3);
}

TEST(EllSampled, TwoDistinctLinesP3) {
  center_arrangement arr(3, {coord_line(3, 0, 1), coord_line(3, 2, 3)});
  EXPECT_EQ(mvv::ell_sampled(arr, 0, 20, 85), 1);
}

TEST(PseudoDisjoint, CoincidentVsDistinctPoints) {
  subspace p = unit_point(2, 0);
  center_arrangement same(2, {p, p});
  const mvv::pseudo_disjoint_result bad = mvv::is_pseudo_disjoint(same, 0);
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.violating, 0b11u);
  EXPECT_TRUE(mvv::is_pseudo_disjoint(same, 1).ok);  // k = N-1
  center_arrangement distinct(2, {p, unit_point(2, 1)});
  EXPECT_TRUE(mvv::is_pseudo_disjoint(distinct, 0).ok);
}

TEST(PseudoDisjoint, MeetingLinesInP3) {
  center_arrangement arr(3, {coord_line(3, 0, 1), coord_line(3, 1, 2)});
  EXPECT_TRUE(mvv::is_pseudo_disjoint(arr, 0).ok);
  EXPECT_EQ(mvv::ell_pseudo_disjoint(arr, 0), 1);
}

TEST(PseudoDisjoint, DisjointArrangementsAlwaysQualify) {
  mvv::prng rng(86);
  for (int i = 0; i < 30; ++i) {
    center_arrangement arr = mvv::random_arrangement(4, {1, 1}, rng.next());
    if (arr.lattice_dim(0b11) >= 0) continue;  // want disjoint draws
    for (int k = 0; k <= 2; ++k) EXPECT_TRUE(mvv::is_pseudo_disjoint(arr, k).ok);
  }
}

TEST(PseudoDisjoint, FormulaRequiresTheProperty) {
  subspace p = unit_point(2, 0);
  center_arrangement same(2, {p, p});
  EXPECT_THROW(mvv::ell_pseudo_disjoint(same, 0), mvv::not_pseudo_disjoint);
}

TEST(DimMultiview, HandValues) {
  center_arrangement two_points(3, {unit_point(3, 0), unit_point(3, 1)});
  EXPECT_EQ(mvv::dim_multiview(two_points, 0), 3);
  EXPECT_EQ(mvv::dim_multiview(two_points, 1), 4);
  center_arrangement one_point(3, {unit_point(3, 0)});
  EXPECT_EQ(mvv::dim_multiview(one_point, 0), 2);
}

TEST(Feasibility, TwoDisjointPointsInP3) {
  center_arrangement arr(3, {unit_point(3, 0), unit_point(3, 1)});
  const mvv::feasibility_value got = mvv::dim_via_feasibility(arr, 0);
  // oracle: exhaustive scan over m in [0,2]^2 under m_1 <= 2, m_2 <= 2, m_1+m_2 <= 3
  long best = -1;
  for (long m1 = 0; m1 <= 2; ++m1)
    for (long m2 = 0; m2 <= 2; ++m2)
      if (m1 <= 2 && m2 <= 2 && m1 + m2 <= 3) best = std::max(best, m1 + m2);
  ASSERT_EQ(best, 3);
  EXPECT_EQ(got.h_max, 3);
  ASSERT_EQ(got.witness.size(), 2u);
  EXPECT_EQ(got.witness[0] + got.witness[1], 3);
}

TEST(Feasibility, SinglePointCenter) {
  center_arrangement arr(3, {unit_point(3, 0)});
  const mvv::feasibility_value got = mvv::dim_via_feasibility(arr, 0);
  EXPECT_EQ(got.h_max, 2);
  EXPECT_EQ(got.witness, std::vector<long>{2});
}

TEST(Feasibility, PseudoDisjointShortcut) {
  mvv::prng rng(87);
  for (int i = 0; i < 20; ++i) {
    mvv::random_instance inst = mvv::draw_instance(5, 4, rng.next());
    if (!mvv::is_pseudo_disjoint(inst.arr, inst.k).ok) continue;
    const long expected =
        static_cast<long>(inst.k + 1) *
        std::min<long>(inst.arr.ambient_dim() - inst.k, mvv::excess(inst.arr, inst.k));
    EXPECT_EQ(mvv::dim_via_feasibility(inst.arr, inst.k).h_max, expected);
  }
}

TEST(Feasibility, Budget) {
  center_arrangement arr = mvv::random_arrangement(3, {0, 0, 0, 0, 0, 0, 0}, 88);
  EXPECT_THROW(mvv::dim_via_feasibility(arr, 0), mvv::feasibility_budget_exceeded);
  EXPECT_NO_THROW(mvv::dim_via_feasibility(arr, 0, 7));
}

TEST(Proper, TwoPointCentersInP3) {
  center_arrangement arr(3, {unit_point(3, 0), unit_point(3, 1)});
  EXPECT_TRUE(mvv::is_proper(arr, 0));    // generic image lines miss each other
  EXPECT_FALSE(mvv::is_proper(arr, 1));   // any two image planes share a line
}

TEST(Proper, NonPseudoDisjointIsProper) {
  subspace p = unit_point(2, 0);
  center_arrangement same(2, {p, p});
  EXPECT_TRUE(mvv::is_proper(same, 0));
}

TEST(Proper, EquivalentToProductDimensionGap) {
  mvv::prng rng(89);
  for (int i = 0; i < 40; ++i) {
    mvv::random_instance inst = mvv::draw_instance(5, 3, rng.next());
    const bool gap = mvv::dim_multiview(inst.arr, inst.k) != mvv::dim_product_space(inst.arr, inst.k);
    EXPECT_EQ(mvv::is_proper(inst.arr, inst.k), gap);
  }
}

TEST(Tau, ReferenceTable) { EXPECT_EQ(mvv::check_tau_table().failures, 0); }

TEST(SchubertLocusDim, HandValues) {
  EXPECT_EQ(mvv::schubert_locus_dim(3, {2, 2, 2}, 0, 1), -1);  // 2*2 - 1*6
  EXPECT_EQ(mvv::schubert_locus_dim(3, {2, 2}, 1, 2), 1);      // 3*1 - 1*2
  for (long k = 0; k <= 2; ++k)
    EXPECT_EQ(mvv::schubert_locus_dim(5, {3, 4}, k, k), (k + 1) * (5 - k));
}

TEST(Upsilon, GenericFormulaTables) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> dims(static_cast<std::size_t>(n), 0);
    center_arrangement arr = mvv::random_arrangement(3, dims, 90 + static_cast<std::uint64_t>(n));
    EXPECT_TRUE(arr.generic_hint());
    const mvv::upsilon_value u0 = mvv::upsilon(arr, 0, true);
    EXPECT_EQ(u0.value, n <= 2 ? 1 : 0);
    EXPECT_EQ(u0.method, mvv::upsilon_method::exact_generic);
    EXPECT_EQ(mvv::upsilon(arr, 1, true).value, n <= 3 ? 2 : 1);
  }
}

TEST(Upsilon, SinglePointCenterBeatsTau) {
  for (int ambient : {4, 9, 16}) {
    center_arrangement arr(ambient, {mvv::sample_subspace(ambient, 0, 91)});
    const long isqrt = ambient == 4 ? 2 : ambient == 9 ? 3 : 4;
    EXPECT_EQ(mvv::tau(ambient, arr.image_dims(), 0), isqrt);
    EXPECT_EQ(mvv::upsilon(arr, 0, true).value, 1);
  }
}

TEST(Upsilon, CollinearPointsCertifyTheCommonLine) {
  center_arrangement arr(3, {unit_point(3, 0), unit_point(3, 1),
                             subspace::point(3, {1, 1, 0, 0})});
  const mvv::upsilon_value u = mvv::upsilon(arr, 0, false, 92);
  EXPECT_EQ(u.value, 1);
  EXPECT_EQ(u.method, mvv::upsilon_method::lower_bound);
}

TEST(Upsilon, SearchNeverExceedsCenterCap) {
  mvv::prng rng(93);
  for (int i = 0; i < 20; ++i) {
    mvv::random_instance inst = mvv::draw_instance(5, 3, rng.next());
    const mvv::upsilon_value u = mvv::upsilon(inst.arr, inst.k, false, rng.next());
    EXPECT_GE(u.value, inst.k);
    EXPECT_LE(u.value, inst.arr.min_center_dim() + inst.k + 1);
  }
}

TEST(Analyze, ClassicalTwoCameraSetup) {
  center_arrangement arr = mvv::random_arrangement(3, {0, 0}, 94);
  const mvv::analysis_report rep = mvv::analyze(arr, 0, {.seed = 95});
  EXPECT_EQ(rep.ell, 0);
  EXPECT_EQ(rep.dim_variety, 3);
  EXPECT_TRUE(rep.triangulable);
  EXPECT_TRUE(rep.pseudo_disjoint);
  EXPECT_TRUE(rep.proper);
  EXPECT_TRUE(rep.consistent);
  EXPECT_EQ(rep.feasibility.h_max, 3);
}

TEST(Analyze, SinglePointCenter) {
  center_arrangement arr(3, {unit_point(3, 0)});
  const mvv::analysis_report rep = mvv::analyze(arr, 0, {.seed = 96});
  EXPECT_EQ(rep.ell, 1);
  EXPECT_EQ(rep.dim_variety, 2);
  EXPECT_FALSE(rep.triangulable);
  EXPECT_TRUE(rep.pseudo_disjoint);
  EXPECT_FALSE(rep.proper);
  EXPECT_TRUE(rep.consistent);
}

TEST(Analyze, CoincidentCentersAreFlaggedNotPseudoDisjoint) {
  subspace p = unit_point(2, 0);
  center_arrangement same(2, {p, p});
  const mvv::analysis_report rep = mvv::analyze(same, 0, {.seed = 97});
  EXPECT_FALSE(rep.pseudo_disjoint);
  EXPECT_TRUE(rep.proper);
  EXPECT_TRUE(rep.consistent);
}

TEST(Invariants, EllBounds) {
  mvv::prng rng(98);
  for (int i = 0; i < 40; ++i) {
    mvv::random_instance inst = mvv::draw_instance(5, 4, rng.next());
    const int ell = mvv::ell_closed_form(inst.arr, inst.k).value;
    EXPECT_GE(ell, inst.k);
    EXPECT_LE(ell, inst.arr.min_center_dim() + inst.k + 1);
    const std::uint32_t full = (1u << inst.arr.size()) - 1;
    EXPECT_GE(ell, inst.arr.lattice_dim(full) + inst.k + 1);
  }
}

TEST(Invariants, MonotoneUnderAppendedCenters) {
  EXPECT_EQ(mvv::check_ell_monotonicity(40, 99).failures, 0);
}

TEST(Invariants, SampledOracleSweep) {
  EXPECT_EQ(mvv::check_ell_oracle(25, 5, 4, 2025).failures, 0);
}

TEST(Invariants, TwoViewSweep) { EXPECT_EQ(mvv::check_two_view(40, 2026).failures, 0); }

TEST(Invariants, FeasibilitySweep) { EXPECT_EQ(mvv::check_feasibility(15, 2027).failures, 0); }

TEST(Invariants, PointCenterPseudoDisjointSweep) {
  EXPECT_EQ(mvv::check_point_center_pseudo_disjoint(30, 2028).failures, 0);
}

}  // namespace
