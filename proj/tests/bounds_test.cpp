#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gedsim/bounds.hpp"
#include "gedsim/oracle.hpp"
#include "gedsim/random.hpp"
#include "test_util.hpp"

using namespace gedsim;

namespace {

LabeledGraph single(const LabelSpacePtr& labels, const std::string& label) {
  GraphBuilder b(labels);
  b.add_node(label);
  return b.build();
}

LpOptions exact() {
  LpOptions o;
  o.arithmetic = Arithmetic::Exact;
  return o;
}

}  // namespace

TEST(LsBound, Examples) {
  const auto [g, h] = worked_example_pair();
  EXPECT_EQ(ls_bound(g, g).value(), 0);
  EXPECT_EQ(ls_bound(g, h).value(), 2);
  const auto [s, c] = star_cycle_instance(5);
  EXPECT_EQ(ls_bound(s, c).value(), 1);
  EXPECT_CODE(ls_bound(g, h, aids_muta_costs()), UnsupportedCostModel);
  EXPECT_CODE(ls_bound(g, h, protein_costs()), UnsupportedCostModel);
}

TEST(BmBound, Examples) {
  const auto [g, h] = worked_example_pair();
  const auto unit = unit_costs();
  EXPECT_EQ(bm_bound(g, g, unit).value(), 0);
  EXPECT_EQ(bm_bound(g, h, unit).value(), brute_force_bm(g, h, unit));
  EXPECT_EQ(bm_bound(g, h, unit).value(), 5);
  for (auto [n, want] : {std::pair{5, 3.0}, {8, 6.0}}) {
    const auto [s, c] = star_cycle_instance(n);
    EXPECT_EQ(bm_bound(s, c, unit).value(), want);
  }
}

TEST(BmBound, AgreesWithUnitClosedFormAndBruteForce) {
  std::mt19937_64 rng(31);
  auto labels = make_label_space();
  const RandomGraphSpec spec{1, 6, 10, 3, 3};
  for (int t = 0; t < 200; ++t) {
    const auto g = random_graph(rng, spec, labels), h = random_graph(rng, spec, labels);
    const auto pc = pair_costs(g, h, unit_costs());
    EXPECT_EQ(bm_bound_doubled(g, h, pc), bm_unit_closed_form_doubled(g, h));
    EXPECT_EQ(bm_bound_doubled(g, h, pc), brute_force_bm_doubled(g, h, unit_costs()));
    EXPECT_EQ(bm_bound_doubled(g, h, pair_costs(g, h, aids_muta_costs())),
              brute_force_bm_doubled(g, h, aids_muta_costs()));
  }
}

TEST(ForiLpBound, Examples) {
  auto labels = make_label_space();
  const auto a = single(labels, "A"), b = single(labels, "A");
  EXPECT_EQ(fori_lp_bound(a, b, unit_costs()).value(), 0);
  for (auto [n, want] : {std::pair{5, 5.0}, {10, 15.0}}) {
    const auto [s, c] = star_cycle_instance(n);
    const auto r = fori_lp_bound(s, c, unit_costs(), {}, exact());
    EXPECT_EQ(r.value(), want);
    ASSERT_TRUE(r.certificate);
    EXPECT_TRUE(r.certificate->exact);
    EXPECT_EQ(r.certificate->exact_value, Rational(static_cast<long>(want)));
  }
}

TEST(ForiLpBound, AnchorsAreValidated) {
  const auto [g, h] = worked_example_pair();
  EXPECT_CODE(fori_lp_bound(g, h, unit_costs(), {{0, 0}, {1, 0}}), InfeasibleFixings);
  EXPECT_CODE(fori_lp_bound(g, h, unit_costs(), {{0, 0}, {0, 1}}), InfeasibleFixings);
  EXPECT_CODE(fori_lp_bound(g, h, unit_costs(), {{5, 0}}), InfeasibleFixings);
}

TEST(ForiLpBound, AnchorMonotonicity) {
  std::mt19937_64 rng(12);
  auto labels = make_label_space();
  const RandomGraphSpec spec{2, 6, 9, 2, 2};
  for (int t = 0; t < 60; ++t) {
    const auto g = random_graph(rng, spec, labels), h = random_graph(rng, spec, labels);
    const auto model = build_fori(g, h, unit_costs());
    double prev = fori_lp_bound(model, {}, exact()).scaled;
    std::vector<NodeFixing> anchors;
    std::vector<NodeId> targets(h.size());
    std::iota(targets.begin(), targets.end(), 0);
    std::shuffle(targets.begin(), targets.end(), rng);
    for (std::size_t i = 0; i < std::min(g.size(), h.size()); ++i) {
      anchors.emplace_back(static_cast<NodeId>(i), targets[i]);
      const double next = fori_lp_bound(model, anchors, exact()).scaled;
      EXPECT_GE(next, prev - 1e-9);
      prev = next;
    }
  }
}

TEST(ForiLpBound, StrongDualityCertificate) {
  std::mt19937_64 rng(13);
  auto labels = make_label_space();
  for (int t = 0; t < 60; ++t) {
    const auto g = random_graph(rng, {1, 6, 10, 3, 2}, labels), h = random_graph(rng, {1, 6, 10, 3, 2}, labels);
    for (const auto& costs : {unit_costs(), aids_muta_costs()}) {
      const auto r = fori_lp_bound(g, h, costs);
      ASSERT_TRUE(r.certificate);
      EXPECT_NEAR(r.certificate->primal_objective, r.certificate->dual_objective, 1e-9 * std::max(1.0, r.scaled));
    }
  }
}

TEST(Hierarchy, BoundsAreOrderedAndSound) {
  std::mt19937_64 rng(14);
  auto labels = make_label_space();
  const RandomGraphSpec spec{1, 6, 10, 3, 3};
  for (int t = 0; t < 150; ++t) {
    const auto g = random_graph(rng, spec, labels), h = random_graph(rng, spec, labels);
    const auto ged = static_cast<double>(brute_force_ged(g, h, unit_costs()).cost);
    const double ls = ls_bound(g, h).value();
    const double bm = bm_bound(g, h, unit_costs()).value();
    const auto fori = fori_lp_bound(g, h, unit_costs(), {}, exact());
    const double fl = to_double(fori.certificate->exact_value);
    EXPECT_GE(fl, bm);
    EXPECT_GE(bm, ls);
    EXPECT_LE(fl, ged);
    const auto am = aids_muta_costs();
    const auto am_ged = static_cast<double>(brute_force_ged(g, h, am).cost);
    EXPECT_LE(bm_bound(g, h, am).scaled, am_ged);
    EXPECT_GE(fori_lp_bound(g, h, am, {}, exact()).scaled + 1e-9, bm_bound(g, h, am).scaled);
    EXPECT_LE(fori_lp_bound(g, h, am, {}, exact()).scaled, am_ged + 1e-9);
  }
}

TEST(ComputeBound, DispatchesByAlgorithm) {
  const auto [g, h] = worked_example_pair();
  EXPECT_EQ(compute_bound(BoundAlgorithm::LS, g, h, unit_costs()).value(), 2);
  EXPECT_EQ(compute_bound(BoundAlgorithm::BM, g, h, unit_costs()).value(), 5);
  EXPECT_NEAR(compute_bound(BoundAlgorithm::FORILP, g, h, unit_costs()).value(), 5, 1e-9);
  EXPECT_EQ(bound_algorithm_by_name("bm"), BoundAlgorithm::BM);
  EXPECT_CODE(bound_algorithm_by_name("qgram"), SchemaViolation);
}

TEST(Gap, Examples) {
  EXPECT_EQ(gap(10, 10), 0);
  EXPECT_EQ(gap(10, 5), 0.5);
  EXPECT_DOUBLE_EQ(gap(5, 2), 0.6);
  EXPECT_EQ(gap(0, 0), 0);
  EXPECT_CODE(gap(0, 1), DivisionByZeroGed);
}
