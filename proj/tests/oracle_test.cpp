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

// Pads both node sets with dummies to a common size and tries every
// permutation; an edge pair whose endpoints both land on real nodes is
// substituted, every other edge is deleted or inserted.
Cost permutation_ged(const LabeledGraph& g, const LabeledGraph& h, const CostModel& c) {
  const auto pc = pair_costs(g, h, c);
  const std::size_t n = g.size() + h.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Cost best = std::numeric_limits<Cost>::max();
  do {
    Cost total = 0;
    std::vector<std::int32_t> to_h(g.size(), kDeleted);
    std::vector<bool> h_hit(h.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (perm[i] < h.size()) {
        to_h[i] = static_cast<std::int32_t>(perm[i]);
        h_hit[perm[i]] = true;
        total += pc.node_subst(i, perm[i]);
      } else {
        total += pc.node_del[i];
      }
    }
    for (std::size_t k = 0; k < h.size(); ++k) total += h_hit[k] ? 0 : pc.node_ins[k];
    std::vector<bool> f_hit(h.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const auto a = to_h[static_cast<std::size_t>(g.edge(e).u)], b = to_h[static_cast<std::size_t>(g.edge(e).v)];
      std::optional<std::int32_t> f;
      if (a != kDeleted && b != kDeleted) f = h.find_edge(a, b);
      if (f) {
        const auto fi = static_cast<std::size_t>(*f);
        f_hit[fi] = true;
        total += std::min(pc.edge_subst(e, fi), pc.edge_del[e] + pc.edge_ins[fi]);
      } else {
        total += pc.edge_del[e];
      }
    }
    for (std::size_t f = 0; f < h.edge_count(); ++f) total += f_hit[f] ? 0 : pc.edge_ins[f];
    best = std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST(BruteForceGed, Examples) {
  const auto [g, h] = worked_example_pair();
  EXPECT_EQ(brute_force_ged(g, g, unit_costs()).cost, 0);
  EXPECT_EQ(brute_force_ged(g, h, unit_costs()).cost, 5);
  auto labels = make_label_space();
  GraphBuilder a(labels), b(labels);
  a.add_node("A");
  b.add_node("B");
  EXPECT_EQ(brute_force_ged(a.build(), b.build(), unit_costs()).cost, 1);
}

TEST(BruteForceGed, TooLarge) {
  const auto [s, c] = star_cycle_instance(9);
  EXPECT_CODE(brute_force_ged(s, c, unit_costs()), TooLarge);
  EXPECT_CODE(brute_force_bm(s, c, unit_costs()), TooLarge);
}

TEST(BruteForceGed, MatchesPermutationEnumeration) {
  std::mt19937_64 rng(90);
  auto labels = make_label_space();
  for (int t = 0; t < 60; ++t) {
    const auto g = random_graph(rng, {0, 4, 6, 2, 2}, labels), h = random_graph(rng, {0, 4, 6, 2, 2}, labels);
    for (const auto& costs : {unit_costs(), aids_muta_costs()}) {
      const auto r = brute_force_ged(g, h, costs);
      EXPECT_EQ(r.cost, permutation_ged(g, h, costs));
      EXPECT_EQ(mapping_cost(g, h, pair_costs(g, h, costs), r.mapping), r.cost);
    }
  }
}

TEST(BruteForceGed, SymmetricAndBelowK) {
  std::mt19937_64 rng(91);
  auto labels = make_label_space();
  for (int t = 0; t < 100; ++t) {
    const auto g = random_graph(rng, {0, 6, 10, 3, 2}, labels), h = random_graph(rng, {0, 6, 10, 3, 2}, labels);
    for (const auto& costs : {unit_costs(), aids_muta_costs()}) {
      const Cost d = brute_force_ged(g, h, costs).cost;
      EXPECT_EQ(d, brute_force_ged(h, g, costs).cost);
      EXPECT_LE(d, pair_costs(g, h, costs).constant());
    }
  }
}

TEST(BruteForceBm, Examples) {
  const auto [s, c] = star_cycle_instance(5);
  EXPECT_EQ(brute_force_bm(s, c, unit_costs()), 3);
  EXPECT_EQ(brute_force_bm(s, s, unit_costs()), 0);
}

TEST(BruteForceBm, EqualsAssignmentBm) {
  std::mt19937_64 rng(92);
  auto labels = make_label_space();
  for (int t = 0; t < 80; ++t) {
    const auto g = random_graph(rng, {5, 5, 10, 2, 2}, labels), h = random_graph(rng, {5, 5, 10, 2, 2}, labels);
    EXPECT_EQ(brute_force_bm(g, h, unit_costs()), bm_bound(g, h, unit_costs()).value());
  }
}
