#include <gtest/gtest.h>

#include <random>

#include "gedsim/costs.hpp"
#include "gedsim/graph.hpp"
#include "gedsim/random.hpp"
#include "test_util.hpp"

using namespace gedsim;

namespace {

LabelValue tok(std::string t) { return {std::move(t), {}}; }
LabelValue node(std::string t, std::string s) { return {t + "|" + s, {{"t", t}, {"s", s}}}; }
LabelValue edge(std::string t1) { return {t1 + "|null", {{"t1", t1}}}; }
LabelValue edge(std::string t1, std::string t2) { return {t1 + "|" + t2, {{"t1", t1}, {"t2", t2}}}; }

// Independent full-table DP.
std::size_t reference_levenshtein(const std::string& a, const std::string& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
  }
  return d[a.size()][b.size()];
}

// Enumerates every partial injection of rows into columns.
long reference_lsape(const Matrix<long>& c) {
  const std::size_t p = c.rows() - 1, q = c.cols() - 1;
  long best = std::numeric_limits<long>::max();
  std::vector<int> target(p, -1);
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == p) {
      std::vector<bool> used(q, false);
      long total = 0;
      for (std::size_t i = 0; i < p; ++i) {
        if (target[i] < 0) {
          total += c(i, q);
        } else {
          if (used[static_cast<std::size_t>(target[i])]) return;
          used[static_cast<std::size_t>(target[i])] = true;
          total += c(i, static_cast<std::size_t>(target[i]));
        }
      }
      for (std::size_t s = 0; s < q; ++s) {
        if (!used[s]) total += c(p, s);
      }
      best = std::min(best, total);
      return;
    }
    for (int s = -1; s < static_cast<int>(q); ++s) {
      target[r] = s;
      rec(r + 1);
    }
  };
  rec(0);
  return best;
}

}  // namespace

TEST(UnitCosts, Values) {
  const auto c = unit_costs();
  EXPECT_EQ(c.scale(), 1);
  EXPECT_EQ(c.node_subst(tok("A"), tok("A")), 0);
  EXPECT_EQ(c.node_subst(tok("A"), tok("B")), 1);
  EXPECT_EQ(c.edge_del(tok("b")), 1);
  EXPECT_EQ(c.edge_ins(tok("b")), 1);
  EXPECT_EQ(c.node_del(tok("A")), 1);
}

TEST(AidsMutaCosts, Values) {
  const auto c = aids_muta_costs();
  EXPECT_DOUBLE_EQ(c.to_real(c.node_subst(tok("C"), tok("N"))), 5.5);
  EXPECT_EQ(c.node_subst(tok("C"), tok("C")), 0);
  EXPECT_DOUBLE_EQ(c.to_real(c.node_del(tok("C"))), 2.75);
  EXPECT_DOUBLE_EQ(c.to_real(c.node_ins(tok("C"))), 2.75);
  EXPECT_DOUBLE_EQ(c.to_real(c.edge_subst(tok("1"), tok("2"))), 1.65);
  EXPECT_EQ(c.edge_subst(tok("1"), tok("1")), 0);
  EXPECT_DOUBLE_EQ(c.to_real(c.edge_ins(tok("1"))), 0.825);
  EXPECT_DOUBLE_EQ(c.to_real(c.edge_del(tok("1"))), 0.825);
}

TEST(ProteinCosts, NodeValues) {
  const auto c = protein_costs();
  EXPECT_DOUBLE_EQ(c.to_real(c.node_subst(node("helix", "AA"), node("sheet", "AA"))), 16.5);
  EXPECT_DOUBLE_EQ(c.to_real(c.node_subst(node("helix", "AA"), node("helix", "AB"))), 0.75);
  EXPECT_DOUBLE_EQ(c.to_real(c.node_subst(node("loop", "kitten"), node("loop", "sitting"))), 2.25);
  EXPECT_DOUBLE_EQ(c.to_real(c.node_del(node("loop", "A"))), 8.25);
  EXPECT_DOUBLE_EQ(c.to_real(c.node_ins(node("loop", "A"))), 8.25);
}

TEST(ProteinCosts, EdgeValues) {
  const auto c = protein_costs();
  EXPECT_DOUBLE_EQ(c.to_real(c.edge_del(edge("0"))), 0.25);
  EXPECT_DOUBLE_EQ(c.to_real(c.edge_del(edge("0", "1"))), 0.5);
  EXPECT_DOUBLE_EQ(c.to_real(c.edge_ins(edge("1", "0"))), 0.5);
  EXPECT_EQ(c.edge_subst(edge("0", "1"), edge("1", "0")), 0);
  EXPECT_DOUBLE_EQ(c.to_real(c.edge_subst(edge("0"), edge("1"))), 0.5);
  EXPECT_DOUBLE_EQ(c.to_real(c.edge_subst(edge("0"), edge("0", "1"))), 0.25);
  EXPECT_DOUBLE_EQ(c.to_real(c.edge_subst(edge("0", "0"), edge("1", "1"))), 1.0);
}

TEST(ProteinCosts, MissingPayload) {
  const auto c = protein_costs();
  EXPECT_CODE(c.node_subst(tok("helix"), node("helix", "A")), MissingPayload);
  EXPECT_CODE(c.node_del(tok("helix")), MissingPayload);
  EXPECT_CODE(c.edge_del(tok("0")), MissingPayload);
}

TEST(CostModelByName, KnownAndUnknown) {
  EXPECT_EQ(cost_model_by_name("unit").name(), "unit");
  EXPECT_EQ(cost_model_by_name("aids-muta").scale(), 40);
  EXPECT_EQ(cost_model_by_name("protein").family(), CostFamily::Protein);
  EXPECT_CODE(cost_model_by_name("euclid"), UnsupportedCostModel);
  EXPECT_DOUBLE_EQ(tau_multiplier(aids_muta_costs()), 3.575);
  EXPECT_DOUBLE_EQ(tau_multiplier(protein_costs()), 8.375);
}

TEST(ScaledThreshold, FloorsInScaledUnits) {
  EXPECT_EQ(scaled_threshold(unit_costs(), 3.0), 3);
  EXPECT_EQ(scaled_threshold(unit_costs(), 3.9), 3);
  EXPECT_EQ(scaled_threshold(aids_muta_costs(), 3.575), 143);
  EXPECT_EQ(scaled_threshold(aids_muta_costs(), 0.825), 33);
  EXPECT_EQ(scaled_threshold(protein_costs(), 8.375 * 5), 1675);
}

TEST(Levenshtein, Examples) {
  EXPECT_EQ(levenshtein("", "abc"), 3u);
  EXPECT_EQ(levenshtein("a", "a"), 0u);
  EXPECT_EQ(levenshtein("kitten", "sitting"), 3u);
  EXPECT_EQ(levenshtein("kitten", "sitting"), reference_levenshtein("kitten", "sitting"));
}

TEST(Levenshtein, MatchesReferenceDp) {
  std::mt19937_64 rng(3);
  auto word = [&] {
    std::string s(std::uniform_int_distribution<int>(0, 8)(rng), 'a');
    for (auto& ch : s) ch = static_cast<char>('a' + std::uniform_int_distribution<int>(0, 2)(rng));
    return s;
  };
  for (int t = 0; t < 500; ++t) {
    const auto a = word(), b = word();
    EXPECT_EQ(levenshtein(a, b), reference_levenshtein(a, b)) << a << " / " << b;
    EXPECT_EQ(levenshtein(a, b), levenshtein(b, a));
  }
}

TEST(LsapeSmall, Examples) {
  EXPECT_EQ(lsape_small(Matrix<long>{{0, 1}, {1, 0}}), 0);
  EXPECT_EQ(lsape_small(Matrix<long>{{2, 1}, {1, 0}}), 2);
  EXPECT_EQ(lsape_small(Matrix<long>{{2, 2, 1}, {2, 2, 1}, {1, 1, 0}}), 4);
  EXPECT_CODE(lsape_small(Matrix<long>{}), MatrixShape);
}

TEST(LsapeSmall, MatchesEnumeration) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 400; ++t) {
    const std::size_t p = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
    const std::size_t q = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
    Matrix<long> c(p + 1, q + 1);
    for (std::size_t r = 0; r <= p; ++r) {
      for (std::size_t s = 0; s <= q; ++s) c(r, s) = std::uniform_int_distribution<long>(0, 5)(rng);
    }
    c(p, q) = 0;
    EXPECT_EQ(lsape_small(c), reference_lsape(c));
  }
}

TEST(CostInvariants, NonnegativeAndFreeIdentity) {
  std::mt19937_64 rng(8);
  auto labels = make_label_space();
  for (int t = 0; t < 40; ++t) random_protein_graph(rng, 6, labels);
  for (const auto& model : {unit_costs(), aids_muta_costs(), protein_costs()}) {
    for (std::size_t a = 0; a < labels->nodes.size(); ++a) {
      const auto& la = labels->nodes[static_cast<LabelId>(a)];
      EXPECT_EQ(model.node_subst(la, la), 0);
      EXPECT_GE(model.node_del(la), 0);
      EXPECT_GE(model.node_ins(la), 0);
      for (std::size_t b = 0; b < labels->nodes.size(); ++b) EXPECT_GE(model.node_subst(la, labels->nodes[static_cast<LabelId>(b)]), 0);
    }
    for (std::size_t a = 0; a < labels->edges.size(); ++a) {
      const auto& la = labels->edges[static_cast<LabelId>(a)];
      EXPECT_EQ(model.edge_subst(la, la), 0);
      EXPECT_GE(model.edge_del(la), 0);
      for (std::size_t b = 0; b < labels->edges.size(); ++b) EXPECT_GE(model.edge_subst(la, labels->edges[static_cast<LabelId>(b)]), 0);
    }
  }
}

TEST(PairCosts, ConstantIsDeleteAllInsertAll) {
  const auto [g, h] = worked_example_pair();
  const auto pc = pair_costs(g, h, unit_costs());
  EXPECT_EQ(pc.constant(), 18);
  const auto am = pair_costs(g, h, aids_muta_costs());
  EXPECT_EQ(am.constant(), 9 * 110 + 9 * 33);
}

TEST(PairCosts, RejectsForeignLabelSpaces) {
  const auto [g, h1] = worked_example_pair();
  const auto [g2, h] = worked_example_pair();
  EXPECT_CODE(pair_costs(g, h, unit_costs()), AlphabetMismatch);
}
