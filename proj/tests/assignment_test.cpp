#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gedsim/assignment.hpp"
#include "test_util.hpp"

using namespace gedsim;

namespace {

Matrix<Cost> random_matrix(std::mt19937_64& rng, std::size_t n, Cost hi) {
  Matrix<Cost> c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) c(i, j) = std::uniform_int_distribution<Cost>(0, hi)(rng);
  }
  return c;
}

// Lexicographically first permutation of minimum cost.
std::pair<Cost, std::vector<std::int32_t>> brute_force(const Matrix<Cost>& c) {
  std::vector<std::int32_t> perm(c.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Cost best = std::numeric_limits<Cost>::max();
  std::vector<std::int32_t> arg;
  do {
    Cost total = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) total += c(i, static_cast<std::size_t>(perm[i]));
    if (total < best) {
      best = total;
      arg = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best, arg};
}

}  // namespace

TEST(Lsap, ZeroMatrixGivesIdentity) {
  for (std::size_t n : {0u, 1u, 4u, 7u}) {
    const auto r = lsap_solve(Matrix<Cost>(n, n, 0));
    EXPECT_EQ(r.total_cost, 0);
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(r.row_to_col[i], static_cast<std::int32_t>(i));
  }
}

TEST(Lsap, TwoByTwo) {
  const auto r = lsap_solve(Matrix<Cost>{{1, 2}, {3, 0}});
  EXPECT_EQ(r.total_cost, 1);
  EXPECT_EQ(r.row_to_col, (std::vector<std::int32_t>{0, 1}));
}

TEST(Lsap, Errors) {
  EXPECT_CODE(lsap_solve(Matrix<Cost>(2, 3, 0)), NonSquare);
  EXPECT_CODE(lsap_solve(Matrix<Cost>{{0, -1}, {1, 1}}), NegativeEntry);
}

TEST(Lsap, MatchesBruteForceWithTieBreak) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    // Small value range forces many ties.
    const auto c = random_matrix(rng, n, t % 2 ? 3 : 50);
    const auto r = lsap_solve(c);
    const auto [best, arg] = brute_force(c);
    EXPECT_EQ(r.total_cost, best);
    EXPECT_EQ(r.row_to_col, arg);
  }
}

TEST(Lsap, SixBySixExhaustive) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 50; ++t) {
    const auto c = random_matrix(rng, 6, 100);
    EXPECT_EQ(lsap_solve(c).total_cost, brute_force(c).first);
  }
}

TEST(Lsap, PermutationInvariance) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    const auto c = random_matrix(rng, n, 30);
    std::vector<std::size_t> rp(n), cp(n);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    Matrix<Cost> d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d(i, j) = c(rp[i], cp[j]);
    }
    const auto r = lsap_solve(c);
    EXPECT_EQ(r.total_cost, lsap_solve(d).total_cost);
    Cost sum = 0;
    std::vector<bool> used(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto j = static_cast<std::size_t>(r.row_to_col[i]);
      EXPECT_FALSE(used[j]);
      used[j] = true;
      sum += c(i, j);
    }
    EXPECT_EQ(sum, r.total_cost);
  }
}

TEST(Padding, OneByOne) {
  const auto p = pad_for_insert_delete(Matrix<Cost>{{5}}, {2}, {3});
  EXPECT_EQ(p.matrix, (Matrix<Cost>{{5, 2}, {3, 0}}));
}

TEST(Padding, NoRows) {
  const auto p = pad_for_insert_delete(Matrix<Cost>(0, 2), {}, {4, 6});
  ASSERT_EQ(p.matrix.rows(), 2u);
  EXPECT_EQ(p.matrix(0, 0), 4);
  EXPECT_EQ(p.matrix(1, 1), 6);
  EXPECT_EQ(p.matrix(0, 1), p.infinity);
  EXPECT_EQ(p.matrix(1, 0), p.infinity);
}

TEST(Padding, TwoRowsOneColumn) {
  const auto p = pad_for_insert_delete(Matrix<Cost>{{1}, {2}}, {3, 4}, {5});
  ASSERT_EQ(p.matrix.rows(), 3u);
  EXPECT_EQ(p.infinity, 1 + 2 + 3 + 4 + 5 + 1);
  EXPECT_EQ(p.matrix, (Matrix<Cost>{{1, 3, p.infinity}, {2, p.infinity, 4}, {5, 0, 0}}));
  EXPECT_CODE(pad_for_insert_delete(Matrix<Cost>{{1}}, {3, 4}, {5}), DimensionMismatch);
}

TEST(Padding, SentinelNeverChosen) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
    Matrix<Cost> map(n, m);
    std::vector<Cost> del(n), ins(m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < m; ++k) map(i, k) = std::uniform_int_distribution<Cost>(0, 9)(rng);
      del[i] = std::uniform_int_distribution<Cost>(0, 9)(rng);
    }
    for (auto& x : ins) x = std::uniform_int_distribution<Cost>(0, 9)(rng);
    const auto p = pad_for_insert_delete(map, del, ins);
    const auto r = lsap_solve(p.matrix);
    EXPECT_LT(r.total_cost, p.infinity);
    const auto mapping = unpad_mapping(r.row_to_col, n, m);
    Cost cost = 0;
    std::vector<bool> hit(m);
    for (std::size_t i = 0; i < n; ++i) {
      if (mapping[i] == kDeleted) {
        cost += del[i];
      } else {
        cost += map(i, static_cast<std::size_t>(mapping[i]));
        hit[static_cast<std::size_t>(mapping[i])] = true;
      }
    }
    for (std::size_t k = 0; k < m; ++k) cost += hit[k] ? 0 : ins[k];
    EXPECT_EQ(cost, r.total_cost);
  }
}

TEST(MultisetEditDistance, Examples) {
  const std::vector<std::string> s{"a", "b", "b"};
  EXPECT_EQ(multiset_edit_distance(s, s), 0u);
  EXPECT_EQ(multiset_edit_distance(std::vector<std::string>{"a", "a", "b"}, s), 1u);
  EXPECT_EQ(multiset_edit_distance(std::vector<std::string>{}, std::vector<std::string>{"a", "b"}), 2u);
}

TEST(MultisetEditDistance, Properties) {
  std::mt19937_64 rng(2);
  auto draw = [&] {
    std::vector<int> v(std::uniform_int_distribution<std::size_t>(0, 8)(rng));
    for (auto& x : v) x = std::uniform_int_distribution<int>(0, 3)(rng);
    return v;
  };
  for (int t = 0; t < 300; ++t) {
    const auto a = draw(), b = draw();
    const auto d = multiset_edit_distance(a, b);
    EXPECT_EQ(d, multiset_edit_distance(b, a));
    EXPECT_LE(d, std::max(a.size(), b.size()));
  }
}
