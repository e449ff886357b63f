#include <gramface/linalg.hpp>
#include <gramface/random.hpp>

#include <gtest/gtest.h>

using namespace gramface;

namespace {

DenseMatrix random_matrix(std::size_t r, std::size_t c, Rng& rng, long B, int zero_percent) {
  DenseMatrix m(r, std::vector<Rational>(c));
  for (auto& row : m) {
    for (auto& x : row) x = rng.uniform(0, 99) < zero_percent ? 0 : rng.uniform(-B, B);
  }
  return m;
}

// Determinant by cofactor expansion; independent of the elimination code.
Rational det(const DenseMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(m[0][j]) == 0) continue;
    DenseMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    s += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
  }
  return s;
}

// rank as the largest nonvanishing minor, exhaustive over row/column subsets
std::size_t rank_by_minors(const DenseMatrix& m) {
  const std::size_t r = m.size(), c = m.empty() ? 0 : m[0].size();
  for (std::size_t k = std::min(r, c); k > 0; --k) {
    std::vector<bool> rs(r, false), cs(c, false);
    std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
      do {
        DenseMatrix sub;
        for (std::size_t i = 0; i < r; ++i) {
          if (!rs[i]) continue;
          std::vector<Rational> row;
          for (std::size_t j = 0; j < c; ++j) {
            if (cs[j]) row.push_back(m[i][j]);
          }
          sub.push_back(row);
        }
        if (sgn(det(sub)) != 0) return k;
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
  }
  return 0;
}

}  // namespace

TEST(Linalg, ParseRational) {
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Linalg, RankMatchesMinors) {
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    const auto r = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto c = static_cast<std::size_t>(rng.uniform(1, 5));
    const DenseMatrix m = random_matrix(r, c, rng, 3, 60);
    EXPECT_EQ(rank(m), rank_by_minors(m));
  }
}

TEST(Linalg, RrefIsReducedAndSpansTheSameRows) {
  Rng rng(12);
  for (int t = 0; t < 40; ++t) {
    const std::size_t cols = 7;
    const DenseMatrix m = random_matrix(5, cols, rng, 5, 50);
    std::vector<SparseRow> rows;
    for (const auto& r : m) rows.push_back(to_sparse(r));
    const auto red = rref(rows, cols);
    EXPECT_EQ(red.size(), rank(m));
    for (std::size_t i = 0; i < red.size(); ++i) {
      EXPECT_EQ(red[i].front().val, 1);
      if (i) {
        EXPECT_LT(red[i - 1].front().col, red[i].front().col);
      }
      // pivot columns are clear in every other row
      for (std::size_t j = 0; j < red.size(); ++j) {
        if (j == i) continue;
        for (const auto& e : red[j]) EXPECT_NE(e.col, red[i].front().col);
      }
    }
    DenseMatrix both = m;
    for (const auto& r : red) both.push_back(to_dense(r, cols));
    EXPECT_EQ(rank(both), red.size());
  }
}

TEST(Linalg, NullspaceIsAnnihilatedAndComplete) {
  Rng rng(13);
  for (int t = 0; t < 40; ++t) {
    const std::size_t cols = 6;
    const DenseMatrix m = random_matrix(3, cols, rng, 4, 40);
    std::vector<SparseRow> rows;
    for (const auto& r : m) rows.push_back(to_sparse(r));
    const auto ns = nullspace(rows, cols);
    EXPECT_EQ(ns.size() + rank(m), cols);
    for (const auto& v : ns) {
      const auto dv = to_dense(v, cols);
      for (const auto& r : m) {
        Rational s = 0;
        for (std::size_t j = 0; j < cols; ++j) s += r[j] * dv[j];
        EXPECT_EQ(s, 0);
      }
    }
  }
}

TEST(Linalg, EchelonIncremental) {
  Echelon e(4);
  EXPECT_TRUE(e.insert(to_sparse({1, 2, 0, 0})));
  EXPECT_TRUE(e.insert(to_sparse({0, 1, 1, 0})));
  EXPECT_FALSE(e.insert(to_sparse({1, 3, 1, 0})));
  EXPECT_TRUE(e.contains(to_sparse({2, 5, 1, 0})));
  EXPECT_FALSE(e.contains(to_sparse({0, 0, 0, 1})));
  EXPECT_TRUE(e.insert_unit(3));
  EXPECT_FALSE(e.insert_unit(3));
  EXPECT_EQ(e.rank(), 3u);
  EXPECT_FALSE(e.full());
}

TEST(Linalg, Inverse) {
  Rng rng(14);
  for (int t = 0; t < 20; ++t) {
    const DenseMatrix m = random_invertible_matrix(4, 9, rng);
    const DenseMatrix inv = inverse(m);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        Rational s = 0;
        for (std::size_t k = 0; k < 4; ++k) s += m[i][k] * inv[k][j];
        EXPECT_EQ(s, i == j ? 1 : 0);
      }
    }
  }
  EXPECT_THROW(inverse(DenseMatrix{{1, 2}, {2, 4}}), std::domain_error);
}
