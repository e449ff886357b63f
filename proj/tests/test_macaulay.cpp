#include <gramface/macaulay.hpp>
#include <gramface/monomial.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace gramface;

namespace {

// all strictly decreasing top sequences with C(k(i), i) >= 1, searched exhaustively
void all_reps(long a, int d, int i, long bound, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  if (a == 0) {
    out.push_back(cur);
    return;
  }
  if (i < 1) return;
  for (long k = i; k < bound; ++k) {
    const long v = binomial(k, i).get_si();
    if (v > a) break;
    cur.push_back(k);
    all_reps(a - v, d, i - 1, k, cur, out);
    cur.pop_back();
  }
}

// Lex segment ideal in degree i spanned by the largest monomials, leaving the
// h smallest outside. Returns h_{i+1} of the generated ideal and the number of
// outside monomials not divisible by x1 (restriction to x1 = 0).
std::pair<long, long> lex_segment(int n, int i, long h) {
  const auto asc = monomial_basis(n, i);
  std::set<Monomial> outside(asc.begin(), asc.begin() + h);
  long next = 0;
  for (const auto& m : monomial_basis(n, i + 1)) {
    bool all_out = true;
    for (int v = 0; v < n && all_out; ++v) {
      if (m[v] == 0) continue;
      Monomial q = m;
      q.set(v, m[v] - 1);
      all_out = outside.count(q) > 0;
    }
    next += all_out;
  }
  long restricted = 0;
  for (const auto& m : outside) restricted += m[0] == 0;
  return {next, restricted};
}

}  // namespace

TEST(Macaulay, RepresentationIsTheUniqueDecreasingOne) {
  for (int d = 1; d <= 5; ++d) {
    for (long a = 0; a <= 120; ++a) {
      std::vector<std::vector<long>> reps;
      std::vector<long> cur;
      all_reps(a, d, d, 1000, cur, reps);
      ASSERT_EQ(reps.size(), 1u) << a << " " << d;
      const auto rep = macaulay_rep(a, d);
      EXPECT_EQ(rep.tops, reps[0]);
      EXPECT_EQ(rep.value(), a);
    }
  }
}

TEST(Macaulay, NamedRepresentations) {
  EXPECT_TRUE(macaulay_rep(0, 3).tops.empty());
  EXPECT_EQ(macaulay_rep(5, 2).tops, (std::vector<long>{3, 2}));
  for (int d = 2; d <= 7; ++d) {
    for (int k = 1; k <= d; ++k) {
      const auto rep = macaulay_rep(k, d);
      std::vector<long> want;
      for (int i = 0; i < k; ++i) want.push_back(d - i);
      EXPECT_EQ(rep.tops, want);
      EXPECT_EQ(macaulay_shift(rep, -1, 0), 0);
      EXPECT_EQ(macaulay_shift(rep, 1, 1), k);
      EXPECT_EQ(green_restriction_bound(k, d), 0);
    }
  }
}

TEST(Macaulay, ShiftIdentityAndGuard) {
  for (long a = 0; a < 60; ++a) EXPECT_EQ(macaulay_shift(macaulay_rep(a, 3), 0, 0), a);
  EXPECT_THROW(macaulay_shift(macaulay_rep(1, 3), 1, 0), std::domain_error);
}

TEST(Macaulay, GrowthBoundNamedValues) {
  EXPECT_EQ(macaulay_growth_bound(0, 4), 0);
  EXPECT_EQ(macaulay_growth_bound(2, 2), 2);
  EXPECT_EQ(macaulay_growth_bound(6, 2), 10);
}

TEST(Macaulay, LexSegmentsAttainGrowthAndGreenBounds) {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i <= 4; ++i) {
      const long dimA = static_cast<long>(monomial_basis(n, i).size());
      for (long h = 0; h <= dimA; ++h) {
        const auto [next, restricted] = lex_segment(n, i, h);
        EXPECT_EQ(macaulay_growth_bound(h, i), next) << "n=" << n << " i=" << i << " h=" << h;
        EXPECT_EQ(green_restriction_bound(h, i), restricted) << "n=" << n << " i=" << i << " h=" << h;
      }
    }
  }
}

TEST(Macaulay, Gotzmann) {
  for (int d = 2; d <= 6; ++d) {
    for (int k = 1; k <= d; ++k) {
      EXPECT_TRUE(gotzmann_persists(k, k, d));
      EXPECT_FALSE(gotzmann_persists(k, k - 1, d));
      for (long l = 0; l < 5; ++l) EXPECT_EQ(gotzmann_prediction(k, d, l), k);
    }
  }
  EXPECT_TRUE(gotzmann_persists(3, 4, 2));
  // <x1^2> in three variables: h_2 = 5, h_3 = 7, maximal growth
  EXPECT_TRUE(gotzmann_persists(5, 7, 2));
  EXPECT_EQ(gotzmann_prediction(5, 2, 2), 9);
}

TEST(Macaulay, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(2, 5), 0);
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(binomial(14, 9), 2002);
}
