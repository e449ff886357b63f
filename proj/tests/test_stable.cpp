#include <gramface/form_space.hpp>
#include <gramface/stable.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace gramface;

namespace {

// all k-subsets of degree-d monomials that are Borel-down-closed
std::set<std::vector<Monomial>> brute_force_stable(int n, int d, std::size_t k) {
  const auto all = monomial_basis(n, d);
  std::set<std::vector<Monomial>> out;
  if (k > all.size()) return out;
  std::vector<bool> pick(all.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<Monomial> W;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (pick[i]) W.push_back(all[i]);
    }
    if (is_borel_down_closed(W)) {
      std::sort(W.begin(), W.end());
      out.insert(W);
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace

TEST(Stable, EnumerationMatchesBruteForce) {
  for (int n = 1; n <= 4; ++n) {
    for (int d = 1; d <= 4; ++d) {
      const auto N = monomial_basis(n, d).size();
      if (N > 15) continue;
      for (std::size_t k = 0; k <= std::min<std::size_t>(N, 6); ++k) {
        std::set<std::vector<Monomial>> got;
        const auto list = enumerate_stable_complements(n, d, k);
        for (auto c : list) {
          std::sort(c.W.begin(), c.W.end());
          got.insert(c.W);
        }
        EXPECT_EQ(got.size(), list.size());
        EXPECT_EQ(got, brute_force_stable(n, d, k)) << n << " " << d << " " << k;
      }
    }
  }
}

TEST(Stable, NamedEnumerations) {
  const auto one = enumerate_stable_complements(2, 2, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].W, (std::vector<Monomial>{Monomial{2, 0}}));
  for (int n = 2; n <= 4; ++n) EXPECT_EQ(enumerate_stable_complements(n, 3, 0).size(), 1u);
}

TEST(Stable, SquareCodimMatchesLinearAlgebra) {
  for (int n = 2; n <= 4; ++n) {
    for (int d = 2; d <= 3; ++d) {
      for (std::size_t k = 1; k <= 3; ++k) {
        for (const auto& c : enumerate_stable_complements(n, d, k)) {
          const FormSpace U = apolar_complement(FormSpace::monomial_span(n, d, c.W));
          EXPECT_EQ(monomial_square_codim(c), static_cast<long>(square(U).codim()));
        }
      }
    }
  }
}

TEST(Stable, NamedSquareCodims) {
  for (int n = 2; n <= 5; ++n) EXPECT_EQ(monomial_square_codim(n, 3, {Monomial::power(n, 0, 3)}), n);
  for (int n = 4; n <= 6; ++n) {
    Monomial a(n), b(n), c(n);
    a.set(0, 1);
    a.set(1, 1);
    b.set(2, 1);
    b.set(3, 1);
    c.set(0, 1);
    c.set(2, 1);
    EXPECT_EQ(monomial_square_codim(n, 2, {a, b}), 4);
    EXPECT_EQ(monomial_square_codim(n, 2, {a, c}), 6);
  }
}

TEST(Stable, MValuesAgainstReference) {
  EXPECT_EQ(m_value(4, 2, 4).value, 20);
  for (int n = 3; n <= 6; ++n) EXPECT_EQ(m_value(n, 2, 1).value, n);
  const auto mv = m_value(3, 5, 5);
  EXPECT_EQ(mv.value, 16);
  EXPECT_EQ(monomial_square_codim(mv.witness), 16);
  EXPECT_EQ(m_value(2, 2, 0).value, 0);
}

TEST(Stable, SmallTableMatchesReference) {
  const MTable t = m_table(parse_range("3..4"), parse_range("2..6"), parse_range("1..9"), 2);
  const auto chk = check_against_reference(t);
  EXPECT_EQ(chk.checked, 2u * 5u * 9u);
  EXPECT_TRUE(chk.mismatches.empty());
  EXPECT_EQ(t.at(3, 2, 6).status, CellStatus::degenerate);
  EXPECT_EQ(cell_text(t.at(3, 2, 6)), "-");
}

TEST(Stable, TableIndependentOfJobs) {
  const MTable a = m_table(parse_range("3..4"), parse_range("2..4"), parse_range("1..5"), 1);
  const MTable b = m_table(parse_range("3..4"), parse_range("2..4"), parse_range("1..5"), 3);
  EXPECT_EQ(render_csv(a, true), render_csv(b, true));
  EXPECT_EQ(render_markdown(a, true), render_markdown(b, true));
  EXPECT_EQ(render_records(a, true), render_records(b, true));
}

TEST(Stable, Budget) {
  EXPECT_THROW(m_value(6, 9, 9, Budget(1e-9)), BudgetExceeded);
  const MTable t = m_table(parse_range("6"), parse_range("9"), parse_range("9"), 1, 1e-9);
  EXPECT_EQ(t.cells[0].status, CellStatus::not_computed);
  EXPECT_EQ(cell_text(t.cells[0]), "?");
  EXPECT_EQ(check_against_reference(t).incomplete, 1u);
}

TEST(Stable, Ranges) {
  EXPECT_EQ(parse_range("2..5").values(), (std::vector<int>{2, 3, 4, 5}));
  EXPECT_EQ(parse_range("7").values(), (std::vector<int>{7}));
  EXPECT_THROW(parse_range("5..2"), std::invalid_argument);
  EXPECT_THROW(parse_range("a..2"), std::invalid_argument);
}

TEST(Stable, Renderers) {
  const MTable t = m_table(parse_range("3..6"), parse_range("2"), parse_range("1"));
  EXPECT_EQ(render_csv(t, false), "n,d,k,m\n3,2,1,3\n4,2,1,4\n5,2,1,5\n6,2,1,6\n");
  EXPECT_EQ(csv_quote("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_quote("plain"), "plain");
  const std::string rec = render_records(t, false);
  EXPECT_EQ(std::count(rec.begin(), rec.end(), '\n'), 4);
}
