#include <gramface/form_space.hpp>
#include <gramface/random.hpp>

#include <gtest/gtest.h>

using namespace gramface;

namespace {

std::size_t dense_rank(const std::vector<Form>& forms, int n, int d) {
  const auto basis = monomial_basis(n, d);
  DenseMatrix m;
  for (const auto& f : forms) {
    std::vector<Rational> row;
    for (const auto& b : basis) row.push_back(f.coeff(b));
    m.push_back(row);
  }
  return m.empty() ? 0 : rank(m);
}

Form mono(std::initializer_list<int> e) { return Form::monomial(Monomial(e)); }

}  // namespace

TEST(FormSpace, SpanIsCanonical) {
  const FormSpace z = FormSpace::span(2, 2, std::vector<Form>{});
  EXPECT_EQ(z.dim(), 0u);
  EXPECT_EQ(FormSpace::full(2, 2).dim(), 3u);
  const std::vector<Form> a{mono({2, 0}) + mono({0, 2}), mono({0, 2})};
  const std::vector<Form> b{mono({2, 0}), mono({0, 2})};
  const FormSpace A = FormSpace::span(2, 2, a), B = FormSpace::span(2, 2, b);
  EXPECT_EQ(A, B);
  EXPECT_EQ(A.rows(), B.rows());
}

TEST(FormSpace, SquareMatchesAllPairwiseProducts) {
  Rng rng(31);
  for (int t = 0; t < 25; ++t) {
    const int n = static_cast<int>(rng.uniform(2, 3));
    const int d = static_cast<int>(rng.uniform(1, 3));
    const auto N = monomial_basis(n, d).size();
    const std::size_t dim = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(N)));
    const FormSpace U = random_space(n, d, dim, 5, rng, t % 2 ? 2 : 0);
    std::vector<Form> prods;
    const auto f = U.forms();
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i; j < f.size(); ++j) prods.push_back(f[i] * f[j]);
    }
    EXPECT_EQ(square(U).dim(), dense_rank(prods, n, 2 * d));
  }
}

TEST(FormSpace, ProductOfDifferentDegrees) {
  Rng rng(32);
  const FormSpace U = random_space(3, 2, 3, 5, rng);
  const FormSpace V = random_space(3, 1, 2, 5, rng);
  std::vector<Form> prods;
  for (const auto& p : U.forms()) {
    for (const auto& q : V.forms()) prods.push_back(p * q);
  }
  EXPECT_EQ(product_space(U, V).dim(), dense_rank(prods, 3, 3));
}

TEST(FormSpace, NamedSquares) {
  EXPECT_EQ(square(FormSpace::full(2, 2)).codim(), 0u);
  for (int n = 2; n <= 4; ++n) {
    for (int d = 2; d <= 4; ++d) {
      const std::vector<Monomial> w{Monomial::power(n, 0, d)};
      EXPECT_EQ(square(apolar_complement(FormSpace::monomial_span(n, d, w))).codim(), static_cast<std::size_t>(n));
    }
  }
  for (int d = 3; d <= 5; ++d) {
    Monomial m = Monomial::power(3, 0, d - 1);
    m.set(1, 1);
    const std::vector<Monomial> w{m};
    EXPECT_EQ(square(apolar_complement(FormSpace::monomial_span(3, d, w))).codim(), 1u);
  }
}

TEST(FormSpace, ApolarComplement) {
  Rng rng(33);
  for (int t = 0; t < 20; ++t) {
    const FormSpace W = random_space(3, 3, static_cast<std::size_t>(rng.uniform(0, 10)), 7, rng);
    const FormSpace U = apolar_complement(W);
    EXPECT_EQ(U.dim() + W.dim(), 10u);
    for (const auto& u : U.forms()) {
      for (const auto& w : W.forms()) EXPECT_EQ(eval_pairing(u, w), 0);
    }
    EXPECT_EQ(apolar_complement(U), W);
  }
  const std::vector<Monomial> w{Monomial{2, 0, 0}, Monomial{0, 1, 1}};
  const FormSpace U = apolar_complement(FormSpace::monomial_span(3, 2, w));
  EXPECT_TRUE(U.is_monomial());
  EXPECT_EQ(U.dim(), 4u);
}

TEST(FormSpace, SumAndIntersection) {
  Rng rng(34);
  for (int t = 0; t < 20; ++t) {
    const FormSpace A = random_space(3, 2, static_cast<std::size_t>(rng.uniform(0, 6)), 4, rng, 2);
    const FormSpace B = random_space(3, 2, static_cast<std::size_t>(rng.uniform(0, 6)), 4, rng, 2);
    const FormSpace S = sum(A, B), I = intersect(A, B);
    EXPECT_EQ(S.dim() + I.dim(), A.dim() + B.dim());
    EXPECT_TRUE(A.contains(I));
    EXPECT_TRUE(B.contains(I));
    EXPECT_TRUE(S.contains(A));
    EXPECT_TRUE(S.contains(B));
  }
}

TEST(FormSpace, QuotientByLinearForm) {
  Rng rng(35);
  for (int t = 0; t < 25; ++t) {
    const int n = 3, d = 3;
    const FormSpace U = random_space(n, d, static_cast<std::size_t>(rng.uniform(0, 10)), 4, rng, t % 2 ? 1 : 0);
    const Form l = t % 3 ? random_linear_form(n, 3, rng) : Form::linear({0, 0, 1});
    const FormSpace Q = ideal_quotient_by_linear(U, l);
    for (const auto& q : Q.forms()) EXPECT_TRUE(U.contains(l * q));
    // dim (U:l) = dim A_{d-1} - (dim(U + l A_{d-1}) - dim U)
    std::vector<Form> gens = U.forms();
    for (const auto& m : monomial_basis(n, d - 1)) gens.push_back(l * Form::monomial(m));
    const std::size_t sum_dim = dense_rank(gens, n, d);
    EXPECT_EQ(Q.dim(), monomial_basis(n, d - 1).size() - (sum_dim - U.dim()));
  }
}

TEST(FormSpace, SubstitutionMatchesFormwise) {
  Rng rng(36);
  for (int t = 0; t < 15; ++t) {
    const FormSpace U = random_space(3, 2, 3, 5, rng);
    const DenseMatrix S = random_invertible_matrix(3, 3, rng);
    const FormSpace V = substitute_linear(U, S);
    std::vector<Form> images;
    for (const auto& row : S) images.push_back(Form::linear(row));
    for (const auto& f : U.forms()) EXPECT_TRUE(V.contains(f.substitute(images)));
    EXPECT_EQ(V.dim(), U.dim());
  }
}

TEST(FormSpace, CoordinateChanges) {
  Rng rng(37);
  const FormSpace U = random_space(3, 3, 4, 5, rng);
  const DenseMatrix I{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(apply_coordinate_change(U, I).rows(), U.rows());
  const DenseMatrix M = random_invertible_matrix(3, 4, rng);
  EXPECT_EQ(apply_coordinate_change(apply_coordinate_change(U, M), inverse(M)), U);
  // x1 -> x2 -> x3 -> x1 on a monomial space
  const DenseMatrix P{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  const std::vector<Monomial> w{Monomial{2, 1, 0}, Monomial{0, 0, 3}};
  const std::vector<Monomial> moved{Monomial{0, 2, 1}, Monomial{3, 0, 0}};
  EXPECT_EQ(substitute_linear(FormSpace::monomial_span(3, 3, w), P), FormSpace::monomial_span(3, 3, moved));
  EXPECT_THROW(apply_coordinate_change(U, DenseMatrix{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}), std::domain_error);
}

TEST(FormSpace, InitialSubspace) {
  const std::vector<Form> f{mono({2, 0}) + mono({0, 2})};
  const auto in = initial_subspace(FormSpace::span(2, 2, f));
  ASSERT_EQ(in.size(), 1u);
  EXPECT_EQ(in[0], (Monomial{0, 2}));
  const auto in2 = initial_subspace(FormSpace::span(2, 2, f), MonomialOrder::parse("lex(1,2)", 2));
  EXPECT_EQ(in2[0], (Monomial{2, 0}));
  const std::vector<Monomial> w{Monomial{1, 1, 0}, Monomial{0, 0, 2}};
  const auto in3 = initial_subspace(FormSpace::monomial_span(3, 2, w));
  EXPECT_EQ(std::set<Monomial>(in3.begin(), in3.end()), std::set<Monomial>(w.begin(), w.end()));
}

TEST(FormSpace, IntersectWithFirstVariables) {
  Rng rng(38);
  for (int t = 0; t < 15; ++t) {
    const int n = 4, d = 2, m = static_cast<int>(rng.uniform(1, 4));
    const FormSpace U = random_space(n, d, static_cast<std::size_t>(rng.uniform(0, 10)), 3, rng, t % 2 ? 2 : 0);
    const FormSpace Up = intersect_with_first_vars(U, m);
    const FormSpace oracle = intersect(U, embed(FormSpace::full(m, d), n));
    EXPECT_EQ(Up.dim(), oracle.dim());
    EXPECT_EQ(embed(Up, n), oracle);
  }
  const FormSpace U = random_space(3, 2, 4, 3, rng);
  EXPECT_EQ(intersect_with_first_vars(U, 3), U);
}

TEST(FormSpace, LiftMatchesDefinition) {
  Rng rng(39);
  const FormSpace U = random_space(3, 2, 3, 5, rng);
  EXPECT_EQ(lift(U, 0), U);
  const FormSpace L = lift(U, 1);
  std::vector<Form> gens;
  for (const auto& m : monomial_basis(4, 1)) gens.push_back(Form::monomial(Monomial::power(4, 3, 1)) * Form::monomial(m));
  const FormSpace def = sum(FormSpace::span(4, 2, gens), embed(U, 4));
  EXPECT_EQ(L, def);
  EXPECT_EQ(L.codim(), U.codim());
  EXPECT_EQ(lift(lift(U, 1), 2), lift(U, 3));
}

TEST(FormSpace, RestrictionDimension) {
  Rng rng(40);
  for (int t = 0; t < 20; ++t) {
    const int n = 3, d = 3;
    const FormSpace W = random_space(n, d, static_cast<std::size_t>(rng.uniform(0, 6)), 4, rng, 2);
    const Form l = random_linear_form(n, 3, rng);
    const FormSpace R = restrict_to_hyperplane(W, l);
    EXPECT_EQ(R.vars(), n - 1);
    // dim W̄ = dim(W + l A_{d-1}) - dim A_{d-1}
    std::vector<Form> gens = W.forms();
    for (const auto& m : monomial_basis(n, d - 1)) gens.push_back(l * Form::monomial(m));
    EXPECT_EQ(R.dim(), dense_rank(gens, n, d) - monomial_basis(n, d - 1).size());
  }
  // x3 = 0 kills x3 * A_2
  const std::vector<Monomial> w{Monomial{0, 1, 2}, Monomial{2, 1, 0}};
  const FormSpace R = restrict_to_hyperplane(FormSpace::monomial_span(3, 3, w), Form::linear({0, 0, 1}));
  EXPECT_EQ(R.dim(), 1u);
  EXPECT_TRUE(R.contains(Form::monomial(Monomial{2, 1})));
}

TEST(FormSpace, OrderChangeKeepsTheSpace) {
  Rng rng(41);
  const FormSpace U = random_space(3, 2, 3, 5, rng);
  const FormSpace V = U.with_order(MonomialOrder::grlex(3));
  for (const auto& f : U.forms()) EXPECT_TRUE(V.contains(f));
  EXPECT_EQ(V.with_order(MonomialOrder::lex(3)).rows(), U.rows());
}
