#include <gramface/form.hpp>
#include <gramface/random.hpp>

#include <gtest/gtest.h>

using namespace gramface;

namespace {

// (1/m!) f(d)(g): apply each term of f as a differential operator to g
Rational pairing_by_differentiation(const Form& f, const Form& g) {
  Rational total = 0;
  for (const auto& [m, c] : f.terms()) {
    Form h = g;
    for (int i = 0; i < m.vars(); ++i) {
      for (int k = 0; k < m[i]; ++k) h = h.derivative(i);
    }
    total += c * h.coeff(Monomial(g.vars()));
  }
  return total / Rational(factorial(f.degree()));
}

}  // namespace

TEST(Form, ArithmeticAndPrinting) {
  const Form x = Form::linear({1, 0}), y = Form::linear({0, 1});
  const Form f = (x + y).pow(2);
  EXPECT_EQ(f.coeff(Monomial{1, 1}), 2);
  // terms are printed in descending lex order, x2 > x1
  EXPECT_EQ(to_string(f), "x2^2 + 2*x1*x2 + x1^2");
  EXPECT_EQ(to_string(x * x - y * y * Rational(1, 2)), "-1/2*x2^2 + x1^2");
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_THROW(x + f, std::invalid_argument);
}

TEST(Form, PairingMatchesDirectDifferentiation) {
  Rng rng(21);
  for (int t = 0; t < 40; ++t) {
    const int n = static_cast<int>(rng.uniform(1, 4));
    const int d = static_cast<int>(rng.uniform(0, 4));
    const Form f = random_form(n, d, 5, rng, 3);
    const Form g = random_form(n, d, 5, rng);
    EXPECT_EQ(eval_pairing(f, g), pairing_by_differentiation(f, g));
    EXPECT_EQ(eval_pairing(f, g), eval_pairing(g, f));
  }
}

TEST(Form, PairingWithPowerEvaluates) {
  Rng rng(22);
  for (int t = 0; t < 30; ++t) {
    const int n = static_cast<int>(rng.uniform(1, 4));
    const int d = static_cast<int>(rng.uniform(1, 5));
    std::vector<Rational> u(static_cast<std::size_t>(n));
    for (auto& x : u) x = rng.uniform(-4, 4);
    const Form l = Form::linear(u);
    const Form f = random_form(n, d, 6, rng);
    EXPECT_EQ(eval_pairing(l.pow(d), f), f.evaluate(u));
  }
}

TEST(Form, WeightsAreDiagonal) {
  EXPECT_EQ(apolarity_weight(Monomial{2, 0}), 1);
  EXPECT_EQ(apolarity_weight(Monomial{1, 1}), Rational(1, 2));
  EXPECT_EQ(apolarity_weight(Monomial{1, 1, 1}), Rational(1, 6));
  EXPECT_EQ(eval_pairing(Form::monomial(Monomial{1, 1}), Form::monomial(Monomial{2, 0})), 0);
}

TEST(Form, SubstituteAgreesWithEvaluation) {
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    const Form f = random_form(3, 3, 5, rng);
    std::vector<Form> images;
    for (int i = 0; i < 3; ++i) images.push_back(random_linear_form(2, 4, rng));
    const Form g = f.substitute(images);
    std::vector<Rational> p{Rational(rng.uniform(-5, 5)), Rational(rng.uniform(-5, 5))};
    std::vector<Rational> q;
    for (const auto& img : images) q.push_back(img.evaluate(p));
    EXPECT_EQ(g.evaluate(p), f.evaluate(q));
  }
}

TEST(Form, EulerIdentity) {
  Rng rng(24);
  const Form f = random_form(3, 4, 9, rng);
  Form s(3, 4);
  for (int i = 0; i < 3; ++i) s += f.derivative(i) * Form::monomial(Monomial::power(3, i, 1));
  EXPECT_EQ(s, f * Rational(4));
}
