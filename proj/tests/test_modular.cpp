#include <gramface/hilbert.hpp>
#include <gramface/modular.hpp>
#include <gramface/random.hpp>
#include <gramface/stable.hpp>

#include <gtest/gtest.h>

using namespace gramface;

TEST(Modular, AgreesWithExactSquares) {
  Rng rng(81);
  for (int n = 2; n <= 4; ++n) {
    for (int d = 2; d <= 3; ++d) {
      for (std::size_t k = 0; k <= 5; ++k) {
        if (k >= static_cast<std::size_t>(dim_forms(n, d))) continue;
        for (std::size_t support : {0, 1, 2}) {
          const FormSpace U = random_space_of_codim(n, d, k, 7, rng, support);
          EXPECT_EQ(square_codim_mod_p(U), square(U).codim()) << n << " " << d << " " << k << " " << support;
        }
      }
    }
  }
}

TEST(Modular, AgreesWithMonomialCount) {
  for (int n = 2; n <= 4; ++n) {
    for (std::size_t k = 1; k <= 4; ++k) {
      for (const auto& c : enumerate_stable_complements(n, 3, k)) {
        const FormSpace U = apolar_complement(FormSpace::monomial_span(n, 3, c.W));
        EXPECT_EQ(static_cast<long>(square_codim_mod_p(U)), monomial_square_codim(c));
      }
    }
  }
}

TEST(Modular, SmallPrimesOnlyOverestimate) {
  Rng rng(82);
  for (int t = 0; t < 20; ++t) {
    const FormSpace U = random_space_of_codim(3, 3, static_cast<std::size_t>(rng.uniform(1, 4)), 50, rng);
    const std::size_t exact = square(U).codim();
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
      try {
        EXPECT_GE(square_codim_mod_p(U, p), exact);
      } catch (const BadPrime&) {
      }
    }
  }
}

TEST(Modular, EdgeCases) {
  EXPECT_EQ(square_codim_mod_p(FormSpace(3, 2)), static_cast<std::size_t>(dim_forms(3, 4)));
  EXPECT_EQ(square_codim_mod_p(FormSpace::full(3, 2)), 0u);
  // (x1^2 + 3 x2^2)^perp needs 1/3 in its reduced basis
  const std::vector<Form> w{Form::monomial(Monomial{2, 0}) + Form::monomial(Monomial{0, 2}) * Rational(3)};
  const FormSpace U = apolar_complement(FormSpace::span(2, 2, w));
  EXPECT_EQ(square_codim_mod_p(U), square(U).codim());
  EXPECT_EQ(modp::inv(3, 7) * 3 % 7, 1u);
  EXPECT_EQ(modp::reduce(Rational(1, 2), 7), 4u);
  EXPECT_THROW(modp::reduce(Rational(1, 7), 7), BadPrime);
}
