#include <gramface/hilbert.hpp>
#include <gramface/random.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace gramface;

namespace {

// Hilbert function of a monomial ideal generated in degree d, by counting
// monomials with no generator divisor.
std::vector<long> monomial_hilbert(int n, int d, const std::vector<Monomial>& gens, int T) {
  std::vector<long> h;
  for (int t = 0; t <= T; ++t) {
    long c = 0;
    for (const auto& m : monomial_basis(n, t)) {
      bool in = false;
      for (const auto& g : gens) in = in || g.divides(m);
      c += !in;
    }
    h.push_back(c);
  }
  (void)d;
  return h;
}

}  // namespace

TEST(Hilbert, FullSpace) {
  const auto t = hilbert_table(FormSpace::full(3, 2), 5);
  EXPECT_EQ(t.h, (std::vector<long>{1, 3, 0, 0, 0, 0}));
}

TEST(Hilbert, MonomialIdealsMatchCounting) {
  Rng rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 3)), d = static_cast<int>(rng.uniform(1, 3));
    const auto basis = monomial_basis(n, d);
    std::vector<Monomial> gens;
    for (const auto& m : basis) {
      if (rng.uniform(0, 1)) gens.push_back(m);
    }
    const FormSpace U = FormSpace::monomial_span(n, d, gens);
    EXPECT_EQ(hilbert_table(U, d + 4).h, monomial_hilbert(n, d, gens, d + 4));
  }
}

TEST(Hilbert, CoordinateChangeInvariant) {
  Rng rng(52);
  const FormSpace U = random_space(3, 2, 3, 5, rng, 2);
  const FormSpace V = substitute_linear(U, random_invertible_matrix(3, 5, rng));
  EXPECT_EQ(hilbert_table(U, 6).h, hilbert_table(V, 6).h);
}

TEST(Hilbert, Truncation) {
  const auto t = hilbert_table(FormSpace::monomial_span(3, 2, std::vector<Monomial>{Monomial{2, 0, 0}}), 6, 12);
  EXPECT_EQ(t.status, HilbertTable::Status::truncated);
  EXPECT_EQ(t.h.size(), 4u);  // degrees 0..3 fit in 12 columns
}

TEST(Hilbert, BasePointCertificates) {
  for (int n = 2; n <= 4; ++n) {
    for (int d = 2; d <= 3; ++d) {
      const std::vector<Monomial> w{Monomial::power(n, 0, d)};
      const auto c = base_point_certificate(apolar_complement(FormSpace::monomial_span(n, d, w)));
      EXPECT_EQ(c.verdict, BasePointVerdict::has_base_points);
      ASSERT_TRUE(c.witness.has_value());
      std::vector<Rational> e1(static_cast<std::size_t>(n), 0);
      e1[0] = 1;
      EXPECT_EQ(*c.witness, e1);
    }
  }
  // the quadrics span(x1^2 - x2^2, x2^2 - x3^2) meet in four points
  const std::vector<Form> q{Form::monomial(Monomial{2, 0, 0}) - Form::monomial(Monomial{0, 2, 0}),
                            Form::monomial(Monomial{0, 2, 0}) - Form::monomial(Monomial{0, 0, 2})};
  const auto c = base_point_certificate(FormSpace::span(3, 2, q), 8);
  EXPECT_EQ(c.verdict, BasePointVerdict::has_base_points);
}

TEST(Hilbert, BasePointFreeInLowCodimension) {
  Rng rng(53);
  for (int k = 1; k <= 2; ++k) {
    for (int d = k + 1; d <= 4; ++d) {
      for (int t = 0; t < 3; ++t) {
        const FormSpace U = random_space_of_codim(3, d, static_cast<std::size_t>(k), 50, rng);
        const auto c = base_point_certificate(U, 2 * d + 2);
        EXPECT_EQ(c.verdict, BasePointVerdict::base_point_free);
        EXPECT_LE(c.degree, 2 * d - 1);
      }
    }
  }
}

TEST(Hilbert, CommonZeroIsDetected) {
  // forms vanishing at (1,2,3): complement of span((x1+2x2+3x3)^3)
  const Form l = Form::linear({1, 2, 3});
  const FormSpace U = apolar_complement(FormSpace::span(3, 3, std::vector<Form>{l.pow(3)}));
  std::vector<Rational> p{1, 2, 3};
  for (const auto& f : U.forms()) EXPECT_EQ(f.evaluate(p), 0);
  EXPECT_EQ(base_point_certificate(U).verdict, BasePointVerdict::has_base_points);
}

TEST(Hilbert, FaceDimension) {
  EXPECT_EQ(face_dimension(6, 3, 2, 0), 6);
  EXPECT_EQ(face_dimension(5, 3, 2, 3), 3);
  EXPECT_EQ(face_dimension(4, 3, 2, 6), 1);
  EXPECT_THROW(face_dimension(-1, 3, 2, 0), std::invalid_argument);
}
