#pragma once

// Seeded random instances and generic initial monomials.

#include "form_space.hpp"

#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gramface {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// mt19937_64 with portable bounded draws (std distributions differ between
/// standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  /// Stream for trial `index` under master seed `seed`.
  static Rng for_trial(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform in [lo, hi].
  long uniform(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long>(next());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
  }

  long nonzero(long height) {
    long v;
    do {
      v = uniform(-height, height);
    } while (v == 0);
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

/// Entries uniform in [-B, B], resampled until invertible.
inline DenseMatrix random_invertible_matrix(int n, long B, Rng& rng) {
  while (true) {
    DenseMatrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (auto& row : m) {
      for (auto& x : row) x = rng.uniform(-B, B);
    }
    if (rank(m) == static_cast<std::size_t>(n)) return m;
  }
}

inline Form random_linear_form(int n, long B, Rng& rng) {
  while (true) {
    std::vector<Rational> c(static_cast<std::size_t>(n));
    bool nonzero = false;
    for (auto& x : c) {
      x = rng.uniform(-B, B);
      nonzero = nonzero || sgn(x) != 0;
    }
    if (nonzero) return Form::linear(c);
  }
}

/// A form with integer coefficients in [-B, B]. With `support` > 0 the form
/// has at most that many terms on randomly chosen monomials.
inline Form random_form(int n, int d, long B, Rng& rng, std::size_t support = 0) {
  const auto& basis = *MonomialBasis::get(n, d, MonomialOrder::lex(n));
  Form f(n, d);
  while (f.is_zero()) {
    if (support == 0 || support >= basis.size()) {
      for (const auto& m : basis.monomials()) f.add_term(m, rng.uniform(-B, B));
    } else {
      for (std::size_t t = 0; t < support; ++t) {
        f.add_term(basis[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(basis.size()) - 1))], rng.nonzero(B));
      }
    }
  }
  return f;
}

/// A random subspace of dimension exactly `dim` (forms resampled until
/// independent).
inline FormSpace random_space(int n, int d, std::size_t dim, long B, Rng& rng, std::size_t support = 0) {
  auto basis = MonomialBasis::get(n, d, MonomialOrder::lex(n));
  if (dim > basis->size()) throw std::invalid_argument("random_space: dimension exceeds dim A_d");
  Echelon ech(basis->size());
  while (ech.rank() < dim) ech.insert(form_to_row(random_form(n, d, B, rng, support), *basis));
  return FormSpace::from_reduced(basis, ech.reduced_rows());
}

/// A random subspace of codimension `codim`, as the apolar complement of a
/// random space of dimension `codim`.
inline FormSpace random_space_of_codim(int n, int d, std::size_t codim, long B, Rng& rng, std::size_t support = 0) {
  return apolar_complement(random_space(n, d, codim, B, rng, support));
}

// ---------------------------------------------------------------------------
// Generic initial monomials.
// ---------------------------------------------------------------------------

class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GinResult {
  std::vector<Monomial> monomials;  // descending under lex
  int attempts = 0;                 // sample pairs drawn
  int violations = 0;               // pairs rejected (disagreement or not stable)
};

namespace detail {

inline std::vector<Monomial> initial_after_change(const FormSpace& U, int t, long B, Rng& rng) {
  const int n = U.vars();
  // a random substitution matrix is as generic as its inverse
  const DenseMatrix S = random_invertible_matrix(n, B, rng);
  FormSpace V = substitute_linear(U.with_order(MonomialOrder::lex(n)), S);
  if (t > U.degree()) V = product_space(V, FormSpace::full(n, t - U.degree()));
  return V.pivots();
}

}  // namespace detail

/// in(A_{t-d} * G U) for random G under the default lex order. Two
/// independent samples must agree and have a Borel-down-closed complement;
/// otherwise retry, up to `retries` pairs.
inline GinResult generic_initial_monomials(const FormSpace& U, int t, std::uint64_t seed, int retries = 5, long B = 100) {
  if (t < U.degree()) throw std::invalid_argument("generic_initial_monomials: need t >= d");
  GinResult res;
  Rng rng(seed);
  const int n = U.vars();
  for (int attempt = 0; attempt < retries; ++attempt) {
    ++res.attempts;
    auto a = detail::initial_after_change(U, t, B, rng);
    auto b = detail::initial_after_change(U, t, B, rng);
    if (a != b) {
      ++res.violations;
      continue;
    }
    std::set<Monomial> in(a.begin(), a.end());
    std::vector<Monomial> complement;
    for (const auto& m : MonomialBasis::get(n, t, MonomialOrder::lex(n))->monomials()) {
      if (!in.count(m)) complement.push_back(m);
    }
    if (!is_borel_down_closed(complement)) {
      ++res.violations;
      continue;
    }
    res.monomials = std::move(a);
    return res;
  }
  throw GenericityError("generic initial monomials did not stabilize after " + std::to_string(retries) + " attempts");
}

}  // namespace gramface
