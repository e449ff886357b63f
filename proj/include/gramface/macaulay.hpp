#pragma once

// Macaulay representations and the Hilbert-function bounds of Macaulay,
// Gotzmann and Green. Integer arithmetic only.

#include "numbers.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gramface {

/// C(a, b) with C(a, b) = 0 whenever a < b or b < 0 (including negative a).
inline Integer binomial(long a, long b) {
  if (b < 0 || a < b || a < 0) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

/// The d-th Macaulay representation of an integer:
///   a = C(k(d), d) + C(k(d-1), d-1) + ... + C(k(j), j),  k(d) > ... > k(j) >= j.
/// Terms with value zero are omitted, so `tops` may be shorter than d and is
/// empty for a = 0.
struct MacaulayRep {
  int degree = 1;
  std::vector<long> tops;  // tops[0] = k(d), tops[1] = k(d-1), ...

  Integer value() const {
    Integer v = 0;
    for (std::size_t i = 0; i < tops.size(); ++i) v += binomial(tops[i], degree - static_cast<long>(i));
    return v;
  }

  bool full() const { return static_cast<int>(tops.size()) == degree; }

  friend bool operator==(const MacaulayRep&, const MacaulayRep&) = default;
};

inline std::string to_string(const MacaulayRep& rep) {
  if (rep.tops.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < rep.tops.size(); ++i) {
    if (i) s += " + ";
    s += "C(" + std::to_string(rep.tops[i]) + "," + std::to_string(rep.degree - static_cast<long>(i)) + ")";
  }
  return s;
}

/// Greedy construction: at degree i take the largest k with C(k, i) <= rest.
inline MacaulayRep macaulay_rep(const Integer& a, int d) {
  if (d < 1) throw std::invalid_argument("macaulay_rep: degree must be >= 1");
  if (a < 0) throw std::invalid_argument("macaulay_rep: value must be >= 0");
  MacaulayRep rep;
  rep.degree = d;
  Integer rest = a;
  for (int i = d; i >= 1 && rest > 0; --i) {
    // exponential search then bisection for the largest k with C(k, i) <= rest
    long lo = i, hi = i + 1;
    while (binomial(hi, i) <= rest) {
      lo = hi;
      hi = hi * 2;
    }
    while (hi - lo > 1) {
      const long mid = lo + (hi - lo) / 2;
      if (binomial(mid, i) <= rest) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    rep.tops.push_back(lo);
    rest -= binomial(lo, i);
  }
  return rep;
}

/// a_(d)|^s_t = sum_i C(k(i) + s, i + t).
///
/// Omitted zero terms C(k, i) with k < i stay zero as long as s <= t. For s > t
/// the value would depend on the omitted terms, so a truncated representation
/// is rejected.
inline Integer macaulay_shift(const MacaulayRep& rep, long s, long t) {
  if (s > t && !rep.full()) {
    throw std::domain_error("macaulay_shift: s > t needs the full representation");
  }
  Integer v = 0;
  for (std::size_t i = 0; i < rep.tops.size(); ++i) {
    v += binomial(rep.tops[i] + s, rep.degree - static_cast<long>(i) + t);
  }
  return v;
}

/// Macaulay: h_{i+1} <= (h_i)_(i)|^1_1.
inline Integer macaulay_growth_bound(const Integer& h, int i) { return macaulay_shift(macaulay_rep(h, i), 1, 1); }

/// Green: for generic l, c_d <= (h_d)_(d)|^{-1}_0.
inline Integer green_restriction_bound(const Integer& h, int d) { return macaulay_shift(macaulay_rep(h, d), -1, 0); }

/// Gotzmann: for an ideal generated in degrees <= d, maximal growth from d to
/// d+1 persists. Returns true iff h_{d+1} attains the Macaulay bound.
inline bool gotzmann_persists(const Integer& h_d, const Integer& h_d1, int d) {
  return h_d1 == macaulay_growth_bound(h_d, d);
}

/// The Hilbert value h_{d+l} forced by Gotzmann persistence.
inline Integer gotzmann_prediction(const Integer& h_d, int d, long l) {
  if (l < 0) throw std::invalid_argument("gotzmann_prediction: l must be >= 0");
  return macaulay_shift(macaulay_rep(h_d, d), l, l);
}

}  // namespace gramface
