#pragma once

// Hilbert functions of ideals generated by a form subspace, base-point
// certificates and the face-dimension formula.

#include "form_space.hpp"
#include "macaulay.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gramface {

/// h_i = dim (A/<U>)_i for i = 0..T.
struct HilbertTable {
  enum class Status { exact, truncated };

  int degree = 0;  // generator degree d
  int bound = 0;   // T
  std::vector<long> h;
  Status status = Status::exact;

  long at(int i) const { return h.at(static_cast<std::size_t>(i)); }
  friend bool operator==(const HilbertTable&, const HilbertTable&) = default;
};

inline std::string to_string(const HilbertTable& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.h.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t.h[i]);
  }
  s += ")";
  if (t.status == HilbertTable::Status::truncated) s += " truncated";
  return s;
}

inline long dim_forms(int n, int d) { return d < 0 ? 0 : binomial(n - 1 + d, d).get_si(); }

/// Degree components A_{i-d} U of <U> for i = d..T, computed by repeated
/// multiplication with A_1. Stops once a component fills its degree.
/// `max_columns` (0 = no limit) truncates the table before any degree whose
/// monomial basis is larger.
inline HilbertTable hilbert_table(const FormSpace& U, int T, std::size_t max_columns = 0) {
  const int n = U.vars();
  const int d = U.degree();
  if (T < d) throw std::invalid_argument("hilbert_table: need T >= d");
  HilbertTable table;
  table.degree = d;
  table.bound = T;
  for (int i = 0; i < d; ++i) table.h.push_back(dim_forms(n, i));
  table.h.push_back(static_cast<long>(U.codim()));
  const FormSpace linear = FormSpace::full(n, 1, U.order());
  FormSpace current = U;
  for (int i = d + 1; i <= T; ++i) {
    if (table.h.back() == 0) {
      table.h.push_back(0);
      continue;
    }
    if (max_columns && static_cast<std::size_t>(dim_forms(n, i)) > max_columns) {
      table.status = HilbertTable::Status::truncated;
      break;
    }
    current = product_space(current, linear);
    table.h.push_back(static_cast<long>(current.codim()));
  }
  return table;
}

inline HilbertTable hilbert_table(const FormSpace& U) { return hilbert_table(U, 2 * U.degree() + 2); }

// ---------------------------------------------------------------------------
// Base points.
// ---------------------------------------------------------------------------

enum class BasePointVerdict { base_point_free, has_base_points, inconclusive };

inline std::string to_string(BasePointVerdict v) {
  switch (v) {
    case BasePointVerdict::base_point_free: return "base-point-free";
    case BasePointVerdict::has_base_points: return "has-base-points";
    case BasePointVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct BasePointCertificate {
  BasePointVerdict verdict = BasePointVerdict::inconclusive;
  // base_point_free: first degree with h = 0. has_base_points via
  // persistence: the degree where maximal growth starts. inconclusive: T.
  int degree = -1;
  std::optional<std::vector<Rational>> witness;  // explicit common zero
  std::string reason;
  HilbertTable evidence;
};

inline std::string to_string(const BasePointCertificate& c) {
  std::string s = to_string(c.verdict);
  if (c.verdict == BasePointVerdict::base_point_free) s += " at degree " + std::to_string(c.degree);
  if (c.witness) {
    s += " witness (";
    for (std::size_t i = 0; i < c.witness->size(); ++i) s += (i ? "," : "") + (*c.witness)[i].get_str();
    s += ")";
  }
  if (!c.reason.empty()) s += " [" + c.reason + "]";
  return s;
}

/// Coordinate points e_i with x_i^d absent from every form of U are common
/// zeros.
inline std::optional<int> coordinate_base_point(const FormSpace& U) {
  const int n = U.vars();
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (const auto& r : U.rows()) {
    for (const auto& e : r) {
      const Monomial& m = U.basis()[e.col];
      for (int i = 0; i < n; ++i) {
        if (m[i] == U.degree()) hit[static_cast<std::size_t>(i)] = 1;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!hit[static_cast<std::size_t>(i)]) return i;
  }
  return std::nullopt;
}

inline BasePointCertificate base_point_certificate(const FormSpace& U, int T, std::size_t max_columns = 0) {
  const int n = U.vars();
  const int d = U.degree();
  BasePointCertificate cert;
  if (d == 0) {
    // constants: U = 0 has every point as a zero, U = A_0 has none
    cert.evidence = hilbert_table(U, T, max_columns);
    if (U.dim() > 0) {
      cert.verdict = BasePointVerdict::base_point_free;
      cert.degree = 0;
    } else {
      cert.verdict = BasePointVerdict::has_base_points;
      cert.witness = std::vector<Rational>(static_cast<std::size_t>(n), 1);
      cert.reason = "zero space";
    }
    return cert;
  }
  if (auto i = coordinate_base_point(U)) {
    std::vector<Rational> pt(static_cast<std::size_t>(n), 0);
    pt[static_cast<std::size_t>(*i)] = 1;
    cert.verdict = BasePointVerdict::has_base_points;
    cert.witness = std::move(pt);
    cert.reason = "x" + std::to_string(*i + 1) + "^" + std::to_string(d) + " absent";
    cert.evidence = hilbert_table(U, T, max_columns);
    return cert;
  }
  cert.evidence = hilbert_table(U, T, max_columns);
  const auto& h = cert.evidence.h;
  for (std::size_t t = 0; t < h.size(); ++t) {
    if (h[t] == 0) {
      cert.verdict = BasePointVerdict::base_point_free;
      cert.degree = static_cast<int>(t);
      return cert;
    }
  }
  // <U> is generated in degree d, so persistence applies from any t >= d.
  for (std::size_t t = static_cast<std::size_t>(d); t + 1 < h.size(); ++t) {
    if (gotzmann_persists(h[t], h[t + 1], static_cast<int>(t))) {
      cert.verdict = BasePointVerdict::has_base_points;
      cert.degree = static_cast<int>(t);
      cert.reason = "maximal growth persists from degree " + std::to_string(t);
      return cert;
    }
  }
  cert.verdict = BasePointVerdict::inconclusive;
  cert.degree = static_cast<int>(h.size()) - 1;
  return cert;
}

inline BasePointCertificate base_point_certificate(const FormSpace& U) {
  return base_point_certificate(U, 2 * U.degree() + 2);
}

/// C(dim U + 1, 2) - dim A_{2d} + codim U^2.
inline Integer face_dimension(long dim_U, int n, int d, long codim_Usq) {
  if (dim_U < 0 || n < 1 || d < 0 || codim_Usq < 0) throw std::invalid_argument("face_dimension: negative argument");
  return binomial(dim_U + 1, 2) - binomial(n - 1 + 2 * d, 2 * d) + codim_Usq;
}

}  // namespace gramface
