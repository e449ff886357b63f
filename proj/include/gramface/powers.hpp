#pragma once

// Deciding whether a space of forms contains a d-th power of a linear form,
// and recognizing the special shapes F*A_1 and L^(d-1)*span(...).

#include "form_space.hpp"
#include "hilbert.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gramface {

// ---------------------------------------------------------------------------
// Univariate polynomials over Q, just enough for gcds of 2x2 minors.
// ---------------------------------------------------------------------------

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& t) const {
    Rational v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
    return v;
  }

  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return UniPoly(std::move(c));
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c));
  }

  UniPoly monic() const {
    if (is_zero()) return {};
    std::vector<Rational> c = c_;
    const Rational l = lead();
    for (auto& x : c) x /= l;
    return UniPoly(std::move(c));
  }

  UniPoly remainder(const UniPoly& b) const {
    if (b.is_zero()) throw std::domain_error("UniPoly: division by zero");
    std::vector<Rational> r = c_;
    while (static_cast<int>(r.size()) - 1 >= b.degree() && !r.empty()) {
      const Rational f = r.back() / b.lead();
      const std::size_t shift = r.size() - b.c_.size();
      for (std::size_t i = 0; i < b.c_.size(); ++i) r[shift + i] -= f * b.c_[i];
      r.pop_back();
      while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
    }
    return UniPoly(std::move(r));
  }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<Rational> c_;  // c_[i] is the coefficient of t^i
};

/// Monic gcd; gcd(0, 0) = 0.
inline UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.remainder(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Rational roots of a polynomial of degree <= 2.
inline std::vector<Rational> rational_roots(const UniPoly& p) {
  std::vector<Rational> out;
  if (p.degree() == 1) {
    out.push_back(-p.coeffs()[0] / p.coeffs()[1]);
  } else if (p.degree() == 2) {
    const Rational& a = p.coeffs()[2];
    const Rational& b = p.coeffs()[1];
    const Rational& c = p.coeffs()[0];
    Rational disc = b * b - 4 * a * c;
    if (sgn(disc) < 0) return out;
    disc.canonicalize();
    Integer num = disc.get_num(), den = disc.get_den();
    Integer rn = sqrt(num), rd = sqrt(den);
    if (rn * rn != num || rd * rd != den) return out;
    const Rational s(rn, rd);
    out.push_back((-b + s) / (2 * a));
    if (sgn(s) != 0) out.push_back((-b - s) / (2 * a));
  }
  for (auto& r : out) r.canonicalize();
  return out;
}

// ---------------------------------------------------------------------------
// Powers of linear forms.
// ---------------------------------------------------------------------------

/// For f = c*l^d returns a multiple of l. For |beta| = d-1 the partial
/// derivative d^beta f is linear with x_i-coefficient c_{beta+e_i} (beta+e_i)!,
/// and it is nonzero whenever x^beta divides a term of f.
inline std::optional<Form> linear_from_partials(const Form& f) {
  const int n = f.vars();
  const int d = f.degree();
  if (d < 1 || f.is_zero()) return std::nullopt;
  for (const auto& [m, c] : f.terms()) {
    // beta = m minus one unit of its first variable
    for (int v = 0; v < n; ++v) {
      if (!m[v]) continue;
      Monomial beta = m;
      beta.set(v, m[v] - 1);
      std::vector<Rational> lin(static_cast<std::size_t>(n), 0);
      bool nonzero = false;
      for (int i = 0; i < n; ++i) {
        Monomial up = beta;
        up.set(i, beta[i] + 1);
        const Rational ci = f.coeff(up);
        if (sgn(ci) == 0) continue;
        lin[static_cast<std::size_t>(i)] = ci * exponent_factorial(up);
        nonzero = true;
      }
      if (nonzero) return Form::linear(lin);
      break;
    }
  }
  return std::nullopt;
}

namespace detail {

/// Column view of the first-partials matrix of f: for each degree-(d-1)
/// monomial beta, the vector (c_{beta+e_i} (beta_i + 1))_i.
inline std::map<Monomial, std::vector<Rational>> partial_columns(const Form& f) {
  const int n = f.vars();
  std::map<Monomial, std::vector<Rational>> cols;
  for (const auto& [m, c] : f.terms()) {
    for (int i = 0; i < n; ++i) {
      if (!m[i]) continue;
      Monomial beta = m;
      beta.set(i, m[i] - 1);
      auto [it, fresh] = cols.try_emplace(beta, std::vector<Rational>(static_cast<std::size_t>(n), 0));
      it->second[static_cast<std::size_t>(i)] = c * m[i];
    }
  }
  return cols;
}

/// f is a nonzero multiple of a d-th power iff its first partials span at
/// most a line.
inline bool is_power(const Form& f) {
  if (f.is_zero()) return false;
  if (f.degree() <= 1) return true;
  std::vector<SparseRow> rows;
  for (const auto& [beta, col] : partial_columns(f)) rows.push_back(to_sparse(col));
  Echelon ech(static_cast<std::size_t>(f.vars()));
  for (auto& r : rows) {
    ech.insert(std::move(r));
    if (ech.rank() > 1) return false;
  }
  return true;
}

}  // namespace detail

struct PowerSearch {
  bool found = false;
  bool certified = true;
  std::optional<Form> linear;  // l with l^d in the space, when rational
  std::string method;
};

inline std::string to_string(const PowerSearch& p) {
  std::string s = p.found ? "contains a power" : "no power";
  s += p.certified ? " (certified" : " (heuristic";
  s += ", " + p.method + ")";
  if (p.linear) s += " l = " + to_string(*p.linear);
  return s;
}

/// Pencil search for dim W = 2: s*w1 + w2 is a power iff every 2x2 minor of
/// its first-partials matrix vanishes at s. The minors are polynomials of
/// degree <= 2 in s, so the pencil contains a power iff their gcd is
/// non-constant (or w1 itself is a power).
inline PowerSearch find_power_in_pencil(const Form& w1, const Form& w2) {
  PowerSearch res;
  res.method = "pencil minors";
  if (detail::is_power(w1)) {
    res.found = true;
    res.linear = linear_from_partials(w1);
    return res;
  }
  const int n = w1.vars();
  auto c1 = detail::partial_columns(w1);
  auto c2 = detail::partial_columns(w2);
  // columns as vectors of linear polynomials a*s + b
  std::vector<std::vector<std::pair<Rational, Rational>>> cols;
  std::map<Monomial, std::size_t> slot;
  auto get = [&](const Monomial& beta) -> std::vector<std::pair<Rational, Rational>>& {
    auto [it, fresh] = slot.try_emplace(beta, cols.size());
    if (fresh) cols.emplace_back(static_cast<std::size_t>(n), std::make_pair(Rational(0), Rational(0)));
    return cols[it->second];
  };
  for (const auto& [beta, v] : c1) {
    auto& col = get(beta);
    for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)].first = v[static_cast<std::size_t>(i)];
  }
  for (const auto& [beta, v] : c2) {
    auto& col = get(beta);
    for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)].second = v[static_cast<std::size_t>(i)];
  }
  UniPoly g;  // running gcd, zero until a nonzero minor appears
  auto lin = [](const std::pair<Rational, Rational>& e) { return UniPoly({e.second, e.first}); };
  bool constant = false;
  for (std::size_t a = 0; a < cols.size() && !constant; ++a) {
    for (std::size_t b = a + 1; b < cols.size() && !constant; ++b) {
      for (int i = 0; i < n && !constant; ++i) {
        const auto& ai = cols[a][static_cast<std::size_t>(i)];
        const auto& bi = cols[b][static_cast<std::size_t>(i)];
        if (sgn(ai.first) == 0 && sgn(ai.second) == 0 && sgn(bi.first) == 0 && sgn(bi.second) == 0) continue;
        for (int j = i + 1; j < n && !constant; ++j) {
          const UniPoly minor = lin(ai) * lin(cols[b][static_cast<std::size_t>(j)]) - lin(cols[a][static_cast<std::size_t>(j)]) * lin(bi);
          if (minor.is_zero()) continue;
          g = gcd(g, minor);
          constant = g.degree() == 0;
        }
      }
    }
  }
  if (constant) return res;
  res.found = true;
  if (g.is_zero()) {
    // every member of the pencil is a power
    res.linear = linear_from_partials(w2);
    return res;
  }
  for (const auto& s : rational_roots(g)) {
    Form w = w1 * s + w2;
    if (detail::is_power(w)) {
      res.linear = linear_from_partials(w);
      break;
    }
  }
  return res;
}

/// Does W contain l^d for some nonzero linear form l over C?
///
/// dim 1 and 2 are decided exactly from the first-partials matrix. Larger
/// spaces use the equivalence "l^d in W iff l's coefficient vector is a base
/// point of the apolar complement" and the base-point certificate; an
/// inconclusive certificate yields an uncertified "no power".
inline PowerSearch find_power(const FormSpace& W, int T = -1) {
  PowerSearch res;
  const int d = W.degree();
  if (T < 0) T = 2 * d + 2;
  if (W.dim() == 0) {
    res.method = "zero space";
    return res;
  }
  if (d <= 1) {
    res.method = "degree <= 1";
    res.found = true;
    res.linear = W.forms().front();
    return res;
  }
  const auto forms = W.forms();
  if (W.dim() == 1) {
    res.method = "partials rank";
    res.found = detail::is_power(forms[0]);
    if (res.found) res.linear = linear_from_partials(forms[0]);
    return res;
  }
  if (W.dim() == 2) return find_power_in_pencil(forms[0], forms[1]);
  res.method = "base points of the apolar complement";
  const auto cert = base_point_certificate(apolar_complement(W), T);
  switch (cert.verdict) {
    case BasePointVerdict::base_point_free:
      break;
    case BasePointVerdict::has_base_points:
      res.found = true;
      if (cert.witness) res.linear = Form::linear(*cert.witness);
      break;
    case BasePointVerdict::inconclusive:
      res.certified = false;
      break;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Shapes.
// ---------------------------------------------------------------------------

/// W = F*A_1 for some F in A_{d-1}: dim W = n and some nonzero F lies in
/// every (W : x_i).
inline std::optional<Form> common_factor_times_linear(const FormSpace& W) {
  const int n = W.vars();
  if (W.degree() < 1 || static_cast<int>(W.dim()) != n) return std::nullopt;
  std::optional<FormSpace> common;
  for (int i = 0; i < n; ++i) {
    FormSpace q = ideal_quotient_by_linear(W, Form::monomial(Monomial::power(n, i, 1)));
    common = common ? intersect(*common, q) : q;
    if (common->dim() == 0) return std::nullopt;
  }
  return common->forms().front();
}

/// All partial derivatives of order `order` of a form.
inline std::vector<Form> partials_of_order(const Form& f, int order) {
  std::vector<Form> cur{f};
  for (int s = 0; s < order; ++s) {
    std::vector<Form> next;
    for (const auto& g : cur) {
      for (int i = 0; i < f.vars(); ++i) {
        Form h = g.derivative(i);
        if (!h.is_zero()) next.push_back(std::move(h));
      }
    }
    // keep a basis to stop the blow-up
    if (next.empty()) return next;
    cur = FormSpace::span(f.vars(), next.front().degree(), next).forms();
  }
  return cur;
}

/// W = L^(d-1) * span(L_2, ..., L_{k+1}) with L, L_2, ..., L_{k+1} a basis of
/// the linear forms and n = k + 1. Returns L when W has this shape.
inline std::optional<Form> excluded_shape(const FormSpace& W) {
  const int n = W.vars();
  const int d = W.degree();
  const int k = static_cast<int>(W.dim());
  if (d < 2 || k < 1 || n != k + 1) return std::nullopt;
  // every quadric among the (d-2)-th partials is L times a linear form, so
  // the first partials of each such quadric span a space containing L
  std::vector<Form> quadrics;
  for (const auto& w : W.forms()) {
    for (auto& q : partials_of_order(w, d - 2)) quadrics.push_back(std::move(q));
  }
  if (quadrics.empty()) return std::nullopt;
  const FormSpace E = FormSpace::span(n, 2, quadrics);
  std::optional<FormSpace> candidate;
  for (const auto& q : E.forms()) {
    std::vector<Form> firsts;
    for (int i = 0; i < n; ++i) firsts.push_back(q.derivative(i));
    FormSpace col = FormSpace::span(n, 1, firsts);
    candidate = candidate ? intersect(*candidate, col) : col;
  }
  if (!candidate || candidate->dim() != 1) return std::nullopt;
  const Form L = candidate->forms().front();
  const Form Ld1 = L.pow(d - 1);
  std::vector<Form> gens;
  for (int i = 0; i < n; ++i) gens.push_back(Ld1 * Form::monomial(Monomial::power(n, i, 1)));
  const FormSpace shape = FormSpace::span(n, d, gens, W.order());
  if (!shape.contains(W)) return std::nullopt;
  if (W.contains(L.pow(d))) return std::nullopt;
  return L;
}

}  // namespace gramface
