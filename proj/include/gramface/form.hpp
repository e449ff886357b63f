#pragma once

// Homogeneous forms with exact rational coefficients.

#include "monomial.hpp"
#include "numbers.hpp"

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gramface {

class Form {
 public:
  Form() = default;
  Form(int n, int d) : n_(n), d_(d) {
    if (n < 1 || n > kMaxVars) throw std::invalid_argument("Form: variable count out of range");
    if (d < 0) throw std::invalid_argument("Form: negative degree");
  }

  static Form monomial(const Monomial& m, const Rational& c = 1) {
    Form f(m.vars(), m.degree());
    f.add_term(m, c);
    return f;
  }

  /// sum_i coeffs[i] * x_i
  static Form linear(std::span<const Rational> coeffs) {
    Form f(static_cast<int>(coeffs.size()), 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      f.add_term(Monomial::power(f.n_, static_cast<int>(i), 1), coeffs[i]);
    }
    return f;
  }

  static Form linear(std::initializer_list<long> coeffs) {
    std::vector<Rational> c(coeffs.begin(), coeffs.end());
    return linear(c);
  }

  int vars() const { return n_; }
  int degree() const { return d_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (m.vars() != n_ || m.degree() != d_) throw std::invalid_argument("Form: term of wrong shape");
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Form& operator+=(const Form& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Form& operator-=(const Form& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Form& operator*=(const Rational& c) {
    if (sgn(c) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const Rational& c) { return a *= c; }
  friend Form operator*(const Rational& c, Form a) { return a *= c; }

  friend Form operator*(const Form& a, const Form& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Form: variable count mismatch");
    Form r(a.n_, a.d_ + b.d_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    }
    return r;
  }

  Form pow(int e) const {
    if (e < 0) throw std::invalid_argument("Form::pow: negative exponent");
    Form r = Form::monomial(Monomial(n_));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  /// d/dx_i (0-based).
  Form derivative(int i) const {
    if (d_ == 0) throw std::domain_error("Form: derivative of a constant form");
    Form r(n_, d_ - 1);
    for (const auto& [m, c] : terms_) {
      if (m[i] == 0) continue;
      Monomial q = m;
      q.set(i, m[i] - 1);
      r.add_term(q, c * m[i]);
    }
    return r;
  }

  Rational evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != n_) throw std::invalid_argument("Form::evaluate: wrong point size");
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
      Rational v = c;
      for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < m[i]; ++k) v *= point[static_cast<std::size_t>(i)];
      }
      total += v;
    }
    return total;
  }

  /// Replaces x_i by images[i]; all images must be linear forms over the same
  /// variable count.
  Form substitute(const std::vector<Form>& images) const {
    if (static_cast<int>(images.size()) != n_) throw std::invalid_argument("Form::substitute: need one image per variable");
    const int target = images.empty() ? n_ : images.front().vars();
    for (const auto& img : images) {
      if (img.degree() != 1 || img.vars() != target) throw std::invalid_argument("Form::substitute: images must be linear");
    }
    std::vector<std::vector<Form>> powers(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      auto& p = powers[static_cast<std::size_t>(i)];
      p.push_back(Form::monomial(Monomial(target)));
      for (int e = 1; e <= d_; ++e) p.push_back(p.back() * images[static_cast<std::size_t>(i)]);
    }
    Form r(target, d_);
    for (const auto& [m, c] : terms_) {
      Form t = Form::monomial(Monomial(target), c);
      for (int i = 0; i < n_; ++i) {
        if (m[i]) t = t * powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(m[i])];
      }
      r += t;
    }
    return r;
  }

  friend bool operator==(const Form&, const Form&) = default;

 private:
  void check_same(const Form& o) const {
    if (o.n_ != n_ || o.d_ != d_) throw std::invalid_argument("Form: shape mismatch");
  }

  int n_ = 1;
  int d_ = 0;
  std::map<Monomial, Rational> terms_;
};

inline std::string to_string(const Form& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    std::string coeff = c.get_str();
    if (!first) s += sgn(c) < 0 ? " - " : " + ";
    if (!first && sgn(c) < 0) coeff.erase(0, 1);
    first = false;
    const bool constant = m.degree() == 0;
    if (coeff == "1" && !constant) {
      s += to_string(m);
    } else if (coeff == "-1" && !constant) {
      s += "-" + to_string(m);
    } else {
      s += coeff;
      if (!constant) s += "*" + to_string(m);
    }
  }
  return s;
}

/// m! for an exponent vector: prod_i m_i!.
inline Integer exponent_factorial(const Monomial& m) {
  Integer r = 1;
  for (int i = 0; i < m.vars(); ++i) {
    for (int k = 2; k <= m[i]; ++k) r *= k;
  }
  return r;
}

inline Integer factorial(int m) {
  Integer r = 1;
  for (int k = 2; k <= m; ++k) r *= k;
  return r;
}

/// Apolarity weight <x^a, x^a> = a!/m! on degree-m monomials.
inline Rational apolarity_weight(const Monomial& m) {
  Rational w(exponent_factorial(m), factorial(m.degree()));
  w.canonicalize();
  return w;
}

/// <f, g> = (1/m!) f(d)(g) for forms of equal degree m. The pairing is
/// diagonal in the monomial basis with weights a!/m!, and <l^m, f> = f(u) for
/// l = sum u_i x_i.
inline Rational eval_pairing(const Form& f, const Form& g) {
  if (f.vars() != g.vars() || f.degree() != g.degree()) throw std::invalid_argument("eval_pairing: degree mismatch");
  Rational total = 0;
  const auto& small = f.size() <= g.size() ? f : g;
  const auto& large = f.size() <= g.size() ? g : f;
  for (const auto& [m, c] : small.terms()) {
    auto it = large.terms().find(m);
    if (it != large.terms().end()) total += c * it->second * apolarity_weight(m);
  }
  return total;
}

}  // namespace gramface
