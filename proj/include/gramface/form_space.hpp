#pragma once

// Subspaces of degree-d forms, stored as a canonical reduced echelon basis over
// the monomial basis ordered descending by a monomial order.

#include "form.hpp"
#include "linalg.hpp"
#include "monomial.hpp"

#include <algorithm>
#include <memory>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace gramface {

inline SparseRow form_to_row(const Form& f, const MonomialBasis& basis) {
  if (f.vars() != basis.vars() || f.degree() != basis.degree()) throw std::invalid_argument("form does not match the space");
  SparseRow r;
  r.reserve(f.size());
  for (const auto& [m, c] : f.terms()) r.push_back({basis.index(m), c});
  std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
  return r;
}

inline Form row_to_form(const SparseRow& row, const MonomialBasis& basis) {
  Form f(basis.vars(), basis.degree());
  for (const auto& e : row) f.add_term(basis[e.col], e.val);
  return f;
}

class FormSpace {
 public:
  /// The zero subspace of A(n)_d.
  FormSpace(int n, int d, const MonomialOrder& order) : basis_(MonomialBasis::get(n, d, order)) {
    if (order.vars() != n) throw std::invalid_argument("FormSpace: order has the wrong variable count");
  }
  FormSpace(int n, int d) : FormSpace(n, d, MonomialOrder::lex(n)) {}

  /// Canonicalizes arbitrary rows over `basis`.
  static FormSpace from_rows(std::shared_ptr<const MonomialBasis> basis, std::vector<SparseRow> rows) {
    FormSpace s(std::move(basis));
    for (auto& r : rows) detail::sort_and_merge(r);
    s.rows_ = rref(std::move(rows), s.basis_->size());
    return s;
  }

  /// Adopts rows that are already in reduced row echelon form.
  static FormSpace from_reduced(std::shared_ptr<const MonomialBasis> basis, std::vector<SparseRow> rows) {
    FormSpace s(std::move(basis));
    s.rows_ = std::move(rows);
    return s;
  }

  static FormSpace full(int n, int d, const MonomialOrder& order) {
    FormSpace s(n, d, order);
    for (std::uint32_t c = 0; c < s.basis_->size(); ++c) s.rows_.push_back(SparseRow{{c, Rational(1)}});
    return s;
  }
  static FormSpace full(int n, int d) { return full(n, d, MonomialOrder::lex(n)); }

  static FormSpace span(int n, int d, std::span<const Form> polys, const MonomialOrder& order) {
    auto basis = MonomialBasis::get(n, d, order);
    std::vector<SparseRow> rows;
    rows.reserve(polys.size());
    for (const auto& p : polys) {
      if (p.vars() != n || p.degree() != d) throw std::invalid_argument("span: mixed degree or variable count");
      if (!p.is_zero()) rows.push_back(form_to_row(p, *basis));
    }
    return from_rows(std::move(basis), std::move(rows));
  }
  static FormSpace span(int n, int d, std::span<const Form> polys) { return span(n, d, polys, MonomialOrder::lex(n)); }

  /// Span of a nonempty list of forms sharing (n, d).
  static FormSpace span(std::span<const Form> polys) {
    if (polys.empty()) throw std::invalid_argument("span: empty list needs explicit n and d");
    return span(polys.front().vars(), polys.front().degree(), polys);
  }

  static FormSpace monomial_span(int n, int d, std::span<const Monomial> monos, const MonomialOrder& order) {
    auto basis = MonomialBasis::get(n, d, order);
    std::vector<std::uint32_t> cols;
    for (const auto& m : monos) cols.push_back(basis->index(m));
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    std::vector<SparseRow> rows;
    for (auto c : cols) rows.push_back(SparseRow{{c, Rational(1)}});
    return from_reduced(std::move(basis), std::move(rows));
  }
  static FormSpace monomial_span(int n, int d, std::span<const Monomial> monos) {
    return monomial_span(n, d, monos, MonomialOrder::lex(n));
  }

  int vars() const { return basis_->vars(); }
  int degree() const { return basis_->degree(); }
  const MonomialOrder& order() const { return basis_->order(); }
  const MonomialBasis& basis() const { return *basis_; }
  const std::shared_ptr<const MonomialBasis>& basis_ptr() const { return basis_; }
  std::size_t ambient_dim() const { return basis_->size(); }
  std::size_t dim() const { return rows_.size(); }
  std::size_t codim() const { return ambient_dim() - dim(); }
  const std::vector<SparseRow>& rows() const { return rows_; }

  std::vector<Form> forms() const {
    std::vector<Form> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(row_to_form(r, *basis_));
    return out;
  }

  /// Leading monomials of the echelon basis, descending.
  std::vector<Monomial> pivots() const {
    std::vector<Monomial> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back((*basis_)[r.front().col]);
    return out;
  }

  bool is_monomial() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const SparseRow& r) { return r.size() == 1; });
  }

  bool contains(const Form& f) const {
    Echelon ech = echelon();
    return ech.contains(form_to_row(f, *basis_));
  }

  bool contains(const FormSpace& other) const {
    check_compatible(other);
    if (other.order() == order()) {
      Echelon ech = echelon();
      return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const SparseRow& r) { return ech.contains(r); });
    }
    return contains(other.with_order(order()));
  }

  FormSpace with_order(const MonomialOrder& order) const {
    if (order == this->order()) return *this;
    auto target = MonomialBasis::get(vars(), degree(), order);
    std::vector<SparseRow> rows;
    rows.reserve(rows_.size());
    for (const auto& r : rows_) {
      SparseRow t;
      t.reserve(r.size());
      for (const auto& e : r) t.push_back({target->index((*basis_)[e.col]), e.val});
      rows.push_back(std::move(t));
    }
    return from_rows(std::move(target), std::move(rows));
  }

  /// Echelon state seeded with this basis, for membership tests and sums.
  Echelon echelon() const {
    Echelon ech(ambient_dim());
    for (const auto& r : rows_) {
      if (r.size() == 1) {
        ech.insert_unit(r.front().col);
      } else {
        ech.insert(r);
      }
    }
    return ech;
  }

  void check_compatible(const FormSpace& other) const {
    if (other.vars() != vars() || other.degree() != degree()) throw std::invalid_argument("FormSpace: shape mismatch");
  }

  friend bool operator==(const FormSpace& a, const FormSpace& b) {
    return a.vars() == b.vars() && a.degree() == b.degree() && a.order() == b.order() && a.rows_ == b.rows_;
  }

 private:
  explicit FormSpace(std::shared_ptr<const MonomialBasis> basis) : basis_(std::move(basis)) {}

  std::shared_ptr<const MonomialBasis> basis_;
  std::vector<SparseRow> rows_;
};

// ---------------------------------------------------------------------------
// Sums, intersections, apolar complements.
// ---------------------------------------------------------------------------

inline FormSpace sum(const FormSpace& a, const FormSpace& b) {
  a.check_compatible(b);
  const FormSpace bb = b.with_order(a.order());
  Echelon ech = a.echelon();
  for (const auto& r : bb.rows()) {
    if (ech.full()) break;
    ech.insert(r);
  }
  return FormSpace::from_reduced(a.basis_ptr(), ech.reduced_rows());
}

/// Orthogonal complement under the apolarity pairing, which is diagonal with
/// positive weights a!/d! on monomials.
inline FormSpace apolar_complement(const FormSpace& W) {
  const auto& basis = W.basis();
  std::vector<Rational> weight(basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) weight[c] = apolarity_weight(basis[c]);
  std::vector<SparseRow> scaled;
  scaled.reserve(W.dim());
  for (const auto& r : W.rows()) {
    SparseRow s = r;
    for (auto& e : s) e.val *= weight[e.col];
    scaled.push_back(std::move(s));
  }
  return FormSpace::from_rows(W.basis_ptr(), nullspace(std::move(scaled), basis.size()));
}

inline FormSpace intersect(const FormSpace& a, const FormSpace& b) {
  a.check_compatible(b);
  return apolar_complement(sum(apolar_complement(a), apolar_complement(b.with_order(a.order()))));
}

// ---------------------------------------------------------------------------
// Products.
// ---------------------------------------------------------------------------

namespace detail {

inline FormSpace product_impl(const FormSpace& U, const FormSpace& V, bool symmetric) {
  if (U.vars() != V.vars()) throw std::invalid_argument("product_space: variable count mismatch");
  const FormSpace Vo = V.with_order(U.order());
  auto target = MonomialBasis::get(U.vars(), U.degree() + V.degree(), U.order());
  const auto& bu = U.basis();
  const auto& bv = Vo.basis();
  Echelon ech(target->size());

  const auto& ru = U.rows();
  const auto& rv = Vo.rows();
  // monomial times monomial first: these are unit rows
  for (std::size_t i = 0; i < ru.size() && !ech.full(); ++i) {
    if (ru[i].size() != 1) continue;
    for (std::size_t j = symmetric ? i : 0; j < rv.size(); ++j) {
      if (rv[j].size() != 1) continue;
      ech.insert_unit(target->index(bu[ru[i].front().col] * bv[rv[j].front().col]));
    }
  }
  std::vector<SparseRow> mixed;
  for (std::size_t i = 0; i < ru.size() && !ech.full(); ++i) {
    for (std::size_t j = symmetric ? i : 0; j < rv.size(); ++j) {
      if (ru[i].size() == 1 && rv[j].size() == 1) continue;
      SparseRow row;
      row.reserve(ru[i].size() * rv[j].size());
      for (const auto& a : ru[i]) {
        const Monomial& ma = bu[a.col];
        for (const auto& b : rv[j]) {
          const auto col = target->index(ma * bv[b.col]);
          if (!ech.is_pivot(col) || row.size() < 2) row.push_back({col, a.val * b.val});
        }
      }
      sort_and_merge(row);
      if (!row.empty()) mixed.push_back(std::move(row));
    }
  }
  std::stable_sort(mixed.begin(), mixed.end(), [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
  for (auto& r : mixed) {
    if (ech.full()) break;
    ech.insert(std::move(r));
  }
  return FormSpace::from_reduced(std::move(target), ech.reduced_rows());
}

}  // namespace detail

/// span(pq : p in U, q in V), over U's order.
inline FormSpace product_space(const FormSpace& U, const FormSpace& V) { return detail::product_impl(U, V, false); }

/// U^2 = span(pq : p, q in U).
inline FormSpace square(const FormSpace& U) { return detail::product_impl(U, U, true); }

// ---------------------------------------------------------------------------
// Ideal quotient.
// ---------------------------------------------------------------------------

/// (U : l) = {q in A_{d-1} : l q in U} for a nonzero linear form l.
inline FormSpace ideal_quotient_by_linear(const FormSpace& U, const Form& l) {
  if (l.degree() != 1 || l.vars() != U.vars()) throw std::invalid_argument("ideal_quotient_by_linear: need a linear form in the same variables");
  if (l.is_zero()) throw std::invalid_argument("ideal_quotient_by_linear: zero linear form");
  if (U.degree() < 1) throw std::invalid_argument("ideal_quotient_by_linear: degree must be >= 1");
  const int n = U.vars();
  const FormSpace W = apolar_complement(U);
  auto src = MonomialBasis::get(n, U.degree() - 1, U.order());
  const auto& tgt = U.basis();
  // functional_i(e_j) = <l e_j, w_i>
  std::vector<std::unordered_map<std::uint32_t, Rational>> dense_w(W.dim());
  for (std::size_t i = 0; i < W.dim(); ++i) {
    for (const auto& e : W.rows()[i]) dense_w[i].emplace(e.col, e.val);
  }
  std::vector<std::pair<std::uint32_t, Rational>> lin;
  for (const auto& [m, c] : l.terms()) {
    for (int t = 0; t < n; ++t) {
      if (m[t]) lin.emplace_back(static_cast<std::uint32_t>(t), c);
    }
  }
  std::vector<SparseRow> functionals(W.dim());
  for (std::uint32_t j = 0; j < src->size(); ++j) {
    for (const auto& [t, c] : lin) {
      Monomial prod = (*src)[j];
      prod.set(static_cast<int>(t), prod[static_cast<int>(t)] + 1);
      const auto col = tgt.index(prod);
      const Rational w = apolarity_weight(prod);
      for (std::size_t i = 0; i < W.dim(); ++i) {
        auto it = dense_w[i].find(col);
        if (it != dense_w[i].end()) functionals[i].push_back({j, c * w * it->second});
      }
    }
  }
  for (auto& f : functionals) detail::sort_and_merge(f);
  return FormSpace::from_rows(src, nullspace(std::move(functionals), src->size()));
}

// ---------------------------------------------------------------------------
// Linear substitutions.
// ---------------------------------------------------------------------------

namespace detail {

/// Span of p(images) over the basis p of U; result lives in `target`.
inline FormSpace substitute_space(const FormSpace& U, const std::vector<Form>& images,
                                  std::shared_ptr<const MonomialBasis> target) {
  std::unordered_map<std::uint32_t, SparseRow> cache;
  auto image_of = [&](std::uint32_t col) -> const SparseRow& {
    auto it = cache.find(col);
    if (it != cache.end()) return it->second;
    const Form f = Form::monomial(U.basis()[col]).substitute(images);
    return cache.emplace(col, form_to_row(f, *target)).first->second;
  };
  std::vector<SparseRow> rows;
  rows.reserve(U.dim());
  for (const auto& r : U.rows()) {
    SparseRow acc;
    for (const auto& e : r) {
      for (const auto& t : image_of(e.col)) acc.push_back({t.col, e.val * t.val});
    }
    sort_and_merge(acc);
    rows.push_back(std::move(acc));
  }
  return FormSpace::from_rows(std::move(target), std::move(rows));
}

inline std::vector<Form> linear_images(const DenseMatrix& S) {
  const std::size_t n = S.size();
  std::vector<Form> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (S[i].size() != n) throw std::invalid_argument("coordinate change must be square");
    images.push_back(Form::linear(S[i]));
  }
  return images;
}

}  // namespace detail

/// {p(S x) : p in U}: substitutes x_i -> sum_j S[i][j] x_j.
inline FormSpace substitute_linear(const FormSpace& U, const DenseMatrix& S) {
  if (static_cast<int>(S.size()) != U.vars()) throw std::invalid_argument("substitute_linear: matrix size mismatch");
  return detail::substitute_space(U, detail::linear_images(S), U.basis_ptr());
}

/// G U = {p(G^{-1} x) : p in U}. Throws std::domain_error for singular G.
inline FormSpace apply_coordinate_change(const FormSpace& U, const DenseMatrix& G) {
  return substitute_linear(U, inverse(G));
}

/// Leading monomials {in(p) : p in U} under `order`, descending.
inline std::vector<Monomial> initial_subspace(const FormSpace& U, const MonomialOrder& order) {
  return U.with_order(order).pivots();
}
inline std::vector<Monomial> initial_subspace(const FormSpace& U) { return initial_subspace(U, U.order()); }

// ---------------------------------------------------------------------------
// Changing the variable count.
// ---------------------------------------------------------------------------

/// U ∩ A(m)_d, re-expressed over the first m variables with the default lex
/// order.
inline FormSpace intersect_with_first_vars(const FormSpace& U, int m) {
  const int n = U.vars();
  if (m < 1 || m > n) throw std::invalid_argument("intersect_with_first_vars: need 1 <= m <= n");
  // Under lex with x_n most significant every monomial involving x_{m+1..n}
  // precedes all monomials in x_1..x_m, so the rows with a pivot in the first
  // m variables span the intersection.
  const FormSpace L = U.with_order(MonomialOrder::lex(n));
  auto target = MonomialBasis::get(m, U.degree(), MonomialOrder::lex(m));
  std::vector<SparseRow> rows;
  for (const auto& r : L.rows()) {
    const Monomial& lead = L.basis()[r.front().col];
    bool inside = true;
    for (int v = m; v < n; ++v) inside = inside && lead[v] == 0;
    if (!inside) continue;
    SparseRow t;
    for (const auto& e : r) t.push_back({target->index(L.basis()[e.col].with_vars(m)), e.val});
    rows.push_back(std::move(t));
  }
  return FormSpace::from_rows(std::move(target), std::move(rows));
}

/// Embeds U ⊂ A(n)_d into A(n')_d for n' >= n, keeping the same forms.
inline FormSpace embed(const FormSpace& U, int n_new) {
  if (n_new < U.vars()) throw std::invalid_argument("embed: cannot drop variables");
  auto target = MonomialBasis::get(n_new, U.degree(), MonomialOrder::lex(n_new));
  std::vector<SparseRow> rows;
  for (const auto& r : U.rows()) {
    SparseRow t;
    for (const auto& e : r) t.push_back({target->index(U.basis()[e.col].with_vars(n_new)), e.val});
    rows.push_back(std::move(t));
  }
  return FormSpace::from_rows(std::move(target), std::move(rows));
}

/// U^(l): each level adjoins x_{n+1} and returns x_{n+1} A(n+1)_{d-1} ⊕ U.
/// The codimension is preserved. The result uses the default lex order.
inline FormSpace lift(const FormSpace& U, int levels) {
  if (levels < 0) throw std::invalid_argument("lift: levels must be >= 0");
  if (levels == 0) return U;
  const int n_new = U.vars() + levels;
  const int d = U.degree();
  auto target = MonomialBasis::get(n_new, d, MonomialOrder::lex(n_new));
  std::vector<SparseRow> rows;
  for (std::uint32_t c = 0; c < target->size(); ++c) {
    const Monomial& m = (*target)[c];
    bool uses_new = false;
    for (int v = U.vars(); v < n_new; ++v) uses_new = uses_new || m[v] > 0;
    if (uses_new) rows.push_back(SparseRow{{c, Rational(1)}});
  }
  for (const auto& r : U.rows()) {
    SparseRow t;
    for (const auto& e : r) t.push_back({target->index(U.basis()[e.col].with_vars(n_new)), e.val});
    rows.push_back(std::move(t));
  }
  return FormSpace::from_rows(std::move(target), std::move(rows));
}

/// W̄ = (W + <l>_d)/<l>_d, realized in the n-1 remaining variables by solving
/// l = 0 for the last variable x_j with a nonzero coefficient.
inline FormSpace restrict_to_hyperplane(const FormSpace& W, const Form& l) {
  const int n = W.vars();
  if (l.degree() != 1 || l.vars() != n || l.is_zero()) throw std::invalid_argument("restrict_to_hyperplane: need a nonzero linear form");
  if (n < 2) throw std::invalid_argument("restrict_to_hyperplane: need n >= 2");
  std::vector<Rational> coeff(static_cast<std::size_t>(n), 0);
  for (const auto& [m, c] : l.terms()) {
    for (int v = 0; v < n; ++v) {
      if (m[v]) coeff[static_cast<std::size_t>(v)] = c;
    }
  }
  int j = n - 1;
  while (sgn(coeff[static_cast<std::size_t>(j)]) == 0) --j;
  std::vector<Form> images;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> img(static_cast<std::size_t>(n - 1), 0);
    if (i == j) {
      for (int v = 0; v < n; ++v) {
        if (v == j) continue;
        img[static_cast<std::size_t>(v < j ? v : v - 1)] = -coeff[static_cast<std::size_t>(v)] / coeff[static_cast<std::size_t>(j)];
      }
    } else {
      img[static_cast<std::size_t>(i < j ? i : i - 1)] = 1;
    }
    images.push_back(Form::linear(img));
  }
  auto target = MonomialBasis::get(n - 1, W.degree(), MonomialOrder::lex(n - 1));
  return detail::substitute_space(W, images, std::move(target));
}

}  // namespace gramface
