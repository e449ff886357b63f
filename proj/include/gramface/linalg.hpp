#pragma once

// Exact sparse row reduction over the rationals.

#include "numbers.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <regex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gramface {

/// Parses "p" or "p/q" (optional leading '-', decimal digits, q != 0) into a
/// canonical rational.
inline Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(^-?[0-9]+(/[0-9]+)?$)");
  if (!std::regex_match(text, pattern)) throw std::invalid_argument("malformed rational '" + text + "'");
  Rational q;
  const auto slash = text.find('/');
  Integer num(text.substr(0, slash), 10);
  Integer den = slash == std::string::npos ? Integer(1) : Integer(text.substr(slash + 1), 10);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q = Rational(num, den);
  q.canonicalize();
  return q;
}

struct Entry {
  std::uint32_t col;
  Rational val;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Strictly increasing columns, no zero values. Column 0 is the leading
/// (largest) position.
using SparseRow = std::vector<Entry>;

namespace detail {

inline void sort_and_merge(SparseRow& row) {
  std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
  SparseRow out;
  out.reserve(row.size());
  for (auto& e : row) {
    if (!out.empty() && out.back().col == e.col) {
      out.back().val += e.val;
    } else {
      out.push_back(std::move(e));
    }
  }
  std::erase_if(out, [](const Entry& e) { return sgn(e.val) == 0; });
  row = std::move(out);
}

}  // namespace detail

/// Incremental row echelon form. Rows are kept with a unique leading column
/// and leading coefficient 1; `reduced_rows` produces the reduced form.
class Echelon {
 public:
  explicit Echelon(std::size_t cols) : cols_(cols), pivot_(cols, -1), unit_(cols, 0) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == cols_; }
  bool is_pivot(std::uint32_t col) const { return pivot_[col] >= 0; }

  /// Adds e_col. Returns true if the rank grew.
  bool insert_unit(std::uint32_t col) {
    if (unit_[col]) return false;
    if (pivot_[col] >= 0) {
      // an existing pivot row with this lead: reduce it against e_col
      auto& r = rows_[static_cast<std::size_t>(pivot_[col])];
      SparseRow tail(r.begin() + 1, r.end());
      r = SparseRow{{col, Rational(1)}};
      unit_[col] = 1;
      return insert(std::move(tail));
    }
    pivot_[col] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(SparseRow{{col, Rational(1)}});
    unit_[col] = 1;
    return true;
  }

  /// Returns true if the rank grew. `row` must be sorted with no zeros.
  bool insert(SparseRow row) {
    strip_units(row);
    while (!row.empty()) {
      const auto lead = row.front().col;
      const auto p = pivot_[lead];
      if (p < 0) {
        if (row.size() == 1) return insert_unit(lead);
        const Rational inv = 1 / row.front().val;
        for (auto& e : row) e.val *= inv;
        pivot_[lead] = static_cast<std::int32_t>(rows_.size());
        rows_.push_back(std::move(row));
        return true;
      }
      row = subtract_multiple(row, row.front().val, rows_[static_cast<std::size_t>(p)]);
    }
    return false;
  }

  /// True iff `row` lies in the current span.
  bool contains(SparseRow row) const {
    strip_units(row);
    while (!row.empty()) {
      const auto p = pivot_[row.front().col];
      if (p < 0) return false;
      row = subtract_multiple(row, row.front().val, rows_[static_cast<std::size_t>(p)]);
    }
    return true;
  }

  /// Reduced row echelon basis, ordered by leading column.
  std::vector<SparseRow> reduced_rows() const {
    std::vector<std::uint32_t> pivots;
    pivots.reserve(rows_.size());
    for (std::uint32_t c = 0; c < cols_; ++c) {
      if (pivot_[c] >= 0) pivots.push_back(c);
    }
    std::vector<SparseRow> reduced(cols_);
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      const auto p = *it;
      const auto& src = rows_[static_cast<std::size_t>(pivot_[p])];
      std::map<std::uint32_t, Rational> acc;
      for (auto e = src.begin() + 1; e != src.end(); ++e) acc.emplace(e->col, e->val);
      for (auto a = acc.begin(); a != acc.end();) {
        if (pivot_[a->first] < 0) {
          ++a;
          continue;
        }
        const Rational c = a->second;
        const auto& q = reduced[a->first];
        a = acc.erase(a);
        for (auto e = q.begin() + 1; e != q.end(); ++e) {
          auto [slot, fresh] = acc.try_emplace(e->col, 0);
          slot->second -= c * e->val;
          if (sgn(slot->second) == 0) {
            if (slot == a) ++a;
            acc.erase(slot);
          }
        }
      }
      SparseRow out;
      out.reserve(acc.size() + 1);
      out.push_back({p, Rational(1)});
      for (auto& [col, val] : acc) out.push_back({col, std::move(val)});
      reduced[p] = std::move(out);
    }
    std::vector<SparseRow> result;
    result.reserve(pivots.size());
    for (auto p : pivots) result.push_back(std::move(reduced[p]));
    return result;
  }

 private:
  void strip_units(SparseRow& row) const {
    std::erase_if(row, [&](const Entry& e) { return unit_[e.col] != 0; });
  }

  SparseRow subtract_multiple(const SparseRow& row, const Rational& c, const SparseRow& piv) const {
    SparseRow out;
    out.reserve(row.size() + piv.size());
    auto a = row.begin();
    auto b = piv.begin();
    while (a != row.end() || b != piv.end()) {
      if (b == piv.end() || (a != row.end() && a->col < b->col)) {
        if (!unit_[a->col]) out.push_back(*a);
        ++a;
      } else if (a == row.end() || b->col < a->col) {
        if (!unit_[b->col]) out.push_back({b->col, -c * b->val});
        ++b;
      } else {
        Rational v = a->val - c * b->val;
        if (sgn(v) != 0 && !unit_[a->col]) out.push_back({a->col, std::move(v)});
        ++a;
        ++b;
      }
    }
    return out;
  }

  std::size_t cols_;
  std::vector<std::int32_t> pivot_;
  std::vector<char> unit_;
  std::vector<SparseRow> rows_;
};

/// Reduced row echelon form of the span of `rows`.
inline std::vector<SparseRow> rref(std::vector<SparseRow> rows, std::size_t cols) {
  std::stable_sort(rows.begin(), rows.end(), [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
  Echelon ech(cols);
  for (auto& r : rows) {
    if (ech.full()) break;
    ech.insert(std::move(r));
  }
  return ech.reduced_rows();
}

/// Basis of {x : <r, x> = 0 for every row r} under the plain dot product.
/// `reduced` must be in reduced row echelon form.
inline std::vector<SparseRow> nullspace_of_rref(const std::vector<SparseRow>& reduced, std::size_t cols) {
  std::vector<char> is_pivot(cols, 0);
  for (const auto& r : reduced) is_pivot[r.front().col] = 1;
  std::vector<SparseRow> kernel(cols);
  for (std::uint32_t c = 0; c < cols; ++c) {
    if (!is_pivot[c]) kernel[c].push_back({c, Rational(1)});
  }
  for (const auto& r : reduced) {
    const auto p = r.front().col;
    for (auto e = r.begin() + 1; e != r.end(); ++e) kernel[e->col].push_back({p, -e->val});
  }
  std::vector<SparseRow> out;
  for (std::uint32_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    detail::sort_and_merge(kernel[c]);
    out.push_back(std::move(kernel[c]));
  }
  return out;
}

inline std::vector<SparseRow> nullspace(std::vector<SparseRow> rows, std::size_t cols) {
  return nullspace_of_rref(rref(std::move(rows), cols), cols);
}

// Small dense helpers.

using DenseMatrix = std::vector<std::vector<Rational>>;

inline SparseRow to_sparse(const std::vector<Rational>& v) {
  SparseRow r;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) r.push_back({static_cast<std::uint32_t>(i), v[i]});
  }
  return r;
}

inline std::vector<Rational> to_dense(const SparseRow& r, std::size_t cols) {
  std::vector<Rational> v(cols, 0);
  for (const auto& e : r) v[e.col] = e.val;
  return v;
}

inline std::size_t rank(const DenseMatrix& m) {
  if (m.empty()) return 0;
  Echelon ech(m.front().size());
  for (const auto& row : m) ech.insert(to_sparse(row));
  return ech.rank();
}

/// Inverse of a square matrix; throws std::domain_error if singular.
inline DenseMatrix inverse(const DenseMatrix& m) {
  const std::size_t n = m.size();
  std::vector<SparseRow> rows;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("inverse: matrix must be square");
    std::vector<Rational> aug(2 * n, 0);
    for (std::size_t j = 0; j < n; ++j) aug[j] = m[i][j];
    aug[n + i] = 1;
    rows.push_back(to_sparse(aug));
  }
  auto red = rref(std::move(rows), 2 * n);
  if (red.size() != n || red.back().front().col != n - 1) throw std::domain_error("matrix is singular");
  DenseMatrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : red[i]) {
      if (e.col >= n) inv[i][e.col - n] = e.val;
    }
  }
  return inv;
}

}  // namespace gramface
