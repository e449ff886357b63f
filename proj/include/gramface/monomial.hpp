#pragma once

// Exponent-vector monomials, monomial orders, Borel moves and fixed-degree
// monomial bases.
//
// Indices passed to the C++ API are 0-based (variable x1 is index 0). All text
// formats are 1-based: `x1^2*x3` is the monomial with exponents (2, 0, 1).

#include <algorithm>
#include <array>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace gramface {

/// Largest supported number of variables.
inline constexpr int kMaxVars = 24;
/// Largest supported single exponent.
inline constexpr int kMaxExponent = 255;

class Monomial {
 public:
  Monomial() = default;

  /// The constant monomial 1 in `n` variables.
  explicit Monomial(int n) {
    if (n < 0 || n > kMaxVars) {
      throw std::invalid_argument("Monomial: variable count out of range");
    }
    n_ = static_cast<std::uint8_t>(n);
  }

  Monomial(std::initializer_list<int> exps)
      : Monomial(std::span<const int>(exps.begin(), exps.size())) {}

  explicit Monomial(std::span<const int> exps) : Monomial(static_cast<int>(exps.size())) {
    int deg = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0 || exps[i] > kMaxExponent) {
        throw std::invalid_argument("Monomial: exponent out of range");
      }
      exps_[i] = static_cast<std::uint8_t>(exps[i]);
      deg += exps[i];
    }
    degree_ = static_cast<std::uint16_t>(deg);
  }

  /// x_i^e in n variables.
  static Monomial power(int n, int i, int e) {
    Monomial m(n);
    m.set(i, e);
    return m;
  }

  int vars() const { return n_; }
  int degree() const { return degree_; }
  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }

  std::vector<int> exponents() const { return {exps_.begin(), exps_.begin() + n_}; }

  void set(int i, int e) {
    if (i < 0 || i >= n_) throw std::out_of_range("Monomial: variable index");
    if (e < 0 || e > kMaxExponent) throw std::invalid_argument("Monomial: exponent out of range");
    degree_ = static_cast<std::uint16_t>(degree_ - exps_[static_cast<std::size_t>(i)] + e);
    exps_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Monomial: variable count mismatch");
    Monomial r(a.n_);
    for (int i = 0; i < a.n_; ++i) {
      const int e = a[i] + b[i];
      if (e > kMaxExponent) throw std::overflow_error("Monomial: exponent overflow");
      r.exps_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
    }
    r.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
    return r;
  }

  bool divides(const Monomial& m) const {
    if (n_ != m.n_) return false;
    for (int i = 0; i < n_; ++i) {
      if (exps_[static_cast<std::size_t>(i)] > m.exps_[static_cast<std::size_t>(i)]) return false;
    }
    return true;
  }

  /// m / *this, when *this divides m.
  std::optional<Monomial> quotient_of(const Monomial& m) const {
    if (!divides(m)) return std::nullopt;
    Monomial r(n_);
    for (int i = 0; i < n_; ++i) {
      r.exps_[static_cast<std::size_t>(i)] =
          static_cast<std::uint8_t>(m.exps_[static_cast<std::size_t>(i)] - exps_[static_cast<std::size_t>(i)]);
    }
    r.degree_ = static_cast<std::uint16_t>(m.degree_ - degree_);
    return r;
  }

  /// Re-expresses the monomial over `n` variables. Dropping a variable with a
  /// nonzero exponent is an error.
  Monomial with_vars(int n) const {
    Monomial r(n);
    for (int i = 0; i < std::max<int>(n, n_); ++i) {
      const int e = i < n_ ? (*this)[i] : 0;
      if (i >= n) {
        if (e != 0) throw std::invalid_argument("Monomial: cannot drop a variable that occurs");
        continue;
      }
      r.exps_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
    }
    r.degree_ = degree_;
    return r;
  }

  /// Canonical storage order (exponent of x1 first). Not a monomial order.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ULL ^ n_;
    for (int i = 0; i < n_; ++i) {
      h ^= exps_[static_cast<std::size_t>(i)];
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::uint8_t n_ = 0;
  std::uint16_t degree_ = 0;
  std::array<std::uint8_t, kMaxVars> exps_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// ---------------------------------------------------------------------------
// Text format.
//
//   monomial := "1" | factor ("*" factor)*
//   factor   := "x" index ["^" exponent]
//
// Indices are 1-based and must not exceed the ambient variable count. A factor
// without exponent has exponent 1. Repeated factors multiply. The printer emits
// factors in increasing variable order, omits "^1" and prints "1" for the
// constant monomial, so parse(to_string(m)) == m.
// ---------------------------------------------------------------------------

inline std::string to_string(const Monomial& m) {
  std::string out;
  for (int i = 0; i < m.vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (m[i] > 1) {
      out += '^';
      out += std::to_string(m[i]);
    }
  }
  return out.empty() ? "1" : out;
}

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : std::runtime_error(what + " (column " + std::to_string(column + 1) + ")"), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

inline Monomial parse_monomial(std::string_view text, int n) {
  Monomial m(n);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto read_int = [&](const char* what) {
    skip_ws();
    int value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) throw ParseError(std::string("expected ") + what, pos);
    pos += static_cast<std::size_t>(ptr - first);
    return value;
  };
  skip_ws();
  if (pos < text.size() && text[pos] == '1') {
    ++pos;
    skip_ws();
    if (pos != text.size()) throw ParseError("trailing characters after constant monomial", pos);
    return m;
  }
  while (true) {
    skip_ws();
    if (pos >= text.size() || text[pos] != 'x') throw ParseError("expected 'x'", pos);
    ++pos;
    const std::size_t at = pos;
    const int idx = read_int("variable index");
    if (idx < 1 || idx > n) throw ParseError("variable index out of range", at);
    int e = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const std::size_t eat = pos;
      e = read_int("exponent");
      if (e < 0) throw ParseError("negative exponent", eat);
    }
    if (m[idx - 1] + e > kMaxExponent) throw ParseError("exponent too large", at);
    m.set(idx - 1, m[idx - 1] + e);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '*') throw ParseError("expected '*'", pos);
    ++pos;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Monomial orders.
// ---------------------------------------------------------------------------

enum class OrderKind { lex, grlex };

/// A group of variables compared together. `vars` lists 0-based variable
/// indices from most to least significant.
struct OrderBlock {
  OrderKind kind = OrderKind::lex;
  std::vector<int> vars;
  friend bool operator==(const OrderBlock&, const OrderBlock&) = default;
};

/// Total, multiplicative order on monomials over a fixed variable count.
///
/// A plain lex or grlex order is a single block. The default order is lex with
/// x1 < x2 < ... < xn: exponents are compared from x_n down to x_1 and the first
/// strictly larger exponent wins. Blocks are compared in sequence; a grlex block
/// compares the block degree before its lex tie-break.
class MonomialOrder {
 public:
  MonomialOrder() = default;

  static MonomialOrder lex(int n) { return single(OrderKind::lex, descending(n)); }
  static MonomialOrder grlex(int n) { return single(OrderKind::grlex, descending(n)); }

  /// `priority` lists all variables (0-based), most significant first.
  static MonomialOrder single(OrderKind kind, std::vector<int> priority) {
    MonomialOrder o;
    o.blocks_.push_back({kind, std::move(priority)});
    o.validate();
    return o;
  }

  static MonomialOrder block(std::vector<OrderBlock> blocks) {
    MonomialOrder o;
    o.blocks_ = std::move(blocks);
    o.validate();
    return o;
  }

  int vars() const {
    int n = 0;
    for (const auto& b : blocks_) n += static_cast<int>(b.vars.size());
    return n;
  }

  const std::vector<OrderBlock>& blocks() const { return blocks_; }

  /// Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const {
    for (const auto& blk : blocks_) {
      if (blk.kind == OrderKind::grlex) {
        int da = 0, db = 0;
        for (int v : blk.vars) {
          da += a[v];
          db += b[v];
        }
        if (da != db) return da < db ? -1 : 1;
      }
      for (int v : blk.vars) {
        if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool is_default_lex() const {
    return blocks_.size() == 1 && blocks_[0].kind == OrderKind::lex &&
           blocks_[0].vars == descending(vars());
  }

  // Text form:
  //   "lex" | "grlex"                  default orientation (x_n most significant)
  //   "lex(3,2,1)" | "grlex(1,2,3)"    explicit priority, 1-based, most significant first
  //   "block[grlex(1,2),grlex(3,4)]"   blocks from most to least significant
  std::string to_string() const {
    auto one = [](const OrderBlock& b, bool bare) {
      std::string s = b.kind == OrderKind::lex ? "lex" : "grlex";
      if (bare) return s;
      s += '(';
      for (std::size_t i = 0; i < b.vars.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(b.vars[i] + 1);
      }
      return s + ')';
    };
    if (blocks_.size() == 1) return one(blocks_[0], blocks_[0].vars == descending(vars()));
    std::string s = "block[";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (i) s += ',';
      s += one(blocks_[i], false);
    }
    return s + ']';
  }

  static MonomialOrder parse(std::string_view text, int n) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
      while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    auto parse_block = [&](std::string_view s, bool allow_bare) -> OrderBlock {
      s = trim(s);
      OrderBlock b;
      std::string_view rest;
      if (s.starts_with("grlex")) {
        b.kind = OrderKind::grlex;
        rest = s.substr(5);
      } else if (s.starts_with("lex")) {
        b.kind = OrderKind::lex;
        rest = s.substr(3);
      } else {
        throw std::invalid_argument("unknown order kind in '" + std::string(s) + "'");
      }
      rest = trim(rest);
      if (rest.empty()) {
        if (!allow_bare) throw std::invalid_argument("block needs an explicit variable list");
        b.vars = descending(n);
        return b;
      }
      if (rest.front() != '(' || rest.back() != ')') throw std::invalid_argument("malformed order '" + std::string(s) + "'");
      rest = rest.substr(1, rest.size() - 2);
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto tok = trim(rest.substr(0, comma));
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
          throw std::invalid_argument("bad variable index in order");
        }
        b.vars.push_back(v - 1);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
      return b;
    };
    MonomialOrder o;
    if (text.starts_with("block[")) {
      if (text.back() != ']') throw std::invalid_argument("malformed block order");
      auto inner = text.substr(6, text.size() - 7);
      std::size_t depth = 0, start = 0;
      for (std::size_t i = 0; i <= inner.size(); ++i) {
        if (i == inner.size() || (inner[i] == ',' && depth == 0)) {
          o.blocks_.push_back(parse_block(inner.substr(start, i - start), false));
          start = i + 1;
        } else if (inner[i] == '(') {
          ++depth;
        } else if (inner[i] == ')') {
          --depth;
        }
      }
    } else {
      o.blocks_.push_back(parse_block(text, true));
    }
    if (o.vars() != n) throw std::invalid_argument("order does not cover all variables");
    o.validate();
    return o;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  static std::vector<int> descending(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - 1 - i;
    return v;
  }

  void validate() const {
    const int n = vars();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const auto& b : blocks_) {
      for (int v : b.vars) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
          throw std::invalid_argument("order must list every variable exactly once");
        }
        seen[static_cast<std::size_t>(v)] = true;
      }
    }
  }

  std::vector<OrderBlock> blocks_;
};

// ---------------------------------------------------------------------------
// Enumeration.
// ---------------------------------------------------------------------------

/// Calls fn(m) for every monomial of degree d in n variables, in no
/// particular order.
template <class Fn>
void for_each_monomial(int n, int d, Fn&& fn) {
  if (n < 1) throw std::invalid_argument("monomials need n >= 1");
  if (d < 0) throw std::invalid_argument("monomials need d >= 0");
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n - 1) {
      e[static_cast<std::size_t>(var)] = left;
      fn(Monomial(std::span<const int>(e)));
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[static_cast<std::size_t>(var)] = a;
      self(self, var + 1, left - a);
    }
  };
  rec(rec, 0, d);
}

/// All C(n-1+d, d) monomials of degree d, ascending under `order`.
inline std::vector<Monomial> monomial_basis(int n, int d, const MonomialOrder& order) {
  std::vector<Monomial> out;
  for_each_monomial(n, d, [&](const Monomial& m) { out.push_back(m); });
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
  return out;
}

inline std::vector<Monomial> monomial_basis(int n, int d) { return monomial_basis(n, d, MonomialOrder::lex(n)); }

/// Degree-d monomials indexed DESCENDING by an order: index 0 is the largest
/// monomial. Shared, immutable, cached per (n, d, order).
class MonomialBasis {
 public:
  MonomialBasis(int n, int d, MonomialOrder order) : n_(n), d_(d), order_(std::move(order)) {
    monomials_ = monomial_basis(n, d, order_);
    std::reverse(monomials_.begin(), monomials_.end());
    index_.reserve(monomials_.size() * 2);
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], static_cast<std::uint32_t>(i));
  }

  static std::shared_ptr<const MonomialBasis> get(int n, int d, const MonomialOrder& order) {
    static std::mutex mutex;
    static std::map<std::tuple<int, int, std::string>, std::shared_ptr<const MonomialBasis>> cache;
    auto key = std::make_tuple(n, d, order.to_string());
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto basis = std::make_shared<const MonomialBasis>(n, d, order);
    cache.emplace(std::move(key), basis);
    return basis;
  }

  int vars() const { return n_; }
  int degree() const { return d_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t size() const { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  std::optional<std::uint32_t> find(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::uint32_t index(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::invalid_argument("monomial " + to_string(m) + " not in basis");
    return it->second;
  }

 private:
  int n_;
  int d_;
  MonomialOrder order_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index_;
};

/// Calls fn(a) for each degree-d divisor a of m until fn returns false.
/// Returns false if stopped early.
template <class Fn>
bool for_each_divisor(const Monomial& m, int d, Fn&& fn) {
  const int n = m.vars();
  if (d < 0 || d > m.degree()) return true;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  // suffix[i] = degree of m restricted to variables i..n-1
  std::vector<int> suffix(static_cast<std::size_t>(n) + 1, 0);
  for (int i = n - 1; i >= 0; --i) suffix[static_cast<std::size_t>(i)] = suffix[static_cast<std::size_t>(i) + 1] + m[i];
  auto rec = [&](auto&& self, int var, int left) -> bool {
    if (var == n) return left == 0 ? fn(Monomial(std::span<const int>(e))) : true;
    const int hi = std::min(left, m[var]);
    const int lo = std::max(0, left - suffix[static_cast<std::size_t>(var) + 1]);
    for (int a = hi; a >= lo; --a) {
      e[static_cast<std::size_t>(var)] = a;
      if (!self(self, var + 1, left - a)) return false;
    }
    e[static_cast<std::size_t>(var)] = 0;
    return true;
  };
  return rec(rec, 0, d);
}

/// All unordered pairs {a, b} of degree-d monomials with a*b = m. Each pair is
/// reported once with a <= b in storage order.
inline std::vector<std::pair<Monomial, Monomial>> divisor_pairs(const Monomial& m, int d) {
  if (m.degree() != 2 * d) throw std::invalid_argument("divisor_pairs: degree of m must be 2d");
  std::vector<std::pair<Monomial, Monomial>> out;
  for_each_divisor(m, d, [&](const Monomial& a) {
    const Monomial b = *a.quotient_of(m);
    if (!(b < a)) out.emplace_back(a, b);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// x_j * m / x_i for j > i (0-based). Raises the monomial in every order with
/// x_1 < ... < x_n.
inline Monomial borel_move_up(const Monomial& m, int i, int j) {
  if (i < 0 || j >= m.vars() || j <= i) throw std::invalid_argument("borel_move_up: need 0 <= i < j < n");
  if (m[i] < 1) throw std::invalid_argument("borel_move_up: x_i does not divide m");
  Monomial r = m;
  r.set(i, m[i] - 1);
  r.set(j, m[j] + 1);
  return r;
}

/// x_i * m / x_j for i < j (0-based).
inline Monomial borel_move_down(const Monomial& m, int j, int i) {
  if (i < 0 || j >= m.vars() || j <= i) throw std::invalid_argument("borel_move_down: need 0 <= i < j < n");
  if (m[j] < 1) throw std::invalid_argument("borel_move_down: x_j does not divide m");
  Monomial r = m;
  r.set(j, m[j] - 1);
  r.set(i, m[i] + 1);
  return r;
}

/// True iff every single down move x_i*m/x_j (i < j) of a member stays in W.
/// Single moves generate all down moves, so this is the full closure test.
inline bool is_borel_down_closed(std::span<const Monomial> W) {
  if (W.empty()) return true;
  const int n = W.front().vars();
  const int d = W.front().degree();
  std::unordered_set<Monomial, MonomialHash> set;
  for (const auto& m : W) {
    if (m.vars() != n || m.degree() != d) throw std::invalid_argument("is_borel_down_closed: mixed degrees");
    set.insert(m);
  }
  for (const auto& m : W) {
    for (int j = 1; j < n; ++j) {
      if (m[j] == 0) continue;
      for (int i = 0; i < j; ++i) {
        if (!set.contains(borel_move_down(m, j, i))) return false;
      }
    }
  }
  return true;
}

}  // namespace gramface
