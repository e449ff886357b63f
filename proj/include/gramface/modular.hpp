#pragma once

#include "form_space.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gramface {

inline constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1

class BadPrime : public std::domain_error {
 public:
  BadPrime() : std::domain_error("prime divides a denominator") {}
};

namespace modp {

inline std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return pow(a, p - 2, p); }

inline std::uint64_t reduce(const Rational& q, std::uint64_t p) {
  const unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  const unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) throw BadPrime();
  return num * inv(den, p) % p;
}

/// Row echelon form over F_p kept fully reduced, with rows stored on the
/// columns that are not yet pivots.
class Echelon {
 public:
  Echelon(std::size_t cols, std::uint64_t p) : p_(p), pivot_row_(cols, -1), buf_(cols, 0) {
    free_.reserve(cols);
    for (std::size_t c = 0; c < cols; ++c) free_.push_back(static_cast<std::uint32_t>(c));
  }

  std::size_t rank() const { return rows_.size(); }
  bool full() const { return free_.empty(); }

  void insert(const std::vector<std::pair<std::uint32_t, std::uint64_t>>& row) {
    if (full()) return;
    for (const auto& [c, v] : row) buf_[c] = (buf_[c] + v) % p_;
    // pivot rows vanish on the other pivot columns, so one pass suffices
    for (const auto& [c, v] : row) {
      const int r = pivot_row_[c];
      if (r < 0) continue;
      const std::uint64_t f = buf_[c];
      if (!f) continue;
      buf_[c] = 0;
      const auto& pr = rows_[static_cast<std::size_t>(r)];
      for (std::size_t i = 0; i < free_.size(); ++i) {
        if (pr[i]) buf_[free_[i]] = (buf_[free_[i]] + (p_ - f) * pr[i]) % p_;
      }
    }
    std::size_t lead = free_.size();
    for (std::size_t i = 0; i < free_.size(); ++i) {
      if (buf_[free_[i]]) {
        lead = i;
        break;
      }
    }
    if (lead == free_.size()) {
      for (const auto& [c, v] : row) buf_[c] = 0;
      return;
    }
    const std::uint32_t col = free_[lead];
    const std::uint64_t s = inv(buf_[col], p_);
    std::vector<std::uint64_t> nr(free_.size());
    for (std::size_t i = 0; i < free_.size(); ++i) {
      nr[i] = buf_[free_[i]] * s % p_;
      buf_[free_[i]] = 0;
    }
    for (const auto& [c, v] : row) buf_[c] = 0;
    // clear the new pivot column from the existing rows
    for (auto& pr : rows_) {
      const std::uint64_t f = pr[lead];
      if (!f) continue;
      for (std::size_t i = 0; i < nr.size(); ++i) {
        if (nr[i]) pr[i] = (pr[i] + (p_ - f) * nr[i]) % p_;
      }
    }
    // drop the pivot column from every stored row
    for (auto& pr : rows_) pr.erase(pr.begin() + static_cast<long>(lead));
    nr.erase(nr.begin() + static_cast<long>(lead));
    free_.erase(free_.begin() + static_cast<long>(lead));
    pivot_row_[col] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(nr));
  }

 private:
  std::uint64_t p_;
  std::vector<int> pivot_row_;
  std::vector<std::uint32_t> free_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::uint64_t> buf_;
};

}  // namespace modp

/// codim U^2 computed over F_p. Ranks can only drop modulo p, so this is an
/// upper bound for the exact value and equal to it for all but finitely many
/// primes.
///
/// With U in reduced echelon form every row is a pivot monomial plus terms on
/// the non-pivot monomials Q. A product of two rows is then its head monomial
/// plus terms divisible by some q in Q. Heads outside the multiples of Q each
/// contribute one to the rank, and all remaining relations live on the
/// multiples of Q, which is a small system when codim U is small.
inline std::size_t square_codim_mod_p(const FormSpace& U, std::uint64_t p = kDefaultPrime) {
  const auto& bu = U.basis();
  const auto target = MonomialBasis::get(U.vars(), 2 * U.degree(), U.order());
  const std::size_t M = target->size();
  const auto& ru = U.rows();
  if (ru.empty()) return M;

  std::vector<char> is_pivot(bu.size(), 0);
  for (const auto& r : ru) is_pivot[r.front().col] = 1;
  std::vector<std::uint32_t> Q;
  for (std::uint32_t c = 0; c < bu.size(); ++c) {
    if (!is_pivot[c]) Q.push_back(c);
  }

  // T = multiples of Q in degree 2d, numbered in target order
  std::vector<std::int32_t> tcol(M, -1);
  std::vector<std::vector<std::uint32_t>> times_q(Q.size(), std::vector<std::uint32_t>(bu.size()));
  for (std::size_t j = 0; j < Q.size(); ++j) {
    for (std::uint32_t a = 0; a < bu.size(); ++a) {
      const std::uint32_t idx = target->index(bu[a] * bu[Q[j]]);
      times_q[j][a] = idx;
      tcol[idx] = 0;
    }
  }
  std::int32_t nt = 0;
  for (auto& t : tcol) {
    if (t == 0) t = nt++;
  }
  std::vector<std::int32_t> qpos(bu.size(), -1);
  for (std::size_t j = 0; j < Q.size(); ++j) qpos[Q[j]] = static_cast<std::int32_t>(j);

  struct Row {
    std::uint32_t pivot;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> tail;  // (index into Q, value)
  };
  std::vector<Row> rows;
  rows.reserve(ru.size());
  for (const auto& r : ru) {
    Row row{r.front().col, {}};
    for (std::size_t i = 1; i < r.size(); ++i) row.tail.push_back({static_cast<std::uint32_t>(qpos[r[i].col]), modp::reduce(r[i].val, p)});
    if (modp::reduce(r.front().val, p) != 1) throw std::logic_error("square_codim_mod_p: rows are not reduced");
    rows.push_back(std::move(row));
  }

  using Sparse = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
  std::vector<Sparse> head_tail(M);
  std::vector<char> has_head(M, 0);
  std::size_t heads = 0;
  modp::Echelon ech(static_cast<std::size_t>(nt), p);
  Sparse prod;
  auto t_of = [&](std::uint32_t idx) { return static_cast<std::uint32_t>(tcol[idx]); };

  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& a = rows[i];
    for (std::size_t j = i; j < rows.size(); ++j) {
      const Row& b = rows[j];
      prod.clear();
      for (const auto& [q, v] : b.tail) prod.push_back({t_of(times_q[q][a.pivot]), v});
      for (const auto& [q, v] : a.tail) prod.push_back({t_of(times_q[q][b.pivot]), v});
      for (const auto& [q, v] : a.tail) {
        for (const auto& [q2, w] : b.tail) prod.push_back({t_of(times_q[q2][Q[q]]), v * w % p});
      }
      const std::uint32_t head = target->index(bu[a.pivot] * bu[b.pivot]);
      if (tcol[head] >= 0) {
        prod.push_back({t_of(head), 1});
        ech.insert(prod);
      } else if (!has_head[head]) {
        has_head[head] = 1;
        head_tail[head] = prod;
        ++heads;
      } else {
        for (const auto& [c, v] : head_tail[head]) prod.push_back({c, (p - v) % p});
        ech.insert(prod);
      }
    }
  }
  return M - heads - ech.rank();
}

}  // namespace gramface
