#pragma once

// Strongly stable monomial subspaces, the combinatorial codim U^2, and tables
// of the maxima m(n,d,k).

#include "macaulay.hpp"
#include "monomial.hpp"
#include "parallel.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace gramface {

/// The monomials W excluded from a monomial subspace U of A(n)_d.
struct StableComplement {
  int n = 1;
  int d = 0;
  std::vector<Monomial> W;  // ascending under the default lex order

  std::size_t k() const { return W.size(); }
  friend bool operator==(const StableComplement&, const StableComplement&) = default;
};

inline std::string to_string(const StableComplement& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.W.size(); ++i) {
    if (i) s += ", ";
    s += to_string(c.W[i]);
  }
  return s + "}";
}

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded() : std::runtime_error("time budget exceeded") {}
};

/// Deadline helper; a default-constructed budget never expires.
class Budget {
 public:
  Budget() = default;
  explicit Budget(double seconds)
      : deadline_(std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds))),
        limited_(seconds > 0) {}
  void check() const {
    if (limited_ && std::chrono::steady_clock::now() > deadline_) throw BudgetExceeded();
  }

 private:
  std::chrono::steady_clock::time_point deadline_{};
  bool limited_ = false;
};

/// Calls fn(W) for every Borel-down-closed set of k degree-d monomials, each
/// exactly once. Sets are grown along the ascending lex order, which is a
/// linear extension of the down moves, so every prefix of a closed set is
/// closed and a set is only reached through its own sorted sequence.
template <class Fn>
void for_each_stable_complement(int n, int d, std::size_t k, Fn&& fn, const Budget& budget = {}) {
  const auto& basis = monomial_basis(n, d);  // ascending
  if (k > basis.size()) throw std::invalid_argument("enumerate_stable_complements: k exceeds dim A_d");
  std::unordered_set<Monomial, MonomialHash> in;
  std::vector<Monomial> current;
  auto addable = [&](const Monomial& m) {
    for (int j = 1; j < n; ++j) {
      if (!m[j]) continue;
      for (int i = 0; i < j; ++i) {
        if (!in.contains(borel_move_down(m, j, i))) return false;
      }
    }
    return true;
  };
  std::size_t visited = 0;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if ((visited++ & 0xff) == 0) budget.check();
    if (current.size() == k) {
      fn(StableComplement{n, d, current});
      return;
    }
    // every remaining pick must come after `start`
    for (std::size_t idx = start; idx + (k - current.size()) <= basis.size(); ++idx) {
      const Monomial& m = basis[idx];
      if (!addable(m)) continue;
      in.insert(m);
      current.push_back(m);
      self(self, idx + 1);
      current.pop_back();
      in.erase(m);
    }
  };
  rec(rec, 0);
}

inline std::vector<StableComplement> enumerate_stable_complements(int n, int d, std::size_t k, const Budget& budget = {}) {
  std::vector<StableComplement> out;
  for_each_stable_complement(n, d, k, [&](StableComplement c) { out.push_back(std::move(c)); }, budget);
  return out;
}

/// codim U^2 for U spanned by the degree-d monomials outside W: the number of
/// degree-2d monomials all of whose factorizations a*b use a member of W.
/// Such a monomial has a divisor in W, so only the products w*b are checked.
inline long monomial_square_codim(int n, int d, const std::vector<Monomial>& W) {
  std::unordered_set<Monomial, MonomialHash> excluded(W.begin(), W.end());
  for (const auto& w : W) {
    if (w.vars() != n || w.degree() != d) throw std::invalid_argument("monomial_square_codim: complement of the wrong shape");
  }
  std::unordered_set<Monomial, MonomialHash> seen;
  long count = 0;
  const auto& basis = *MonomialBasis::get(n, d, MonomialOrder::lex(n));
  for (const auto& w : excluded) {
    for (const auto& b : basis.monomials()) {
      const Monomial m = w * b;
      if (!seen.insert(m).second) continue;
      const bool in_square = !for_each_divisor(m, d, [&](const Monomial& a) {
        if (excluded.contains(a)) return true;
        return excluded.contains(*a.quotient_of(m));  // continue while blocked
      });
      if (!in_square) ++count;
    }
  }
  return count;
}

inline long monomial_square_codim(const StableComplement& c) { return monomial_square_codim(c.n, c.d, c.W); }

struct MValue {
  long value = 0;
  StableComplement witness;
  std::size_t candidates = 0;  // stable complements examined
};

/// m(n,d,k): the maximum of codim U^2 over strongly stable U of codimension
/// k, with the first maximizer in enumeration order as witness.
inline MValue m_value(int n, int d, std::size_t k, const Budget& budget = {}) {
  MValue best;
  best.value = -1;
  for_each_stable_complement(
      n, d, k,
      [&](StableComplement c) {
        ++best.candidates;
        const long v = monomial_square_codim(c);
        if (v > best.value) {
          best.value = v;
          best.witness = std::move(c);
        }
      },
      budget);
  return best;
}

// ---------------------------------------------------------------------------
// Tables.
// ---------------------------------------------------------------------------

struct Range {
  int lo = 0;
  int hi = 0;
  std::vector<int> values() const {
    std::vector<int> v;
    for (int x = lo; x <= hi; ++x) v.push_back(x);
    return v;
  }
};

/// "3" or "2..9".
inline Range parse_range(const std::string& text) {
  auto num = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw std::invalid_argument("bad range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = num(text);
  } else {
    r.lo = num(text.substr(0, dots));
    r.hi = num(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + text + "'");
  return r;
}

enum class CellStatus { computed, degenerate, not_computed };

struct MCell {
  int n = 0;
  int d = 0;
  int k = 0;
  CellStatus status = CellStatus::not_computed;
  long value = 0;
  StableComplement witness;
};

struct MTable {
  Range n, d, k;
  std::vector<MCell> cells;  // n-major, then k, then d

  const MCell& at(int nn, int dd, int kk) const {
    const std::size_t nd = static_cast<std::size_t>(d.hi - d.lo + 1);
    const std::size_t nk = static_cast<std::size_t>(k.hi - k.lo + 1);
    return cells[(static_cast<std::size_t>(nn - n.lo) * nk + static_cast<std::size_t>(kk - k.lo)) * nd + static_cast<std::size_t>(dd - d.lo)];
  }
};

/// Cells with k >= dim A_d are degenerate (printed "-"); the budget applies
/// per cell and marks cells that run out as not computed.
inline MTable m_table(Range nr, Range dr, Range kr, unsigned jobs = 1, double cell_budget_seconds = 0) {
  if (nr.lo < 1 || dr.lo < 0 || kr.lo < 0) throw std::invalid_argument("m_table: ranges must be non-negative (n >= 1)");
  MTable t{nr, dr, kr, {}};
  for (int n : nr.values()) {
    for (int k : kr.values()) {
      for (int d : dr.values()) t.cells.push_back(MCell{n, d, k, CellStatus::not_computed, 0, {}});
    }
  }
  // expensive cells first keeps the threads busy
  std::vector<std::size_t> order(t.cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = t.cells[a];
    const auto& y = t.cells[b];
    return binomial(x.n - 1 + 2 * x.d, 2 * x.d) * x.k > binomial(y.n - 1 + 2 * y.d, 2 * y.d) * y.k;
  });
  parallel_for(order.size(), jobs, [&](std::size_t i) {
    MCell& c = t.cells[order[i]];
    if (binomial(c.n - 1 + c.d, c.d) <= c.k) {
      c.status = CellStatus::degenerate;
      return;
    }
    try {
      auto mv = m_value(c.n, c.d, static_cast<std::size_t>(c.k), Budget(cell_budget_seconds));
      c.value = mv.value;
      c.witness = std::move(mv.witness);
      c.status = CellStatus::computed;
    } catch (const BudgetExceeded&) {
      c.status = CellStatus::not_computed;
    }
  });
  return t;
}

// ---------------------------------------------------------------------------
// Published reference values for n = 3..6, d = 2..9, k = 1..9. Stored as
// printed: one row per k listing d = 2..9; 0 marks a "-" cell.
// ---------------------------------------------------------------------------

namespace reference {

inline constexpr int kN0 = 3, kN1 = 6, kD0 = 2, kD1 = 9, kK0 = 1, kK1 = 9;

// clang-format off
inline constexpr int kTable[4][9][8] = {
    {
        // n=3
        {3, 3, 3, 3, 3, 3, 3, 3},          // k=1
        {6, 6, 6, 6, 6, 6, 6, 6},          // k=2
        {10, 10, 10, 10, 10, 10, 10, 10},  // k=3
        {12, 13, 13, 13, 13, 13, 13, 13},  // k=4
        {14, 16, 17, 16, 16, 16, 16, 16},  // k=5
        {0, 21, 21, 21, 21, 21, 21, 21},   // k=6
        {0, 23, 24, 24, 25, 24, 24, 24},   // k=7
        {0, 25, 27, 27, 28, 29, 27, 27},   // k=8
        {0, 27, 30, 31, 31, 32, 33, 31},   // k=9
    },
    {
        // n=4
        {4, 4, 4, 4, 4, 4, 4, 4},          // k=1
        {8, 8, 8, 8, 8, 8, 8, 8},          // k=2
        {13, 13, 13, 13, 13, 13, 13, 13},  // k=3
        {20, 20, 20, 20, 20, 20, 20, 20},  // k=4
        {23, 24, 25, 24, 24, 24, 24, 24},  // k=5
        {26, 29, 29, 31, 28, 28, 28, 28},  // k=6
        {30, 35, 35, 35, 37, 35, 35, 35},  // k=7
        {32, 39, 40, 41, 41, 43, 40, 40},  // k=8
        {34, 45, 45, 45, 47, 47, 49, 45},  // k=9
    },
    {
        // n=5
        {5, 5, 5, 5, 5, 5, 5, 5},          // k=1
        {10, 10, 10, 10, 10, 10, 10, 10},  // k=2
        {17, 16, 16, 16, 16, 16, 16, 16},  // k=3
        {24, 25, 24, 24, 24, 24, 24, 24},  // k=4
        {35, 35, 35, 35, 35, 35, 35, 35},  // k=5
        {39, 40, 40, 41, 40, 40, 40, 40},  // k=6
        {43, 47, 45, 46, 49, 45, 45, 45},  // k=7
        {48, 54, 55, 54, 54, 57, 54, 54},  // k=8
        {55, 60, 60, 63, 61, 62, 65, 59},  // k=9
    },
    {
        // n=6
        {6, 6, 6, 6, 6, 6, 6, 6},          // k=1
        {12, 12, 12, 12, 12, 12, 12, 12},  // k=2
        {21, 19, 19, 19, 19, 19, 19, 19},  // k=3
        {28, 31, 28, 28, 28, 28, 28, 28},  // k=4
        {40, 40, 41, 40, 40, 40, 40, 40},  // k=5
        {56, 56, 56, 56, 56, 56, 56, 56},  // k=6
        {61, 62, 62, 62, 62, 62, 62, 62},  // k=7
        {66, 71, 68, 68, 68, 71, 68, 68},  // k=8
        {73, 79, 81, 79, 79, 79, 81, 79},  // k=9
    },
};
// clang-format on

/// std::nullopt outside the reference range; 0 for a "-" cell.
inline std::optional<int> lookup(int n, int d, int k) {
  if (n < kN0 || n > kN1 || d < kD0 || d > kD1 || k < kK0 || k > kK1) return std::nullopt;
  return kTable[n - kN0][k - kK0][d - kD0];
}

}  // namespace reference

struct TableCheck {
  std::size_t checked = 0;
  std::vector<std::string> mismatches;
  std::size_t incomplete = 0;
};

/// Compares every cell inside the reference range with the published value.
inline TableCheck check_against_reference(const MTable& t) {
  TableCheck res;
  for (const auto& c : t.cells) {
    const auto ref = reference::lookup(c.n, c.d, c.k);
    if (!ref) continue;
    if (c.status == CellStatus::not_computed) {
      ++res.incomplete;
      continue;
    }
    ++res.checked;
    const bool ok = *ref == 0 ? c.status == CellStatus::degenerate : (c.status == CellStatus::computed && c.value == *ref);
    if (!ok) {
      std::string got = c.status == CellStatus::degenerate ? "-" : std::to_string(c.value);
      std::string want = *ref == 0 ? "-" : std::to_string(*ref);
      res.mismatches.push_back("m(" + std::to_string(c.n) + "," + std::to_string(c.d) + "," + std::to_string(c.k) + ") = " + got + ", reference " + want);
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Rendering.
// ---------------------------------------------------------------------------

inline std::string cell_text(const MCell& c) {
  switch (c.status) {
    case CellStatus::computed: return std::to_string(c.value);
    case CellStatus::degenerate: return "-";
    case CellStatus::not_computed: return "?";
  }
  return "?";
}

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string witness_text(const StableComplement& w) {
  std::string s;
  for (std::size_t i = 0; i < w.W.size(); ++i) {
    if (i) s += " ";
    s += to_string(w.W[i]);
  }
  return s;
}

inline std::string render_csv(const MTable& t, bool witnesses) {
  std::string out = witnesses ? "n,d,k,m,witness\n" : "n,d,k,m\n";
  for (const auto& c : t.cells) {
    out += std::to_string(c.n) + "," + std::to_string(c.d) + "," + std::to_string(c.k) + "," + cell_text(c);
    if (witnesses) out += "," + csv_quote(c.status == CellStatus::computed ? witness_text(c.witness) : "");
    out += "\n";
  }
  return out;
}

/// One block per n: rows k, columns d, right-aligned.
inline std::string render_markdown(const MTable& t, bool witnesses) {
  std::string out;
  const auto ds = t.d.values();
  for (int n : t.n.values()) {
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> head{"k \\ d"};
    for (int d : ds) head.push_back(std::to_string(d));
    grid.push_back(head);
    for (int k : t.k.values()) {
      std::vector<std::string> row{std::to_string(k)};
      for (int d : ds) row.push_back(cell_text(t.at(n, d, k)));
      grid.push_back(row);
    }
    std::vector<std::size_t> width(head.size(), 0);
    for (const auto& row : grid) {
      for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
    }
    out += "n = " + std::to_string(n) + "\n\n";
    for (std::size_t r = 0; r < grid.size(); ++r) {
      out += "|";
      for (std::size_t j = 0; j < grid[r].size(); ++j) out += " " + std::string(width[j] - grid[r][j].size(), ' ') + grid[r][j] + " |";
      out += "\n";
      if (r == 0) {
        out += "|";
        for (std::size_t j = 0; j < width.size(); ++j) out += std::string(width[j] + 1, '-') + ":|";
        out += "\n";
      }
    }
    out += "\n";
    if (witnesses) {
      for (int k : t.k.values()) {
        for (int d : ds) {
          const auto& c = t.at(n, d, k);
          if (c.status == CellStatus::computed) out += "m(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(k) + ") = " + std::to_string(c.value) + ": W = " + to_string(c.witness) + "\n";
        }
      }
      out += "\n";
    }
  }
  return out;
}

/// One JSON object per line.
inline std::string render_records(const MTable& t, bool witnesses) {
  std::string out;
  for (const auto& c : t.cells) {
    out += "{\"n\":" + std::to_string(c.n) + ",\"d\":" + std::to_string(c.d) + ",\"k\":" + std::to_string(c.k);
    switch (c.status) {
      case CellStatus::computed: out += ",\"status\":\"computed\",\"m\":" + std::to_string(c.value); break;
      case CellStatus::degenerate: out += ",\"status\":\"degenerate\",\"m\":null"; break;
      case CellStatus::not_computed: out += ",\"status\":\"not-computed\",\"m\":null"; break;
    }
    if (witnesses && c.status == CellStatus::computed) {
      out += ",\"witness\":[";
      for (std::size_t i = 0; i < c.witness.W.size(); ++i) out += (i ? ",\"" : "\"") + to_string(c.witness.W[i]) + "\"";
      out += "]";
    }
    out += "}\n";
  }
  return out;
}

}  // namespace gramface
