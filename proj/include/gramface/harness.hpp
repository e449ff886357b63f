#pragma once

// Seeded randomized checks of the structural statements about codim U^2,
// worked examples, and the m(k,k,k) experiment.

#include "form_space.hpp"
#include "hilbert.hpp"
#include "interchange.hpp"
#include "macaulay.hpp"
#include "modular.hpp"
#include "parallel.hpp"
#include "powers.hpp"
#include "random.hpp"
#include "stable.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace gramface {

inline constexpr std::uint64_t kDefaultSeed = 1;

struct CheckParams {
  int n = 3;
  int d = 3;
  int k = 1;
  int m = 0;       // var-reduction: size of the variable subset (0 = max(2, k))
  int levels = 2;  // lift-formula
  std::size_t trials = 50;
  std::uint64_t seed = kDefaultSeed;
  long height = 100;    // coefficient bound B
  int T = -1;           // Hilbert degree bound, -1 = 2d + 2
  int retries = 5;      // genericity retry budget
  std::size_t support = 0;  // terms per random form, 0 = dense
  unsigned jobs = 1;

  int hilbert_bound() const { return T < 0 ? 2 * d + 2 : T; }
};

enum class Outcome { pass, fail, violation, outside };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::violation: return "genericity-violation";
    case Outcome::outside: return "outside-hypothesis";
  }
  return "?";
}

struct TrialRecord {
  std::size_t index = 0;
  Outcome outcome = Outcome::pass;
  bool holds = true;  // for outside-hypothesis trials: did the statement hold anyway
  std::string instance;  // how the instance was built
  std::string detail;    // measured quantities
  int rejected = 0;      // samples rejected by the instance generator
  int resamples = 0;     // extra generic choices drawn
  std::optional<FormSpace> payload;  // the failing space
};

struct CheckReport {
  std::string id;
  CheckParams params;
  std::size_t passed = 0, failed = 0, violations = 0, outside = 0, outside_held = 0;
  std::size_t rejected = 0, resamples = 0;
  std::vector<TrialRecord> trials;
  double seconds = 0;

  bool ok() const { return failed == 0; }
};

class UnknownCheck : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string params_text(const std::string& id, const CheckParams& p) {
  std::string s = "n=" + std::to_string(p.n) + " d=" + std::to_string(p.d) + " k=" + std::to_string(p.k);
  if (id == "var-reduction") s += " m=" + std::to_string(p.m);
  if (id == "lift-formula") s += " levels=" + std::to_string(p.levels);
  s += " trials=" + std::to_string(p.trials) + " seed=" + std::to_string(p.seed) + " B=" + std::to_string(p.height);
  s += " T=" + std::to_string(p.hilbert_bound());
  if (p.support) s += " support=" + std::to_string(p.support);
  return s;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

inline std::size_t dimA(int n, int d) { return static_cast<std::size_t>(dim_forms(n, d)); }

/// Odd trials use sparse forms unless a support size is forced; sparse
/// instances reach degenerate corners that dense ones almost never do.
inline std::size_t trial_support(const CheckParams& p, std::size_t index) {
  if (p.support) return p.support;
  return index % 2 ? static_cast<std::size_t>(std::max(2, p.d)) : 0;
}

/// A k-dimensional W containing no d-th power, certified. Uncertified or
/// positive samples are rejected and counted.
inline FormSpace random_powerless(int n, int d, std::size_t k, long B, Rng& rng, std::size_t support, int T, int& rejected) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    FormSpace W = random_space(n, d, k, B, rng, support);
    const auto ps = find_power(W, T);
    if (!ps.found && ps.certified) return W;
    ++rejected;
  }
  throw std::runtime_error("could not sample a space without d-th powers");
}

/// Runs `attempt` with fresh generic choices until it succeeds or the retry
/// budget is exhausted. Returns true on success.
template <class Fn>
bool with_retries(const CheckParams& p, TrialRecord& rec, Fn&& attempt) {
  for (int r = 0; r < p.retries; ++r) {
    if (r) ++rec.resamples;
    if (attempt()) return true;
  }
  return false;
}

inline std::string codim_text(const char* name, std::size_t v) { return std::string(name) + "=" + std::to_string(v); }

}  // namespace detail

using TrialFn = std::function<TrialRecord(const CheckParams&, Rng&, std::size_t)>;

struct CheckSpec {
  std::string id;
  std::string summary;
  std::function<void(CheckParams&)> validate;  // may fill defaults, throws on infeasible params
  TrialFn trial;
};

// ---------------------------------------------------------------------------
// Registered checks.
// ---------------------------------------------------------------------------

namespace checks {

using detail::require;

inline TrialRecord codim1_bpf(const CheckParams& p, Rng& rng, std::size_t idx) {
  TrialRecord rec;
  const FormSpace W = detail::random_powerless(p.n, p.d, 1, p.height, rng, detail::trial_support(p, idx), p.hilbert_bound(), rec.rejected);
  const FormSpace U = apolar_complement(W);
  const std::size_t c = square(U).codim();
  rec.instance = "random bpf codim 1";
  rec.detail = detail::codim_text("codimU2", c);
  const bool ok = p.d >= 3 ? c <= 1 : c <= 2;
  rec.outcome = ok ? Outcome::pass : Outcome::fail;
  if (!ok) rec.payload = U;
  return rec;
}

inline TrialRecord codim1_bp(const CheckParams& p, Rng& rng, std::size_t) {
  TrialRecord rec;
  const Form l = random_linear_form(p.n, p.height, rng);
  std::vector<Form> w{l.pow(p.d)};
  const FormSpace U = apolar_complement(FormSpace::span(p.n, p.d, w));
  const std::size_t c = square(U).codim();
  rec.instance = "W = span(l^d), l = " + to_string(l);
  rec.detail = detail::codim_text("codimU2", c);
  const bool ok = c == static_cast<std::size_t>(p.n);
  rec.outcome = ok ? Outcome::pass : Outcome::fail;
  if (!ok) rec.payload = U;
  return rec;
}

inline TrialRecord codim2_bpf(const CheckParams& p, Rng& rng, std::size_t idx) {
  TrialRecord rec;
  const FormSpace W = detail::random_powerless(p.n, p.d, 2, p.height, rng, detail::trial_support(p, idx), p.hilbert_bound(), rec.rejected);
  const FormSpace U = apolar_complement(W);
  const std::size_t c = square(U).codim();
  rec.instance = "random bpf codim 2";
  rec.detail = detail::codim_text("codimU2", c);
  const bool ok = c <= (p.d == 2 ? 6u : 4u);
  rec.outcome = ok ? Outcome::pass : Outcome::fail;
  if (!ok) rec.payload = U;
  return rec;
}

inline TrialRecord var_reduction(const CheckParams& p, Rng& rng, std::size_t idx) {
  TrialRecord rec;
  FormSpace U = random_space_of_codim(p.n, p.d, static_cast<std::size_t>(p.k), p.height, rng, detail::trial_support(p, idx));
  rec.instance = "random codim " + std::to_string(p.k);
  // the hypothesis codim U' = k holds after a generic change of coordinates
  FormSpace Up = intersect_with_first_vars(U, p.m);
  for (int r = 0; Up.codim() != U.codim(); ++r) {
    if (r >= p.retries) {
      rec.outcome = Outcome::violation;
      rec.detail = "codim U' never equals codim U";
      rec.payload = U;
      return rec;
    }
    ++rec.resamples;
    U = substitute_linear(U, random_invertible_matrix(p.n, p.height, rng));
    Up = intersect_with_first_vars(U, p.m);
  }
  const std::size_t lhs = square(U).codim();
  const std::size_t cr = p.d >= 1 ? product_space(Up, FormSpace::full(p.m, p.d - 1)).codim() : 0;
  const std::size_t sq = square(Up).codim();
  const std::size_t rhs = static_cast<std::size_t>(p.n - p.m) * cr + sq;
  rec.detail = "codimU2=" + std::to_string(lhs) + " bound=" + std::to_string(rhs) + " (codimU'R=" + std::to_string(cr) + ", codimU'2=" + std::to_string(sq) + ")";
  const bool ok = lhs <= rhs;
  rec.outcome = ok ? Outcome::pass : Outcome::fail;
  if (!ok) rec.payload = U;
  return rec;
}

inline TrialRecord quotient_generic(const CheckParams& p, Rng& rng, std::size_t idx) {
  TrialRecord rec;
  const FormSpace U = random_space_of_codim(p.n, p.d, static_cast<std::size_t>(p.k), p.height, rng, detail::trial_support(p, idx));
  rec.instance = "random codim " + std::to_string(p.k);
  const bool ok = detail::with_retries(p, rec, [&] {
    const Form l = random_linear_form(p.n, p.height, rng);
    const std::size_t cd = restrict_to_hyperplane(U, l).codim();  // dim A_d / <U,l>_d
    const std::size_t cq = ideal_quotient_by_linear(U, l).codim();
    rec.detail = "codim<U,l>_d=" + std::to_string(cd) + " codim(U:l)=" + std::to_string(cq);
    return cd == 0 && cq == U.codim();
  });
  rec.outcome = ok ? Outcome::pass : Outcome::violation;
  if (!ok) rec.payload = U;
  return rec;
}

inline TrialRecord deg_reduction(const CheckParams& p, Rng& rng, std::size_t idx) {
  TrialRecord rec;
  const FormSpace U = random_space_of_codim(p.n, p.d, static_cast<std::size_t>(p.k), p.height, rng, detail::trial_support(p, idx));
  rec.instance = "random codim " + std::to_string(p.k);
  const std::size_t cu = square(U).codim();
  const bool ok = detail::with_retries(p, rec, [&] {
    const Form l = random_linear_form(p.n, p.height, rng);
    const FormSpace V = ideal_quotient_by_linear(U, l);
    const std::size_t cuv = product_space(U, V).codim();
    rec.detail = "codimU2=" + std::to_string(cu) + " codimUV=" + std::to_string(cuv);
    bool good = V.codim() == U.codim() && cu <= cuv;
    if (p.k <= p.d - 1) {
      const std::size_t cv = square(V).codim();
      rec.detail += " codimV2=" + std::to_string(cv);
      good = good && cu <= cv;
    }
    return good;
  });
  rec.outcome = ok ? Outcome::pass : Outcome::violation;
  if (!ok) rec.payload = U;
  return rec;
}

inline TrialRecord lift_formula(const CheckParams& p, Rng& rng, std::size_t idx) {
  TrialRecord rec;
  // odd trials: monomial complements, which often keep base points and a
  // nonzero h_{2d-1}
  const std::size_t support = p.support ? p.support : (idx % 2 ? 1 : 0);
  const FormSpace U = random_space_of_codim(p.n, p.d, static_cast<std::size_t>(p.k), p.height, rng, support);
  rec.instance = support == 1 ? "random monomial codim " + std::to_string(p.k) : "random codim " + std::to_string(p.k);
  const long h = hilbert_table(U, 2 * p.d - 1).at(2 * p.d - 1);
  const std::size_t base = square(U).codim();
  const FormSpace L = lift(U, p.levels);
  const std::size_t lifted = square(L).codim();
  const long predicted = static_cast<long>(base) + p.levels * h;
  rec.detail = "codimU2=" + std::to_string(base) + " h_2d-1=" + std::to_string(h) + " lifted=" + std::to_string(lifted) + " predicted=" + std::to_string(predicted);
  const bool ok = static_cast<long>(lifted) == predicted && L.codim() == U.codim();
  rec.outcome = ok ? Outcome::pass : Outcome::fail;
  if (!ok) rec.payload = U;
  return rec;
}

inline TrialRecord hf_codim2_quadrics(const CheckParams& p, Rng& rng, std::size_t idx) {
  TrialRecord rec;
  const FormSpace W = detail::random_powerless(p.n, 2, 2, p.height, rng, detail::trial_support(p, idx), p.hilbert_bound(), rec.rejected);
  const FormSpace U = apolar_complement(W);
  const HilbertTable t = hilbert_table(U, std::max(4, p.hilbert_bound()));
  rec.instance = "random bpf codim 2 quadrics";
  rec.detail = "HF=" + to_string(t);
  bool ok = t.at(0) == 1 && t.at(1) == p.n && t.at(2) == 2;
  for (std::size_t i = 3; i < t.h.size(); ++i) ok = ok && t.h[i] == 0;
  rec.outcome = ok ? Outcome::pass : Outcome::fail;
  if (!ok) rec.payload = U;
  return rec;
}

inline FormSpace multiple_of_linear_forms(const Form& F) {
  const int n = F.vars();
  std::vector<Form> gens;
  for (int i = 0; i < n; ++i) gens.push_back(F * Form::monomial(Monomial::power(n, i, 1)));
  return FormSpace::span(n, F.degree() + 1, gens);
}

inline TrialRecord restriction_dichotomy(const CheckParams& p, Rng& rng, std::size_t idx) {
  TrialRecord rec;
  const std::size_t k = static_cast<std::size_t>(p.k);
  FormSpace W(p.n, p.d);
  if (k == static_cast<std::size_t>(p.n) && idx % 2) {
    const Form F = random_form(p.n, p.d - 1, p.height, rng);
    W = multiple_of_linear_forms(F);
    rec.instance = "W = F*A_1";
  } else {
    W = random_space(p.n, p.d, k, p.height, rng, detail::trial_support(p, idx));
    rec.instance = "random dim " + std::to_string(k);
  }
  const bool is_FA1 = common_factor_times_linear(W).has_value();
  const bool ok = detail::with_retries(p, rec, [&] {
    const Form l = random_linear_form(p.n, p.height, rng);
    const std::size_t dbar = restrict_to_hyperplane(W, l).dim();
    rec.detail = "dimW=" + std::to_string(W.dim()) + " dimWbar=" + std::to_string(dbar) + (is_FA1 ? " W=F*A_1" : "");
    if (dbar == W.dim()) return true;
    if (dbar + 1 == W.dim()) return is_FA1 && W.dim() == static_cast<std::size_t>(p.n);
    return false;
  });
  rec.outcome = ok ? Outcome::pass : Outcome::violation;
  if (!ok) rec.payload = W;
  return rec;
}

inline TrialRecord quotient_vanishes(const CheckParams& p, Rng& rng, std::size_t idx) {
  TrialRecord rec;
  const FormSpace W = random_space(p.n, p.d, static_cast<std::size_t>(p.k), p.height, rng, detail::trial_support(p, idx));
  rec.instance = "random dim " + std::to_string(p.k);
  const bool ok = detail::with_retries(p, rec, [&] {
    const Form l = random_linear_form(p.n, p.height, rng);
    const std::size_t q = ideal_quotient_by_linear(W, l).dim();
    rec.detail = "dim(W:l)=" + std::to_string(q);
    return q == 0;
  });
  rec.outcome = ok ? Outcome::pass : Outcome::violation;
  if (!ok) rec.payload = W;
  return rec;
}

inline TrialRecord gin_counting(const CheckParams& p, Rng& rng, std::size_t idx) {
  TrialRecord rec;
  const FormSpace W = random_space(p.n, p.d, static_cast<std::size_t>(p.k), p.height, rng, detail::trial_support(p, idx));
  const FormSpace U = apolar_complement(W);
  rec.instance = "random codim " + std::to_string(p.k);
  GinResult gin;
  try {
    gin = generic_initial_monomials(U, p.d, rng.next(), p.retries, p.height);
  } catch (const GenericityError& e) {
    rec.outcome = Outcome::violation;
    rec.detail = e.what();
    rec.payload = U;
    return rec;
  }
  rec.resamples += gin.violations;
  std::set<Monomial> in(gin.monomials.begin(), gin.monomials.end());
  std::size_t divisible = 0;
  for (const auto& m : MonomialBasis::get(p.n, p.d, MonomialOrder::lex(p.n))->monomials()) {
    if (!in.count(m) && m[p.n - 1] > 0) ++divisible;
  }
  const bool ok = detail::with_retries(p, rec, [&] {
    const Form l = random_linear_form(p.n, p.height, rng);
    const std::size_t q = ideal_quotient_by_linear(W, l).dim();
    rec.detail = "gin-complement monomials divisible by x" + std::to_string(p.n) + "=" + std::to_string(divisible) + " dim(W:l)=" + std::to_string(q);
    return q == divisible;
  });
  rec.outcome = ok ? Outcome::pass : Outcome::violation;
  if (!ok) rec.payload = U;
  return rec;
}

inline TrialRecord stay_bpf(const CheckParams& p, Rng& rng, std::size_t idx) {
  TrialRecord rec;
  const bool inside = p.n >= 3 * p.k + 1;
  FormSpace W(p.n, p.d);
  if (!inside && p.k == p.n - 1 && idx % 2) {
    // x_n^(d-1) * A(n-1)_1 contains no d-th power, but its restrictions do
    std::vector<Form> gens;
    for (int i = 0; i + 1 < p.n; ++i) {
      Monomial m = Monomial::power(p.n, p.n - 1, p.d - 1);
      m.set(i, 1);
      gens.push_back(Form::monomial(m));
    }
    W = FormSpace::span(p.n, p.d, gens);
    rec.instance = "W = x_n^(d-1)*A(n-1)_1";
  } else {
    W = detail::random_powerless(p.n, p.d, static_cast<std::size_t>(p.k), p.height, rng, detail::trial_support(p, idx), p.hilbert_bound(), rec.rejected);
    rec.instance = "random dim " + std::to_string(p.k) + " without d-th powers";
  }
  bool certified = true;
  const bool holds = detail::with_retries(p, rec, [&] {
    const Form l = random_linear_form(p.n, p.height, rng);
    const FormSpace Wbar = restrict_to_hyperplane(W, l);
    const auto ps = find_power(Wbar, p.hilbert_bound());
    certified = ps.certified;
    rec.detail = "Wbar: " + to_string(ps);
    return !ps.found;
  });
  if (!certified) rec.detail += " [uncertified]";
  if (!inside) {
    rec.outcome = Outcome::outside;
    rec.holds = holds;
    return rec;
  }
  rec.outcome = holds ? Outcome::pass : Outcome::violation;
  if (!holds) rec.payload = W;
  return rec;
}

/// Above this many degree-2d monomials main-bound trusts the modular
/// codimension unless it exceeds the bound.
inline constexpr std::size_t kExactSquareLimit = 1000;

/// m(3k,k,k), cached across trials.
inline long m_3kkk(int k) {
  static std::mutex mutex;
  static std::map<int, long> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  const long v = m_value(3 * k, k, static_cast<std::size_t>(k)).value;
  cache.emplace(k, v);
  return v;
}

/// Sharper published bounds for base-point-free codimension 1 and 2.
inline std::optional<long> sharp_bound(int k, int d) {
  if (k == 1) return d >= 3 ? 1 : 2;
  if (k == 2) return d == 2 ? 6 : 4;
  return std::nullopt;
}

inline TrialRecord main_bound(const CheckParams& p, Rng& rng, std::size_t idx) {
  TrialRecord rec;
  // every third trial draws a monomial W, where codim U^2 is rarely 0
  const std::size_t support = p.support ? p.support : (idx % 3 == 2 ? 1 : detail::trial_support(p, idx));
  const FormSpace W = detail::random_powerless(p.n, p.d, static_cast<std::size_t>(p.k), p.height, rng, support, p.hilbert_bound(), rec.rejected);
  const FormSpace U = apolar_complement(W);
  rec.instance = "random bpf codim " + std::to_string(p.k) + (support == 1 ? " monomial" : "");
  const long bound = m_3kkk(p.k);
  const auto sharp = sharp_bound(p.k, p.d);
  const long limit = sharp ? std::min(bound, *sharp) : bound;
  long c = 0;
  bool exact = true;
  if (std::all_of(W.rows().begin(), W.rows().end(), [](const SparseRow& r) { return r.size() == 1; })) {
    std::vector<Monomial> mono;
    for (const auto& r : W.rows()) mono.push_back(W.basis()[r.front().col]);
    c = monomial_square_codim(p.n, p.d, mono);
  } else {
    // the modular value bounds the exact one from above and is exact when 0
    c = static_cast<long>(square_codim_mod_p(U));
    exact = c == 0;
    if (!exact && (c > limit || detail::dimA(p.n, 2 * p.d) <= kExactSquareLimit)) {
      c = static_cast<long>(square(U).codim());
      exact = true;
    }
  }
  rec.detail = std::string(exact ? "codimU2=" : "codimU2<=") + std::to_string(c) + " m(3k,k,k)=" + std::to_string(bound);
  if (sharp) rec.detail += " sharp=" + std::to_string(*sharp);
  const bool ok = c <= limit;
  rec.outcome = ok ? Outcome::pass : Outcome::fail;
  if (!ok) rec.payload = U;
  return rec;
}

inline TrialRecord macaulay_growth(const CheckParams& p, Rng& rng, std::size_t idx) {
  TrialRecord rec;
  const std::size_t support = p.support ? p.support : (idx % 3 == 1 ? 1 : detail::trial_support(p, idx));
  const FormSpace U = random_space_of_codim(p.n, p.d, static_cast<std::size_t>(p.k), p.height, rng, support);
  rec.instance = "random codim " + std::to_string(p.k) + (support == 1 ? " monomial" : "");
  const HilbertTable t = hilbert_table(U, p.hilbert_bound());
  rec.detail = "HF=" + to_string(t);
  bool ok = true;
  for (std::size_t i = 1; i + 1 < t.h.size(); ++i) {
    ok = ok && Integer(t.h[i + 1]) <= macaulay_growth_bound(t.h[i], static_cast<int>(i));
  }
  rec.outcome = ok ? Outcome::pass : Outcome::fail;
  if (!ok) rec.payload = U;
  return rec;
}

inline TrialRecord green_bound(const CheckParams& p, Rng& rng, std::size_t idx) {
  TrialRecord rec;
  const std::size_t support = p.support ? p.support : (idx % 3 == 1 ? 1 : detail::trial_support(p, idx));
  const FormSpace U = random_space_of_codim(p.n, p.d, static_cast<std::size_t>(p.k), p.height, rng, support);
  rec.instance = "random codim " + std::to_string(p.k) + (support == 1 ? " monomial" : "");
  const Integer bound = green_restriction_bound(static_cast<long>(U.codim()), p.d);
  const bool ok = detail::with_retries(p, rec, [&] {
    const Form l = random_linear_form(p.n, p.height, rng);
    const std::size_t c = restrict_to_hyperplane(U, l).codim();
    rec.detail = "c_d=" + std::to_string(c) + " bound=" + bound.get_str();
    return Integer(static_cast<long>(c)) <= bound;
  });
  rec.outcome = ok ? Outcome::pass : Outcome::violation;
  if (!ok) rec.payload = U;
  return rec;
}

inline TrialRecord conj_bpf_intersection(const CheckParams& p, Rng& rng, std::size_t idx) {
  TrialRecord rec;
  FormSpace W(p.n, p.d);
  if (p.n == p.k + 1 && idx % 2) {
    // the excluded shape L1^(d-1) * span(L2, ..., L_n) for a random basis
    const DenseMatrix basis = random_invertible_matrix(p.n, p.height, rng);
    std::vector<Form> L;
    for (const auto& row : basis) L.push_back(Form::linear(row));
    const Form head = L[0].pow(p.d - 1);
    std::vector<Form> gens;
    for (int i = 1; i < p.n; ++i) gens.push_back(head * L[static_cast<std::size_t>(i)]);
    W = FormSpace::span(p.n, p.d, gens);
    rec.instance = "W = L1^(d-1)*span(L2..Ln)";
  } else {
    W = detail::random_powerless(p.n, p.d, static_cast<std::size_t>(p.k), p.height, rng, detail::trial_support(p, idx), p.hilbert_bound(), rec.rejected);
    rec.instance = "random dim " + std::to_string(p.k) + " without d-th powers";
  }
  const bool shape = excluded_shape(W).has_value();
  bool certified = true;
  const bool ok = detail::with_retries(p, rec, [&] {
    const Form l = random_linear_form(p.n, p.height, rng);
    const auto ps = find_power(restrict_to_hyperplane(W, l), p.hilbert_bound());
    certified = ps.certified;
    rec.detail = "Wbar: " + to_string(ps) + (shape ? " excluded-shape" : "");
    return !ps.found || shape;
  });
  if (!certified) rec.detail += " [uncertified]";
  rec.outcome = ok ? Outcome::pass : Outcome::fail;
  if (!ok) rec.payload = W;
  return rec;
}

}  // namespace checks

inline const std::vector<CheckSpec>& check_registry() {
  using detail::require;
  auto k_le_dimA = [](CheckParams& p) {
    require(p.n >= 1 && p.d >= 1, "need n >= 1 and d >= 1");
    require(p.k >= 0 && static_cast<std::size_t>(p.k) <= detail::dimA(p.n, p.d), "need 0 <= k <= dim A_d");
  };
  static const std::vector<CheckSpec> registry = {
      {"codim1-bpf", "base-point-free codim 1: codim U^2 in {0,1} (d>=3), <= 2 (d=2)",
       [](CheckParams& p) {
         require(p.n >= 2 && p.d >= 2, "need n >= 2 and d >= 2");
         p.k = 1;
       },
       checks::codim1_bpf},
      {"codim1-bp", "W = span(l^d): codim U^2 = n",
       [](CheckParams& p) {
         require(p.n >= 1 && p.d >= 1, "need n >= 1 and d >= 1");
         p.k = 1;
       },
       checks::codim1_bp},
      {"codim2-bpf", "base-point-free codim 2: codim U^2 <= 6 (d=2), <= 4 (d>=3)",
       [](CheckParams& p) {
         require(p.n >= 2 && p.d >= 2, "need n >= 2 and d >= 2");
         require(detail::dimA(p.n, p.d) > 2, "need dim A_d > 2");
         p.k = 2;
       },
       checks::codim2_bpf},
      {"var-reduction", "codim U^2 <= (n-m) codim U'R_{d-1} + codim U'^2 when codim U' = codim U",
       [k_le_dimA](CheckParams& p) {
         k_le_dimA(p);
         if (p.m == 0) p.m = std::max(2, p.k);
         require(p.m >= 2 && p.m <= p.n, "need 2 <= m <= n");
         require(static_cast<std::size_t>(p.k) <= detail::dimA(p.m, p.d), "need k <= dim A(m)_d");
       },
       checks::var_reduction},
      {"quotient-generic", "k <= d: <U,l>_d = A_d and codim (U:l) = codim U",
       [k_le_dimA](CheckParams& p) {
         k_le_dimA(p);
         require(p.k <= p.d, "need k <= d");
       },
       checks::quotient_generic},
      {"deg-reduction", "k <= d: codim U^2 <= codim UV, and <= codim V^2 when k <= d-1, V = (U:l)",
       [k_le_dimA](CheckParams& p) {
         k_le_dimA(p);
         require(p.k <= p.d, "need k <= d");
       },
       checks::deg_reduction},
      {"lift-formula", "codim (U^(l))^2 = codim U^2 + l h_{2d-1}",
       [k_le_dimA](CheckParams& p) {
         k_le_dimA(p);
         require(p.levels >= 0, "need levels >= 0");
         require(p.n + p.levels <= kMaxVars, "too many variables after lifting");
       },
       checks::lift_formula},
      {"hf-codim2-quadrics", "base-point-free codim 2 quadrics have Hilbert function (1,n,2)",
       [](CheckParams& p) {
         require(p.n >= 2, "need n >= 2");
         p.d = 2;
         p.k = 2;
       },
       checks::hf_codim2_quadrics},
      {"restriction-dichotomy", "dim W = k <= n: dim Wbar = k, or k-1 with W = F*A_1",
       [k_le_dimA](CheckParams& p) {
         k_le_dimA(p);
         require(p.n >= 2 && p.k <= p.n, "need n >= 2 and k <= n");
       },
       checks::restriction_dichotomy},
      {"quotient-vanishes", "dim W = k < n: dim (W:l) = 0",
       [k_le_dimA](CheckParams& p) {
         k_le_dimA(p);
         require(p.k < p.n, "need k < n");
       },
       checks::quotient_vanishes},
      {"gin-counting", "gin-complement monomials divisible by x_n = dim (W:l)",
       [k_le_dimA](CheckParams& p) { k_le_dimA(p); },
       checks::gin_counting},
      {"stay-bpf", "n >= 3k+1: no d-th power in W implies none in Wbar",
       [k_le_dimA](CheckParams& p) {
         k_le_dimA(p);
         require(p.n >= 3 && p.d >= 2, "need n >= 3 and d >= 2");
       },
       checks::stay_bpf},
      {"main-bound", "base-point-free codim k <= d-1: codim U^2 <= m(3k,k,k)",
       [k_le_dimA](CheckParams& p) {
         k_le_dimA(p);
         require(p.k >= 1 && p.k <= p.d - 1, "need 1 <= k <= d-1");
         require(3 * p.k <= kMaxVars, "k too large");
       },
       checks::main_bound},
      {"macaulay-growth", "h_{i+1} <= (h_i)_(i)|^1_1 on random subspaces", [k_le_dimA](CheckParams& p) { k_le_dimA(p); },
       checks::macaulay_growth},
      {"green-bound", "c_d <= (h_d)_(d)|^-1_0 for random l",
       [k_le_dimA](CheckParams& p) {
         k_le_dimA(p);
         require(p.n >= 2, "need n >= 2");
       },
       checks::green_bound},
      {"conj-bpf-intersection", "search: Wbar acquires a d-th power only in the shape L1^(d-1)*span(L2..Ln)",
       [k_le_dimA](CheckParams& p) {
         k_le_dimA(p);
         require(p.n >= 3, "need n >= 3");
         require(p.k <= p.d - 1 && p.k <= p.n - 1, "need k <= d-1 and k <= n-1");
       },
       checks::conj_bpf_intersection},
  };
  return registry;
}

inline std::vector<std::string> check_ids() {
  std::vector<std::string> ids;
  for (const auto& c : check_registry()) ids.push_back(c.id);
  return ids;
}

inline const CheckSpec& find_check(const std::string& id) {
  for (const auto& c : check_registry()) {
    if (c.id == id) return c;
  }
  std::string msg = "unknown check '" + id + "'; registered:";
  for (const auto& c : check_registry()) msg += " " + c.id;
  throw UnknownCheck(msg);
}

inline CheckReport verify(const std::string& id, CheckParams params) {
  const auto& spec = find_check(id);
  spec.validate(params);
  const auto start = std::chrono::steady_clock::now();
  CheckReport rep;
  rep.id = id;
  rep.params = params;
  rep.trials.resize(params.trials);
  parallel_for(params.trials, params.jobs, [&](std::size_t i) {
    Rng rng = Rng::for_trial(params.seed, i);
    TrialRecord rec = spec.trial(params, rng, i);
    rec.index = i;
    rep.trials[i] = std::move(rec);
  });
  for (const auto& t : rep.trials) {
    rep.rejected += static_cast<std::size_t>(t.rejected);
    rep.resamples += static_cast<std::size_t>(t.resamples);
    switch (t.outcome) {
      case Outcome::pass: ++rep.passed; break;
      case Outcome::fail: ++rep.failed; break;
      case Outcome::violation: ++rep.violations; break;
      case Outcome::outside:
        ++rep.outside;
        if (t.holds) ++rep.outside_held;
        break;
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// Human-readable summary; wall time is deliberately not included.
inline std::string render_report(const CheckReport& r, bool verbose = false) {
  std::string s = "check " + r.id + ": " + detail::params_text(r.id, r.params) + "\n";
  s += "  passed " + std::to_string(r.passed) + ", failed " + std::to_string(r.failed) + ", genericity violations " + std::to_string(r.violations);
  if (r.outside) s += ", outside hypothesis " + std::to_string(r.outside) + " (statement held in " + std::to_string(r.outside_held) + ")";
  s += "\n  rejected samples " + std::to_string(r.rejected) + ", generic resamples " + std::to_string(r.resamples) + "\n";
  for (const auto& t : r.trials) {
    if (!verbose && (t.outcome == Outcome::pass || (t.outcome == Outcome::outside && t.holds))) continue;
    s += "  trial " + std::to_string(t.index) + " " + to_string(t.outcome) + (t.outcome == Outcome::outside && !t.holds ? " (statement fails)" : "") + ": " + t.instance + "; " + t.detail + "\n";
  }
  s += r.ok() ? "  result: pass\n" : "  result: FAIL\n";
  return s;
}

/// One JSON record per trial.
inline std::string render_records(const CheckReport& r) {
  std::string s;
  for (const auto& t : r.trials) {
    nlohmann::ordered_json j;
    j["check"] = r.id;
    j["seed"] = r.params.seed;
    j["trial"] = t.index;
    j["outcome"] = to_string(t.outcome);
    if (t.outcome == Outcome::outside) j["holds"] = t.holds;
    j["instance"] = t.instance;
    j["detail"] = t.detail;
    j["rejected"] = t.rejected;
    j["resamples"] = t.resamples;
    s += j.dump() + "\n";
  }
  return s;
}

/// Interchange file for a failing trial, with the check context attached.
inline std::string counterexample_file(const CheckReport& r, const TrialRecord& t) {
  auto doc = nlohmann::ordered_json::parse(serialize_space(*t.payload));
  doc["check"] = r.id;
  doc["params"] = detail::params_text(r.id, r.params);
  doc["trial"] = t.index;
  doc["detail"] = t.detail;
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Worked examples.
// ---------------------------------------------------------------------------

struct GalleryItem {
  std::string name;
  std::string expected;
  std::string computed;
  bool match = false;
};

struct GalleryReport {
  std::vector<GalleryItem> items;
  bool ok() const {
    return std::all_of(items.begin(), items.end(), [](const GalleryItem& i) { return i.match; });
  }
};

namespace detail {

inline Form mono(int n, std::initializer_list<int> e) {
  std::vector<int> v(e);
  v.resize(static_cast<std::size_t>(n), 0);
  return Form::monomial(Monomial(std::span<const int>(v)));
}

inline void add_item(GalleryReport& g, std::string name, const std::string& expected, const std::string& computed) {
  g.items.push_back({std::move(name), expected, computed, expected == computed});
}

}  // namespace detail

inline GalleryReport example_gallery(std::uint64_t seed = kDefaultSeed) {
  using detail::add_item;
  using detail::mono;
  GalleryReport g;

  // Ternary quartics: faces of rank r come from U of codimension 6 - r.
  {
    const long dimA4 = dim_forms(3, 4);
    std::string bounds;
    bool has45 = false;
    for (int r = 5; r >= 1; --r) {
      const long m = m_value(3, 2, static_cast<std::size_t>(6 - r)).value;
      const Integer f = face_dimension(r, 3, 2, m);
      bounds += (bounds.empty() ? "" : " ") + std::to_string(r) + ":" + f.get_str();
      if (f >= 4) has45 = true;
    }
    add_item(g, "ternary quartics: Gram spectrahedron dimension", "6", face_dimension(6, 3, 2, 0).get_str());
    add_item(g, "ternary quartics: face dimension bound by rank", "5:3 4:1 3:1 2:0 1:0", bounds);
    add_item(g, "ternary quartics: faces of dimension 4 or 5", "none", has45 ? "possible" : "none");
    add_item(g, "ternary quartics: dim A_4", "15", std::to_string(dimA4));
  }

  // Quaternary quadrics: codim 2 gives dim U^2 <= 34 < 35.
  {
    auto q = [](std::initializer_list<long> a) {
      Form f(4, 2);
      int i = 0;
      for (long c : a) f.add_term(Monomial::power(4, i++, 2), c);
      return f;
    };
    std::vector<Form> w{q({1, 1, 1, 1}), q({1, 2, 3, 4})};
    const FormSpace U = apolar_complement(FormSpace::span(4, 2, w));
    add_item(g, "quaternary quadrics: dim U^2 for W = span(q, diagonal)", "34", std::to_string(square(U).dim()));
    // the two relations among products of the off-diagonal monomials
    add_item(g, "quaternary quadrics: dim S^2 U", "36", std::to_string(U.dim() * (U.dim() + 1) / 2));
    Rng rng(seed);
    const FormSpace G = random_space_of_codim(4, 2, 2, 100, rng);
    add_item(g, "quaternary quadrics: dim U^2 for random codim 2", "34", std::to_string(square(G).dim()));
  }

  // in(U)^2 is smaller than in(U^2) for U = (x1^2 + x2^2)^perp.
  for (int n = 3; n <= 6; ++n) {
    std::vector<Form> w{mono(n, {2}) + mono(n, {0, 2})};
    const FormSpace U = apolar_complement(FormSpace::span(n, 2, w));
    const auto in = initial_subspace(U);
    std::set<Monomial> inset(in.begin(), in.end());
    std::vector<Monomial> missing;
    for (const auto& m : monomial_basis(n, 2)) {
      if (!inset.count(m)) missing.push_back(m);
    }
    const FormSpace Usq = square(U);
    const std::string tag = "(x1^2+x2^2)^perp, n=" + std::to_string(n) + ": ";
    add_item(g, tag + "monomials outside in(U)", "x1^2", missing.size() == 1 ? to_string(missing[0]) : std::to_string(missing.size()) + " monomials");
    add_item(g, tag + "codim in(U)^2", std::to_string(n), std::to_string(monomial_square_codim(n, 2, missing)));
    add_item(g, tag + "codim U^2", "2", std::to_string(Usq.codim()));
  }

  // Codimension 2 monomial complements in degree 2.
  for (int n = 4; n <= 5; ++n) {
    const std::vector<std::pair<std::vector<Monomial>, long>> cases = {
        {{Monomial::power(n, 0, 2), Monomial::power(n, 1, 2)}, 2L * n},
        // x1^4, x1^3x_i, x1x2^3, x1^2x2^2 and x1^2x2x_i all lie outside U^2
        {{Monomial::power(n, 0, 2), mono(n, {1, 1}).terms().begin()->first}, 2L * n},
        {{Monomial::power(n, 0, 2), mono(n, {0, 1, 1}).terms().begin()->first}, n + 2L},
        {{mono(n, {1, 1}).terms().begin()->first, mono(n, {1, 0, 1}).terms().begin()->first}, 6L},
        {{mono(n, {1, 1}).terms().begin()->first, mono(n, {0, 0, 1, 1}).terms().begin()->first}, 4L},
    };
    for (const auto& [W, expect] : cases) {
      const FormSpace U = apolar_complement(FormSpace::monomial_span(n, 2, W));
      const std::string name = "codim 2 monomial, n=" + std::to_string(n) + ", W = {" + to_string(W[0]) + ", " + to_string(W[1]) + "}";
      add_item(g, name + ": codim U^2", std::to_string(expect), std::to_string(square(U).codim()));
      add_item(g, name + ": combinatorial count", std::to_string(expect), std::to_string(monomial_square_codim(n, 2, W)));
    }
  }

  // Ternary maxima that stay constant in d, with explicit witnesses.
  {
    auto shifted = [](int d, std::vector<std::array<int, 3>> tops) {
      int top = 0;
      for (const auto& t : tops) top = std::max(top, t[0] + t[1] + t[2]);
      std::vector<Monomial> W;
      for (auto t : tops) {
        t[0] += d - top;
        W.push_back(Monomial{t[0], t[1], t[2]});
      }
      return W;
    };
    const std::vector<std::array<int, 3>> five = {{5, 0, 0}, {4, 1, 0}, {4, 0, 1}, {3, 2, 0}, {3, 1, 1}};
    const std::vector<std::array<int, 3>> nine = {{9, 0, 0}, {8, 1, 0}, {8, 0, 1}, {7, 2, 0}, {7, 1, 1}, {7, 0, 2}, {6, 3, 0}, {6, 2, 1}, {5, 4, 0}};
    add_item(g, "m(3,5,5)", "16", std::to_string(m_value(3, 5, 5).value));
    add_item(g, "m(3,9,9)", "31", std::to_string(m_value(3, 9, 9).value));
    for (int d = 6; d <= 9; ++d) add_item(g, "m(3," + std::to_string(d) + ",5)", "16", std::to_string(m_value(3, d, 5).value));
    for (int d = 5; d <= 9; ++d) add_item(g, "five-monomial witness, d=" + std::to_string(d), "16", std::to_string(monomial_square_codim(3, d, shifted(d, five))));
    for (int d = 9; d <= 12; ++d) add_item(g, "nine-monomial witness, d=" + std::to_string(d), "31", std::to_string(monomial_square_codim(3, d, shifted(d, nine))));
  }

  // (U:l) for U = span(x^2y, x^2z, xy^2)^perp in three variables.
  {
    std::vector<Monomial> W{Monomial{2, 1, 0}, Monomial{2, 0, 1}, Monomial{1, 2, 0}};
    const FormSpace U = apolar_complement(FormSpace::monomial_span(3, 3, W));
    Rng rng(seed + 1);
    const FormSpace Q = ideal_quotient_by_linear(U, random_linear_form(3, 100, rng));
    std::vector<Form> zyz{mono(3, {0, 1, 1}), mono(3, {0, 0, 2})};
    const bool contains = Q.contains(FormSpace::span(3, 2, zyz));
    add_item(g, "(U:l) for U = span(x^2y, x^2z, xy^2)^perp: dim", "3", std::to_string(Q.dim()));
    add_item(g, "(U:l) contains z*span(y,z)", "yes", contains ? "yes" : "no");
    add_item(g, "(U:l) base points", "has-base-points", to_string(base_point_certificate(Q).verdict));
  }

  // W = x_n^(d-1) A(n-1)_1: restrictions keep the dimension and gain a power.
  {
    const int n = 4, d = 3;
    std::vector<Form> gens;
    for (int i = 0; i + 1 < n; ++i) {
      Monomial m = Monomial::power(n, n - 1, d - 1);
      m.set(i, 1);
      gens.push_back(Form::monomial(m));
    }
    const FormSpace W = FormSpace::span(n, d, gens);
    Rng rng(seed + 2);
    const FormSpace Wbar = restrict_to_hyperplane(W, random_linear_form(n, 100, rng));
    add_item(g, "x4^2*A(3)_1: W contains a cube", "no", find_power(W).found ? "yes" : "no");
    add_item(g, "x4^2*A(3)_1: dim Wbar", "3", std::to_string(Wbar.dim()));
    add_item(g, "x4^2*A(3)_1: Wbar contains a cube", "yes", find_power(Wbar).found ? "yes" : "no");
  }

  // Almost complete intersection in A(4)_3 and its lifts.
  {
    const int n = 4;
    std::vector<Form> gens{mono(n, {3}), mono(n, {0, 3}), mono(n, {0, 0, 3}), mono(n, {0, 0, 0, 3}), mono(n, {2, 1}) + mono(n, {0, 0, 2, 1})};
    const FormSpace U = FormSpace::span(n, 3, gens);
    const HilbertTable t = hilbert_table(U, 7);
    add_item(g, "almost complete intersection: codim U", "15", std::to_string(U.codim()));
    add_item(g, "almost complete intersection: Hilbert function", "(1,4,10,15,15,7,1,0)", to_string(t));
    const std::size_t base = square(U).codim();
    for (int N = 5; N <= 8; ++N) {
      const std::size_t lifted = square(lift(U, N - n)).codim();
      add_item(g, "almost complete intersection: codim V^2 - codim U^2 at n=" + std::to_string(N), std::to_string(7 * (N - n)), std::to_string(static_cast<long>(lifted) - static_cast<long>(base)));
    }
  }
  return g;
}

inline std::string render_gallery(const GalleryReport& g) {
  std::string s;
  for (const auto& i : g.items) {
    s += (i.match ? "ok    " : "FAIL  ") + i.name + ": expected " + i.expected + ", computed " + i.computed + "\n";
  }
  s += g.ok() ? "gallery: all match\n" : "gallery: MISMATCH\n";
  return s;
}

// ---------------------------------------------------------------------------
// m(k,k,k) experiment.
// ---------------------------------------------------------------------------

struct ConjectureRow {
  int k = 0;
  std::optional<long> mkkk, m3kkk;
  long formula = 0;  // (k^3 + 3k^2 + 2k)/6
  long witness = 0;  // codim U^2 for W = {x1^k, x1^(k-1) x_i}
};

inline std::vector<ConjectureRow> conjecture_mkkk(int k_max, double cell_budget_seconds = 60) {
  std::vector<ConjectureRow> rows;
  for (int k = 2; k <= k_max; ++k) {
    ConjectureRow r;
    r.k = k;
    r.formula = (static_cast<long>(k) * k * k + 3L * k * k + 2L * k) / 6;
    std::vector<Monomial> W;
    for (int i = 0; i < k; ++i) {
      Monomial m = Monomial::power(k, 0, k - 1);
      m.set(i, m[i] + 1);
      W.push_back(m);
    }
    r.witness = monomial_square_codim(k, k, W);
    try {
      r.mkkk = m_value(k, k, static_cast<std::size_t>(k), Budget(cell_budget_seconds)).value;
    } catch (const BudgetExceeded&) {
    }
    if (3 * k <= kMaxVars) {
      try {
        r.m3kkk = m_value(3 * k, k, static_cast<std::size_t>(k), Budget(cell_budget_seconds)).value;
      } catch (const BudgetExceeded&) {
      }
    }
    rows.push_back(r);
  }
  return rows;
}

inline std::string render_conjecture(const std::vector<ConjectureRow>& rows) {
  std::string s = "k  m(k,k,k)  (k^3+3k^2+2k)/6  witness  label     m(3k,k,k)  2k^2+formula  label\n";
  auto pad = [](std::string x, std::size_t w) { return x.size() < w ? x + std::string(w - x.size(), ' ') : x; };
  for (const auto& r : rows) {
    const long f3 = 2L * r.k * r.k + r.formula;
    auto label = [](const std::optional<long>& v, long f) { return !v ? std::string("not-computed") : (*v == f ? "match" : "mismatch"); };
    s += pad(std::to_string(r.k), 3) + pad(r.mkkk ? std::to_string(*r.mkkk) : "-", 10) + pad(std::to_string(r.formula), 17) + pad(std::to_string(r.witness), 9) + pad(label(r.mkkk, r.formula), 10) +
         pad(r.m3kkk ? std::to_string(*r.m3kkk) : "-", 11) + pad(std::to_string(f3), 14) + label(r.m3kkk, f3) + "\n";
  }
  return s;
}

}  // namespace gramface
