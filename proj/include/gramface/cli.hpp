#pragma once

// Command-line front end. run_cli is kept in a header so tests can drive it
// with string streams.

#include "harness.hpp"
#include "hilbert.hpp"
#include "interchange.hpp"
#include "macaulay.hpp"
#include "stable.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace gramface {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitIncomplete = 2, kExitMismatch = 3 };

inline constexpr int kCliMaxVars = 12;
inline constexpr int kCliMaxDegree = 40;

namespace cli_detail {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Range checked_range(const std::string& text, const char* name, int lo, int hi) {
  Range r;
  try {
    r = parse_range(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
  if (r.lo < lo || r.hi > hi) {
    throw UsageError(std::string("--") + name + " must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  return r;
}

inline void elapsed(std::ostream& err, const char* what, std::chrono::steady_clock::time_point start) {
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << what << ": " << std::fixed << std::setprecision(2) << s << " s\n";
}

}  // namespace cli_detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  using cli_detail::UsageError;
  CLI::App app{"gramface: dimensions of faces of Gram spectrahedra via codim U^2"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand help for all subcommands");

  // mtable
  std::string mt_n = "3..6", mt_d = "2..9", mt_k = "1..9", mt_format = "csv", mt_output;
  bool mt_check = false, mt_witnesses = false;
  unsigned mt_jobs = 1;
  double mt_budget = 0;
  auto* mtable = app.add_subcommand("mtable", "Compute m(n,d,k) over strongly stable monomial subspaces");
  mtable->add_option("--n", mt_n, "Range of variable counts, e.g. 3..6")->capture_default_str();
  mtable->add_option("--d", mt_d, "Range of degrees")->capture_default_str();
  mtable->add_option("--k", mt_k, "Range of codimensions")->capture_default_str();
  mtable->add_flag("--check-paper", mt_check, "Compare against the published reference table");
  mtable->add_option("--format", mt_format, "csv, markdown or records")->check(CLI::IsMember({"csv", "markdown", "records"}))->capture_default_str();
  mtable->add_flag("--witnesses", mt_witnesses, "Include a maximizing complement for each cell");
  mtable->add_option("--jobs", mt_jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  mtable->add_option("--budget", mt_budget, "Seconds per cell, 0 for unlimited")->check(CLI::NonNegativeNumber);
  mtable->add_option("--output", mt_output, "Write the table to a file instead of stdout");

  // space
  std::string sp_file;
  int sp_T = -1;
  auto* space = app.add_subcommand("space", "Report on a subspace interchange file");
  space->add_option("file", sp_file, "Interchange file")->required();
  space->add_option("--T", sp_T, "Hilbert degree bound (default 2d+2)")->check(CLI::Range(0, 4 * kCliMaxDegree));

  // macaulay
  auto* mac = app.add_subcommand("macaulay", "Macaulay representations and the bounds built on them");
  mac->require_subcommand(1);
  std::string mac_a;
  long mac_d = 1, mac_s = 0, mac_t = 0;
  std::string mac_h1;
  auto* mac_rep = mac->add_subcommand("rep", "d-th Macaulay representation of a");
  mac_rep->add_option("a", mac_a)->required();
  mac_rep->add_option("d", mac_d)->required()->check(CLI::PositiveNumber);
  auto* mac_shift = mac->add_subcommand("shift", "a_(d)|^s_t");
  mac_shift->add_option("a", mac_a)->required();
  mac_shift->add_option("d", mac_d)->required()->check(CLI::PositiveNumber);
  mac_shift->add_option("s", mac_s)->required();
  mac_shift->add_option("t", mac_t)->required();
  auto* mac_growth = mac->add_subcommand("growth", "Largest h_{i+1} allowed after h_i");
  mac_growth->add_option("h_i", mac_a)->required();
  mac_growth->add_option("i", mac_d)->required()->check(CLI::PositiveNumber);
  auto* mac_green = mac->add_subcommand("green", "Bound on the codimension after a generic hyperplane restriction");
  mac_green->add_option("h_d", mac_a)->required();
  mac_green->add_option("d", mac_d)->required()->check(CLI::PositiveNumber);
  auto* mac_gotz = mac->add_subcommand("gotzmann", "Persistence test and predicted Hilbert function");
  mac_gotz->add_option("h_d", mac_a)->required();
  mac_gotz->add_option("h_d1", mac_h1)->required();
  mac_gotz->add_option("d", mac_d)->required()->check(CLI::PositiveNumber);

  // enumerate-ss
  int en_n = 3, en_d = 2, en_k = 1;
  bool en_count = false;
  double en_budget = 0;
  auto* enumerate = app.add_subcommand("enumerate-ss", "List the complements of strongly stable subspaces of codimension k");
  enumerate->add_option("--n", en_n)->check(CLI::Range(1, kCliMaxVars))->capture_default_str();
  enumerate->add_option("--d", en_d)->check(CLI::Range(0, kCliMaxDegree))->capture_default_str();
  enumerate->add_option("--k", en_k)->check(CLI::NonNegativeNumber)->capture_default_str();
  enumerate->add_flag("--count", en_count, "Only print the number of complements");
  enumerate->add_option("--budget", en_budget, "Seconds, 0 for unlimited")->check(CLI::NonNegativeNumber);

  // verify
  std::string vf_id, vf_format = "text", vf_save = "gramface-failures";
  CheckParams vp;
  bool vf_verbose = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run a randomized check, or 'gallery' for the worked examples");
  verify_cmd->add_option("check", vf_id, "Check id, 'gallery' or 'list'")->required();
  verify_cmd->add_option("--n", vp.n)->check(CLI::Range(1, kCliMaxVars))->capture_default_str();
  verify_cmd->add_option("--d", vp.d)->check(CLI::Range(0, kCliMaxDegree))->capture_default_str();
  verify_cmd->add_option("--k", vp.k)->check(CLI::NonNegativeNumber)->capture_default_str();
  verify_cmd->add_option("--m", vp.m, "var-reduction: number of leading variables (default max(2,k))")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--levels", vp.levels, "lift-formula: number of new variables")->check(CLI::NonNegativeNumber)->capture_default_str();
  verify_cmd->add_option("--trials", vp.trials)->check(CLI::Range(1, 100000))->capture_default_str();
  verify_cmd->add_option("--seed", vp.seed)->capture_default_str();
  verify_cmd->add_option("--height", vp.height, "Coefficient bound B")->check(CLI::Range(1L, 1000000000L))->capture_default_str();
  verify_cmd->add_option("--T", vp.T, "Hilbert degree bound (default 2d+2)")->check(CLI::Range(0, 4 * kCliMaxDegree));
  verify_cmd->add_option("--retries", vp.retries, "Generic choices per trial")->check(CLI::Range(1, 100))->capture_default_str();
  verify_cmd->add_option("--support", vp.support, "Terms per random form (0 = dense, alternating sparse)")->capture_default_str();
  verify_cmd->add_option("--jobs", vp.jobs)->check(CLI::Range(1u, 256u));
  verify_cmd->add_option("--format", vf_format, "text or records")->check(CLI::IsMember({"text", "records"}))->capture_default_str();
  verify_cmd->add_flag("--verbose", vf_verbose, "List every trial");
  verify_cmd->add_option("--save-dir", vf_save, "Directory for failing instances")->capture_default_str();

  // conjecture
  int cj_kmax = 4;
  double cj_budget = 60;
  auto* conjecture = app.add_subcommand("conjecture", "Compute m(k,k,k) and m(3k,k,k) next to the conjectured closed forms");
  conjecture->add_option("--k-max", cj_kmax)->check(CLI::Range(2, 8))->capture_default_str();
  conjecture->add_option("--budget", cj_budget, "Seconds per value")->check(CLI::NonNegativeNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (*mtable) {
      const Range nr = cli_detail::checked_range(mt_n, "n", 1, kCliMaxVars);
      const Range dr = cli_detail::checked_range(mt_d, "d", 0, kCliMaxDegree);
      const Range kr = cli_detail::checked_range(mt_k, "k", 0, 1000000);
      const MTable t = m_table(nr, dr, kr, mt_jobs, mt_budget);
      std::string text;
      if (mt_format == "csv") text = render_csv(t, mt_witnesses);
      else if (mt_format == "markdown") text = render_markdown(t, mt_witnesses);
      else text = render_records(t, mt_witnesses);
      if (mt_output.empty()) {
        out << text;
      } else {
        std::ofstream f(mt_output);
        if (!f) throw UsageError("cannot write '" + mt_output + "'");
        f << text;
      }
      int code = kExitOk;
      std::size_t incomplete = 0;
      for (const auto& c : t.cells) incomplete += c.status == CellStatus::not_computed;
      if (mt_check) {
        const TableCheck chk = check_against_reference(t);
        err << "reference check: " << chk.checked << " cells compared, " << chk.mismatches.size() << " mismatches, " << chk.incomplete << " not computed\n";
        for (const auto& m : chk.mismatches) err << "  mismatch " << m << "\n";
        if (!chk.mismatches.empty()) code = kExitMismatch;
      }
      if (code == kExitOk && incomplete) {
        err << incomplete << " cells exceeded the budget\n";
        code = kExitIncomplete;
      }
      cli_detail::elapsed(err, "mtable", start);
      return code;
    }

    if (*space) {
      const FormSpace U = load_space(sp_file);
      const int T = sp_T < 0 ? 2 * U.degree() + 2 : sp_T;
      const FormSpace Usq = square(U);
      out << "n = " << U.vars() << ", d = " << U.degree() << ", order = " << U.order().to_string() << "\n";
      out << "dim U = " << U.dim() << "\n";
      out << "codim U = " << U.codim() << "\n";
      out << "codim U^2 = " << Usq.codim() << "\n";
      out << "Hilbert function = " << to_string(hilbert_table(U, T)) << "\n";
      out << "base points: " << to_string(base_point_certificate(U, T)) << "\n";
      out << "face dimension = " << face_dimension(static_cast<long>(U.dim()), U.vars(), U.degree(), static_cast<long>(Usq.codim())).get_str() << "\n";
      cli_detail::elapsed(err, "space", start);
      return kExitOk;
    }

    if (*mac) {
      auto integer = [](const std::string& s, const char* name) {
        Integer v;
        if (v.set_str(s, 10) != 0 || v < 0) throw UsageError(std::string(name) + " must be a nonnegative integer");
        return v;
      };
      if (*mac_rep) {
        out << to_string(macaulay_rep(integer(mac_a, "a"), static_cast<int>(mac_d))) << "\n";
      } else if (*mac_shift) {
        out << macaulay_shift(macaulay_rep(integer(mac_a, "a"), static_cast<int>(mac_d)), mac_s, mac_t).get_str() << "\n";
      } else if (*mac_growth) {
        out << macaulay_growth_bound(integer(mac_a, "h"), static_cast<int>(mac_d)).get_str() << "\n";
      } else if (*mac_green) {
        out << green_restriction_bound(integer(mac_a, "h"), static_cast<int>(mac_d)).get_str() << "\n";
      } else if (*mac_gotz) {
        const Integer hd = integer(mac_a, "h_d"), hd1 = integer(mac_h1, "h_d1");
        const int d = static_cast<int>(mac_d);
        const bool persists = gotzmann_persists(hd, hd1, d);
        out << "maximal growth: " << (persists ? "yes" : "no") << " (bound " << macaulay_growth_bound(hd, d).get_str() << ")\n";
        if (persists) {
          out << "predicted:";
          for (long l = 0; l <= 4; ++l) out << " h_" << d + l << "=" << gotzmann_prediction(hd, d, l).get_str();
          out << "\n";
        }
      }
      return kExitOk;
    }

    if (*enumerate) {
      const auto list = enumerate_stable_complements(en_n, en_d, static_cast<std::size_t>(en_k), Budget(en_budget));
      if (en_count) {
        out << list.size() << "\n";
      } else {
        for (const auto& c : list) out << to_string(c) << "  codim U^2 = " << monomial_square_codim(c) << "\n";
      }
      cli_detail::elapsed(err, "enumerate-ss", start);
      return kExitOk;
    }

    if (*verify_cmd) {
      if (vf_id == "list") {
        for (const auto& c : check_registry()) out << c.id << "  " << c.summary << "\n";
        return kExitOk;
      }
      if (vf_id == "gallery") {
        const GalleryReport g = example_gallery(vp.seed);
        out << render_gallery(g);
        cli_detail::elapsed(err, "gallery", start);
        return g.ok() ? kExitOk : kExitMismatch;
      }
      const CheckReport r = verify(vf_id, vp);
      out << (vf_format == "records" ? render_records(r) : render_report(r, vf_verbose));
      for (const auto& t : r.trials) {
        if (!t.payload) continue;
        std::filesystem::create_directories(vf_save);
        const std::string path = vf_save + "/" + r.id + "-seed" + std::to_string(r.params.seed) + "-trial" + std::to_string(t.index) + ".json";
        std::ofstream f(path);
        f << counterexample_file(r, t);
        err << "saved " << path << "\n";
      }
      cli_detail::elapsed(err, "verify", start);
      return r.ok() ? kExitOk : kExitMismatch;
    }

    if (*conjecture) {
      out << render_conjecture(conjecture_mkkk(cj_kmax, cj_budget));
      cli_detail::elapsed(err, "conjecture", start);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SpaceFileError& e) {
    err << "error: " << sp_file << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitIncomplete;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gramface
