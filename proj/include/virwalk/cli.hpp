// Command-line front end. Every command prints one JSON document.
#pragma once

#include "schur_oracle.hpp"
#include "verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

namespace virwalk::cli {

using nlohmann::json;

inline unsigned thread_count() {
  if (const char* env = std::getenv("VIRWALK_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

inline json expansion_json(const SchurExpansion& e) {
  json arr = json::array();
  for (const auto& [p, c] : e.coeffs()) arr.push_back({{"partition", p.to_string()}, {"coefficient", c.get_str()}});
  return arr;
}

inline json polynomial_json(const TPolynomial& f) {
  json arr = json::array();
  for (const auto& [m, c] : f.terms()) arr.push_back({{"exponents", m}, {"coefficient", c.get_str()}});
  return arr;
}

inline json report_json(const Report& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"check", f.check}, {"k", f.k}, {"first", f.first}, {"second", f.second}, {"value", f.value}});
  json variants = json::array();
  for (const auto& v : r.variants)
    variants.push_back({{"check", v.check}, {"variant", v.variant}, {"checked", v.checked}, {"nonzero", v.nonzero}});
  return {{"suite", r.suite}, {"checked", r.checked}, {"skipped", r.skipped}, {"failures", failures}, {"variants", variants}};
}

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct WalkFlags {
  int walk_case = 1;
  int n = 1;
  int p = 0;
  int q = 0;
  std::string x, y;

  WalkModel model() const {
    WalkModel m{walk_case, n, p, q};
    try {
      m.validate();
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    return m;
  }
  WalkerConfig config(const std::string& text, const char* name) const {
    WalkerConfig c;
    try {
      c = parse_config(text);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    if (c.n() != n) throw UsageError(std::string("--") + name + " must list exactly --n positions");
    return c;
  }
};

inline void add_walk_flags(CLI::App* cmd, WalkFlags& f, bool endpoints) {
  cmd->add_option("--case", f.walk_case, "walk model: 1, 2 or 3")->check(CLI::Range(1, 3));
  cmd->add_option("--n", f.n, "number of walkers")->check(CLI::Range(1, 12));
  cmd->add_option("--p", f.p, "case 3 right-phase length")->check(CLI::NonNegativeNumber);
  cmd->add_option("--q", f.q, "case 2/3 phase length")->check(CLI::NonNegativeNumber);
  if (endpoints) {
    cmd->add_option("--x", f.x, "initial positions, e.g. 0,1,2")->required();
    cmd->add_option("--y", f.y, "final positions, e.g. 0,2,3")->required();
  }
}

inline Partition partition_flag(const std::string& text) {
  try {
    return parse_partition(text);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

// Runs one command; returns 0 on success, 1 when a verification fails and 2
// on a usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Virasoro/Schur expansions and non-intersecting walk counts"};
  app.require_subcommand(1);

  WalkFlags walk;
  int k = 0;
  std::string method = "dp";
  auto* count = app.add_subcommand("count", "count walks between two configurations");
  add_walk_flags(count, walk, true);
  count->add_option("--k", k, "step count")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--method", method, "dp, tableaux, reflection or series")
      ->check(CLI::IsMember({"dp", "tableaux", "reflection", "series"}));

  int order = 4;
  auto* series = app.add_subcommand("series", "generating series a(z) from the determinant");
  add_walk_flags(series, walk, true);
  series->add_option("--order", order, "truncation order K")->check(CLI::NonNegativeNumber);

  int vk = 0;
  std::string lambda_text, op = "virasoro", path = "fast";
  auto* vir = app.add_subcommand("virasoro", "apply V_k, n t_n or d/dt_n to a Schur function");
  vir->add_option("--k", vk, "operator index")->required()->allow_extra_args(false);
  vir->add_option("--lambda", lambda_text, "partition, e.g. 7,6,6,4,1,1")->required();
  vir->add_option("--op", op, "virasoro, multiply or differentiate")
      ->check(CLI::IsMember({"virasoro", "multiply", "differentiate"}));
  vir->add_option("--path", path, "fast or general coefficient rule")->check(CLI::IsMember({"fast", "general"}));

  bool expand = false;
  auto* schur = app.add_subcommand("schur", "Schur polynomial in the t variables");
  schur->add_option("--lambda", lambda_text, "partition")->required();
  schur->add_flag("--expand", expand, "re-expand the polynomial in the Schur basis");

  std::string outer_text, inner_text, kind = "standard", alpha_text;
  int tq = 0;
  auto* tab = app.add_subcommand("tableaux", "count skew tableaux");
  tab->add_option("--outer", outer_text, "outer partition")->required();
  tab->add_option("--inner", inner_text, "inner partition");
  tab->add_option("--kind", kind, "standard, semistandard or character")
      ->check(CLI::IsMember({"standard", "semistandard", "character"}));
  tab->add_option("--q", tq, "alphabet size for semistandard counts")->check(CLI::NonNegativeNumber);
  tab->add_option("--alpha", alpha_text, "composition for characters, e.g. 2,1");

  std::string suite = "all";
  int window = 6, kmax = 5, families = 50, degree = 3;
  WalkFlags vw;
  vw.n = 2;
  auto* verify = app.add_subcommand("verify", "run identity checks");
  verify->add_option("--suite", suite, "l1, l2, l3, a, series, fourier, tau or all")
      ->check(CLI::IsMember({"l1", "l2", "l3", "a", "series", "fourier", "tau", "all"}));
  add_walk_flags(verify, vw, false);
  verify->add_option("--window", window, "positions 0..window-1")->check(CLI::Range(1, 12));
  verify->add_option("--kmax", kmax, "largest step count")->check(CLI::Range(0, 10));
  verify->add_option("--degree", degree, "largest partition size for the series suite")->check(CLI::Range(0, 8));
  verify->add_option("--families", families, "random families for the fourier suite")->check(CLI::Range(1, 10000));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    json doc;
    int code = 0;
    if (*count) {
      const WalkModel m = walk.model();
      const WalkerConfig x = walk.config(walk.x, "x"), y = walk.config(walk.y, "y");
      BigInt v;
      if (method == "dp") v = count_walks_dp(m, x, y, k);
      else if (method == "tableaux") v = count_walks_tableaux(m, x, y, k);
      else if (method == "series") v = count_walks_series(m, x, y, k);
      else {
        if (m.walk_case != 1) throw UsageError("the reflection method only counts case 1 walks");
        v = count_walks_reflection(x, y, k);
      }
      doc = {{"count", v.get_str()}};
    } else if (*series) {
      const WalkModel m = walk.model();
      const WalkerConfig x = walk.config(walk.x, "x"), y = walk.config(walk.y, "y");
      doc = {{"series", generating_series(m, x, y, order).to_strings()}};
    } else if (*vir) {
      const Partition lambda = partition_flag(lambda_text);
      const SchurExpansion e = SchurExpansion::basis(lambda);
      SchurExpansion r;
      if (op == "virasoro") {
        r = apply_virasoro_expansion(vk, e, path == "fast" ? VirasoroPath::fast : VirasoroPath::general);
      } else {
        if (vk < 1) throw UsageError("--k must be positive for multiply and differentiate");
        r = op == "multiply" ? mn_multiply(vk, e) : mn_differentiate(vk, e);
      }
      doc = {{"expansion", expansion_json(r)}};
    } else if (*schur) {
      const TPolynomial f = schur_polynomial(partition_flag(lambda_text));
      doc = {{"polynomial", polynomial_json(f)}};
      if (expand) doc["expansion"] = expansion_json(expand_in_schur_basis(f));
    } else if (*tab) {
      const Partition outer = partition_flag(outer_text), inner = partition_flag(inner_text);
      if (!outer.contains(inner)) throw UsageError("--inner must fit inside --outer");
      const SkewShape shape(outer, inner);
      BigInt v;
      if (kind == "standard") v = count_standard_skew(shape);
      else if (kind == "semistandard") v = count_semistandard_skew(shape, tq);
      else {
        std::vector<int> alpha;
        if (!alpha_text.empty()) {
          WalkerConfig a = parse_config(alpha_text);
          alpha = a.positions();
        }
        for (int a : alpha)
          if (a < 0) throw UsageError("--alpha parts must be nonnegative");
        long total = 0;
        for (int a : alpha) total += a;
        if (total != shape.size()) throw UsageError("--alpha must add up to the size of the shape");
        v = border_strip_character(shape, alpha);
      }
      doc = {{"count", v.get_str()}};
    } else if (*verify) {
      const unsigned threads = thread_count();
      Report total;
      total.suite = suite;
      json reports = json::array();
      auto add = [&](const Report& r) {
        reports.push_back(report_json(r));
        total.merge(r);
      };
      auto need_case = [&](int c) {
        if (verify->count("--case") && vw.walk_case != c) throw UsageError("suite " + suite + " needs --case " + std::to_string(c));
      };
      if (suite == "l1") {
        need_case(1);
        add(verify_suite(WalkModel{1, vw.n, 0, 0}, window, kmax, threads));
      } else if (suite == "l2") {
        need_case(2);
        add(verify_suite(WalkModel{2, vw.n, 0, vw.q}, window, kmax, threads));
      } else if (suite == "l3") {
        need_case(3);
        add(verify_suite(WalkModel{3, vw.n, vw.p, vw.q}, window, kmax, threads));
      } else if (suite == "a") {
        add(verify_probability_suite(vw.n, window, kmax, threads));
      } else if (suite == "series") {
        add(verify_series_suite(vw.model(), degree, kmax, threads));
      } else if (suite == "fourier") {
        add(verify_fourier_suite(families));
        for (int c = 1; c <= 3; ++c) add(verify_count_family_suite(WalkModel{c, std::min(vw.n, 2), 1, 2}, 4, 4));
      } else if (suite == "tau") {
        add(verify_tau_suite(3, 5));
      } else {
        for (int n = 1; n <= 3; ++n) add(verify_suite(WalkModel{1, n, 0, 0}, 6, 5, threads));
        for (int n = 1; n <= 2; ++n)
          for (int q = 0; q <= 3; ++q) add(verify_suite(WalkModel{2, n, 0, q}, 6, 4, threads));
        for (int n = 1; n <= 2; ++n)
          for (int p = 0; p <= 3; ++p)
            for (int q = 0; q <= 3; ++q) add(verify_suite(WalkModel{3, n, p, q}, 6, 4, threads));
        for (int n = 1; n <= 3; ++n) add(verify_probability_suite(n, 6, 5, threads));
        for (int c = 1; c <= 3; ++c) add(verify_series_suite(WalkModel{c, 2, 1, 2}, 3, 5, threads));
        add(verify_fourier_suite(std::max(families, 50)));
        for (int c = 1; c <= 3; ++c) add(verify_count_family_suite(WalkModel{c, 2, 1, 2}, 4, 4));
        add(verify_tau_suite(3, 5));
      }
      json failures = json::array();
      for (const auto& f : total.failures)
        failures.push_back({{"check", f.check}, {"k", f.k}, {"first", f.first}, {"second", f.second}, {"value", f.value}});
      doc = {{"suite", suite}, {"checked", total.checked}, {"failures", failures}, {"reports", reports}};
      code = total.ok() ? 0 : 1;
    }
    out << doc.dump() << "\n";
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ShapeError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace virwalk::cli
