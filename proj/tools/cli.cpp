#include "cli.hpp"

#include <cstdlib>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hilbfam/hilbfam.h"

namespace hilbfam::cli {

namespace {

struct FamilyDeleter {
  void operator()(hf_family* f) const { hf_family_free(f); }
};
struct ReportDeleter {
  void operator()(hf_report* r) const { hf_report_free(r); }
};
using FamilyPtr = std::unique_ptr<hf_family, FamilyDeleter>;
using ReportPtr = std::unique_ptr<hf_report, ReportDeleter>;

// Carries a C API failure out of a subcommand callback.
struct ApiError {
  hf_status status;
  std::string message;
};

void check(hf_status st) {
  if (st != HF_OK) throw ApiError{st, hf_last_error()};
}

FamilyPtr load(const std::string& path) {
  hf_family* f = nullptr;
  check(hf_family_load(path.c_str(), &f));
  return FamilyPtr(f);
}

struct Options {
  unsigned n = 0, d = 0, p = 0, q = 0, m = 0;
  std::optional<unsigned> modq;
  std::optional<unsigned> cap;
  std::optional<unsigned> m_opt;
  std::string family, superfamily, pool;
  std::vector<unsigned> L;
  unsigned limit = 3;
  unsigned p_max = 3, n_max = 9, jobs = 1;
  std::optional<unsigned> p_opt;
  std::string T, w;
  bool force = false;
  std::string format = "json";
  bool timing = false;
  std::optional<std::uint64_t> enum_cap;
};

FamilyPtr family_from(const Options& o) {
  if (!o.family.empty()) return load(o.family);
  hf_family* f = nullptr;
  if (o.modq) {
    check(hf_family_modq(o.n, o.d, *o.modq, &f));
  } else {
    check(hf_family_uniform(o.n, o.d, &f));
  }
  return FamilyPtr(f);
}

std::vector<std::uint32_t> parse_list(const std::string& text, char sep, const char* what) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw CLI::ValidationError(what, "bad integer '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert functions of set-family point sets over F_p, and executable theorem checks", "hilbfam"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  ReportPtr report;
  std::function<void()> action;

  app.add_option("--format", o.format, "json, csv (series only) or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--timing", o.timing, "include wall-clock timings in JSON output");
  app.add_option("--enum-cap", o.enum_cap, "enumeration cap (overrides HILBFAM_ENUM_CAP)");

  auto add_family_flags = [&](CLI::App* sub, bool need_m) {
    sub->add_option("--n", o.n, "ground-set size");
    sub->add_option("--d", o.d, "set size");
    sub->add_option("--p", o.p, "field characteristic")->required();
    if (need_m) sub->add_option("--m", o.m, "degree bound")->required();
    sub->add_option("--modq", o.modq, "use F(d,q) and the mod-q closed form");
    sub->add_option("--family", o.family, "family file instead of --n/--d");
    sub->add_option("--cap", o.cap, "per-variable exponent cap, 1 or p-1 (default 1)");
  };
  auto require_nd = [&](CLI::App* sub) {
    if (o.family.empty() && (sub->count("--n") == 0 || sub->count("--d") == 0)) {
      throw CLI::RequiredError("--n and --d (or --family)");
    }
  };

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function value h(m)");
  add_family_flags(hilbert, true);
  hilbert->callback([&] {
    require_nd(hilbert);
    action = [&] {
      hf_report* r = nullptr;
      const unsigned cap = o.cap.value_or(1);
      if (!o.family.empty()) {
        auto fam = load(o.family);
        check(hf_hilbert_family(fam.get(), o.p, o.m, cap, &r));
      } else if (o.modq) {
        check(hf_hilbert_modq(o.n, o.d, *o.modq, o.p, o.m, cap, &r));
      } else {
        check(hf_hilbert_uniform(o.n, o.d, o.p, o.m, cap, &r));
      }
      report.reset(r);
    };
  });

  auto* series = app.add_subcommand("series", "Hilbert series up to stabilization");
  add_family_flags(series, false);
  series->callback([&] {
    require_nd(series);
    action = [&] {
      hf_report* r = nullptr;
      const unsigned cap = o.cap.value_or(1);
      if (!o.family.empty()) {
        auto fam = load(o.family);
        check(hf_series_family(fam.get(), o.p, cap, &r));
      } else if (o.modq) {
        check(hf_series_modq(o.n, o.d, *o.modq, o.p, cap, &r));
      } else {
        check(hf_series_uniform(o.n, o.d, o.p, cap, &r));
      }
      report.reset(r);
    };
  });

  auto* ideal = app.add_subcommand("ideal", "basis of the degree <= m vanishing polynomials");
  add_family_flags(ideal, true);
  ideal->callback([&] {
    require_nd(ideal);
    action = [&] {
      auto fam = family_from(o);
      hf_report* r = nullptr;
      check(hf_ideal_family(fam.get(), o.p, o.m, o.cap.value_or(1), &r));
      report.reset(r);
    };
  });

  auto* verify = app.add_subcommand("verify", "run a theorem check");
  verify->require_subcommand(1);

  auto* v_main = verify->add_subcommand("main", "equal Hilbert values imply equal ideal truncations");
  v_main->add_option("--family", o.family, "inner family file");
  v_main->add_option("--superfamily", o.superfamily, "outer family file");
  v_main->add_option("--n", o.n);
  v_main->add_option("--d", o.d);
  v_main->add_option("--q", o.q);
  v_main->add_option("--p", o.p)->required();
  v_main->add_option("--m", o.m_opt, "degree bound (default q-1)");
  v_main->add_option("--cap", o.cap);
  v_main->callback([&] {
    const bool files = !o.family.empty() || !o.superfamily.empty();
    if (files && (o.family.empty() || o.superfamily.empty())) {
      throw CLI::RequiredError("--family and --superfamily");
    }
    if (!files && (v_main->count("--n") == 0 || v_main->count("--d") == 0 || v_main->count("--q") == 0)) {
      throw CLI::RequiredError("--n, --d and --q (or --family/--superfamily)");
    }
    if (files && !o.m_opt) throw CLI::RequiredError("--m");
    action = [&, files] {
      FamilyPtr inner, outer;
      if (files) {
        inner = load(o.family);
        outer = load(o.superfamily);
      } else {
        hf_family* f = nullptr;
        check(hf_family_uniform(o.n, o.d, &f));
        inner.reset(f);
        check(hf_family_modq(o.n, o.d, o.q, &f));
        outer.reset(f);
      }
      const unsigned m = o.m_opt ? *o.m_opt : o.q - 1;
      hf_report* r = nullptr;
      check(hf_verify_main(inner.get(), outer.get(), m, o.p, o.cap.value_or(1), &r));
      report.reset(r);
    };
  });

  auto* v_main2 = verify->add_subcommand("main2", "degree <= q-1 vanishing transfers from C(n,d) to F(d,q)");
  v_main2->add_option("--n", o.n)->required();
  v_main2->add_option("--d", o.d)->required();
  v_main2->add_option("--q", o.q)->required();
  v_main2->add_option("--p", o.p)->required();
  v_main2->add_flag("--force", o.force, "run outside q-1 <= d <= n-q+1 and report the empirical outcome");
  v_main2->callback([&] {
    action = [&] {
      hf_report* r = nullptr;
      check(hf_verify_main2(o.n, o.d, o.q, o.p, o.force ? 1 : 0, &r));
      report.reset(r);
    };
  });

  auto* v_hrubes = verify->add_subcommand("hrubes", "no degree < p polynomial vanishes on C(2p,p) but not at 0");
  v_hrubes->add_option("--p", o.p)->required();
  v_hrubes->callback([&] {
    action = [&] {
      hf_report* r = nullptr;
      check(hf_verify_hrubes(o.p, &r));
      report.reset(r);
    };
  });

  auto* v_hlemma = verify->add_subcommand("hlemma", "degree < p vanishing on C(4p,2p) forces vanishing on C(4p,3p)");
  v_hlemma->add_option("--p", o.p)->required();
  v_hlemma->callback([&] {
    action = [&] {
      hf_report* r = nullptr;
      check(hf_verify_hlemma(o.p, &r));
      report.reset(r);
    };
  });

  auto* v_grid = verify->add_subcommand("grid", "punctured-grid form of the Nullstellensatz");
  v_grid->add_option("--p", o.p)->required();
  v_grid->add_option("--T", o.T, "coordinate sets, e.g. \"0,1;0,1,2\"")->required();
  v_grid->add_option("--w", o.w, "removed grid point, e.g. \"1,2\"")->required();
  v_grid->callback([&] {
    std::vector<std::uint32_t> sizes, values;
    std::stringstream ss(o.T);
    std::string part;
    while (std::getline(ss, part, ';')) {
      auto t = parse_list(part, ',', "--T");
      sizes.push_back(static_cast<std::uint32_t>(t.size()));
      values.insert(values.end(), t.begin(), t.end());
    }
    auto w = parse_list(o.w, ',', "--w");
    if (w.size() != sizes.size()) throw CLI::ValidationError("--w", "needs one coordinate per set in --T");
    action = [&, sizes, values, w] {
      hf_report* r = nullptr;
      check(hf_verify_grid(o.p, static_cast<std::uint32_t>(sizes.size()), sizes.data(), values.data(), w.data(), &r));
      report.reset(r);
    };
  });

  auto* v_all = verify->add_subcommand("all", "batch of every check up to --p-max");
  v_all->add_option("--p-max", o.p_max, "largest prime")->capture_default_str();
  v_all->add_option("--n-max", o.n_max, "largest n in the MAIN/MAIN2 sweep")->capture_default_str();
  v_all->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
  v_all->callback([&] {
    action = [&] {
      hf_report* r = nullptr;
      check(hf_verify_all(o.p_max, o.n_max, o.jobs, &r));
      report.reset(r);
    };
  });

  auto* balance = app.add_subcommand("balance", "L-balancing families");
  balance->require_subcommand(1);
  auto add_balance_flags = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "even ground-set size")->required();
    sub->add_option("--L", o.L, "allowed intersection sizes, comma-separated")->delimiter(',')->required();
    sub->add_option("--family", o.family, "family file")->required();
    sub->add_option("--p", o.p_opt, "prime (default n/2)");
  };
  auto with_family = [&](auto call) {
    return [&, call] {
      auto fam = load(o.family);
      hf_report* r = nullptr;
      check(call(fam.get(), &r));
      report.reset(r);
    };
  };
  auto* b_check = balance->add_subcommand("check", "lower bound m >= n/(2s) with its certificate polynomial");
  add_balance_flags(b_check);
  b_check->callback([&] {
    action = with_family([&](const hf_family* fam, hf_report** r) {
      return hf_balance_check(o.n, o.L.data(), o.L.size(), fam, o.p_opt.value_or(o.n / 2), r);
    });
  });
  auto* b_is = balance->add_subcommand("is", "is the family L-balancing");
  add_balance_flags(b_is);
  b_is->callback([&] {
    action = with_family(
        [&](const hf_family* fam, hf_report** r) { return hf_balance_is(o.n, o.L.data(), o.L.size(), fam, r); });
  });
  auto* b_poly = balance->add_subcommand("poly", "expanded certificate polynomial");
  add_balance_flags(b_poly);
  b_poly->callback([&] {
    action = with_family([&](const hf_family* fam, hf_report** r) {
      return hf_balance_witness(o.n, o.L.data(), o.L.size(), fam, o.p_opt.value_or(o.n / 2), r);
    });
  });

  auto* search = app.add_subcommand("search", "smallest L-balancing family by iterative deepening");
  search->add_option("--n", o.n)->required();
  search->add_option("--L", o.L)->delimiter(',')->required();
  search->add_option("--limit", o.limit, "largest family size to try")->capture_default_str();
  search->add_option("--pool", o.pool, "family file restricting the candidate members");
  search->callback([&] {
    action = [&] {
      FamilyPtr pool;
      if (!o.pool.empty()) pool = load(o.pool);
      hf_report* r = nullptr;
      check(hf_search_min(o.n, o.L.data(), o.L.size(), o.limit, pool.get(), &r));
      report.reset(r);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (o.format == "csv" && !series->parsed()) {
    err << "error: --format csv is only available for 'series'\n";
    return kUsage;
  }

  const std::uint64_t previous_cap = hf_enumeration_cap();
  if (o.enum_cap) {
    hf_set_enumeration_cap(*o.enum_cap);
  } else if (const char* env = std::getenv("HILBFAM_ENUM_CAP")) {
    try {
      hf_set_enumeration_cap(std::stoull(env));
    } catch (const std::exception&) {
      err << "error: HILBFAM_ENUM_CAP is not an integer\n";
      return kUsage;
    }
  }

  int code = kSuccess;
  try {
    action();
    switch (hf_report_verdict(report.get())) {
      case HF_VERDICT_OK: code = kSuccess; break;
      default: code = kNegative; break;
    }
    if (o.format == "csv") {
      out << hf_report_csv(report.get());
    } else if (o.format == "text") {
      out << hf_report_text(report.get());
    } else {
      out << hf_report_json(report.get(), o.timing ? 1 : 0);
    }
  } catch (const ApiError& e) {
    err << "error: " << e.message << "\n";
    switch (e.status) {
      case HF_ERR_DOMAIN:
      case HF_ERR_NULL_ARGUMENT: code = kUsage; break;
      case HF_ERR_RESOURCE: code = kResource; break;
      default: code = kInternal; break;
    }
  }
  hf_set_enumeration_cap(previous_cap);
  return code;
}

}  // namespace hilbfam::cli
