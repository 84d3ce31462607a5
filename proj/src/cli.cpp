#include "hjfilter/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

namespace hj::cli {

namespace fs = std::filesystem;

std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5e", v);
  return buf;
}

namespace {

std::string ord_field(double v) { return std::isnan(v) ? std::string{} : format_sci(v); }

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path.string());
  f << text;
}

RunOptions base_run_options(const Options& opt, const SchemeSelector& sel, bool record_masks) {
  RunOptions ro;
  ro.mode = sel.mode;
  ro.filter = filters::by_name(opt.filter);
  ro.config.K = opt.K;
  ro.config.sigma = opt.sigma;
  ro.config.M = opt.M;
  ro.config.validate();
  ro.record_masks = record_masks;
  return ro;
}

double fixed_eps_for(const Experiment& e, const Options& opt, double dx) {
  return (opt.eps_fixed ? *opt.eps_fixed : e.fixed_eps_mult) * dx;
}

struct SingleRun {
  ErrorRow row;
  std::optional<RunResult> r1;    // populated for 1D experiments
  std::optional<RunResult2D> r2;  // populated for 2D experiments
  std::vector<double> reference;
};

SingleRun run_once(const Experiment& e, const SchemeSelector& sel, int n, const Options& opt,
                   const FineGridReference* fine, bool record_masks) {
  SingleRun out;
  RunOptions ro = base_run_options(opt, sel, record_masks);
  if (e.two_d) {
    Problem2D p = make_problem_2d(e, n, sel);
    if (opt.lambda) p.lambda = *opt.lambda;
    if (sel.mode == RunMode::fixed_eps) ro.fixed_eps = fixed_eps_for(e, opt, p.grid.gx.dx());
    out.r2 = run_2d(p, ro);
    out.reference = reference_on_grid_2d(e, p.grid);
    double cell = p.grid.gx.dx() * p.grid.gy.dx();
    ErrorPair ep = errors(out.r2->state.u, out.reference, cell);
    out.row = {n, out.r2->n_steps, ep.linf, 0.0, ep.l1, 0.0, out.r2->wall_seconds};
  } else {
    Problem1D p = make_problem(e, n, sel);
    if (opt.lambda) p.lambda = *opt.lambda;
    if (sel.mode == RunMode::fixed_eps) ro.fixed_eps = fixed_eps_for(e, opt, p.grid.dx());
    out.r1 = run(p, ro);
    out.reference = reference_on_grid(e, p.grid, fine);
    ErrorPair ep = e.exclude_points.empty()
                       ? errors(out.r1->state.u, out.reference, p.grid.dx())
                       : local_errors_excluding(out.r1->state.u, out.reference, p.grid,
                                                e.exclude_points, e.exclude_radius);
    out.row = {n, out.r1->n_steps, ep.linf, 0.0, ep.l1, 0.0, out.r1->wall_seconds};
  }
  return out;
}

std::string scheme_text_or_default(const Experiment& e, const Options& opt) {
  if (opt.schemes.empty()) return default_scheme(e);
  return opt.schemes.front();
}

void print_report(const ErrorReport& rep) {
  std::printf("%-8s %6s %6s  %-12s %-8s  %-12s %-8s  %s\n", rep.scheme.c_str(), "N_x", "N_t",
              "linf_err", "order", "l1_err", "order", "cpu_s");
  for (const ErrorRow& r : rep.rows) {
    std::printf("%-8s %6d %6d  %-12s %-8s  %-12s %-8s  %s\n", "", r.n_x, r.n_t,
                format_sci(r.linf).c_str(), ord_field(r.linf_ord).c_str(),
                format_sci(r.l1).c_str(), ord_field(r.l1_ord).c_str(),
                format_sci(r.cpu_s).c_str());
  }
}

std::optional<FineGridReference> maybe_fine_reference(const Experiment& e) {
  if (e.reference != "fine_grid") return std::nullopt;
  std::fprintf(stderr, "computing fine-grid reference (N=%d)...\n", e.n_ref);
  return make_fine_reference(e);
}

}  // namespace

ErrorReport ladder_report(const Experiment& e, const std::string& scheme_text, const Options& opt,
                          const FineGridReference* fine) {
  SchemeSelector sel = parse_scheme(scheme_text);
  std::vector<int> ladder = opt.nx ? std::vector<int>{*opt.nx} : e.refinements;
  ErrorReport rep;
  rep.scheme = sel.label;
  for (int n : ladder) rep.rows.push_back(run_once(e, sel, n, opt, fine, false).row);
  fill_orders(rep);
  return rep;
}

std::string table_csv(const std::vector<ErrorReport>& blocks) {
  std::string s = "N_x,N_t,scheme,linf_err,linf_ord,l1_err,l1_ord,cpu_s\n";
  for (const ErrorReport& rep : blocks)
    for (const ErrorRow& r : rep.rows) {
      s += std::to_string(r.n_x) + "," + std::to_string(r.n_t) + "," + rep.scheme + ",";
      s += format_sci(r.linf) + "," + ord_field(r.linf_ord) + ",";
      s += format_sci(r.l1) + "," + ord_field(r.l1_ord) + ",";
      s += format_sci(r.cpu_s) + "\n";
    }
  return s;
}

int cmd_run(const Options& opt) {
  const Experiment& e = experiment(opt.experiment);
  SchemeSelector sel = parse_scheme(scheme_text_or_default(e, opt));
  int n = opt.nx ? *opt.nx : e.refinements.front();
  std::optional<FineGridReference> fine = maybe_fine_reference(e);
  SingleRun sr = run_once(e, sel, n, opt, fine ? &*fine : nullptr, true);

  fs::create_directories(opt.out);

  std::string sol = e.two_d ? "x,y,u,reference\n" : "x,u,reference\n";
  if (e.two_d) {
    const Grid2D& g = sr.r2->state.grid;
    for (int iy = 0; iy < g.gy.n; ++iy)
      for (int ix = 0; ix < g.gx.n; ++ix) {
        size_t k = static_cast<size_t>(iy) * g.gx.n + ix;
        sol += format_sci(g.gx.x(ix)) + "," + format_sci(g.gy.x(iy)) + "," +
               format_sci(sr.r2->state.u[k]) + "," + format_sci(sr.reference[k]) + "\n";
      }
  } else {
    const Grid1D& g = sr.r1->state.grid;
    for (int j = 0; j < g.n; ++j)
      sol += format_sci(g.x(j)) + "," + format_sci(sr.r1->state.u[j]) + "," +
             format_sci(sr.reference[j]) + "\n";
  }
  write_file(opt.out / "solution.csv", sol);

  std::string diag;
  if (e.two_d) {
    diag = "step,sweep,eps_n,n_phi_zero,lipschitz\n";
    for (size_t k = 0; k < sr.r2->steps.size(); ++k) {
      const SweepDiagnostics& d = sr.r2->steps[k];
      diag += std::to_string(k) + ",x," + format_sci(d.eps_x) + "," +
              std::to_string(d.n_phi_zero_x) + "," + format_sci(d.lipschitz) + "\n";
      diag += std::to_string(k) + ",y," + format_sci(d.eps_y) + "," +
              std::to_string(d.n_phi_zero_y) + "," + format_sci(d.lipschitz) + "\n";
    }
  } else {
    diag = "step,eps_n,n_phi_zero,lipschitz\n";
    for (size_t k = 0; k < sr.r1->steps.size(); ++k) {
      const StepDiagnostics& d = sr.r1->steps[k];
      diag += std::to_string(k) + "," + format_sci(d.eps_n) + "," + std::to_string(d.n_phi_zero) +
              "," + format_sci(d.lipschitz) + "\n";
    }
  }
  write_file(opt.out / "diagnostics.csv", diag);

  if (!e.two_d) {
    // Long-format activity mask: one row per (step, node); `highorder` is 1
    // where the filtered value kept the high-order update, 0 where the
    // monotone scheme took over.
    std::string act = "step,node,x,phi,highorder\n";
    const Grid1D& g = sr.r1->state.grid;
    for (size_t k = 0; k < sr.r1->steps.size(); ++k) {
      const StepDiagnostics& d = sr.r1->steps[k];
      for (int j = 0; j < g.n; ++j) {
        int phi = d.phi.empty() ? 1 : d.phi[j];
        int hi = d.activity.empty() ? 0 : d.activity[j];
        act += std::to_string(k) + "," + std::to_string(j) + "," + format_sci(g.x(j)) + "," +
               std::to_string(phi) + "," + std::to_string(hi) + "\n";
      }
    }
    write_file(opt.out / "activity.csv", act);
  }

  ErrorReport rep;
  rep.scheme = sel.label;
  rep.rows.push_back(sr.row);
  fill_orders(rep);
  print_report(rep);
  std::printf("wrote %s\n", (opt.out / "solution.csv").string().c_str());
  return 0;
}

int cmd_convergence(const Options& opt) {
  const Experiment& e = experiment(opt.experiment);
  std::string scheme = scheme_text_or_default(e, opt);
  std::optional<FineGridReference> fine = maybe_fine_reference(e);
  ErrorReport rep = ladder_report(e, scheme, opt, fine ? &*fine : nullptr);

  fs::create_directories(opt.out);
  fs::path path = opt.out / ("convergence_" + e.id + "_" + lower(rep.scheme) + ".csv");
  write_file(path, table_csv({rep}));
  print_report(rep);
  std::printf("wrote %s\n", path.string().c_str());
  return 0;
}

int cmd_compare(const Options& opt) {
  if (opt.schemes.empty())
    throw UsageError("compare needs at least one --scheme selector");
  const Experiment& e = experiment(opt.experiment);
  std::optional<FineGridReference> fine = maybe_fine_reference(e);

  std::vector<ErrorReport> blocks;
  for (const std::string& s : opt.schemes)
    blocks.push_back(ladder_report(e, s, opt, fine ? &*fine : nullptr));

  fs::create_directories(opt.out);
  fs::path path = opt.out / ("compare_" + e.id + ".csv");
  write_file(path, table_csv(blocks));
  for (const ErrorReport& rep : blocks) print_report(rep);
  std::printf("wrote %s\n", path.string().c_str());
  return 0;
}

namespace {

// The config file is a flat key=value list (keys are the long option names);
// values only apply for options absent from the command line. CLI11's own
// config support skips subcommand-attached config options, so this is done as
// an argv rewrite before parsing.
const char* const kConfigKeys[] = {"scheme", "filter", "K",      "sigma", "M",
                                   "nx",     "lambda", "eps-fixed", "out"};

std::vector<std::pair<std::string, std::string>> read_config_file(const fs::path& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read config file " + path.string());
  std::vector<std::pair<std::string, std::string>> items;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
  };
  while (std::getline(f, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw UsageError(path.string() + ":" + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    bool known = false;
    for (const char* k : kConfigKeys) known = known || key == k;
    if (!known)
      throw UsageError(path.string() + ":" + std::to_string(lineno) + ": unknown config key '" +
                       key + "'");
    items.emplace_back(key, val);
  }
  return items;
}

// Pulls --config out of args and appends --key=value for every config entry
// whose option was not given explicitly.
void splice_config(std::vector<std::string>& args) {
  fs::path path;
  bool have = false;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
      have = true;
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + i);
      have = true;
      break;
    }
  }
  if (!have) return;
  auto given = [&](const std::string& key) {
    std::string flag = "--" + key;
    for (const std::string& a : args)
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    return false;
  };
  for (const auto& [key, val] : read_config_file(path))
    if (!given(key)) args.push_back("--" + key + "=" + val);
}

}  // namespace

int main(int argc, const char* const* argv) {
  CLI::App app{"adaptive filtered scheme benchmarks for evolutionary Hamilton-Jacobi equations",
               "hjfilter"};
  app.require_subcommand(1);

  Options opt;
  std::string schemes_joined;
  std::string config_path;

  auto add_common = [&](CLI::App* sub, bool multi_scheme) {
    sub->add_option("experiment", opt.experiment, "experiment id (ex1a, ex1b, ...)")->required();
    if (multi_scheme)
      sub->add_option("--scheme", opt.schemes,
                      "scheme selectors (repeat or comma-separate: M, HC, F-LWR, AF-HC, ...)")
          ->delimiter(',');
    else
      sub->add_option("--scheme", schemes_joined,
                      "scheme selector (M, HC, F-LWR, AF-HC, ...); default AF-<experiment partner>");
    sub->add_option("--filter", opt.filter, "filter function: f1|f2|f3|f4")
        ->check(CLI::IsMember({"f1", "f2", "f3", "f4"}));
    sub->add_option("--K", opt.K, "threshold gain K > 1/2");
    sub->add_option("--sigma", opt.sigma, "indicator regularization sigma >= 0");
    sub->add_option("--M", opt.M, "indicator cutoff M in (0, 1/2)");
    sub->add_option("--nx", opt.nx, "grid resolution (run: default = coarsest ladder entry; "
                                    "convergence/compare: restricts the ladder to one entry)");
    sub->add_option("--eps-fixed", opt.eps_fixed,
                    "eps/dx coefficient for F- selectors (default: per-experiment)");
    sub->add_option("--lambda", opt.lambda, "override the experiment's dt/dx ratio");
    sub->add_option("--out", opt.out, "output directory (default: out)");
    // handled by splice_config before parsing; declared here for --help and so
    // a dangling "--config" (no value) still errors cleanly
    sub->add_option("--config", config_path, "flat key=value config file; explicit flags win");
  };

  CLI::App* c_run = app.add_subcommand("run", "single run; writes solution/diagnostics/activity CSVs");
  CLI::App* c_conv = app.add_subcommand("convergence", "refinement ladder; writes an error table CSV");
  CLI::App* c_cmp = app.add_subcommand("compare", "ladders for several schemes in one table");
  add_common(c_run, false);
  add_common(c_conv, false);
  add_common(c_cmp, true);

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    splice_config(args);
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return 2;
  }
  std::reverse(args.begin(), args.end());  // CLI11's vector overload wants reversed args

  try {
    app.parse(args);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!schemes_joined.empty()) opt.schemes = {schemes_joined};
    if (c_run->parsed()) return cmd_run(opt);
    if (c_conv->parsed()) return cmd_convergence(opt);
    return cmd_compare(opt);
  } catch (const BlowupError& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return 1;
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return 2;
  }
}

int main(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("hjfilter");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace hj::cli
