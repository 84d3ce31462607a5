#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hjfilter/analysis.hpp"
#include "hjfilter/experiments.hpp"

namespace hj::cli {

// Everything a command needs, assembled from flags and the optional
// key=value config file. Unset optionals fall back to experiment defaults.
struct Options {
  std::string experiment;
  std::vector<std::string> schemes;  // compare takes several; run/convergence at most one
  std::string filter = "f1";
  double K = 1.0;
  double sigma = 1.0;
  double M = 0.1;
  std::optional<int> nx;
  std::optional<double> eps_fixed;  // eps/dx coefficient for F- selectors
  std::optional<double> lambda;     // dt/dx override (advanced; changes N_t)
  std::filesystem::path out = "out";
};

// Thrown for bad invocations that CLI11 cannot catch itself (empty compare
// selector list and friends); mapped to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scientific notation with 6 significant digits, '.' decimal separator,
// locale-independent.
std::string format_sci(double v);

// One scheme's refinement ladder with order columns filled. `fine` backs
// fine-grid references and may be shared across schemes.
ErrorReport ladder_report(const Experiment& e, const std::string& scheme_text,
                          const Options& opt, const FineGridReference* fine = nullptr);

// Fixed-header CSV: N_x,N_t,scheme,linf_err,linf_ord,l1_err,l1_ord,cpu_s.
// Blocks are concatenated under one header; order fields are empty on
// ladder-first rows.
std::string table_csv(const std::vector<ErrorReport>& blocks);

int cmd_run(const Options& opt);
int cmd_convergence(const Options& opt);
int cmd_compare(const Options& opt);

// Full argv-level entry point: parses, dispatches, maps failures to exit
// codes (0 ok, 1 blowup, 2 usage/config).
int main(int argc, const char* const* argv);
int main(const std::vector<std::string>& args);  // convenience for tests

}  // namespace hj::cli
