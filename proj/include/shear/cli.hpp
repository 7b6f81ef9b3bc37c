#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "shear/sampling.hpp"

namespace shear::cli {

/// Exit statuses: success, mathematical violation found by a scan, operational error.
enum ExitStatus : int { kOk = 0, kViolation = 1, kError = 2 };

struct RunConfig {
  std::string subcommand;
  std::string input_path;
  std::string builtin;
  double radius = 0.99;
  std::string grid;   // "A:B[:N]"; empty selects the subcommand default
  std::string alpha;  // "A:B[:N]" for eq1-scan
  int radial = 0;     // 0 selects the subcommand default
  int splits = 25;
  int phases = 8;
  int samples = 48800;
  int angular = 2048;
  std::uint64_t seed = kDefaultSeed;
  std::string probes;  // "re,im[;re,im...]"
  double c_report = 10.0;
  int n_max = 1000;
  std::string out_path;
  std::string trace_path;
  std::string format = "csv";
  /// Evaluation threads. Not part of the digest: output never depends on it.
  int threads = 1;

  std::string digest() const;
};

/// Parses "A:B[:N]" into N points evenly spaced from A to B inclusive.
std::vector<double> parse_grid(const std::string& text, int default_count);

/// Parses "re,im;re,im;..." into complex numbers.
std::vector<std::complex<double>> parse_complex_list(const std::string& text);

/// Runs one subcommand. Reports go to config.out_path, or to `out` when empty;
/// diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shear::cli
