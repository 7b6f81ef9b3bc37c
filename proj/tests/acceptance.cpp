// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "shear/cli.hpp"
#include "shear/counterexample.hpp"
#include "shear/errors.hpp"
#include "shear/format.hpp"
#include "shear/growth.hpp"
#include "shear/starlike.hpp"

using namespace shear;

namespace {

// Collects sub-checks of one criterion.
class Criterion {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      failures_.push_back(what);
    }
    ++count_;
  }
  bool pass() const { return pass_; }
  std::string summary() const {
    if (pass_) return std::to_string(count_) + " checks";
    std::string s;
    for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
    return s;
  }

 private:
  bool pass_ = true;
  int count_ = 0;
  std::vector<std::string> failures_;
};

std::string num(double x) { return format_real(x); }

ShearingMap monomial(Complex a2) { return ShearingMap::from_series(CoefficientSeries({a2})); }

ShearingMap geometric_shear() {
  return ShearingMap::from_series(CoefficientSeries(oracle::geometric_coeffs(60), oracle::geometric_weighted_tail(60)));
}

// 1. Sharp constant 3√3/2.
void sharp_constant(Criterion& c) {
  const double a = 3.0 * std::sqrt(3.0) / 2.0;
  const Certificate cert = starlike_certificate(monomial(a));
  c.check(cert.certified(), "a2 = 3sqrt3/2 not certified");
  c.check(std::abs(cert.margin) <= 1e-12, "margin at a2 = 3sqrt3/2 is " + num(cert.margin));

  SamplerConfig cfg;
  cfg.radius = 0.999;
  c.check(cfg.total() == 100000, "sampler does not draw 1e5 points");
  const ScanReport sharp = starlike_scan(monomial(a), cfg);
  c.check(sharp.extremum.value() >= -1e-12, "scan minimum at the sharp constant " + num(sharp.extremum.value()));

  const ScanReport over = starlike_scan(monomial(2.7), cfg);
  c.check(over.violation && over.extremum.value() <= -0.01, "a2 = 2.7 minimum " + num(over.extremum.value()));
  const double s = std::sqrt(over.witness.norm_sq());
  c.check(s > a / 2.7, "witness sphere radius " + num(s) + " not beyond " + num(a / 2.7));
  // closed-form witness family: s² - 2.7·(2/(3√3))s³ < 0 on that sphere
  c.check(s * s - 2.7 * (2.0 / (3.0 * std::sqrt(3.0))) * s * s * s < 0.0, "witness sphere not in the negative family");
}

// 2. Closed-form operator norm vs power iteration.
void operator_norm(Criterion& c) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Jacobian2 j{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
    const double ref = oracle::power_iteration_opnorm({j.a11, j.a12, j.a21, j.a22});
    worst = std::max(worst, std::abs(opnorm2(j) - ref) / ref);
  }
  c.check(worst <= 1e-10, "max relative error " + num(worst));
  const double golden = opnorm2(Jacobian2{1.0, 1.0, 0.0, 1.0});
  c.check(std::abs(golden - (1.0 + std::sqrt(5.0)) / 2.0) <= 1e-12, "unipotent m=1 gives " + num(golden));
}

// 3. Growth estimate on starlike-certified shears.
void growth_conformance(Criterion& c) {
  std::vector<Complex> tapered;
  for (int k = 2; k <= 10; ++k) tapered.emplace_back(2.5 / (k - 1) / std::ldexp(1.0, k - 2), 0.0);
  const std::vector<std::pair<std::string, ShearingMap>> shears = {
      {"g=0", ShearingMap{}},
      {"a2=0.5", monomial(0.5)},
      {"a2=1", monomial(1.0)},
      {"a_k=2^-k", geometric_shear()},
      {"a_k=2.5/((k-1)2^(k-2)), k<=10", ShearingMap::from_series(CoefficientSeries(tapered))}};
  std::vector<double> grid;
  for (int i = 1; i <= 9; ++i) grid.push_back(i / 10.0);

  for (const auto& [name, f] : shears) {
    const Certificate cert = starlike_certificate(f);
    if (!cert.certified()) {
      c.check(false, name + " is not starlike-certified (S2 = " + num(starlike_constant() - cert.margin) + " > 3sqrt3/2)");
      continue;
    }
    int violations = 0;
    for (const GrowthRecord& r : growth_conformance_scan(f, grid)) violations += r.conforms ? 0 : 1;
    c.check(violations == 0, name + ": " + std::to_string(violations) + " growth violations");
  }
  c.check(std::abs(s0_growth_bound(0.5) - 23.3137085) <= 1e-6, "bound(0.5) = " + num(s0_growth_bound(0.5)));
  double worst = 0.0;
  for (int i = 1; i <= 100; ++i) {
    const double r = i / 101.0;
    worst = std::max(worst, std::abs(schwarz_pick_bound(std::sqrt(r), std::sqrt(r)) - s0_growth_bound(r)) / s0_growth_bound(r));
  }
  c.check(worst <= 1e-9, "substitution identity off by " + num(worst));
}

// 4. Counterexample divergence.
void divergence(Criterion& c) {
  std::vector<double> grid;
  for (int i = 10; i <= 99; ++i) grid.push_back(i / 100.0);
  const double dev = unit_modulus_check(grid);
  c.check(dev <= 1e-9, "|h(r)| deviates by " + num(dev));

  const double norm = shear_opnorm(counterexample_map(), BallPoint(0.0, 0.9));
  c.check(std::abs(norm - 24300.0001) <= 1e-3, "||df(0,0.9)|| = " + num(norm));
  c.check(norm >= ce_lower_bound(0.9) && std::abs(ce_lower_bound(0.9) - 24297.2) <= 0.1,
          "lower bound " + num(ce_lower_bound(0.9)));
  c.check(std::abs(divergence_ratio(0.9) - 24.300) <= 1e-3, "ratio(0.9) = " + num(divergence_ratio(0.9)));
  c.check(std::abs(divergence_ratio(0.99) - 294.03) <= 0.05, "ratio(0.99) = " + num(divergence_ratio(0.99)));

  const DivergenceScan scan = divergence_scan(default_divergence_grid(), 10.0);
  c.check(scan.ratio_increasing, "ratio not strictly increasing on the default grid");
  c.check(scan.verdict == Verdict::Affirmative, "verdict " + to_string(scan.verdict));
}

// 5. The counterexample is not starlike.
void not_starlike(Criterion& c) {
  const ShearingMap f = counterexample_map();
  const Complex z2 = 1.0 - 0.3 * std::polar(1.0, std::numbers::pi / 6);
  const Complex w = f.g().value(z2) - z2 * f.g().derivative(z2);
  const BallPoint probe(-0.2 * w / std::abs(w), z2);
  const double q = starlike_quantity(f, probe);
  c.check(q < -1e16, "starlike quantity at the aligned probe " + num(q));

  const double r = 0.995;
  const std::vector<Complex> probes{aligned_boundary_probe(r, std::numbers::pi / 6)};
  const BoundednessReport b = boundedness_scan(f.g(), r, 4096, probes);
  c.check(b.max_log_abs >= 1e6, "max log|g| on |z| = 0.995 is " + num(b.max_log_abs));
}

// 6. Embedding certificate.
void embedding(Criterion& c) {
  const ShearingMap f = geometric_shear();
  const Certificate cert = embed_certificate(f, 100);
  c.check(cert.certified() && cert.degree == 2, "minimal N is not 2");
  c.check(cert.margin == 0.0, "margin " + num(cert.margin));
  const double t2 = *tail_sum(*f.coefficients(), 2);
  const double t1 = *tail_sum(*f.coefficients(), 1);
  c.check(std::abs(t2 - 1.0) <= 1e-12, "tail_sum(2) = " + num(t2));
  c.check(std::abs(t1 - 1.5) <= 1e-12, "tail_sum(1) = " + num(t1));
  const double s1 = *coeff_sum_s1(*tail_compose(f, 2).coefficients());
  c.check(std::abs(s1 - 1.0) <= 1e-12, "S1 of the tail = " + num(s1));
}

// 7. Truncations converge at the coefficient-tail rate.
void truncation(Criterion& c) {
  const ShearingMap f = geometric_shear();
  double prev = INFINITY;
  for (int m = 2; m <= 10; ++m) {
    const ShearingMap fm = truncate_shear(f, m);
    double sup = 0.0;
    for (int i = 0; i <= 64; ++i) {
      for (int a = 0; a < 256; ++a) {
        const BallPoint z(0.0, std::polar(0.5 * i / 64, 2.0 * std::numbers::pi * a / 256));
        const ComplexPair d1 = shear_eval(fm, z), d0 = shear_eval(f, z);
        sup = std::max(sup, std::hypot(std::abs(d1[0] - d0[0]), std::abs(d1[1] - d0[1])));
      }
    }
    double bound = 0.0;
    for (int k = 60; k > m; --k) bound += std::abs(f.coefficients()->coeff(k)) * std::pow(0.5, k);
    c.check(sup <= bound, "m=" + std::to_string(m) + ": sup " + num(sup) + " > bound " + num(bound));
    c.check(sup < prev, "m=" + std::to_string(m) + ": sup did not decrease");
    prev = sup;
  }
}

// 8. Inverse round trip and Jacobian structure.
void structure(Criterion& c) {
  std::mt19937_64 rng(8);
  const ShearingMap maps[] = {geometric_shear(), monomial(Complex(1.0, -2.0)), counterexample_map()};
  double worst_rt = 0.0, worst_fd = 0.0;
  bool unit_det = true;
  for (const ShearingMap& f : maps) {
    // plain evaluation of the closed form overflows near the boundary
    const double radius = f.coefficients() ? 0.999 : 0.9;
    for (int i = 0; i < 10000; ++i) {
      const auto p = oracle::random_ball_point(rng, radius);
      const BallPoint z(p[0], p[1]);
      const ComplexPair w = shear_eval(f, z);
      const ComplexPair back = shear_inverse_eval(f, w);
      worst_rt = std::max(worst_rt, std::hypot(std::abs(back[0] - z.z1()), std::abs(back[1] - z.z2())) /
                                        std::max(1.0, std::abs(w[0])));
    }
    for (int i = 0; i < 2000; ++i) {
      const auto p = oracle::random_ball_point(rng, 0.9);
      const BallPoint z(p[0], p[1]);
      const Jacobian2 j = shear_jacobian(f, z);
      unit_det = unit_det && j.det() == Complex(1.0);
      const double h = 1e-6;
      const ComplexPair a = shear_eval(f, BallPoint(z.z1() + h, z.z2())), b = shear_eval(f, BallPoint(z.z1() - h, z.z2()));
      const ComplexPair c2 = shear_eval(f, BallPoint(z.z1(), z.z2() + h)), d = shear_eval(f, BallPoint(z.z1(), z.z2() - h));
      const Complex fd[4] = {(a[0] - b[0]) / (2 * h), (c2[0] - d[0]) / (2 * h), (a[1] - b[1]) / (2 * h), (c2[1] - d[1]) / (2 * h)};
      const Complex ex[4] = {j.a11, j.a12, j.a21, j.a22};
      double err = 0.0, scale = 0.0;
      for (int e = 0; e < 4; ++e) {
        err += std::norm(fd[e] - ex[e]);
        scale += std::norm(ex[e]);
      }
      worst_fd = std::max(worst_fd, std::sqrt(err / scale));
    }
  }
  c.check(worst_rt <= 1e-12, "round trip error " + num(worst_rt));
  c.check(unit_det, "a shear Jacobian has det != 1");
  c.check(worst_fd <= 1e-6, "Jacobian vs finite differences " + num(worst_fd));
}

// 9. Byte-identical reports for the canned configs.
void determinism(Criterion& c) {
  const std::filesystem::path root = SHEAR_SOURCE_DIR;
  std::filesystem::current_path(root);
  std::ifstream configs(root / "tests/golden/configs.txt");
  int seen = 0;
  for (std::string line; std::getline(configs, line);) {
    std::istringstream words(line);
    std::string name;
    words >> name;
    std::vector<std::string> args{"shearcheck"};
    for (std::string w; words >> w;) args.push_back(w);
    std::ifstream golden_in(root / "tests/golden" / (name + ".csv"), std::ios::binary);
    const std::string golden{std::istreambuf_iterator<char>(golden_in), {}};
    c.check(!golden.empty(), name + ": golden file missing");
    for (const char* threads : {"1", "4", "1", "4"}) {
      std::vector<std::string> a = args;
      a.insert(a.end(), {"--threads", threads});
      std::vector<const char*> argv;
      for (const auto& s : a) argv.push_back(s.c_str());
      std::ostringstream out, err;
      cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
      c.check(out.str() == golden, name + " at " + threads + " threads differs from golden");
    }
    ++seen;
  }
  c.check(seen == 3, "expected three canned configs");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"1 sharp starlike constant 3sqrt3/2", sharp_constant},
      {"2 operator norm vs power iteration", operator_norm},
      {"3 S0 growth estimate conformance", growth_conformance},
      {"4 counterexample divergence", divergence},
      {"5 counterexample is not starlike", not_starlike},
      {"6 embedding certificate", embedding},
      {"7 truncation convergence", truncation},
      {"8 inverse round trip and Jacobian structure", structure},
      {"9 deterministic golden reports", determinism},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [name, run] : criteria) {
    Criterion c;
    try {
      run(c);
    } catch (const std::exception& e) {
      c.check(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.pass() ? "[PASS] " : "[FAIL] ") << name << ": " << c.summary() << std::endl;
    failed += c.pass() ? 0 : 1;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed in " << secs << " s" << std::endl;
  return failed == 0 ? 0 : 1;
}
