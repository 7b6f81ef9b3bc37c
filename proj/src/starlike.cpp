#include "shear/starlike.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "shear/errors.hpp"
#include "shear/format.hpp"

namespace shear {

namespace {

struct Scored {
  ExtendedReal value;
  std::optional<double> alpha;
};

bool better(const ExtendedReal& v, const BallPoint& z, const ExtendedReal& best_v, const BallPoint& best_z) {
  if (v < best_v) return true;
  if (best_v < v) return false;
  return lex_less(z, best_z);
}

ScanReport reduce(std::string name, const std::vector<SamplePoint>& samples, const std::vector<Scored>& scored,
                  std::string digest) {
  ScanReport report;
  report.scan = std::move(name);
  report.samples = samples.size();
  report.config_digest = std::move(digest);
  if (samples.empty()) return report;
  std::size_t best = 0;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (better(scored[i].value, samples[i].z, scored[best].value, samples[best].z)) best = i;
  }
  report.extremum = scored[best].value;
  report.witness = samples[best].z;
  report.witness_alpha = scored[best].alpha;
  report.violation = report.extremum < ExtendedReal::from_double(report.threshold);
  return report;
}

void fill_trace(std::vector<TraceRow>* trace, const std::vector<SamplePoint>& samples,
                const std::vector<Scored>& scored) {
  if (trace == nullptr) return;
  trace->clear();
  trace->reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const SamplePoint& p = samples[i];
    trace->push_back({p.s, p.t, p.phase1, p.phase2, scored[i].value.value()});
  }
}

}  // namespace

ExtendedReal starlike_quantity_extended(const ShearingMap& f, const BallPoint& z) {
  const ScaledComplex g = f.g().value_scaled(z.z2());
  const ScaledComplex dg = f.g().derivative_scaled(z.z2());
  const ScaledComplex w = g - dg * z.z2();
  const double cross = (w.mantissa * std::conj(z.z1())).real();
  return ExtendedReal::from_double(z.norm_sq()) + ExtendedReal::scaled(w.log_scale, cross);
}

double starlike_quantity(const ShearingMap& f, const BallPoint& z) {
  const ExtendedReal q = starlike_quantity_extended(f, z);
  if (!q.is_plain()) throw OverflowError("starlike quantity exceeds double range; use the extended evaluator");
  return q.value();
}

ExtendedReal eq1_residual_extended(const ShearingMap& f, double alpha, const BallPoint& z) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in (0,1]");
  const ScaledComplex shift = f.g().value_scaled(z.z2()) - f.g().value_scaled(alpha * z.z2()) * (1.0 / alpha);
  const ScaledComplex first = ScaledComplex{0.0, z.z1()} + shift;
  const ExtendedReal lhs =
      ExtendedReal::scaled(2.0 * first.log_scale, std::norm(first.mantissa)) + ExtendedReal::from_double(std::norm(z.z2()));
  return ExtendedReal::from_double(1.0 / (alpha * alpha)) - lhs;
}

double eq1_residual(const ShearingMap& f, double alpha, const BallPoint& z) {
  const ExtendedReal r = eq1_residual_extended(f, alpha, z);
  if (!r.is_plain()) throw OverflowError("eq1 residual exceeds double range; use the extended evaluator");
  return r.value();
}

ScanReport starlike_scan(const ShearingMap& f, const SamplerConfig& config, std::vector<TraceRow>* trace) {
  if (config.radius > 0.999) throw ConfigError("starlike scan radius must be <= 0.999");
  const std::vector<SamplePoint> samples = generate_samples(config);
  const auto scored = evaluate_indexed<Scored>(samples.size(), config.threads, [&](std::size_t i) {
    return Scored{starlike_quantity_extended(f, samples[i].z), std::nullopt};
  });
  fill_trace(trace, samples, scored);
  return reduce("starlike", samples, scored, config.digest());
}

ScanReport eq1_scan(const ShearingMap& f, std::span<const double> alphas, const SamplerConfig& config,
                    std::vector<TraceRow>* trace) {
  if (alphas.empty()) throw ConfigError("eq1 scan needs at least one alpha");
  for (double a : alphas) {
    if (!(a > 0.0 && a <= 1.0)) throw ConfigError("alpha grid entries must lie in (0,1]");
  }
  const std::vector<SamplePoint> samples = generate_samples(config);
  const auto scored = evaluate_indexed<Scored>(samples.size(), config.threads, [&](std::size_t i) {
    Scored best{eq1_residual_extended(f, alphas[0], samples[i].z), alphas[0]};
    for (std::size_t k = 1; k < alphas.size(); ++k) {
      const ExtendedReal v = eq1_residual_extended(f, alphas[k], samples[i].z);
      if (v < best.value) best = {v, alphas[k]};
    }
    return best;
  });
  fill_trace(trace, samples, scored);
  std::string digest = config.digest() + ";alphas=[";
  for (std::size_t k = 0; k < alphas.size(); ++k) digest += (k ? " " : "") + format_real(alphas[k]);
  return reduce("eq1", samples, scored, digest + "]");
}

std::vector<double> default_alpha_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 10; ++i) grid.push_back(i / 10.0);
  return grid;
}

bool BoundednessReport::identically_small() const {
  return max_log_abs == -std::numeric_limits<double>::infinity();
}

BoundednessReport boundedness_scan(const DiskFunction& g, double r, int angular, std::span<const Complex> probes) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("boundedness scan radius must lie in (0,1)");
  if (angular < 0) throw ConfigError("angular probe count must be >= 0");
  BoundednessReport report{.max_log_abs = -std::numeric_limits<double>::infinity()};
  auto visit = [&](Complex zeta) {
    const double v = g.log_abs(zeta);
    if (report.samples == 0 || v > report.max_log_abs) {
      report.max_log_abs = v;
      report.witness = zeta;
    }
    ++report.samples;
  };
  for (int j = 0; j < angular; ++j) visit(std::polar(r, 2.0 * std::numbers::pi * j / angular));
  for (Complex p : probes) {
    if (std::abs(p) == 0.0) throw DomainError("boundedness probe must be nonzero");
    visit(p * (r / std::abs(p)));
  }
  return report;
}

Complex aligned_boundary_probe(double r, double phase) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("probe radius must lie in (0,1)");
  const double c = std::cos(phase);
  const double disc = c * c - (1.0 - r * r);
  if (c <= 0.0 || disc < 0.0) throw DomainError("ray from 1 at this angle does not meet |zeta| = r");
  const double delta = (1.0 - r * r) / (c + std::sqrt(disc));
  return 1.0 - std::polar(delta, phase);
}

}  // namespace shear
