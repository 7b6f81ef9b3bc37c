#include "shear/sampling.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "shear/errors.hpp"
#include "shear/format.hpp"

namespace shear {

namespace {

SamplePoint make_sample(double s, double t, double phase1, double phase2) {
  const Complex z1 = std::polar(s * std::sqrt(1.0 - t), phase1);
  const Complex z2 = std::polar(s * std::sqrt(t), phase2);
  return {BallPoint(z1, z2), s, t, phase1, phase2};
}

SamplePoint describe_probe(const BallPoint& z) {
  const double s = std::sqrt(z.norm_sq());
  const double t = s > 0.0 ? std::norm(z.z2()) / (s * s) : 0.0;
  return {z, s, t, std::arg(z.z1()), std::arg(z.z2())};
}

}  // namespace

std::size_t SamplerConfig::structured_count() const {
  return static_cast<std::size_t>(radial) * static_cast<std::size_t>(splits) *
         static_cast<std::size_t>(phases) * static_cast<std::size_t>(phases);
}

std::string SamplerConfig::digest() const {
  std::string d = "radius=" + format_real(radius) + ";radial=" + std::to_string(radial) +
                  ";splits=" + std::to_string(splits) + ";phases=" + std::to_string(phases) +
                  ";random=" + std::to_string(random) + ";seed=" + std::to_string(seed) + ";probes=[";
  for (std::size_t i = 0; i < probes.size(); ++i) {
    if (i > 0) d += ' ';
    d += "(" + format_complex(probes[i].z1()) + ";" + format_complex(probes[i].z2()) + ")";
  }
  return d + "]";
}

std::vector<SamplePoint> generate_samples(const SamplerConfig& config) {
  if (!(config.radius > 0.0 && config.radius < 1.0)) throw ConfigError("scan radius must lie in (0,1)");
  if (config.radial < 1 || config.splits < 1 || config.phases < 1 || config.random < 0) {
    throw ConfigError("grid counts must be >= 1");
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;

  std::vector<SamplePoint> out;
  out.reserve(config.total());
  for (int i = 1; i <= config.radial; ++i) {
    const double s = config.radius * i / config.radial;
    for (int j = 0; j < config.splits; ++j) {
      const double t = config.splits == 1 ? 0.5 : static_cast<double>(j) / (config.splits - 1);
      for (int a = 0; a < config.phases; ++a) {
        for (int b = 0; b < config.phases; ++b) {
          out.push_back(make_sample(s, t, two_pi * a / config.phases, two_pi * b / config.phases));
        }
      }
    }
  }

  // Sequential draws keep the random block independent of the evaluation thread count.
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < config.random; ++i) {
    const double s = config.radius * std::pow(unit(rng), 0.25);
    const double t = unit(rng);
    const double p1 = two_pi * unit(rng);
    const double p2 = two_pi * unit(rng);
    out.push_back(make_sample(s, t, p1, p2));
  }

  for (const BallPoint& p : config.probes) out.push_back(describe_probe(p));
  return out;
}

}  // namespace shear
