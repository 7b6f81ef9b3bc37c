#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "shear/series.hpp"

namespace shear {

inline constexpr std::uint64_t kDefaultSeed = 20241018;

/// Sample layout for ball scans.
///
/// The structured part walks spheres of radius s = radius·i/radial, splits the
/// mass as |z2|² = t·s² with t = j/(splits-1), and pairs `phases` equally spaced
/// phases on each coordinate. Seeded random points (uniform in the ball) and the
/// explicit probes follow, in that order.
struct SamplerConfig {
  double radius = 0.99;
  int radial = 32;
  int splits = 25;
  int phases = 8;
  int random = 48800;
  std::uint64_t seed = kDefaultSeed;
  std::vector<BallPoint> probes;
  /// Evaluation threads; never affects results.
  int threads = 1;

  std::size_t structured_count() const;
  std::size_t total() const { return structured_count() + static_cast<std::size_t>(random) + probes.size(); }
  /// Self-describing summary of everything that determines the samples.
  std::string digest() const;
};

struct SamplePoint {
  BallPoint z;
  double s = 0.0;
  double t = 0.0;
  double phase1 = 0.0;
  double phase2 = 0.0;
};

/// Throws ConfigError for radius ∉ (0,1) or counts < 1 (random may be 0).
std::vector<SamplePoint> generate_samples(const SamplerConfig& config);

/// Evaluates fn(i) for i in [0, n) over `threads` contiguous chunks and returns
/// the results in index order.
template <class T, class Fn>
std::vector<T> evaluate_indexed(std::size_t n, int threads, Fn fn) {
  std::vector<T> out(n);
  const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w * chunk; i < std::min(n, (w + 1) * chunk); ++i) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  pool.clear();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace shear
