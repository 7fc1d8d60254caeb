#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "orbitkit/twisted_map.hpp"

namespace orbitkit {

/// Bounds for random rationals: numerators in [-num_max, num_max],
/// denominators in [1, den_max].
struct SampleRange {
  long num_max = 20;
  long den_max = 10;
};

/// Deterministic source of exact random inputs.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, SampleRange range = {});
  /// Independent stream for (seed, sample, stream); used so that parallel
  /// runs draw the same values regardless of scheduling.
  RandomSource(std::uint64_t seed, std::uint64_t sample, std::uint64_t stream, SampleRange range = {});

  GaussianRational rational();
  GaussianRational nonzero_rational();
  /// re + im*i with both parts drawn by rational().
  GaussianRational gaussian();
  std::vector<GaussianRational> rationals(std::size_t count);
  std::size_t index(std::size_t bound);

  QMatrix matrix(std::size_t n);
  /// Redraws until the determinant is nonzero.
  QMatrix invertible(std::size_t n);
  /// Random point (z, xi) in the given chart.
  ChartPoint chart_point(const ParabolicData& p, const WeylCoset& sigma);

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
  SampleRange range_;
};

}  // namespace orbitkit
