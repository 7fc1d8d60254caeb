#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbitkit/json_io.hpp"
#include "orbitkit/sampling.hpp"

namespace orbitkit {

enum class Check { kRoundtrip, kCocycle, kEquivariance, kOverlap, kPullback, kScale };

std::string_view check_name(Check c);

struct VerifyOptions {
  std::size_t samples = 50;
  std::uint64_t seed = 0;
  SampleRange range;
  unsigned jobs = 1;
  /// When set, also checks lambda -> c*lambda: w(c lambda, xi) = w(lambda, xi/c)
  /// and mu(c lambda, z, c xi) = c mu(lambda, z, xi).
  std::optional<GaussianRational> scale;
  /// Redraws allowed per sample when a random input leaves the chart.
  std::size_t max_attempts = 20;
};

struct CheckOutcome {
  Check check;
  std::size_t sample = 0;
  bool pass = false;
  std::size_t attempts = 1;
  /// Exact inputs and both sides of the identity; filled only on failure.
  Json witness;
};

struct VerifyReport {
  std::vector<CheckOutcome> outcomes;  // sorted by (sample, check)

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
};

/// Runs body(k) for k in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

/// Single-sample checks. Each draws its inputs from `rng`.
CheckOutcome check_roundtrip(const ParabolicData& p, std::span<const WeylCoset> atlas, RandomSource& rng);
CheckOutcome check_cocycle(const ParabolicData& p, std::span<const WeylCoset> atlas, RandomSource& rng,
                           std::size_t max_attempts);
CheckOutcome check_equivariance(const ParabolicData& p, std::span<const WeylCoset> atlas, RandomSource& rng);
CheckOutcome check_overlap(const ParabolicData& p, std::span<const WeylCoset> atlas, RandomSource& rng,
                           std::size_t max_attempts);
CheckOutcome check_pullback(const ParabolicData& p, std::span<const WeylCoset> atlas, RandomSource& rng);
CheckOutcome check_scale(const ParabolicData& p, std::span<const WeylCoset> atlas, const GaussianRational& c,
                         RandomSource& rng);

VerifyReport verify_all(const ParabolicData& p, std::span<const WeylCoset> atlas, const VerifyOptions& opt);

/// {"schema": "1", "config": ..., "summary": ..., "results": [...]}.
Json to_json(const VerifyReport& r, const ParabolicData& p, std::span<const WeylCoset> atlas,
             const VerifyOptions& opt);

}  // namespace orbitkit
