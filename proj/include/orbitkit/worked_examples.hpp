#pragma once

#include <cstdint>

#include "orbitkit/json_io.hpp"
#include "orbitkit/sampling.hpp"

namespace orbitkit {

/// The sign-adjusted swap [[0,1],[-1,0]] installed on the non-identity coset
/// of gl_2, for which the closed SL_2 chart formulas hold verbatim.
WeylCoset sl2_swap_coset(const ParabolicData& p);

/// lambda = (s/2, -s/2): mu in both charts against the closed 2x2 formulas,
/// and the transition z -> -1/z, w -> z^2 w + z.
Json sl2_fixture(const GaussianRational& s, std::size_t samples, std::uint64_t seed, SampleRange range = {});

/// Regular gl_3: solve_w against the closed formulas for w_{12}, w_{23}, w_{13}.
Json gl3_fixture(const WeightLambda& lambda, std::size_t samples, std::uint64_t seed, SampleRange range = {});

/// (s q/(p+q))^p, (-s p/(p+q))^q.
WeightLambda grassmannian_lambda(std::size_t p, std::size_t q, const GaussianRational& s);

/// Two-block case: w = -xi^T / s, mu at z = 0 against the block matrix with
/// -xi^T in the lower-left corner, and the affine correction against
/// -s d log det(cz + d).
Json grassmannian_fixture(std::size_t p, std::size_t q, const GaussianRational& s, std::size_t samples,
                          std::uint64_t seed, SampleRange range = {});

}  // namespace orbitkit
