#pragma once

#include <array>
#include <cstdint>

#include "geometry.hpp"
#include "space.hpp"

namespace streamis {

std::uint64_t splitmix64(std::uint64_t x);

// Sketch capacity used by the estimator.
std::size_t estimator_sketch_k(double eps);

struct EstimatorResult {
    std::uint64_t estimate = 0;
    std::array<double, 6> per_shift{};  // corrected per-shift estimates
    SpaceAccount space;                 // items = retained strip keys
    std::size_t events_consumed = 0;
};

// (3+eps)-style one-sided estimator of alpha for a unit square stream.
// Per shift, a bottom-k sketch over nonempty strip keys with k = ceil(48/eps^2)
// estimates the nonempty-strip count (exact below capacity) while the retained
// keys carry exact extreme-square summaries; the per-shift value is
// gamma * delta / (1+eps/4) and the result is the shift maximum divided by
// (1+eps/4) once more, rounded up to an integer. Requires 0 < eps <= 1.
EstimatorResult alpha_estimator_3eps(const BallStream& s, double eps, std::uint64_t seed);

}  // namespace streamis
