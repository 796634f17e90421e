#pragma once

#include <cstdint>
#include <vector>

#include "geometry.hpp"
#include "space.hpp"

namespace streamis {

// Number of weight classes retained per strip: ceil(log_{1+eps} 1/eps) + 1.
std::size_t weight_class_window(double eps);

// Weight class by ceiling-rounding to the next power of (1+eps).
std::int32_t weight_class(std::int64_t weight, double eps);

struct WeightedResult {
    std::vector<std::size_t> chosen;  // arrival indices, sorted
    std::vector<Ball> balls;
    std::int64_t total_weight = 0;
    int best_shift = 0;
    SpaceAccount space;
    std::size_t events_consumed = 0;
};

// Weight-class-pruned strip decomposition for weighted unit square streams.
// Per strip, extreme-square summaries are kept for the top weight classes
// only; classes falling below eps times the strip's max class are discarded
// as they are dominated. Output weight is at least alpha_w / ((3+eps)(1+eps)).
// Requires positive weights, dilation 1, l1 or linf, 0 < eps <= 1.
WeightedResult weighted_unit_square_3eps(const BallStream& s, double eps);

}  // namespace streamis
