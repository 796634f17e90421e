#include "strips.hpp"

#include <algorithm>
#include <unordered_map>

#include "error.hpp"

namespace streamis {

std::array<PartitionShift, 6> partition_shifts(std::int64_t w) {
    return {PartitionShift{0, 0},     PartitionShift{w, 0},     PartitionShift{2 * w, 0},
            PartitionShift{0, w},     PartitionShift{w, w},     PartitionShift{2 * w, w}};
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

std::optional<StripKey> strip_assign(const Ball& b, const PartitionShift& shift, std::int64_t w,
                                     int shift_index) {
    require(w >= 2 && w % 2 == 0, Errc::invalid_argument, "strip width parameter w must be even");
    require(b.dim == 2, Errc::invalid_argument, "strip decomposition is two-dimensional");
    require(2 * b.radius == w, Errc::invalid_argument,
            "non-unit square: radius " + std::to_string(b.radius) + " against w " +
                std::to_string(w));
    const std::int64_t r = w / 2;
    const std::int64_t lx = b.center[0] - r, hx = b.center[0] + r;
    const std::int64_t ly = b.center[1] - r, hy = b.center[1] + r;
    const std::int64_t ix = floor_div(lx - shift.sx, 3 * w);
    const std::int64_t iy = floor_div(ly - shift.sy, 2 * w);
    // containment in the half-open strip [sx+3w*ix, sx+3w*(ix+1)) x [sy+2w*iy, ...)
    if (hx >= shift.sx + 3 * w * (ix + 1)) return std::nullopt;
    if (hy >= shift.sy + 2 * w * (iy + 1)) return std::nullopt;
    return StripKey{shift_index, ix, iy};
}

void StripSummary::add(const Ball& b, std::size_t arrival_idx) {
    if (seen == 0) {
        leftmost = rightmost = b;
        leftmost_idx = rightmost_idx = arrival_idx;
    } else {
        if (b.center[0] < leftmost.center[0]) {  // ties keep the first-seen square
            leftmost = b;
            leftmost_idx = arrival_idx;
        }
        if (b.center[0] > rightmost.center[0]) {
            rightmost = b;
            rightmost_idx = arrival_idx;
        }
    }
    ++seen;
}

std::size_t StripSummary::stored() const {
    if (seen == 0) return 0;
    return leftmost_idx == rightmost_idx ? 1 : 2;
}

std::vector<std::pair<std::size_t, Ball>> strip_solve(const StripSummary& s, std::int64_t w) {
    require(s.seen > 0, Errc::invalid_argument, "strip_solve on an empty summary");
    std::vector<std::pair<std::size_t, Ball>> out;
    out.emplace_back(s.leftmost_idx, s.leftmost);
    if (s.rightmost.center[0] - s.leftmost.center[0] > w)
        out.emplace_back(s.rightmost_idx, s.rightmost);
    return out;
}

Strip3Result unit_square_mis_3approx(const BallStream& input) {
    require(input.dim == 2, Errc::invalid_argument, "unit square algorithm needs d=2");
    require(input.p == Norm::l1 || input.p == Norm::linf, Errc::invalid_argument,
            "unit square algorithm covers l1 and linf streams");
    require(input.unit(), Errc::invalid_argument, "dilation must be 1 (all radii equal)");

    Strip3Result r;
    if (input.balls.empty()) return r;

    const BallStream stream = input.p == Norm::l1 ? rotate_l1_to_linf(input) : input;
    const std::int64_t w = 2 * stream.balls.front().radius;
    const auto shifts = partition_shifts(w);

    std::array<std::unordered_map<StripKey, StripSummary, StripKeyHash>, 6> strips;
    for (std::size_t i = 0; i < stream.balls.size(); ++i) {
        const Ball& b = stream.balls[i];
        for (int si = 0; si < 6; ++si) {
            auto key = strip_assign(b, shifts[si], w, si);
            if (!key) continue;
            StripSummary& sum = strips[si][*key];
            std::size_t before = sum.stored();
            sum.add(b, i);
            std::size_t after = sum.stored();
            if (after > before) r.space.add(after - before);
        }
        ++r.events_consumed;
    }

    int best = 0;
    std::vector<std::size_t> best_members;
    for (int si = 0; si < 6; ++si) {
        std::vector<std::size_t> members;
        for (const auto& [key, sum] : strips[si])
            for (const auto& [idx, ball] : strip_solve(sum, w)) members.push_back(idx);
        r.per_shift_size[si] = members.size();
        if (members.size() > best_members.size()) {
            best = si;
            best_members = std::move(members);
        }
    }
    std::sort(best_members.begin(), best_members.end());
    r.best_shift = best;
    r.chosen = std::move(best_members);
    r.balls.reserve(r.chosen.size());
    for (std::size_t idx : r.chosen) r.balls.push_back(input.balls[idx]);
    return r;
}

}  // namespace streamis
