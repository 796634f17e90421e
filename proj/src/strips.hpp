#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "geometry.hpp"
#include "space.hpp"

namespace streamis {

// One of the 6 shifted copies of the 3w-by-2w strip partitioning.
struct PartitionShift {
    std::int64_t sx = 0;  // 0, w, or 2w
    std::int64_t sy = 0;  // 0 or w
    bool operator==(const PartitionShift&) const = default;
};

std::array<PartitionShift, 6> partition_shifts(std::int64_t w);

struct StripKey {
    int shift = 0;  // index into partition_shifts(w)
    std::int64_t ix = 0, iy = 0;
    bool operator==(const StripKey&) const = default;
};

struct StripKeyHash {
    std::size_t operator()(const StripKey& k) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(k.shift) + 1);
        h ^= static_cast<std::uint64_t>(k.ix) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= static_cast<std::uint64_t>(k.iy) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// Key of the strip fully containing the w-square b under the given shift,
// or nullopt. Strips are half-open in both axes, so a square on a shared
// boundary belongs to exactly one strip per shift. w must be even and equal
// to 2 * b.radius.
std::optional<StripKey> strip_assign(const Ball& b, const PartitionShift& shift, std::int64_t w,
                                     int shift_index = 0);

// Extreme squares seen in one strip, ties resolved first-seen.
struct StripSummary {
    Ball leftmost, rightmost;
    std::size_t leftmost_idx = 0, rightmost_idx = 0;
    std::size_t seen = 0;

    void add(const Ball& b, std::size_t arrival_idx);
    std::size_t stored() const;  // 1 or 2 retained squares
};

// Maximum independent subset of everything seen in the strip: both extremes
// if their center-x gap exceeds w, else the leftmost alone.
std::vector<std::pair<std::size_t, Ball>> strip_solve(const StripSummary& s, std::int64_t w);

struct Strip3Result {
    std::vector<std::size_t> chosen;  // arrival indices, sorted
    std::vector<Ball> balls;
    int best_shift = 0;
    std::array<std::size_t, 6> per_shift_size{};
    SpaceAccount space;
    std::size_t events_consumed = 0;
};

// One-pass 3-approximate MIS for a unit square stream (l1 or linf, d=2).
// l1 inputs are lattice-rotated to linf first. Stores the per-strip extreme
// squares over the 6 shifted partitionings; peak is at most 12 per MIS square.
Strip3Result unit_square_mis_3approx(const BallStream& s);

}  // namespace streamis
