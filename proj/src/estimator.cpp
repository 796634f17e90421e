#include "estimator.hpp"

#include <cmath>
#include <map>
#include <unordered_map>

#include "error.hpp"
#include "strips.hpp"

namespace streamis {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::size_t estimator_sketch_k(double eps) {
    return static_cast<std::size_t>(std::ceil(48.0 / (eps * eps)));
}

namespace {

std::uint64_t key_hash(const StripKey& key, std::uint64_t seed) {
    std::uint64_t h = splitmix64(seed ^ 0x6d5f5b1a2c3e4d01ull);
    h = splitmix64(h ^ static_cast<std::uint64_t>(key.shift));
    h = splitmix64(h ^ static_cast<std::uint64_t>(key.ix));
    h = splitmix64(h ^ static_cast<std::uint64_t>(key.iy));
    return h;
}

struct RetainedStrip {
    StripKey key;
    StripSummary summary;
};

// Bottom-k sample of distinct strip keys ordered by hash; each retained key
// keeps its exact summary. Evicted keys can never re-enter (their hash stays
// above the shrinking k-th order statistic), so summaries remain exact.
struct ShiftSketch {
    std::size_t k = 0;
    std::map<std::uint64_t, RetainedStrip> by_hash;
    std::unordered_map<StripKey, std::uint64_t, StripKeyHash> hash_of;
    bool evicted = false;

    // Returns the retained-key delta for space tracking.
    int offer(const StripKey& key, std::uint64_t h, const Ball& b, std::size_t idx) {
        auto it = hash_of.find(key);
        if (it != hash_of.end()) {
            by_hash[it->second].summary.add(b, idx);
            return 0;
        }
        if (by_hash.size() < k) return insert(key, h, b, idx) ? 1 : 0;
        auto worst = std::prev(by_hash.end());
        if (h >= worst->first) {
            evicted = true;  // the new key ranks below the sample
            return 0;
        }
        hash_of.erase(worst->second.key);
        by_hash.erase(worst);
        evicted = true;
        insert(key, h, b, idx);
        return 0;
    }

    bool insert(const StripKey& key, std::uint64_t h, const Ball& b, std::size_t idx) {
        RetainedStrip r;
        r.key = key;
        r.summary.add(b, idx);
        // distinct keys colliding on the full 64-bit hash count as one
        if (!by_hash.emplace(h, std::move(r)).second) return false;
        hash_of.emplace(key, h);
        return true;
    }

    // Estimated number of distinct nonempty strips.
    double gamma_hat() const {
        if (!evicted) return static_cast<double>(by_hash.size());  // exact below capacity
        const std::uint64_t hk = std::prev(by_hash.end())->first;
        const double t = (static_cast<double>(hk) + 1.0) / 18446744073709551616.0;  // 2^64
        return (static_cast<double>(k) - 1.0) / t;
    }

    double delta_hat(std::int64_t w) const {
        if (by_hash.empty()) return 0.0;
        std::size_t total = 0;
        for (const auto& [h, r] : by_hash) total += strip_solve(r.summary, w).size();
        return static_cast<double>(total) / static_cast<double>(by_hash.size());
    }
};

}  // namespace

EstimatorResult alpha_estimator_3eps(const BallStream& input, double eps, std::uint64_t seed) {
    require(eps > 0.0 && eps <= 1.0, Errc::invalid_argument, "eps must be in (0, 1]");
    require(input.dim == 2, Errc::invalid_argument, "estimator needs d=2");
    require(input.p == Norm::l1 || input.p == Norm::linf, Errc::invalid_argument,
            "estimator covers l1 and linf streams");
    require(input.unit(), Errc::invalid_argument, "dilation must be 1 (all radii equal)");

    EstimatorResult r;
    if (input.balls.empty()) return r;

    const BallStream stream = input.p == Norm::l1 ? rotate_l1_to_linf(input) : input;
    const std::int64_t w = 2 * stream.balls.front().radius;
    const auto shifts = partition_shifts(w);
    const std::size_t k = estimator_sketch_k(eps);

    std::array<ShiftSketch, 6> sketches;
    for (auto& s : sketches) s.k = k;

    for (std::size_t i = 0; i < stream.balls.size(); ++i) {
        const Ball& b = stream.balls[i];
        for (int si = 0; si < 6; ++si) {
            auto key = strip_assign(b, shifts[si], w, si);
            if (!key) continue;
            int delta = sketches[si].offer(*key, key_hash(*key, seed), b, i);
            if (delta > 0) r.space.add(static_cast<std::size_t>(delta));
        }
        ++r.events_consumed;
    }

    const double correction = 1.0 + eps / 4.0;
    double best = 0.0;
    std::size_t extreme_registers = 0;
    for (int si = 0; si < 6; ++si) {
        double value = sketches[si].gamma_hat() * sketches[si].delta_hat(w) / correction;
        r.per_shift[si] = value;
        best = std::max(best, value);
        for (const auto& [h, kept] : sketches[si].by_hash) extreme_registers += kept.summary.stored();
    }
    r.space.registers_add(extreme_registers);
    r.estimate = static_cast<std::uint64_t>(std::ceil(best / correction - 1e-9));
    return r;
}

}  // namespace streamis
