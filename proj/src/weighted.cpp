#include "weighted.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "error.hpp"
#include "strips.hpp"

namespace streamis {

std::size_t weight_class_window(double eps) {
    double raw = std::log(1.0 / eps) / std::log(1.0 + eps);
    return static_cast<std::size_t>(std::ceil(raw - 1e-12)) + 1;
}

std::int32_t weight_class(std::int64_t weight, double eps) {
    require(weight >= 1, Errc::invalid_argument, "weights must be positive");
    const double base = 1.0 + eps;
    const double lw = std::log(static_cast<double>(weight));
    std::int32_t c = static_cast<std::int32_t>(std::ceil(lw / std::log(base) - 1e-12));
    if (c < 0) c = 0;
    while (c > 0 && std::pow(base, c - 1) >= static_cast<double>(weight) - 1e-9) --c;
    while (std::pow(base, c) < static_cast<double>(weight) - 1e-9) ++c;
    return c;
}

namespace {

struct ClassedStrip {
    std::map<std::int32_t, StripSummary> classes;
    std::int32_t max_class = INT32_MIN;
};

struct Candidate {
    std::size_t idx;
    Ball ball;
};

}  // namespace

WeightedResult weighted_unit_square_3eps(const BallStream& input, double eps) {
    require(eps > 0.0 && eps <= 1.0, Errc::invalid_argument, "eps must be in (0, 1]");
    require(input.dim == 2, Errc::invalid_argument, "weighted unit square algorithm needs d=2");
    require(input.p == Norm::l1 || input.p == Norm::linf, Errc::invalid_argument,
            "weighted unit square algorithm covers l1 and linf streams");
    require(input.unit(), Errc::invalid_argument, "dilation must be 1 (all radii equal)");
    for (const Ball& b : input.balls)
        require(b.weight > 0, Errc::invalid_argument, "weights must be positive");

    WeightedResult r;
    if (input.balls.empty()) return r;

    const BallStream stream = input.p == Norm::l1 ? rotate_l1_to_linf(input) : input;
    const std::int64_t w = 2 * stream.balls.front().radius;
    const auto shifts = partition_shifts(w);
    const std::int32_t window = static_cast<std::int32_t>(weight_class_window(eps));

    std::array<std::unordered_map<StripKey, ClassedStrip, StripKeyHash>, 6> strips;
    for (std::size_t i = 0; i < stream.balls.size(); ++i) {
        const Ball& b = stream.balls[i];
        const std::int32_t cls = weight_class(b.weight, eps);
        for (int si = 0; si < 6; ++si) {
            auto key = strip_assign(b, shifts[si], w, si);
            if (!key) continue;
            ClassedStrip& strip = strips[si][*key];
            if (cls > strip.max_class) {
                strip.max_class = cls;
                // classes below eps times the new max class are dominated
                for (auto it = strip.classes.begin();
                     it != strip.classes.end() && it->first <= strip.max_class - window;) {
                    r.space.remove(it->second.stored());
                    it = strip.classes.erase(it);
                }
            }
            if (cls <= strip.max_class - window) continue;  // dominated on arrival
            StripSummary& sum = strip.classes[cls];
            std::size_t before = sum.stored();
            sum.add(b, i);
            std::size_t after = sum.stored();
            if (after > before) r.space.add(after - before);
        }
        ++r.events_consumed;
    }

    // Per strip: best single or best disjoint pair among the retained extremes,
    // by original weight.
    int best_shift = 0;
    std::int64_t best_weight = -1;
    std::vector<std::size_t> best_members;
    for (int si = 0; si < 6; ++si) {
        std::int64_t shift_weight = 0;
        std::vector<std::size_t> members;
        for (const auto& [key, strip] : strips[si]) {
            std::vector<Candidate> cands;
            for (const auto& [cls, sum] : strip.classes) {
                cands.push_back({sum.leftmost_idx, sum.leftmost});
                if (sum.stored() == 2) cands.push_back({sum.rightmost_idx, sum.rightmost});
            }
            std::int64_t best_single = -1;
            std::size_t best_single_idx = 0;
            for (const Candidate& c : cands)
                if (c.ball.weight > best_single) {
                    best_single = c.ball.weight;
                    best_single_idx = c.idx;
                }
            std::int64_t best_pair = -1;
            std::pair<std::size_t, std::size_t> best_pair_idx{0, 0};
            for (std::size_t a = 0; a < cands.size(); ++a)
                for (std::size_t b2 = a + 1; b2 < cands.size(); ++b2) {
                    if (std::abs(cands[a].ball.center[0] - cands[b2].ball.center[0]) <= w) continue;
                    std::int64_t total = cands[a].ball.weight + cands[b2].ball.weight;
                    if (total > best_pair) {
                        best_pair = total;
                        best_pair_idx = {cands[a].idx, cands[b2].idx};
                    }
                }
            if (best_pair > best_single) {
                shift_weight += best_pair;
                members.push_back(best_pair_idx.first);
                members.push_back(best_pair_idx.second);
            } else if (best_single >= 0) {
                shift_weight += best_single;
                members.push_back(best_single_idx);
            }
        }
        if (shift_weight > best_weight) {
            best_weight = shift_weight;
            best_shift = si;
            best_members = std::move(members);
        }
    }

    std::sort(best_members.begin(), best_members.end());
    r.best_shift = best_shift;
    r.chosen = std::move(best_members);
    r.total_weight = std::max<std::int64_t>(best_weight, 0);
    r.balls.reserve(r.chosen.size());
    for (std::size_t idx : r.chosen) r.balls.push_back(input.balls[idx]);
    return r;
}

}  // namespace streamis
