#include "greedy.hpp"

#include <algorithm>

#include "error.hpp"

namespace streamis {

GreedyResult greedy_mis(const EventStream& s) {
    require(s.model != StreamModel::edge, Errc::invalid_argument,
            "greedy needs a vertex-arrival stream; it is undefined on edge streams");
    GreedyResult r;
    if (s.model == StreamModel::vertex) {
        VertexId next = 0;
        for (const StreamEvent& e : s.events) {
            const auto* v = std::get_if<VertexArrival>(&e);
            require(v != nullptr, Errc::malformed_input, "non-vertex event in a vertex stream");
            require(v->id == next++, Errc::malformed_input,
                    "vertex ids must be dense, in arrival order");
            r.space.add();  // the arriving vertex is examined
            bool blocked = std::any_of(v->back_neighbors.begin(), v->back_neighbors.end(),
                                       [&](VertexId u) {
                                           return std::binary_search(r.members.begin(),
                                                                     r.members.end(), u);
                                       });
            if (blocked)
                r.space.remove();
            else
                r.members.push_back(v->id);  // arrival order keeps the set sorted
            ++r.events_consumed;
        }
    } else {
        BallStream balls = s.to_ball_stream();
        for (std::size_t i = 0; i < balls.balls.size(); ++i) {
            const Ball& b = balls.balls[i];
            validate_ball(balls, b);
            r.space.add();
            bool blocked = std::any_of(r.balls.begin(), r.balls.end(),
                                       [&](const Ball& kept) { return intersects(kept, b, balls.p); });
            if (blocked) {
                r.space.remove();
            } else {
                r.balls.push_back(b);
                r.members.push_back(static_cast<VertexId>(i));
            }
            ++r.events_consumed;
        }
    }
    return r;
}

}  // namespace streamis
