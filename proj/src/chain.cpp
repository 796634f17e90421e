#include "chain.hpp"

#include <string>

#include "error.hpp"

namespace streamis {

bool ChainInstance::promise_holds() const {
    for (std::size_t i = 0; i < vectors.size(); ++i)
        if (vectors[i][static_cast<std::size_t>(indices[i] - 1)] != answer) return false;
    return true;
}

namespace {

void check_shape(int parties, int length, const std::vector<std::vector<std::uint8_t>>& vectors,
                 const std::vector<int>& indices) {
    require(parties >= 2, Errc::invalid_argument, "chained index needs at least 2 parties");
    require(length >= 1, Errc::invalid_argument, "vector length must be positive");
    require(vectors.size() == static_cast<std::size_t>(parties - 1), Errc::invalid_argument,
            "expected k-1 vectors");
    require(indices.size() == static_cast<std::size_t>(parties - 1), Errc::invalid_argument,
            "expected k-1 indices");
    for (const auto& v : vectors) {
        require(v.size() == static_cast<std::size_t>(length), Errc::invalid_argument,
                "vector length mismatch");
        for (std::uint8_t bit : v)
            require(bit <= 1, Errc::invalid_argument, "vector entries must be bits");
    }
    for (int s : indices)
        require(s >= 1 && s <= length, Errc::invalid_argument,
                "index out of [1, n]: " + std::to_string(s));
}

}  // namespace

ChainInstance make_chain_instance(int parties, int length,
                                  std::vector<std::vector<std::uint8_t>> vectors,
                                  std::vector<int> indices) {
    check_shape(parties, length, vectors, indices);
    int z = vectors[0][static_cast<std::size_t>(indices[0] - 1)];
    ChainInstance c{parties, length, std::move(vectors), std::move(indices), z};
    require(c.promise_holds(), Errc::invalid_argument,
            "promise violated: the indexed bits do not agree");
    return c;
}

ChainInstance make_chain_instance_unchecked(int parties, int length,
                                            std::vector<std::vector<std::uint8_t>> vectors,
                                            std::vector<int> indices, int answer) {
    check_shape(parties, length, vectors, indices);
    require(answer == 0 || answer == 1, Errc::invalid_argument, "answer must be a bit");
    return ChainInstance{parties, length, std::move(vectors), std::move(indices), answer};
}

void validate_jump(const JumpInstance& j) {
    require(j.parties >= 2, Errc::invalid_argument, "pointer jumping needs at least 2 parties");
    require(j.length >= 1, Errc::invalid_argument, "domain size must be positive");
    require(j.start >= 1 && j.start <= j.length, Errc::invalid_argument, "start out of [1, n]");
    require(j.tables.size() == static_cast<std::size_t>(j.parties - 1), Errc::invalid_argument,
            "expected k-1 function tables f_2..f_k");
    for (std::size_t t = 0; t < j.tables.size(); ++t) {
        require(j.tables[t].size() == static_cast<std::size_t>(j.length), Errc::invalid_argument,
                "table size mismatch");
        const bool boolean = t + 1 == j.tables.size();  // f_k has Boolean range
        for (int v : j.tables[t]) {
            if (boolean)
                require(v == 0 || v == 1, Errc::invalid_argument, "final table must be Boolean");
            else
                require(v >= 1 && v <= j.length, Errc::invalid_argument,
                        "table value out of [1, n]");
        }
    }
}

int jump_compose(const JumpInstance& j, int from, int to, int x) {
    require(from >= 2 && to <= j.parties, Errc::invalid_argument, "composition range out of bounds");
    int cur = x;
    for (int i = from; i <= to; ++i) {
        require(cur >= 1 && cur <= j.length, Errc::invalid_argument, "composition left [1, n]");
        cur = j.tables[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(cur - 1)];
    }
    return cur;
}

ChainInstance jump_to_chain(const JumpInstance& j) {
    validate_jump(j);
    const int k = j.parties;
    std::vector<std::vector<std::uint8_t>> vectors(static_cast<std::size_t>(k - 1));
    std::vector<int> indices(static_cast<std::size_t>(k - 1));
    for (int i = 1; i <= k - 1; ++i) {
        auto& v = vectors[static_cast<std::size_t>(i - 1)];
        v.resize(static_cast<std::size_t>(j.length));
        for (int x = 1; x <= j.length; ++x)
            v[static_cast<std::size_t>(x - 1)] =
                static_cast<std::uint8_t>(jump_compose(j, i + 1, k, x));
        // sigma_1 = alpha (f_{2:1} is the identity)
        indices[static_cast<std::size_t>(i - 1)] = jump_compose(j, 2, i, j.start);
    }
    return make_chain_instance(k, j.length, std::move(vectors), std::move(indices));
}

}  // namespace streamis
