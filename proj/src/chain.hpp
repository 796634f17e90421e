#pragma once

#include <cstdint>
#include <vector>

namespace streamis {

// k-party chained index instance: (k-1) n-bit vectors and indices with the
// promise that every vector hits the same answer bit at its index.
struct ChainInstance {
    int parties = 2;                                // k
    int length = 1;                                 // n
    std::vector<std::vector<std::uint8_t>> vectors; // k-1 vectors of n bits
    std::vector<int> indices;                       // k-1 sigmas, 1-based in [n]
    int answer = 0;                                 // z

    bool promise_holds() const;
};

// Validates shape and the promise; throws on violation.
ChainInstance make_chain_instance(int parties, int length,
                                  std::vector<std::vector<std::uint8_t>> vectors,
                                  std::vector<int> indices);

// Same shape checks, promise deliberately unchecked (for negative tests).
ChainInstance make_chain_instance_unchecked(int parties, int length,
                                            std::vector<std::vector<std::uint8_t>> vectors,
                                            std::vector<int> indices, int answer);

// Conservative one-way k-party Boolean pointer jumping: a start index and
// k-1 function tables f_2..f_k; all but the last map [n]->[n], the last
// maps [n]->{0,1}.
struct JumpInstance {
    int parties = 2;  // k
    int length = 1;   // n
    int start = 1;    // alpha, 1-based
    std::vector<std::vector<int>> tables;  // tables[i] is f_{i+2}; values 1-based except the last
};

void validate_jump(const JumpInstance& j);

// f_{from:to}(x) with the apply-first-function-first convention;
// from > to is the identity.
int jump_compose(const JumpInstance& j, int from, int to, int x);

// Zero-communication reduction: X^(i)[j] = f_{i+1:k}(j), sigma_i = f_{2:i}(alpha).
// The output always satisfies the promise with z = f_{2:k}(alpha).
ChainInstance jump_to_chain(const JumpInstance& j);

}  // namespace streamis
