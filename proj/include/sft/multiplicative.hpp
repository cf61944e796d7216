#pragma once

#include <cstdint>
#include <vector>

#include "sft/bigint.hpp"

namespace sft {

// a_1 = 2, a_2 = 3, a_k = a_{k-1} + a_{k-2}: binary words of length k
// without two adjacent ones.
class FibSeq {
public:
    const BigInt& operator()(std::int64_t k);
    // log a_k without materializing huge terms.
    double log(std::int64_t k);

private:
    std::vector<BigInt> values_{0, 2, 3};
    std::vector<double> logs_;
};

struct Fiber {
    std::int64_t base = 1;    // i, not divisible by q
    std::int64_t length = 1;  // number of j with i q^j <= n
};

// {1..n} split into geometric chains i, iq, iq^2, ... with q not dividing i.
struct FiberDecomposition {
    std::int64_t q = 2;
    std::int64_t n = 1;
    std::vector<Fiber> fibers;
};

FiberDecomposition fiber_decomposition(std::int64_t n, std::int64_t q);

// Binary words x_1..x_n with x_k x_{qk} = 0 whenever qk <= n.
BigInt count_X_q0(std::int64_t n, std::int64_t q);
double log_count_X_q0(std::int64_t n, std::int64_t q);
// Exhaustive check over all 2^n words; n <= 24.
BigInt count_X_q0_bruteforce(std::int64_t n, std::int64_t q);

struct SeriesValue {
    double value = 0.0;       // partial sum
    double tail_bound = 0.0;  // upper bound on the omitted terms
};

// (q-1)^2 sum_{k=1}^{K} q^{-(k+1)} log a_k, tail bounded via log a_k <= k log 2.
SeriesValue entropy_X_q0_series(std::int64_t q, int terms);

}  // namespace sft
