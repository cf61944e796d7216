#include "sft/multiplicative.hpp"

#include <cmath>
#include <stdexcept>

#include "sft/errors.hpp"

namespace sft {

const BigInt& FibSeq::operator()(std::int64_t k)
{
    if (k < 1) throw std::invalid_argument("FibSeq index must be positive");
    while (static_cast<std::int64_t>(values_.size()) <= k) {
        auto n = values_.size();
        values_.push_back(values_[n - 1] + values_[n - 2]);
    }
    return values_[static_cast<std::size_t>(k)];
}

double FibSeq::log(std::int64_t k)
{
    if (k < 1) throw std::invalid_argument("FibSeq index must be positive");
    if (logs_.empty()) logs_.push_back(0.0);
    const double log_g = std::log((1.0 + std::sqrt(5.0)) / 2.0);
    while (static_cast<std::int64_t>(logs_.size()) <= k) {
        auto j = static_cast<std::int64_t>(logs_.size());
        // Past a few hundred terms the ratio a_{k}/a_{k-1} equals g to double precision.
        // Offsets from a_400 are multiplied out rather than summed to avoid drift.
        logs_.push_back(j <= 400 ? log_of((*this)(j)) : logs_[400] + static_cast<double>(j - 400) * log_g);
    }
    return logs_[static_cast<std::size_t>(k)];
}

FiberDecomposition fiber_decomposition(std::int64_t n, std::int64_t q)
{
    if (n < 1 || q < 2) throw std::invalid_argument("fiber_decomposition needs n >= 1 and q >= 2");
    FiberDecomposition d{q, n, {}};
    for (std::int64_t i = 1; i <= n; ++i) {
        if (i % q == 0) continue;
        std::int64_t len = 0;
        for (std::int64_t v = i; v <= n; v *= q) {
            ++len;
            if (v > n / q) break;
        }
        d.fibers.push_back({i, len});
    }
    return d;
}

BigInt count_X_q0(std::int64_t n, std::int64_t q)
{
    FibSeq a;
    BigInt total = 1;
    for (const auto& f : fiber_decomposition(n, q).fibers) total *= a(f.length);
    return total;
}

double log_count_X_q0(std::int64_t n, std::int64_t q)
{
    FibSeq a;
    double total = 0.0;
    for (const auto& f : fiber_decomposition(n, q).fibers) total += a.log(f.length);
    return total;
}

BigInt count_X_q0_bruteforce(std::int64_t n, std::int64_t q)
{
    if (n < 1 || q < 2) throw std::invalid_argument("count_X_q0_bruteforce needs n >= 1 and q >= 2");
    if (n > 24) throw BudgetExceeded("count_X_q0_bruteforce is limited to n <= 24");
    // Bit k-1 of the word holds x_k.
    std::uint32_t clash = 0;
    std::uint64_t total = 0;
    for (std::uint32_t word = 0; word < (std::uint32_t{1} << n); ++word) {
        clash = 0;
        for (std::int64_t k = 1; q * k <= n && !clash; ++k)
            clash = ((word >> (k - 1)) & 1u) & ((word >> (q * k - 1)) & 1u);
        if (!clash) ++total;
    }
    return BigInt(total);
}

SeriesValue entropy_X_q0_series(std::int64_t q, int terms)
{
    if (q < 2 || terms < 1) throw std::invalid_argument("entropy_X_q0_series needs q >= 2 and at least one term");
    FibSeq a;
    const double qd = static_cast<double>(q);
    const double c = (qd - 1.0) * (qd - 1.0);
    SeriesValue s;
    for (int k = 1; k <= terms; ++k) s.value += c * std::pow(qd, -(k + 1)) * a.log(k);
    // sum_{k>K} k x^k = x^{K+1} ((K+1) - K x) / (1-x)^2 with x = 1/q.
    const double x = 1.0 / qd;
    const double K = terms;
    const double tail_kx = std::pow(x, K + 1) * ((K + 1) - K * x) / ((1 - x) * (1 - x));
    s.tail_bound = c * x * std::log(2.0) * tail_kx;
    return s;
}

}  // namespace sft
