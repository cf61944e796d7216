#pragma once

// Independent reference computations used by the tests. Nothing here calls the
// counting engine; counts come from plain enumeration or closed recursions.

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "sft/bigint.hpp"
#include "sft/lattice.hpp"
#include "sft/shift.hpp"

namespace oracle {

// a_1 = 2, a_2 = 3, a_k = a_{k-1} + a_{k-2}.
inline sft::BigInt fib(int k)
{
    sft::BigInt a = 2, b = 3;
    if (k == 1) return a;
    for (int i = 2; i < k; ++i) {
        sft::BigInt c = a + b;
        a = b;
        b = c;
    }
    return b;
}

inline double log_fib(int k) { return sft::log_of(fib(k)); }

inline const double log_g = std::log((1.0 + std::sqrt(5.0)) / 2.0);

// Enumerates all N^|L| assignments and keeps the locally admissible ones.
inline std::uint64_t naive_count(const sft::FiniteLattice& lattice, const sft::SftSpec& spec)
{
    const auto n = static_cast<std::size_t>(lattice.size());
    const int N = spec.alphabet_size();
    sft::Pattern p{lattice, std::vector<sft::Symbol>(n, 0)};
    std::uint64_t total = 0;
    while (true) {
        if (sft::is_locally_admissible(p, spec)) ++total;
        std::size_t i = 0;
        while (i < n && p.values[i] == N - 1) p.values[i++] = 0;
        if (i == n) break;
        ++p.values[i];
    }
    return total;
}

// Random 4-connected lattice grown from the origin inside a box.
inline sft::FiniteLattice random_connected(std::mt19937_64& rng, int size, int box)
{
    std::set<sft::Point> pts{{0, 0}};
    std::vector<sft::Point> order{{0, 0}};
    const sft::Point steps[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    std::uniform_int_distribution<std::size_t> dir(0, 3);
    while (static_cast<int>(pts.size()) < size) {
        std::uniform_int_distribution<std::size_t> pick(0, order.size() - 1);
        sft::Point p = order[pick(rng)] + steps[dir(rng)];
        if (std::abs(p.x) > box || std::abs(p.y) > box || pts.count(p)) continue;
        pts.insert(p);
        order.push_back(p);
    }
    return sft::FiniteLattice::from_points(std::vector<sft::Point>(pts.begin(), pts.end()));
}

inline std::set<sft::Point> point_set(const sft::FiniteLattice& l)
{
    auto v = l.points();
    return {v.begin(), v.end()};
}

}  // namespace oracle
