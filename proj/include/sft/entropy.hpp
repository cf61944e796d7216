#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sft/counting.hpp"
#include "sft/lattice.hpp"
#include "sft/shift.hpp"
#include "sft/systems.hpp"

namespace sft {

enum class EstimatorKind { limsup_tail_max, infimum, series };

std::string to_string(EstimatorKind kind);

struct EntropyRecord {
    std::int64_t index = 0;
    std::int64_t size = 0;
    double log_count = 0.0;
    double ratio = 0.0;  // log_count / size, 0 for an empty lattice
};

struct EntropySequence {
    std::vector<EntropyRecord> records;
    double estimate = 0.0;
    EstimatorKind kind = EstimatorKind::limsup_tail_max;
    // Set when no forbidden shape fits any counted lattice (plain N^|L| counts).
    bool unconstrained = false;
};

// Maximum ratio over the last ceil(len/3) records.
double tail_max(const std::vector<EntropyRecord>& records);

// Ratios (1/mn) log Gamma_{m x n} for 1 <= m <= M (width), 1 <= n <= N (height).
struct RectTable {
    int M = 0;
    int N = 0;
    std::vector<double> log_counts;  // row-major by n, then m
    double estimate = 0.0;           // table minimum, an upper bound on h_r
    int argmin_m = 1;
    int argmin_n = 1;

    double log_count(int m, int n) const { return log_counts[index(m, n)]; }
    double ratio(int m, int n) const { return log_count(m, n) / (static_cast<double>(m) * n); }

private:
    std::size_t index(int m, int n) const { return static_cast<std::size_t>((n - 1) * M + (m - 1)); }
};

RectTable rect_entropy_table(const SftSpec& spec, int M, int N, const Budget& budget = {});

// h_Omega estimate over n_lo..n_hi from log-domain counts.
EntropySequence omega_entropy(const SftSpec& spec, const ExpandingSystem& system, std::int64_t n_lo,
                              std::int64_t n_hi, const Budget& budget = {});

// Counts on the segments {0, v, ..., (n-1) v} for n = 1..n_max.
EntropySequence projectional_entropy(const SftSpec& spec, Point v, int n_max, CountMode mode = CountMode::local(),
                                     const Budget& budget = {});

// Largest projectional estimate over `directions` (first maximizer wins ties).
// This bounds the supremum over all one-dimensional sublattices from below.
std::pair<double, Point> hhat1_estimate(const SftSpec& spec, const std::vector<Point>& directions, int n_max,
                                        const Budget& budget = {});

// Closed-form rectangular entropy where one is known: log g for the golden
// mean specs, log N for full shifts.
std::optional<double> known_rect_entropy(const SftSpec& spec);

struct GapReport {
    RectTable table;
    double reference = 0.0;
    // "closed-form" when known_rect_entropy applies, otherwise "estimate": the
    // ratio on a rectangle twice the table size in each direction.
    std::string reference_kind;
    bool full_shift = false;
    // Every entry exceeds the reference (full shift: every entry equals it).
    bool holds = false;
    double min_margin = 0.0;
    int min_m = 1;
    int min_n = 1;
};

// A non-full shift has r(m, n) > h_r at every (m, n); a full shift has equality.
GapReport strict_gap_check(const SftSpec& spec, int M, int N, const Budget& budget = {});

}  // namespace sft
