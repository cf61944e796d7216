#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sft/bigint.hpp"
#include "sft/lattice.hpp"
#include "sft/multiplicative.hpp"

namespace sft {

// n -> Omega(n) for n >= first_index.
struct ExpandingSystem {
    std::string name;
    std::function<FiniteLattice(std::int64_t)> generator;
    std::int64_t first_index = 1;
    std::map<std::string, std::string> metadata;

    FiniteLattice operator()(std::int64_t n) const;
};

// Side length as a function of n: a product of factors, each an integer
// constant, n, n^k or c^n. "n^2", "2^n", "3*n", "n*n" are all valid.
class SizeExpression {
public:
    static SizeExpression parse(const std::string& text);
    Coord evaluate(std::int64_t n) const;
    const std::string& text() const { return text_; }

private:
    struct Factor {
        enum class Kind { constant, power_of_n, exponential } kind;
        std::int64_t value;
    };
    std::vector<Factor> factors_;
    std::string text_;
};

ExpandingSystem squares();
ExpandingSystem rect_system(const SizeExpression& width, const SizeExpression& height);
ExpandingSystem omega_q_system(int q);
// Square plus a stick of b(n) + 1 sites along v, with n^2 / (n^2 + b(n) + 1) -> a_target.
ExpandingSystem stick_system(Point v, double a_target);
ExpandingSystem lshape_system();
ExpandingSystem staircase_system();

// Stick length b(n) used by stick_system.
Coord stick_length(std::int64_t n, double a_target);

// {1..q^n} in fiber coordinates: k = i q^j sits at (j, rank of i among integers not divisible by q).
FiniteLattice omega_q_plus(int q, int n);
// Four reflected copies of omega_q_plus across x = -1/2 and y = -1/2.
FiniteLattice omega_q(int q, int n);
// Row length -> number of rows of omega_q_plus(q, n).
std::map<Coord, std::int64_t> row_census(int q, int n);
// Closed-form golden-mean count on omega_q(q, n).
BigInt omega_q_count_formula(int q, int n);
// (1/2)(q-1)^2 sum_{k=1}^{K} q^{-(k+1)} log a_{2k} with tail bound from log a_{2k} <= 2k log 2.
SeriesValue omega_q_entropy_series(int q, int terms);

// Z_{n x n} together with {s v + (n, 0) : 0 <= s <= b}.
FiniteLattice stick_augmented(Coord n, Point v, Coord b);
// Z_{n^2 x n} union Z_{n x n^2}.
FiniteLattice lshape(Coord n);
// Z_{n^2 x n} with Z_{n x n^2} stacked on top, sharing the column x = n^2 - 1.
FiniteLattice staircase(Coord n);

struct NestingCheck {
    bool nested = true;       // Omega(n) inside Omega(n+1) for every checked n
    bool growing = true;      // |Omega(n+1)| > |Omega(n)|
    std::int64_t first_failure = -1;
};

NestingCheck check_nesting(const ExpandingSystem& system, int steps = 8);

enum class Trend { vanishing, bounded, non_vanishing };

std::string to_string(Trend t);

// Verdict rules over a ratio sequence r(n). The envelope E(n) = max_{n' >= n} r(n')
// tracks the limsup. "vanishing": E strictly drops from the end of the first
// third to the start of the last third, and either falls below
// vanish_factor * E(first) or decays at least like n^-decay_exponent over that
// stretch. "non_vanishing": not vanishing and the last third stays above
// nonvanishing_floor. Otherwise "bounded".
struct TrendThresholds {
    double vanish_factor = 0.05;
    double decay_exponent = 0.5;
    double nonvanishing_floor = 0.01;
};

Trend classify_trend(std::span<const std::int64_t> index, std::span<const double> values, const TrendThresholds& t = {});

struct TessellationChoice {
    enum class Kind { bounding_rectangle, self_if_tessellation, explicit_list };
    Kind kind = Kind::bounding_rectangle;
    // explicit_list: superset T(n) for each n, indexed from the report's n_lo.
    std::vector<FiniteLattice> explicit_tilings;
};

struct ConditionRow {
    std::int64_t n = 0;
    std::int64_t size = 0;
    std::int64_t boundary_size = 0;
    double boundary_ratio = 0.0;
    std::int64_t complement_size = 0;
    double complement_ratio = 0.0;
    std::string tiling;                     // which T(n) produced the complement
    std::vector<double> run_ratio_h;        // beta_m^(h) / |Omega|, m = 1..m_max
    std::vector<double> run_ratio_v;
    std::vector<double> block_ratio;        // beta_{k,l} / |Omega| per block size
};

struct ConditionReport {
    std::string system;
    std::vector<std::pair<Coord, Coord>> block_sizes;
    std::vector<ConditionRow> rows;
    Trend boundary = Trend::bounded;
    Trend complement = Trend::bounded;
    std::vector<Trend> run_h;
    std::vector<Trend> run_v;
    std::vector<Trend> block;
};

ConditionReport condition_report(const ExpandingSystem& system, std::int64_t n_lo, std::int64_t n_hi, int m_max,
                                 const TessellationChoice& choice = {},
                                 std::vector<std::pair<Coord, Coord>> block_sizes = {{2, 2}, {3, 3}, {5, 5}},
                                 const TrendThresholds& thresholds = {});

}  // namespace sft
