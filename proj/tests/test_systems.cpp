#include <doctest.h>

#include "oracles.hpp"
#include "sft/counting.hpp"
#include "sft/errors.hpp"
#include "sft/multiplicative.hpp"
#include "sft/systems.hpp"
#include "sft/tessellation.hpp"

using namespace sft;

namespace {

std::vector<Coord> row_lengths(const FiniteLattice& l)
{
    std::vector<Coord> out;
    for (const auto& s : l.spans()) out.push_back(s.length());
    std::sort(out.rbegin(), out.rend());
    return out;
}

// Membership scan of {1..q^n}: k = i q^j with q not dividing i.
std::map<Coord, std::int64_t> census_ref(int q, int n)
{
    std::int64_t top = 1;
    for (int i = 0; i < n; ++i) top *= q;
    std::map<std::int64_t, Coord> len;
    for (std::int64_t k = 1; k <= top; ++k) {
        std::int64_t i = k;
        while (i % q == 0) i /= q;
        ++len[i];
    }
    std::map<Coord, std::int64_t> out;
    for (const auto& [i, l] : len) ++out[l];
    return out;
}

std::int64_t ipow64(std::int64_t b, int e)
{
    std::int64_t v = 1;
    while (e-- > 0) v *= b;
    return v;
}

}  // namespace

TEST_CASE("size expressions")
{
    CHECK(SizeExpression::parse("n^2").evaluate(7) == 49);
    CHECK(SizeExpression::parse("2^n").evaluate(5) == 32);
    CHECK(SizeExpression::parse("3*n").evaluate(4) == 12);
    CHECK(SizeExpression::parse("n * n * 2").evaluate(3) == 18);
    CHECK(SizeExpression::parse("1").evaluate(100) == 1);
    CHECK_THROWS_AS(SizeExpression::parse("n+1"), ParseError);
    CHECK_THROWS_AS(SizeExpression::parse("2^n").evaluate(80), BudgetExceeded);
}

TEST_CASE("omega_q_plus examples")
{
    CHECK(row_lengths(omega_q_plus(2, 2)) == std::vector<Coord>{3, 1});
    CHECK(row_lengths(omega_q_plus(2, 3)) == std::vector<Coord>{4, 2, 1, 1});
    CHECK(row_lengths(omega_q_plus(3, 1)) == std::vector<Coord>{2, 1});
    for (int q = 2; q <= 4; ++q)
        for (int n = 1; n <= 6; ++n) {
            auto l = omega_q_plus(q, n);
            CHECK(l.size() == ipow64(q, n));
            CHECK(l.spans().front().y == 0);
            CHECK(l.spans().front().length() == n + 1);
        }
}

TEST_CASE("omega_q reflection")
{
    auto a = omega_q(2, 1);
    CHECK(a.size() == 8);
    CHECK(row_lengths(a) == std::vector<Coord>{4, 4});
    CHECK(row_lengths(omega_q(2, 2)) == std::vector<Coord>{6, 6, 2, 2});
    for (int q = 2; q <= 3; ++q)
        for (int n = 1; n <= 5; ++n) CHECK(omega_q(q, n).size() == 4 * ipow64(q, n));
    for (int n = 1; n <= 6; ++n) CHECK(omega_q(2, n).is_subset_of(omega_q(2, n + 1)));
}

TEST_CASE("row census identity")
{
    CHECK(row_census(2, 3) == std::map<Coord, std::int64_t>{{4, 1}, {2, 1}, {1, 2}});
    CHECK(row_census(3, 2) == std::map<Coord, std::int64_t>{{3, 1}, {2, 1}, {1, 4}});
    CHECK(row_census(2, 1) == std::map<Coord, std::int64_t>{{2, 1}});
    for (int q = 2; q <= 4; ++q) {
        for (int n = 1; n <= 8; ++n) {
            auto c = row_census(q, n);
            CHECK(c == census_ref(q, n));
            std::int64_t total = 0;
            for (const auto& [len, mult] : c) total += len * mult;
            CHECK(total == ipow64(q, n));
        }
    }
}

TEST_CASE("closed-form count on omega_q")
{
    auto gm = golden_mean_horizontal();
    CHECK(omega_q_count_formula(2, 1) == 64);
    CHECK(omega_q_count_formula(2, 2) == 3969);
    CHECK(omega_q_count_formula(2, 2) == oracle::naive_count(omega_q(2, 2), gm));
    // a_6^2 a_4^2 a_2^8
    CHECK(omega_q_count_formula(3, 2) == BigInt(21 * 21 * 8 * 8) * ipow(BigInt(3), 8));
    for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {2, 6}, {4, 3}})
        CHECK(omega_q_count_formula(q, n) == count_profile_dp(omega_q(q, n), gm).value);
}

TEST_CASE("omega_q series")
{
    auto one = omega_q_entropy_series(2, 1);
    CHECK(one.value == doctest::Approx(0.5 * 0.25 * std::log(3.0)));
    auto s30 = omega_q_entropy_series(2, 30);
    CHECK(s30.value == doctest::Approx(0.5177).epsilon(1e-4));
    CHECK(s30.tail_bound <= 1e-6);
    CHECK(s30.value > oracle::log_g);
    // Independent partial sum with the Fibonacci recursion in doubles.
    double ref = 0.0;
    for (int k = 1; k <= 40; ++k) ref += 0.5 * std::pow(2.0, -(k + 1)) * oracle::log_fib(2 * k);
    CHECK(omega_q_entropy_series(2, 40).value == doctest::Approx(ref).epsilon(1e-14));
    CHECK(omega_q_entropy_series(3, 40).value > omega_q_entropy_series(2, 40).value);
    CHECK(omega_q_entropy_series(4, 40).value > omega_q_entropy_series(3, 40).value);
    // The tail bound really bounds the omitted terms.
    for (int K : {2, 5, 10}) {
        auto s = omega_q_entropy_series(3, K);
        auto far = omega_q_entropy_series(3, 80);
        CHECK(far.value - s.value <= s.tail_bound + 1e-15);
        CHECK(far.value >= s.value);
    }
}

TEST_CASE("stick augmented squares")
{
    auto s = stick_augmented(3, {0, 1}, 4);
    CHECK(s.size() == 14);
    auto d = stick_augmented(3, {1, 1}, 4);
    CHECK(d.size() == 14);
    for (Coord k = 0; k <= 4; ++k) CHECK(d.contains({3 + k, k}));
    CHECK_THROWS_AS(stick_augmented(3, {2, 2}, 4), NonPrimitiveVector);
    CHECK_THROWS_AS(stick_augmented(3, {-1, 0}, 4), OverlapError);
    for (Coord n = 1; n <= 30; ++n) {
        Coord b = stick_length(n, 0.5);
        CHECK(b == n * n - 1);
        CHECK(stick_augmented(n, {0, 1}, b).size() == 2 * n * n);
    }
    // A vertical stick two columns away from the square: counts factor.
    auto gm = golden_mean_horizontal();
    for (Coord b = 0; b <= 6; ++b) {
        auto l = unite(rectangle({0, 0}, 3, 3), rectangle({4, 0}, 1, b + 1));
        CHECK(count(l, gm).value == count(rectangle({0, 0}, 3, 3), gm).value * ipow(BigInt(2), static_cast<unsigned>(b + 1)));
    }
}

TEST_CASE("lshape and staircase")
{
    for (Coord n = 1; n <= 6; ++n) {
        auto l = lshape(n);
        CHECK(l.size() == 2 * n * n * n - n * n);
        CHECK(l.bounds() == Rect{{0, 0}, n * n, n * n});
        CHECK(complement_in(l, rectangle(l.bounds())).size() == (n * n - n) * (n * n - n));
    }
    CHECK(lshape(2).size() == 12);
    for (Coord n = 2; n <= 5; ++n) {
        auto bands = decompose_bands(staircase(n), Axis::horizontal);
        REQUIRE(bands.has_value());
        CHECK(bands->size() == 2);
    }
}

TEST_CASE("nesting of systems")
{
    for (const auto& sys : {squares(), omega_q_system(2), omega_q_system(3), lshape_system(), staircase_system(),
                            stick_system({0, 1}, 0.5), rect_system(SizeExpression::parse("n^2"), SizeExpression::parse("n"))}) {
        auto c = check_nesting(sys, sys.name.rfind("omega_q(3", 0) == 0 ? 5 : 8);
        CAPTURE(sys.name);
        CHECK(c.growing);
        // The stick and the upper staircase block move outward as n grows.
        const bool moving = sys.name == "staircase" || sys.name.rfind("stick", 0) == 0;
        CHECK(c.nested == !moving);
    }
}

TEST_CASE("trend classification")
{
    std::vector<std::int64_t> idx;
    std::vector<double> dec, flat, osc;
    for (int n = 1; n <= 60; ++n) {
        idx.push_back(n);
        dec.push_back(2.0 / n);
        flat.push_back(0.3);
        osc.push_back(n % 2 ? 0.2 : 0.0);
    }
    CHECK(classify_trend(idx, dec) == Trend::vanishing);
    CHECK(classify_trend(idx, flat) == Trend::non_vanishing);
    CHECK(classify_trend(idx, osc) == Trend::bounded);
    CHECK(to_string(Trend::non_vanishing) == "non-vanishing");
}

TEST_CASE("condition reports")
{
    auto sq = condition_report(squares(), 1, 60, 2);
    for (const auto& r : sq.rows) {
        CHECK(r.boundary_ratio == doctest::Approx((2.0 * r.n - 1) / (static_cast<double>(r.n) * r.n)));
        CHECK(r.complement_size == 0);
        for (double x : r.block_ratio) CHECK((x >= 0.0 && x <= 1.0));
    }
    CHECK(sq.boundary == Trend::vanishing);

    auto stick = condition_report(rect_system(SizeExpression::parse("2^n"), SizeExpression::parse("1")), 1, 12, 1);
    for (const auto& r : stick.rows) CHECK(r.run_ratio_v[0] == 1.0);

    auto om = condition_report(omega_q_system(2), 1, 10, 2);
    CHECK(om.run_h[1] == Trend::non_vanishing);

    auto ls = condition_report(lshape_system(), 1, 5, 1, {TessellationChoice::Kind::self_if_tessellation, {}});
    for (const auto& r : ls.rows) {
        CHECK(r.tiling == "self");
        CHECK(r.complement_ratio == 0.0);
    }
    auto lb = condition_report(lshape_system(), 1, 8, 1);
    CHECK(lb.rows.back().complement_ratio > 1.0);

    TessellationChoice bad{TessellationChoice::Kind::explicit_list, {rectangle({0, 0}, 1, 1)}};
    CHECK_THROWS_AS(condition_report(squares(), 2, 2, 1, bad), SubsetViolation);
}

TEST_CASE("boundary and block verdicts agree")
{
    const std::vector<ExpandingSystem> systems{
        squares(), rect_system(SizeExpression::parse("n^2"), SizeExpression::parse("n")),
        rect_system(SizeExpression::parse("2^n"), SizeExpression::parse("1")), lshape_system()};
    for (const auto& sys : systems) {
        auto hi = sys.name == "squares" ? 120 : (sys.name == "lshape" ? 30 : 12);
        auto rep = condition_report(sys, 1, hi, 1);
        CAPTURE(sys.name);
        for (auto t : rep.block) CHECK((t == Trend::vanishing) == (rep.boundary == Trend::vanishing));
    }
}

TEST_CASE("block ratio maxima over periods decrease for squares")
{
    // beta_{k,l}(n) oscillates with n mod k; its per-period maximum decreases.
    for (Coord k : {2, 3, 5}) {
        double prev = 2.0;
        for (Coord start = k * k; start + k <= 200; start += k) {
            double best = 0.0;
            for (Coord n = start; n < start + k; ++n)
                best = std::max(best, static_cast<double>(block_decompose(rectangle({0, 0}, n, n), k, k).beta) / (n * n));
            CHECK(best <= prev);
            prev = best;
        }
        double bprev = 2.0;
        for (Coord n = k * k; n <= 200; ++n) {
            double b = static_cast<double>(boundary(rectangle({0, 0}, n, n)).size()) / (n * n);
            CHECK(b < bprev);
            bprev = b;
        }
    }
}

TEST_CASE("fiber decomposition")
{
    auto d = fiber_decomposition(8, 2);
    std::vector<std::pair<std::int64_t, std::int64_t>> got;
    for (auto f : d.fibers) got.emplace_back(f.base, f.length);
    CHECK(got == std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 4}, {3, 2}, {5, 1}, {7, 1}});
    CHECK(fiber_decomposition(1, 5).fibers.size() == 1);
    got.clear();
    for (auto f : fiber_decomposition(9, 3).fibers) got.emplace_back(f.base, f.length);
    CHECK(got == std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 3}, {2, 2}, {4, 1}, {5, 1}, {7, 1}, {8, 1}});
    for (std::int64_t q = 2; q <= 5; ++q)
        for (std::int64_t n = 1; n <= 200; n += 7) {
            std::set<std::int64_t> seen;
            std::int64_t sum = 0;
            for (auto f : fiber_decomposition(n, q).fibers) {
                sum += f.length;
                for (std::int64_t j = 0, v = f.base; j < f.length; ++j, v *= q) CHECK(seen.insert(v).second);
            }
            CHECK(sum == n);
            CHECK(static_cast<std::int64_t>(seen.size()) == n);
        }
}

TEST_CASE("multiplicative counts")
{
    CHECK(count_X_q0(1, 2) == 2);
    CHECK(count_X_q0(8, 2) == 96);
    CHECK(count_X_q0(9, 3) == 240);
    CHECK(count_X_q0_bruteforce(8, 2) == 96);
    CHECK(count_X_q0_bruteforce(9, 3) == 240);
    for (int q = 2; q <= 4; ++q)
        for (int n = 1; n <= 20; ++n) CHECK(count_X_q0(n, q) == count_X_q0_bruteforce(n, q));
    CHECK_THROWS_AS(count_X_q0_bruteforce(25, 2), BudgetExceeded);
    FibSeq a;
    for (int m = 1; m <= 30; ++m) {
        CHECK(a(m) == oracle::fib(m));
        CHECK(a(m) == count(rectangle({0, 0}, m, 1), golden_mean_horizontal()).value);
    }
    CHECK(a.log(1000) == doctest::Approx(log_of(oracle::fib(1000))).epsilon(1e-14));
}

TEST_CASE("multiplicative series")
{
    auto one = entropy_X_q0_series(2, 1);
    CHECK(one.value == doctest::Approx(0.25 * std::log(2.0)));
    auto s = entropy_X_q0_series(2, 40);
    CHECK(s.tail_bound <= 1e-9);
    CHECK(s.value == doctest::Approx(0.5713567887433193).epsilon(1e-12));
    CHECK(entropy_X_q0_series(3, 40).value < std::log(2.0));
    // Finite horizons approach the series value.
    double prev_gap = 1.0;
    for (int j = 4; j <= 14; ++j) {
        std::int64_t n = std::int64_t{1} << j;
        double gap = std::abs(log_count_X_q0(n, 2) / static_cast<double>(n) - s.value);
        CHECK(gap <= prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < 0.01);
    CHECK(log_count_X_q0(60, 3) == doctest::Approx(log_of(count_X_q0(60, 3))).epsilon(1e-13));
}
