#include "sft/systems.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sft/errors.hpp"
#include "sft/tessellation.hpp"

namespace sft {

FiniteLattice ExpandingSystem::operator()(std::int64_t n) const
{
    if (n < first_index) throw std::invalid_argument(name + ": index " + std::to_string(n) + " precedes the first index");
    return generator(n);
}

// ---------------------------------------------------------------------------
// Size expressions

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

bool all_digits(const std::string& s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Coord checked_mul(Coord a, Coord b)
{
    Coord r;
    if (__builtin_mul_overflow(a, b, &r)) throw BudgetExceeded("lattice size overflows 64-bit coordinates");
    return r;
}

Coord checked_pow(Coord base, std::int64_t exp)
{
    Coord r = 1;
    for (std::int64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

}  // namespace

SizeExpression SizeExpression::parse(const std::string& text)
{
    SizeExpression e;
    e.text_ = text;
    std::size_t start = 0;
    while (true) {
        auto star = text.find('*', start);
        std::string tok = trim(text.substr(start, star == std::string::npos ? std::string::npos : star - start));
        if (tok == "n") {
            e.factors_.push_back({Factor::Kind::power_of_n, 1});
        } else if (all_digits(tok)) {
            e.factors_.push_back({Factor::Kind::constant, std::stoll(tok)});
        } else if (auto caret = tok.find('^'); caret != std::string::npos) {
            std::string lhs = trim(tok.substr(0, caret)), rhs = trim(tok.substr(caret + 1));
            if (lhs == "n" && all_digits(rhs))
                e.factors_.push_back({Factor::Kind::power_of_n, std::stoll(rhs)});
            else if (all_digits(lhs) && rhs == "n")
                e.factors_.push_back({Factor::Kind::exponential, std::stoll(lhs)});
            else
                throw ParseError("bad size factor '" + tok + "'");
        } else {
            throw ParseError("bad size factor '" + tok + "' in '" + text + "'");
        }
        if (star == std::string::npos) break;
        start = star + 1;
    }
    return e;
}

Coord SizeExpression::evaluate(std::int64_t n) const
{
    Coord v = 1;
    for (const auto& f : factors_) {
        switch (f.kind) {
        case Factor::Kind::constant: v = checked_mul(v, f.value); break;
        case Factor::Kind::power_of_n: v = checked_mul(v, checked_pow(n, f.value)); break;
        case Factor::Kind::exponential: v = checked_mul(v, checked_pow(f.value, n)); break;
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// Systems

ExpandingSystem squares()
{
    return {"squares", [](std::int64_t n) { return rectangle({0, 0}, n, n); }, 1, {}};
}

ExpandingSystem rect_system(const SizeExpression& width, const SizeExpression& height)
{
    return {"rect(" + width.text() + "," + height.text() + ")",
            [width, height](std::int64_t n) { return rectangle({0, 0}, width.evaluate(n), height.evaluate(n)); },
            1,
            {{"w", width.text()}, {"h", height.text()}}};
}

ExpandingSystem omega_q_system(int q)
{
    return {"omega_q(" + std::to_string(q) + ")", [q](std::int64_t n) { return omega_q(q, static_cast<int>(n)); }, 1,
            {{"q", std::to_string(q)}}};
}

Coord stick_length(std::int64_t n, double a_target)
{
    if (!(a_target > 0.0 && a_target <= 1.0)) throw std::invalid_argument("stick a_target must lie in (0, 1]");
    double area = static_cast<double>(n) * static_cast<double>(n);
    return std::max<Coord>(0, std::llround(area * (1.0 - a_target) / a_target) - 1);
}

ExpandingSystem stick_system(Point v, double a_target)
{
    stick_length(1, a_target);
    return {"stick",
            [v, a_target](std::int64_t n) { return stick_augmented(n, v, stick_length(n, a_target)); },
            1,
            {{"v", to_string(v)}, {"a", std::to_string(a_target)}}};
}

ExpandingSystem lshape_system() { return {"lshape", [](std::int64_t n) { return lshape(n); }, 1, {}}; }

ExpandingSystem staircase_system() { return {"staircase", [](std::int64_t n) { return staircase(n); }, 2, {}}; }

// ---------------------------------------------------------------------------
// Omega_q

FiniteLattice omega_q_plus(int q, int n)
{
    if (q < 2 || n < 1) throw std::invalid_argument("omega_q_plus needs q >= 2 and n >= 1");
    const Coord top = checked_pow(q, n);
    std::vector<Span> spans;
    for (Coord i = 1; i <= top; ++i) {
        if (i % q == 0) continue;
        Coord len = 0;
        for (Coord v = i; v <= top; v *= q) {
            ++len;
            if (v > top / q) break;
        }
        Coord rank = (i - 1) - (i - 1) / q;
        spans.push_back({rank, 0, len - 1});
    }
    return FiniteLattice::from_spans(std::move(spans));
}

FiniteLattice omega_q(int q, int n)
{
    const FiniteLattice plus = omega_q_plus(q, n);
    std::vector<Span> spans;
    for (const auto& s : plus.spans()) {
        spans.push_back({s.y, -s.length(), s.x1});
        spans.push_back({-1 - s.y, -s.length(), s.x1});
    }
    return FiniteLattice::from_spans(std::move(spans));
}

std::map<Coord, std::int64_t> row_census(int q, int n)
{
    std::map<Coord, std::int64_t> census;
    const FiniteLattice plus = omega_q_plus(q, n);
    for (const auto& s : plus.spans()) ++census[s.length()];
    return census;
}

BigInt omega_q_count_formula(int q, int n)
{
    if (q < 2 || n < 1) throw std::invalid_argument("omega_q_count_formula needs q >= 2 and n >= 1");
    FibSeq a;
    BigInt total = ipow(a(2 * (n + 1)), 2) * ipow(a(2 * n), static_cast<unsigned>(2 * (q - 2)));
    for (int k = 1; k <= n - 1; ++k) {
        Coord e = checked_mul(2 * (q - 1) * (q - 1), checked_pow(q, n - 1 - k));
        if (e > std::numeric_limits<unsigned>::max()) throw BudgetExceeded("omega_q_count_formula exponent too large");
        total *= ipow(a(2 * k), static_cast<unsigned>(e));
    }
    return total;
}

SeriesValue omega_q_entropy_series(int q, int terms)
{
    if (q < 2 || terms < 1) throw std::invalid_argument("omega_q_entropy_series needs q >= 2 and at least one term");
    FibSeq a;
    const double qd = q;
    const double c = 0.5 * (qd - 1.0) * (qd - 1.0);
    SeriesValue s;
    for (int k = 1; k <= terms; ++k) s.value += c * std::pow(qd, -(k + 1)) * a.log(2 * k);
    const double x = 1.0 / qd;
    const double K = terms;
    const double tail_kx = std::pow(x, K + 1) * ((K + 1) - K * x) / ((1 - x) * (1 - x));
    s.tail_bound = c * x * 2.0 * std::log(2.0) * tail_kx;
    return s;
}

// ---------------------------------------------------------------------------
// Shapes

FiniteLattice stick_augmented(Coord n, Point v, Coord b)
{
    if (n < 1 || b < 0) throw std::invalid_argument("stick_augmented needs n >= 1 and b >= 0");
    if (std::gcd(v.x, v.y) != 1) throw NonPrimitiveVector("stick direction " + to_string(v) + " is not primitive");
    const auto square = rectangle({0, 0}, n, n);
    std::vector<Span> stick;
    stick.reserve(static_cast<std::size_t>(b + 1));
    for (Coord s = 0; s <= b; ++s) {
        Point p{s * v.x + n, s * v.y};
        if (square.contains(p)) throw OverlapError("stick site " + to_string(p) + " lies inside the square");
        stick.push_back({p.y, p.x, p.x});
    }
    return unite(square, FiniteLattice::from_spans(std::move(stick)));
}

FiniteLattice lshape(Coord n)
{
    if (n < 1) throw std::invalid_argument("lshape needs n >= 1");
    return unite(rectangle({0, 0}, n * n, n), rectangle({0, 0}, n, n * n));
}

FiniteLattice staircase(Coord n)
{
    if (n < 2) throw std::invalid_argument("staircase needs n >= 2");
    return unite(rectangle({0, 0}, n * n, n), rectangle({n * n - 1, n}, n, n * n));
}

NestingCheck check_nesting(const ExpandingSystem& system, int steps)
{
    NestingCheck c;
    FiniteLattice prev = system(system.first_index);
    for (std::int64_t n = system.first_index; n < system.first_index + steps; ++n) {
        FiniteLattice next = system(n + 1);
        bool nested = prev.is_subset_of(next);
        bool growing = next.size() > prev.size();
        if ((!nested || !growing) && c.first_failure < 0) c.first_failure = n;
        c.nested = c.nested && nested;
        c.growing = c.growing && growing;
        prev = std::move(next);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Trends and condition reports

std::string to_string(Trend t)
{
    switch (t) {
    case Trend::vanishing: return "vanishing";
    case Trend::non_vanishing: return "non-vanishing";
    case Trend::bounded: break;
    }
    return "bounded";
}

Trend classify_trend(std::span<const std::int64_t> index, std::span<const double> values, const TrendThresholds& t)
{
    const std::size_t len = values.size();
    if (len < 3 || index.size() != len) return Trend::bounded;
    const std::size_t third = (len + 2) / 3;
    std::vector<double> env(len);
    env[len - 1] = values[len - 1];
    for (std::size_t i = len - 1; i-- > 0;) env[i] = std::max(values[i], env[i + 1]);

    const std::size_t a = third - 1, b = len - third;
    const double early = env[a], late = env[b];
    bool vanishing = false;
    if (early == 0.0) {
        vanishing = late == 0.0 && env[0] == 0.0;
    } else if (late < early) {
        bool small = late < t.vanish_factor * env[0];
        bool decaying = late == 0.0;
        if (!decaying && index[b] > index[a]) {
            double slope = std::log(late / early) / std::log(static_cast<double>(index[b]) / static_cast<double>(index[a]));
            decaying = slope <= -t.decay_exponent;
        }
        vanishing = small || decaying;
    }
    if (vanishing) return Trend::vanishing;
    double tail_min = *std::min_element(values.begin() + static_cast<std::ptrdiff_t>(b), values.end());
    return tail_min > t.nonvanishing_floor ? Trend::non_vanishing : Trend::bounded;
}

ConditionReport condition_report(const ExpandingSystem& system, std::int64_t n_lo, std::int64_t n_hi, int m_max,
                                 const TessellationChoice& choice, std::vector<std::pair<Coord, Coord>> block_sizes,
                                 const TrendThresholds& thresholds)
{
    if (n_lo > n_hi) throw std::invalid_argument("condition_report: empty index range");
    n_lo = std::max(n_lo, system.first_index);
    ConditionReport rep;
    rep.system = system.name;
    rep.block_sizes = std::move(block_sizes);
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        const FiniteLattice omega = system(n);
        ConditionRow row;
        row.n = n;
        row.size = omega.size();
        const double size = static_cast<double>(std::max<std::int64_t>(row.size, 1));
        row.boundary_size = boundary(omega).size();
        row.boundary_ratio = row.boundary_size / size;

        FiniteLattice tiling;
        switch (choice.kind) {
        case TessellationChoice::Kind::bounding_rectangle:
            tiling = rectangle(omega.bounds());
            row.tiling = "bounding_rectangle";
            break;
        case TessellationChoice::Kind::self_if_tessellation:
            if (!omega.empty() && is_tessellation(omega).kind == TessellationVerdict::Kind::yes) {
                tiling = omega;
                row.tiling = "self";
            } else {
                tiling = rectangle(omega.bounds());
                row.tiling = "bounding_rectangle";
            }
            break;
        case TessellationChoice::Kind::explicit_list: {
            auto idx = static_cast<std::size_t>(n - n_lo);
            if (idx >= choice.explicit_tilings.size()) throw std::invalid_argument("explicit tiling list is too short");
            tiling = choice.explicit_tilings[idx];
            row.tiling = "explicit";
            break;
        }
        }
        row.complement_size = complement_in(omega, tiling).size();
        row.complement_ratio = row.complement_size / size;

        auto census_h = run_length_census(omega, Axis::horizontal);
        auto census_v = run_length_census(omega, Axis::vertical);
        for (Coord m = 1; m <= m_max; ++m) {
            row.run_ratio_h.push_back(census_h.contains(m) ? census_h[m] / size : 0.0);
            row.run_ratio_v.push_back(census_v.contains(m) ? census_v[m] / size : 0.0);
        }
        for (const auto& [k, l] : rep.block_sizes) row.block_ratio.push_back(block_decompose(omega, k, l).beta / size);
        rep.rows.push_back(std::move(row));
    }

    std::vector<std::int64_t> idx;
    for (const auto& r : rep.rows) idx.push_back(r.n);
    auto column = [&](auto get) {
        std::vector<double> v;
        for (const auto& r : rep.rows) v.push_back(get(r));
        return classify_trend(idx, v, thresholds);
    };
    rep.boundary = column([](const ConditionRow& r) { return r.boundary_ratio; });
    rep.complement = column([](const ConditionRow& r) { return r.complement_ratio; });
    for (int m = 0; m < m_max; ++m) {
        rep.run_h.push_back(column([m](const ConditionRow& r) { return r.run_ratio_h[static_cast<std::size_t>(m)]; }));
        rep.run_v.push_back(column([m](const ConditionRow& r) { return r.run_ratio_v[static_cast<std::size_t>(m)]; }));
    }
    for (std::size_t j = 0; j < rep.block_sizes.size(); ++j)
        rep.block.push_back(column([j](const ConditionRow& r) { return r.block_ratio[j]; }));
    return rep;
}

}  // namespace sft
