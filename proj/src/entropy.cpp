#include "sft/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "sft/bigint.hpp"
#include "sft/errors.hpp"

namespace sft {

std::string to_string(EstimatorKind kind)
{
    switch (kind) {
    case EstimatorKind::infimum: return "infimum";
    case EstimatorKind::series: return "series";
    case EstimatorKind::limsup_tail_max: break;
    }
    return "limsup_tail_max";
}

double tail_max(const std::vector<EntropyRecord>& records)
{
    if (records.empty()) return 0.0;
    const std::size_t tail = (records.size() + 2) / 3;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = records.size() - tail; i < records.size(); ++i) best = std::max(best, records[i].ratio);
    return best;
}

namespace {

EntropyRecord make_record(std::int64_t index, std::int64_t size, double log_count)
{
    return {index, size, log_count, size > 0 ? log_count / static_cast<double>(size) : 0.0};
}

}  // namespace

RectTable rect_entropy_table(const SftSpec& spec, int M, int N, const Budget& budget)
{
    if (M < 1 || N < 1) throw std::invalid_argument("rect_entropy_table needs M, N >= 1");
    RectTable t;
    t.M = M;
    t.N = N;
    t.log_counts.reserve(static_cast<std::size_t>(M) * N);
    t.estimate = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= N; ++n) {
        for (int m = 1; m <= M; ++m) {
            t.log_counts.push_back(log_of(count(rectangle({0, 0}, m, n), spec, CountMode::local(), budget).value));
            if (double r = t.ratio(m, n); r < t.estimate) {
                t.estimate = r;
                t.argmin_m = m;
                t.argmin_n = n;
            }
        }
    }
    return t;
}

EntropySequence omega_entropy(const SftSpec& spec, const ExpandingSystem& system, std::int64_t n_lo,
                              std::int64_t n_hi, const Budget& budget)
{
    if (n_lo > n_hi) throw std::invalid_argument("omega_entropy: empty index range");
    EntropySequence seq;
    seq.unconstrained = true;
    for (std::int64_t n = std::max(n_lo, system.first_index); n <= n_hi; ++n) {
        FiniteLattice omega = system(n);
        seq.records.push_back(make_record(n, omega.size(), log_count(omega, spec, budget)));
        if (seq.unconstrained)
            for (const auto& f : spec.forbidden())
                if (!placements(f.shape(), omega).empty()) {
                    seq.unconstrained = false;
                    break;
                }
    }
    seq.estimate = tail_max(seq.records);
    return seq;
}

EntropySequence projectional_entropy(const SftSpec& spec, Point v, int n_max, CountMode mode, const Budget& budget)
{
    if (v.x == 0 && v.y == 0) throw NonPrimitiveVector("direction must be nonzero");
    if (std::gcd(v.x, v.y) != 1) throw NonPrimitiveVector("direction " + to_string(v) + " is not primitive");
    if (n_max < 1) throw std::invalid_argument("projectional_entropy needs n_max >= 1");
    EntropySequence seq;
    std::vector<Point> pts;
    for (int n = 1; n <= n_max; ++n) {
        pts.push_back({v.x * (n - 1), v.y * (n - 1)});
        FiniteLattice segment = FiniteLattice::from_points(pts);
        seq.records.push_back(make_record(n, n, log_of(count(segment, spec, mode, budget).value)));
    }
    FiniteLattice longest = FiniteLattice::from_points(pts);
    seq.unconstrained = std::none_of(spec.forbidden().begin(), spec.forbidden().end(),
                                     [&](const ForbiddenPattern& f) { return !placements(f.shape(), longest).empty(); });
    seq.estimate = tail_max(seq.records);
    return seq;
}

std::pair<double, Point> hhat1_estimate(const SftSpec& spec, const std::vector<Point>& directions, int n_max,
                                        const Budget& budget)
{
    if (directions.empty()) throw std::invalid_argument("hhat1_estimate needs at least one direction");
    double best = -std::numeric_limits<double>::infinity();
    Point arg = directions.front();
    for (Point v : directions) {
        double e = projectional_entropy(spec, v, n_max, CountMode::local(), budget).estimate;
        if (e > best) {
            best = e;
            arg = v;
        }
    }
    return {best, arg};
}

std::optional<double> known_rect_entropy(const SftSpec& spec)
{
    if (spec.is_full_shift()) return std::log(static_cast<double>(spec.alphabet_size()));
    const auto& f = spec.forbidden();
    auto same = [&](const SftSpec& other) {
        return spec.alphabet_size() == other.alphabet_size() && f.size() == other.forbidden().size() &&
               std::is_permutation(f.begin(), f.end(), other.forbidden().begin());
    };
    if (same(golden_mean_horizontal()) || same(golden_mean_vertical())) return std::log((1.0 + std::sqrt(5.0)) / 2.0);
    return std::nullopt;
}

GapReport strict_gap_check(const SftSpec& spec, int M, int N, const Budget& budget)
{
    GapReport rep;
    rep.table = rect_entropy_table(spec, M, N, budget);
    rep.full_shift = spec.is_full_shift();
    if (auto known = known_rect_entropy(spec)) {
        rep.reference = *known;
        rep.reference_kind = "closed-form";
    } else {
        FiniteLattice big = rectangle({0, 0}, 2 * M, 2 * N);
        rep.reference = log_count(big, spec, budget) / static_cast<double>(big.size());
        rep.reference_kind = "estimate";
    }
    rep.min_margin = std::numeric_limits<double>::infinity();
    bool ok = true;
    for (int n = 1; n <= N; ++n) {
        for (int m = 1; m <= M; ++m) {
            double margin = rep.table.ratio(m, n) - rep.reference;
            if (margin < rep.min_margin) {
                rep.min_margin = margin;
                rep.min_m = m;
                rep.min_n = n;
            }
            ok = ok && (rep.full_shift ? std::abs(margin) <= 1e-12 : margin > 0.0);
        }
    }
    rep.holds = ok;
    return rep;
}

}  // namespace sft
