#include "sft/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sft/errors.hpp"

namespace sft {

std::string to_string(GluingVariant v)
{
    switch (v) {
    case GluingVariant::horizontal: return "horizontal";
    case GluingVariant::vertical: return "vertical";
    case GluingVariant::full: break;
    }
    return "full";
}

GluingVariant parse_gluing_variant(const std::string& text)
{
    if (text == "full") return GluingVariant::full;
    if (text == "horizontal") return GluingVariant::horizontal;
    if (text == "vertical") return GluingVariant::vertical;
    throw ParseError("unknown gluing variant '" + text + "'");
}

double rect_distance(const Rect& a, const Rect& b)
{
    auto gap = [](Coord lo1, Coord len1, Coord lo2, Coord len2) {
        Coord g = std::max(lo2 - (lo1 + len1), lo1 - (lo2 + len2));
        return static_cast<double>(std::max<Coord>(0, g));
    };
    double gx = gap(a.origin.x, a.width, b.origin.x, b.width);
    double gy = gap(a.origin.y, a.height, b.origin.y, b.height);
    return std::sqrt(gx * gx + gy * gy);
}

namespace {

FiniteLattice region_for(Coord w, Point offset, Coord margin)
{
    return dilate(rectangle(unite(rectangle({0, 0}, w, w), rectangle(offset, w, w)).bounds()), margin);
}

std::vector<std::int64_t> indices_in(const FiniteLattice& region, const FiniteLattice& part)
{
    std::vector<std::int64_t> idx;
    idx.reserve(static_cast<std::size_t>(part.size()));
    part.for_each([&](Point p) { idx.push_back(*region.index_of(p)); });
    return idx;
}

}  // namespace

GluingVerdict verify_block_gluing(const SftSpec& spec, Coord gap, int window, Coord extent, GluingVariant variant,
                                  const Budget& budget)
{
    if (window < 1 || window > 4) throw std::invalid_argument("gluing window must be between 1 and 4");
    if (gap < 0 || extent < 0) throw std::invalid_argument("gluing gap and extent must be nonnegative");
    GluingVerdict v{spec.name(), gap, window, extent, variant, true, std::nullopt, 0, 0};
    const Coord w = window;
    const Coord margin = spec.forbidden_diameter();

    const FiniteLattice block = rectangle({0, 0}, w, w);
    std::vector<std::vector<Symbol>> patterns;
    PatternSearch(block, spec).enumerate(std::vector<Symbol>(static_cast<std::size_t>(block.size()), -1),
                                         [&](const std::vector<Symbol>& values) {
                                             if (patterns.size() >= budget.max_enumerated)
                                                 throw BudgetExceeded("too many admissible window patterns");
                                             patterns.push_back(values);
                                             return true;
                                         });

    for (Coord dy = 0; dy <= extent; ++dy) {
        for (Coord dx = -extent; dx <= extent; ++dx) {
            // Offsets -o and o describe the same configuration with roles swapped.
            if (dy == 0 && dx <= 0) continue;
            if (variant == GluingVariant::horizontal && dy != 0) continue;
            if (variant == GluingVariant::vertical && dx != 0) continue;
            const Point offset{dx, dy};
            const Rect r1{{0, 0}, w, w}, r2{offset, w, w};
            const double d = rect_distance(r1, r2);
            if (std::abs(dx) < w && std::abs(dy) < w) continue;  // overlapping
            if (d < static_cast<double>(gap)) continue;
            ++v.offsets_checked;

            const FiniteLattice region = region_for(w, offset, margin);
            if (region.size() > 4096) throw BudgetExceeded("gluing witness region is too large");
            const PatternSearch search(region, spec);
            const auto idx1 = indices_in(region, block);
            const auto idx2 = indices_in(region, rectangle(offset, w, w));
            std::vector<Symbol> fixed(static_cast<std::size_t>(region.size()), -1);
            for (const auto& p1 : patterns) {
                for (std::size_t i = 0; i < idx1.size(); ++i) fixed[static_cast<std::size_t>(idx1[i])] = p1[i];
                for (const auto& p2 : patterns) {
                    for (std::size_t i = 0; i < idx2.size(); ++i) fixed[static_cast<std::size_t>(idx2[i])] = p2[i];
                    ++v.pairs_checked;
                    if (search.exists(fixed, budget.max_search_nodes)) continue;
                    v.verified = false;
                    v.counterexample = GluingCounterexample{Pattern{block, p1},
                                                            Pattern{rectangle(offset, w, w), p2}, offset, d};
                    return v;
                }
            }
        }
    }
    return v;
}

FiniteLattice witness_region(const GluingCounterexample& c, const SftSpec& spec)
{
    return dilate(rectangle(unite(c.first.support, c.second.support).bounds()), spec.forbidden_diameter());
}

BigInt replay_counterexample(const GluingCounterexample& c, const SftSpec& spec, const Budget& budget)
{
    Pins pins;
    for (const Pattern* p : {&c.first, &c.second}) {
        std::size_t i = 0;
        p->support.for_each([&](Point q) { pins[q] = p->values[i++]; });
    }
    return count_pinned(witness_region(c, spec), spec, pins, budget);
}

}  // namespace sft
