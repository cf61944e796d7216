#include "sft/shift.hpp"

#include <algorithm>
#include <stdexcept>

#include "sft/errors.hpp"

namespace sft {

ForbiddenPattern::ForbiddenPattern(std::vector<PatternCell> cells) : cells_(std::move(cells))
{
    if (cells_.empty()) throw std::invalid_argument("forbidden pattern must have at least one cell");
    Coord xmin = cells_[0].offset.x, ymin = cells_[0].offset.y;
    Coord xmax = xmin, ymax = ymin;
    for (const auto& c : cells_) {
        xmin = std::min(xmin, c.offset.x);
        ymin = std::min(ymin, c.offset.y);
        xmax = std::max(xmax, c.offset.x);
        ymax = std::max(ymax, c.offset.y);
    }
    for (auto& c : cells_) c.offset = c.offset - Point{xmin, ymin};
    std::sort(cells_.begin(), cells_.end(), [](const PatternCell& a, const PatternCell& b) { return a.offset < b.offset; });
    for (std::size_t i = 1; i < cells_.size(); ++i)
        if (cells_[i].offset == cells_[i - 1].offset) throw std::invalid_argument("forbidden pattern has duplicate offsets");
    width_ = xmax - xmin + 1;
    height_ = ymax - ymin + 1;
}

FiniteLattice ForbiddenPattern::shape() const
{
    std::vector<Point> pts;
    for (const auto& c : cells_) pts.push_back(c.offset);
    return FiniteLattice::from_points(pts);
}

SftSpec::SftSpec(int alphabet_size, std::vector<ForbiddenPattern> forbidden, std::string name)
    : alphabet_size_(alphabet_size), name_(std::move(name))
{
    if (alphabet_size < 2) throw std::invalid_argument("alphabet size must be at least 2");
    for (auto& f : forbidden) {
        for (const auto& c : f.cells())
            if (c.symbol < 0 || c.symbol >= alphabet_size)
                throw SymbolOutOfRange("forbidden pattern symbol " + std::to_string(c.symbol) + " outside alphabet");
        if (std::find(forbidden_.begin(), forbidden_.end(), f) == forbidden_.end()) forbidden_.push_back(std::move(f));
    }
}

Coord SftSpec::forbidden_diameter() const
{
    Coord d = 0;
    for (const auto& f : forbidden_) d = std::max({d, f.width() - 1, f.height() - 1});
    return d;
}

bool SftSpec::fits_two_by_two() const
{
    return std::all_of(forbidden_.begin(), forbidden_.end(), [](const ForbiddenPattern& f) { return f.width() <= 2 && f.height() <= 2; });
}

SftSpec SftSpec::transposed() const
{
    std::vector<ForbiddenPattern> out;
    for (const auto& f : forbidden_) {
        auto cells = f.cells();
        for (auto& c : cells) c.offset = {c.offset.y, c.offset.x};
        out.emplace_back(std::move(cells));
    }
    return SftSpec(alphabet_size_, std::move(out), name_ + "^T");
}

Symbol Pattern::at(Point p) const
{
    auto idx = support.index_of(p);
    if (!idx) throw std::out_of_range("pattern has no site " + to_string(p));
    return values[static_cast<std::size_t>(*idx)];
}

Pattern Pattern::translated(Point v) const { return {support.translated(v), values}; }

SftSpec golden_mean_horizontal()
{
    return SftSpec(2, {ForbiddenPattern({{{0, 0}, 1}, {{1, 0}, 1}})}, "golden-mean-h");
}

SftSpec golden_mean_vertical()
{
    return SftSpec(2, {ForbiddenPattern({{{0, 0}, 1}, {{0, 1}, 1}})}, "golden-mean-v");
}

SftSpec full_shift(int alphabet_size) { return SftSpec(alphabet_size, {}, "full:" + std::to_string(alphabet_size)); }

SftSpec hard_squares()
{
    return SftSpec(2, {ForbiddenPattern({{{0, 0}, 1}, {{1, 0}, 1}}), ForbiddenPattern({{{0, 0}, 1}, {{0, 1}, 1}})}, "hard-squares");
}

SftSpec period_two_horizontal()
{
    return SftSpec(2, {ForbiddenPattern({{{0, 0}, 0}, {{1, 0}, 0}}), ForbiddenPattern({{{0, 0}, 1}, {{1, 0}, 1}})}, "period-2-h");
}

SftSpec builtin_spec(const std::string& name)
{
    if (name == "golden-mean-h") return golden_mean_horizontal();
    if (name == "golden-mean-v") return golden_mean_vertical();
    if (name == "hard-squares") return hard_squares();
    if (name == "period-2-h") return period_two_horizontal();
    if (name.rfind("full:", 0) == 0) {
        try {
            return full_shift(std::stoi(name.substr(5)));
        } catch (const std::logic_error&) {
            throw ParseError("bad full-shift alphabet in '" + name + "'");
        }
    }
    throw ParseError("unknown builtin spec '" + name + "'");
}

std::vector<Point> placements(const FiniteLattice& shape, const FiniteLattice& lattice)
{
    std::vector<Point> out;
    if (shape.empty()) return out;
    const auto cells = shape.points();
    const Point first = cells.front();
    lattice.for_each([&](Point p) {
        Point v = p - first;
        for (std::size_t i = 1; i < cells.size(); ++i)
            if (!lattice.contains(cells[i] + v)) return;
        out.push_back(v);
    });
    return out;
}

bool is_locally_admissible(const Pattern& pattern, const SftSpec& spec)
{
    if (static_cast<std::int64_t>(pattern.values.size()) != pattern.support.size())
        throw std::invalid_argument("pattern values do not match its support");
    for (Symbol s : pattern.values)
        if (s < 0 || s >= spec.alphabet_size()) throw SymbolOutOfRange("pattern symbol " + std::to_string(s) + " outside alphabet");
    for (const auto& f : spec.forbidden()) {
        for (const Point& v : placements(f.shape(), pattern.support)) {
            bool match = std::all_of(f.cells().begin(), f.cells().end(),
                                     [&](const PatternCell& c) { return pattern.at(c.offset + v) == c.symbol; });
            if (match) return false;
        }
    }
    return true;
}

}  // namespace sft
