#pragma once

#include <string>
#include <vector>

#include "sft/lattice.hpp"

namespace sft {

using Symbol = int;

struct PatternCell {
    Point offset;
    Symbol symbol = 0;
    friend bool operator==(const PatternCell&, const PatternCell&) = default;
};

// A pattern on a finite shape that may not occur anywhere. Construction
// translates the shape so that min x = min y = 0 and sorts cells canonically.
class ForbiddenPattern {
public:
    explicit ForbiddenPattern(std::vector<PatternCell> cells);

    const std::vector<PatternCell>& cells() const { return cells_; }
    FiniteLattice shape() const;
    // Width and height of the shape's bounding box.
    Coord width() const { return width_; }
    Coord height() const { return height_; }

    friend bool operator==(const ForbiddenPattern&, const ForbiddenPattern&) = default;

private:
    std::vector<PatternCell> cells_;
    Coord width_ = 0;
    Coord height_ = 0;
};

// Shift of finite type over the alphabet {0, ..., N-1} defined by forbidden
// patterns (deduplicated up to translation).
class SftSpec {
public:
    SftSpec(int alphabet_size, std::vector<ForbiddenPattern> forbidden, std::string name);

    int alphabet_size() const { return alphabet_size_; }
    const std::vector<ForbiddenPattern>& forbidden() const { return forbidden_; }
    const std::string& name() const { return name_; }

    bool is_full_shift() const { return forbidden_.empty(); }
    // Largest bounding-box extent minus one over all forbidden shapes.
    Coord forbidden_diameter() const;
    // Every forbidden shape fits in a 2x2 window.
    bool fits_two_by_two() const;

    SftSpec transposed() const;

private:
    int alphabet_size_;
    std::vector<ForbiddenPattern> forbidden_;
    std::string name_;
};

// Pattern on a finite support; values are listed in the support's canonical order.
struct Pattern {
    FiniteLattice support;
    std::vector<Symbol> values;

    Symbol at(Point p) const;
    Pattern translated(Point v) const;
};

// Horizontal golden mean: x_{i,j} x_{i+1,j} = 0.
SftSpec golden_mean_horizontal();
// Vertical golden mean: x_{i,j} x_{i,j+1} = 0.
SftSpec golden_mean_vertical();
SftSpec full_shift(int alphabet_size);
// Golden mean in both directions.
SftSpec hard_squares();
// Rows alternate 0101...: forbids 00 and 11 horizontally.
SftSpec period_two_horizontal();

// Builtins by name: golden-mean-h, golden-mean-v, hard-squares, period-2-h,
// full:N. Throws ParseError for unknown names.
SftSpec builtin_spec(const std::string& name);

// Translation vectors v with shape + v inside lattice, in canonical order.
std::vector<Point> placements(const FiniteLattice& shape, const FiniteLattice& lattice);

bool is_locally_admissible(const Pattern& pattern, const SftSpec& spec);

}  // namespace sft
