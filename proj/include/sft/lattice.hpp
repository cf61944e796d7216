#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sft {

using Coord = std::int64_t;

// A site of Z^2. Ordering is row-major: by y, then by x.
struct Point {
    Coord x = 0;
    Coord y = 0;

    friend bool operator==(const Point&, const Point&) = default;
    friend std::strong_ordering operator<=>(const Point& a, const Point& b)
    {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
};

// Horizontal run [x0, x1] (inclusive) on row y.
struct Span {
    Coord y = 0;
    Coord x0 = 0;
    Coord x1 = 0;

    Coord length() const { return x1 - x0 + 1; }
    friend bool operator==(const Span&, const Span&) = default;
};

// Axis-aligned rectangle Z_{width x height}(origin); origin is the left-bottom site.
struct Rect {
    Point origin;
    Coord width = 0;
    Coord height = 0;

    Coord area() const { return width * height; }
    friend bool operator==(const Rect&, const Rect&) = default;
};

enum class Axis { horizontal, vertical };

// Finite subset of Z^2, stored as row spans in canonical (y, x) order.
// Rows are merged so that two spans on one row never touch; equality of
// lattices is equality of span lists.
class FiniteLattice {
public:
    FiniteLattice() = default;

    static FiniteLattice from_points(std::span<const Point> pts);
    static FiniteLattice from_spans(std::vector<Span> spans);
    static FiniteLattice from_rects(std::span<const Rect> rects);

    const std::vector<Span>& spans() const { return spans_; }
    std::int64_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    // Smallest rectangle containing every point; zero-sized when empty.
    const Rect& bounds() const { return bounds_; }

    bool contains(Point p) const;
    // Position of p in canonical order, if present.
    std::optional<std::int64_t> index_of(Point p) const;
    Point point_at(std::int64_t index) const;
    std::vector<Point> points() const;

    template <class F>
    void for_each(F&& f) const
    {
        for (const auto& s : spans_)
            for (Coord x = s.x0; x <= s.x1; ++x) f(Point{x, s.y});
    }

    FiniteLattice translated(Point v) const;
    // Reflection across the diagonal, (x, y) -> (y, x).
    FiniteLattice transposed() const;

    bool is_subset_of(const FiniteLattice& other) const;

    friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) { return a.spans_ == b.spans_; }

private:
    explicit FiniteLattice(std::vector<Span> normalized);

    std::vector<Span> spans_;
    std::vector<std::int64_t> offsets_;  // points before spans_[i]
    std::int64_t size_ = 0;
    Rect bounds_;
};

FiniteLattice unite(const FiniteLattice& a, const FiniteLattice& b);
FiniteLattice intersect(const FiniteLattice& a, const FiniteLattice& b);
FiniteLattice subtract(const FiniteLattice& a, const FiniteLattice& b);

FiniteLattice rectangle(Point origin, Coord m, Coord n);
FiniteLattice rectangle(const Rect& r);

// Sites (i,j) with (i+1,j), (i,j+1), (i+1,j+1) also in L.
FiniteLattice interior(const FiniteLattice& lattice);
FiniteLattice boundary(const FiniteLattice& lattice);

// inner must be a subset of outer (SubsetViolation otherwise); returns outer \ inner.
FiniteLattice complement_in(const FiniteLattice& inner, const FiniteLattice& outer);

// Chebyshev dilation by radius r >= 0.
FiniteLattice dilate(const FiniteLattice& lattice, Coord radius);

struct BlockDecomposition {
    Coord k = 1;
    Coord l = 1;
    // Block indices (a, b) of the k x l cells Z_{k x l}((ak, bl)) contained in
    // the source, encoded as a lattice over block coordinates.
    FiniteLattice index_set;
    std::int64_t alpha = 0;
    FiniteLattice covered;
    FiniteLattice residue;
    std::int64_t beta = 0;
};

BlockDecomposition block_decompose(const FiniteLattice& lattice, Coord k, Coord l);

// Maximal axis-aligned runs, grouped into rectangles whose every column
// (vertical) or row (horizontal) is one maximal run of the same extent.
std::vector<Rect> vertical_runs(const FiniteLattice& lattice);

// Sites whose maximal run along the axis has length exactly m.
FiniteLattice run_length_class(const FiniteLattice& lattice, Axis axis, Coord m);
// length -> number of sites with that run length.
std::map<Coord, std::int64_t> run_length_census(const FiniteLattice& lattice, Axis axis);

// Cuts along full horizontal (vertical) lines into rectangles; nullopt when some
// row (column) is not a single contiguous run.
std::optional<std::vector<Rect>> decompose_bands(const FiniteLattice& lattice, Axis axis);

bool is_four_connected(const FiniteLattice& lattice);
// Connected and without holes (every site of the complement reaches infinity).
bool is_simply_connected(const FiniteLattice& lattice);

std::string to_string(Point p);

}  // namespace sft
