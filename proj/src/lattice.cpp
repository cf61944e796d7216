#include "sft/lattice.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "sft/errors.hpp"

namespace sft {

namespace {

bool span_less(const Span& a, const Span& b)
{
    if (a.y != b.y) return a.y < b.y;
    return a.x0 < b.x0;
}

std::vector<Span> normalize(std::vector<Span> spans)
{
    std::erase_if(spans, [](const Span& s) { return s.x1 < s.x0; });
    std::sort(spans.begin(), spans.end(), span_less);
    std::vector<Span> out;
    out.reserve(spans.size());
    for (const auto& s : spans) {
        if (!out.empty() && out.back().y == s.y && s.x0 <= out.back().x1 + 1) {
            out.back().x1 = std::max(out.back().x1, s.x1);
        } else {
            out.push_back(s);
        }
    }
    return out;
}

// [begin, end) ranges of spans sharing a row.
template <class F>
void for_each_row(const std::vector<Span>& spans, F&& f)
{
    std::size_t i = 0;
    while (i < spans.size()) {
        std::size_t j = i;
        while (j < spans.size() && spans[j].y == spans[i].y) ++j;
        f(spans[i].y, std::span<const Span>(spans.data() + i, j - i));
        i = j;
    }
}

std::span<const Span> row_of(const std::vector<Span>& spans, Coord y)
{
    auto lo = std::lower_bound(spans.begin(), spans.end(), y, [](const Span& s, Coord v) { return s.y < v; });
    auto hi = std::upper_bound(lo, spans.end(), y, [](Coord v, const Span& s) { return v < s.y; });
    return {spans.data() + (lo - spans.begin()), static_cast<std::size_t>(hi - lo)};
}

void intersect_rows(std::span<const Span> a, std::span<const Span> b, Coord y, std::vector<Span>& out)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        Coord lo = std::max(a[i].x0, b[j].x0);
        Coord hi = std::min(a[i].x1, b[j].x1);
        if (lo <= hi) out.push_back({y, lo, hi});
        if (a[i].x1 < b[j].x1)
            ++i;
        else
            ++j;
    }
}

void subtract_rows(std::span<const Span> a, std::span<const Span> b, Coord y, std::vector<Span>& out)
{
    std::size_t j = 0;
    for (const auto& s : a) {
        Coord cur = s.x0;
        while (j < b.size() && b[j].x1 < cur) ++j;
        std::size_t k = j;
        while (k < b.size() && b[k].x0 <= s.x1) {
            if (b[k].x0 > cur) out.push_back({y, cur, b[k].x0 - 1});
            cur = std::max(cur, b[k].x1 + 1);
            ++k;
        }
        if (cur <= s.x1) out.push_back({y, cur, s.x1});
    }
}

Coord floor_div(Coord a, Coord b)
{
    Coord q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Coord ceil_div(Coord a, Coord b) { return -floor_div(-a, b); }

}  // namespace

FiniteLattice::FiniteLattice(std::vector<Span> normalized) : spans_(std::move(normalized))
{
    offsets_.reserve(spans_.size());
    Coord xmin = 0, xmax = -1;
    for (const auto& s : spans_) {
        offsets_.push_back(size_);
        size_ += s.length();
        if (xmax < xmin) {
            xmin = s.x0;
            xmax = s.x1;
        } else {
            xmin = std::min(xmin, s.x0);
            xmax = std::max(xmax, s.x1);
        }
    }
    if (!spans_.empty()) {
        bounds_.origin = {xmin, spans_.front().y};
        bounds_.width = xmax - xmin + 1;
        bounds_.height = spans_.back().y - spans_.front().y + 1;
    }
}

FiniteLattice FiniteLattice::from_points(std::span<const Point> pts)
{
    std::vector<Span> spans;
    spans.reserve(pts.size());
    for (const auto& p : pts) spans.push_back({p.y, p.x, p.x});
    return FiniteLattice(normalize(std::move(spans)));
}

FiniteLattice FiniteLattice::from_spans(std::vector<Span> spans) { return FiniteLattice(normalize(std::move(spans))); }

FiniteLattice FiniteLattice::from_rects(std::span<const Rect> rects)
{
    std::vector<Span> spans;
    for (const auto& r : rects) {
        if (r.width <= 0) continue;
        for (Coord dy = 0; dy < r.height; ++dy) spans.push_back({r.origin.y + dy, r.origin.x, r.origin.x + r.width - 1});
    }
    return FiniteLattice(normalize(std::move(spans)));
}

std::optional<std::int64_t> FiniteLattice::index_of(Point p) const
{
    auto it = std::upper_bound(spans_.begin(), spans_.end(), p, [](const Point& q, const Span& s) {
        if (q.y != s.y) return q.y < s.y;
        return q.x < s.x0;
    });
    if (it == spans_.begin()) return std::nullopt;
    --it;
    if (it->y != p.y || p.x > it->x1) return std::nullopt;
    return offsets_[static_cast<std::size_t>(it - spans_.begin())] + (p.x - it->x0);
}

bool FiniteLattice::contains(Point p) const { return index_of(p).has_value(); }

Point FiniteLattice::point_at(std::int64_t index) const
{
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
    const auto& s = spans_[static_cast<std::size_t>(it - offsets_.begin()) - 1];
    return {s.x0 + (index - *(it - 1)), s.y};
}

std::vector<Point> FiniteLattice::points() const
{
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(size_));
    for_each([&](Point p) { out.push_back(p); });
    return out;
}

FiniteLattice FiniteLattice::translated(Point v) const
{
    std::vector<Span> spans = spans_;
    for (auto& s : spans) {
        s.y += v.y;
        s.x0 += v.x;
        s.x1 += v.x;
    }
    return FiniteLattice(std::move(spans));
}

std::vector<Rect> vertical_runs(const FiniteLattice& lattice)
{
    struct Open {
        Coord x0, x1, ys;
    };
    std::vector<Rect> out;
    std::vector<Open> open;
    Coord prev_y = 0;
    auto close = [&](const Open& o, Coord ye) { out.push_back({{o.x0, o.ys}, o.x1 - o.x0 + 1, ye - o.ys + 1}); };

    for_each_row(lattice.spans(), [&](Coord y, std::span<const Span> row) {
        if (!open.empty() && prev_y + 1 != y) {
            for (const auto& o : open) close(o, prev_y);
            open.clear();
        }
        std::vector<Open> next;
        // Continuing parts of open runs, and the parts that end here.
        for (const auto& o : open) {
            std::vector<Span> piece{{y, o.x0, o.x1}}, kept, ended;
            intersect_rows(piece, row, y, kept);
            subtract_rows(piece, row, y, ended);
            for (const auto& k : kept) next.push_back({k.x0, k.x1, o.ys});
            for (const auto& e : ended) close({e.x0, e.x1, o.ys}, y - 1);
        }
        // Parts of this row no open run covers start new runs.
        std::vector<Span> covered;
        for (const auto& o : open) covered.push_back({y, o.x0, o.x1});
        std::vector<Span> fresh;
        subtract_rows(row, covered, y, fresh);
        for (const auto& f : fresh) next.push_back({f.x0, f.x1, y});
        std::sort(next.begin(), next.end(), [](const Open& a, const Open& b) { return a.x0 < b.x0; });
        open = std::move(next);
        prev_y = y;
    });
    for (const auto& o : open) close(o, prev_y);
    return out;
}

FiniteLattice FiniteLattice::transposed() const
{
    std::vector<Span> spans;
    for (const auto& r : vertical_runs(*this)) {
        for (Coord x = r.origin.x; x < r.origin.x + r.width; ++x)
            spans.push_back({x, r.origin.y, r.origin.y + r.height - 1});
    }
    return FiniteLattice(normalize(std::move(spans)));
}

bool FiniteLattice::is_subset_of(const FiniteLattice& other) const { return subtract(*this, other).empty(); }

FiniteLattice unite(const FiniteLattice& a, const FiniteLattice& b)
{
    std::vector<Span> spans = a.spans();
    spans.insert(spans.end(), b.spans().begin(), b.spans().end());
    return FiniteLattice::from_spans(std::move(spans));
}

FiniteLattice intersect(const FiniteLattice& a, const FiniteLattice& b)
{
    std::vector<Span> out;
    for_each_row(a.spans(), [&](Coord y, std::span<const Span> row) { intersect_rows(row, row_of(b.spans(), y), y, out); });
    return FiniteLattice::from_spans(std::move(out));
}

FiniteLattice subtract(const FiniteLattice& a, const FiniteLattice& b)
{
    std::vector<Span> out;
    for_each_row(a.spans(), [&](Coord y, std::span<const Span> row) { subtract_rows(row, row_of(b.spans(), y), y, out); });
    return FiniteLattice::from_spans(std::move(out));
}

FiniteLattice rectangle(Point origin, Coord m, Coord n)
{
    Rect r{origin, m, n};
    return FiniteLattice::from_rects(std::span<const Rect>(&r, 1));
}

FiniteLattice rectangle(const Rect& r) { return rectangle(r.origin, r.width, r.height); }

FiniteLattice interior(const FiniteLattice& lattice)
{
    std::vector<Span> out;
    const auto& spans = lattice.spans();
    for_each_row(spans, [&](Coord y, std::span<const Span> row) {
        std::vector<Span> both;
        intersect_rows(row, row_of(spans, y + 1), y, both);
        // Spans are maximal, so x and x+1 both lie in `both` iff x < span end.
        for (const auto& s : both)
            if (s.x1 > s.x0) out.push_back({y, s.x0, s.x1 - 1});
    });
    return FiniteLattice::from_spans(std::move(out));
}

FiniteLattice boundary(const FiniteLattice& lattice) { return subtract(lattice, interior(lattice)); }

FiniteLattice complement_in(const FiniteLattice& inner, const FiniteLattice& outer)
{
    if (!inner.is_subset_of(outer)) throw SubsetViolation("complement_in: first lattice is not contained in the second");
    return subtract(outer, inner);
}

FiniteLattice dilate(const FiniteLattice& lattice, Coord radius)
{
    if (radius <= 0) return lattice;
    std::vector<Span> out;
    out.reserve(lattice.spans().size() * static_cast<std::size_t>(2 * radius + 1));
    for (const auto& s : lattice.spans())
        for (Coord dy = -radius; dy <= radius; ++dy) out.push_back({s.y + dy, s.x0 - radius, s.x1 + radius});
    return FiniteLattice::from_spans(std::move(out));
}

BlockDecomposition block_decompose(const FiniteLattice& lattice, Coord k, Coord l)
{
    if (k < 1 || l < 1) throw std::invalid_argument("block_decompose: k and l must be positive");
    BlockDecomposition d;
    d.k = k;
    d.l = l;
    const auto& spans = lattice.spans();
    std::vector<Span> blocks;
    if (!spans.empty()) {
        Coord b_lo = floor_div(spans.front().y, l);
        Coord b_hi = floor_div(spans.back().y, l);
        for (Coord b = b_lo; b <= b_hi; ++b) {
            std::vector<Span> common(row_of(spans, b * l).begin(), row_of(spans, b * l).end());
            for (Coord dy = 1; dy < l && !common.empty(); ++dy) {
                std::vector<Span> next;
                intersect_rows(common, row_of(spans, b * l + dy), b * l + dy, next);
                common = std::move(next);
            }
            for (const auto& s : common) {
                Coord a0 = ceil_div(s.x0, k);
                Coord a1 = floor_div(s.x1 - k + 1, k);
                if (a0 <= a1) blocks.push_back({b, a0, a1});
            }
        }
    }
    d.index_set = FiniteLattice::from_spans(blocks);
    d.alpha = d.index_set.size();

    std::vector<Span> cov;
    for (const auto& s : d.index_set.spans())
        for (Coord dy = 0; dy < l; ++dy) cov.push_back({s.y * l + dy, s.x0 * k, s.x1 * k + k - 1});
    d.covered = FiniteLattice::from_spans(std::move(cov));
    d.residue = subtract(lattice, d.covered);
    d.beta = d.residue.size();
    return d;
}

FiniteLattice run_length_class(const FiniteLattice& lattice, Axis axis, Coord m)
{
    if (axis == Axis::vertical) return run_length_class(lattice.transposed(), Axis::horizontal, m).transposed();
    std::vector<Span> out;
    for (const auto& s : lattice.spans())
        if (s.length() == m) out.push_back(s);
    return FiniteLattice::from_spans(std::move(out));
}

std::map<Coord, std::int64_t> run_length_census(const FiniteLattice& lattice, Axis axis)
{
    std::map<Coord, std::int64_t> census;
    if (axis == Axis::horizontal) {
        for (const auto& s : lattice.spans()) census[s.length()] += s.length();
    } else {
        for (const auto& r : vertical_runs(lattice)) census[r.height] += r.area();
    }
    return census;
}

std::optional<std::vector<Rect>> decompose_bands(const FiniteLattice& lattice, Axis axis)
{
    if (axis == Axis::vertical) {
        auto bands = decompose_bands(lattice.transposed(), Axis::horizontal);
        if (!bands) return std::nullopt;
        for (auto& r : *bands) r = Rect{{r.origin.y, r.origin.x}, r.height, r.width};
        return bands;
    }
    std::vector<Rect> out;
    const auto& spans = lattice.spans();
    for (std::size_t i = 0; i < spans.size(); ++i) {
        if (i + 1 < spans.size() && spans[i + 1].y == spans[i].y) return std::nullopt;
        const auto& s = spans[i];
        if (!out.empty()) {
            auto& r = out.back();
            if (r.origin.y + r.height == s.y && r.origin.x == s.x0 && r.width == s.length()) {
                ++r.height;
                continue;
            }
        }
        out.push_back({{s.x0, s.y}, s.length(), 1});
    }
    return out;
}

namespace {

std::int64_t flood(const FiniteLattice& domain, std::int64_t start, const auto& accept)
{
    std::vector<char> seen(static_cast<std::size_t>(domain.size()), 0);
    std::deque<std::int64_t> queue{start};
    seen[static_cast<std::size_t>(start)] = 1;
    std::int64_t reached = 1;
    while (!queue.empty()) {
        Point p = domain.point_at(queue.front());
        queue.pop_front();
        for (Point d : {Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1}}) {
            Point q = p + d;
            if (!accept(q)) continue;
            auto idx = domain.index_of(q);
            if (!idx || seen[static_cast<std::size_t>(*idx)]) continue;
            seen[static_cast<std::size_t>(*idx)] = 1;
            ++reached;
            queue.push_back(*idx);
        }
    }
    return reached;
}

}  // namespace

bool is_four_connected(const FiniteLattice& lattice)
{
    if (lattice.empty()) return true;
    return flood(lattice, 0, [](Point) { return true; }) == lattice.size();
}

bool is_simply_connected(const FiniteLattice& lattice)
{
    if (!is_four_connected(lattice)) return false;
    if (lattice.empty()) return true;
    const Rect& b = lattice.bounds();
    auto frame = rectangle({b.origin.x - 1, b.origin.y - 1}, b.width + 2, b.height + 2);
    auto outside = subtract(frame, lattice);
    // The corner of the frame is outside the lattice and lies in the unbounded component.
    return flood(outside, 0, [](Point) { return true; }) == outside.size();
}

std::string to_string(Point p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

}  // namespace sft
