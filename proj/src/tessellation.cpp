#include "sft/tessellation.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

namespace sft {

namespace {

Coord mod(Coord a, Coord m)
{
    Coord r = a % m;
    return r < 0 ? r + m : r;
}

// Lattice with basis (a, 0), (b, c), 0 <= b < a.
struct Hnf {
    Coord a, b, c;

    Coord residue(Point p) const
    {
        Coord ry = mod(p.y, c);
        Coord k = (p.y - ry) / c;
        Coord rx = mod(p.x - k * b, a);
        return ry * a + rx;
    }
    Point representative(Coord r) const
    {
        return {r % a, r / a};
    }
};

template <class F>
void for_each_hnf(Coord det, F&& f)
{
    for (Coord a = 1; a <= det; ++a) {
        if (det % a != 0) continue;
        Coord c = det / a;
        for (Coord b = 0; b < a; ++b)
            if (f(Hnf{a, b, c})) return;
    }
}

Coord norm2(Point p) { return p.x * p.x + p.y * p.y; }

// Lagrange-Gauss reduction of a 2-D lattice basis.
std::pair<Point, Point> reduce(Point u, Point v)
{
    if (norm2(u) > norm2(v)) std::swap(u, v);
    while (true) {
        Coord n = norm2(u);
        Coord dot = u.x * v.x + u.y * v.y;
        Coord q = std::llround(static_cast<double>(dot) / static_cast<double>(n));
        Point w{v.x - q * u.x, v.y - q * u.y};
        if (norm2(w) >= n) return {u, w};
        v = u;
        u = w;
    }
}

bool cover_torus(const Hnf& h, const std::vector<Point>& tile, std::vector<char>& used, int remaining)
{
    if (remaining == 0) return true;
    auto first = std::find(used.begin(), used.end(), 0);
    Point target = h.representative(first - used.begin());
    std::vector<Coord> cells(tile.size());
    for (const auto& anchor : tile) {
        Point t = target - anchor;
        bool ok = true;
        for (std::size_t i = 0; i < tile.size() && ok; ++i) {
            cells[i] = h.residue(tile[i] + t);
            if (used[static_cast<std::size_t>(cells[i])]) ok = false;
            for (std::size_t j = 0; j < i && ok; ++j)
                if (cells[j] == cells[i]) ok = false;
        }
        if (!ok) continue;
        for (auto c : cells) used[static_cast<std::size_t>(c)] = 1;
        if (cover_torus(h, tile, used, remaining - 1)) return true;
        for (auto c : cells) used[static_cast<std::size_t>(c)] = 0;
    }
    return false;
}

}  // namespace

bool tiles_by_lattice(const FiniteLattice& tile, Point v1, Point v2)
{
    Coord det = v1.x * v2.y - v1.y * v2.x;
    if (det < 0) det = -det;
    if (det == 0 || det != tile.size()) return false;
    std::set<std::pair<Coord, Coord>> seen;
    bool distinct = true;
    tile.for_each([&](Point p) {
        // Coordinates of p in the basis, scaled by the determinant.
        Coord s = p.x * v2.y - p.y * v2.x;
        Coord t = v1.x * p.y - v1.y * p.x;
        if (!seen.emplace(mod(s, det), mod(t, det)).second) distinct = false;
    });
    return distinct;
}

TessellationVerdict is_tessellation(const FiniteLattice& tile, int bound)
{
    if (tile.empty()) throw std::invalid_argument("is_tessellation: tile must be nonempty");
    TessellationVerdict v;
    const Coord n = tile.size();
    const Rect& box = tile.bounds();
    if (box.area() == n) {
        v.kind = TessellationVerdict::Kind::yes;
        v.v1 = {box.width, 0};
        v.v2 = {0, box.height};
        v.lattice_tiling = true;
        v.reason = "rectangle: grid tiling";
        return v;
    }

    const auto pts = tile.points();
    std::vector<char> hit(static_cast<std::size_t>(n));
    for_each_hnf(n, [&](const Hnf& h) {
        std::fill(hit.begin(), hit.end(), 0);
        for (const auto& p : pts) {
            auto r = static_cast<std::size_t>(h.residue(p));
            if (hit[r]) return false;
            hit[r] = 1;
        }
        auto [u, w] = reduce({h.a, 0}, {h.b, h.c});
        v.kind = TessellationVerdict::Kind::yes;
        v.v1 = u;
        v.v2 = w;
        v.lattice_tiling = true;
        v.reason = "lattice tiling";
        return true;
    });
    if (v.kind == TessellationVerdict::Kind::yes) return v;

    if (is_simply_connected(tile)) {
        v.kind = TessellationVerdict::Kind::no;
        v.reason = "polyomino without a lattice tiling of index " + std::to_string(n);
        return v;
    }

    for (int copies = 2; copies <= bound; ++copies) {
        for_each_hnf(n * copies, [&](const Hnf& h) {
            std::vector<char> used(static_cast<std::size_t>(h.a * h.c), 0);
            if (!cover_torus(h, pts, used, copies)) return false;
            v.kind = TessellationVerdict::Kind::yes;
            v.v1 = {h.a, 0};
            v.v2 = {h.b, h.c};
            v.translates_per_period = copies;
            v.reason = "periodic tiling with " + std::to_string(copies) + " translates per period";
            return true;
        });
        if (v.kind == TessellationVerdict::Kind::yes) return v;
    }
    v.kind = TessellationVerdict::Kind::unknown;
    v.reason = "no periodic tiling found with at most " + std::to_string(bound) + " translates per period";
    return v;
}

}  // namespace sft
