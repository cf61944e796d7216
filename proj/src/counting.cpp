#include "sft/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "sft/errors.hpp"

namespace sft {

std::string CountMode::str() const
{
    if (kind == Kind::local) return "local";
    return "ext:" + std::to_string(margin);
}

CountMode CountMode::parse(const std::string& text)
{
    if (text == "local") return local();
    if (text.rfind("ext:", 0) == 0) {
        try {
            std::size_t used = 0;
            long long m = std::stoll(text.substr(4), &used);
            if (used == text.size() - 4 && m >= 0) return extendable(m);
        } catch (const std::logic_error&) {
        }
    }
    throw ParseError("bad counting mode '" + text + "' (expected local or ext:<m>)");
}

bool dp_eligible(const SftSpec& spec) { return spec.fits_two_by_two(); }

// ---------------------------------------------------------------------------
// Exhaustive search

PatternSearch::PatternSearch(const FiniteLattice& lattice, const SftSpec& spec)
    : lattice_(lattice), alphabet_size_(spec.alphabet_size()), by_last_(static_cast<std::size_t>(lattice.size()))
{
    for (const auto& f : spec.forbidden()) {
        for (const Point& v : placements(f.shape(), lattice)) {
            std::vector<std::pair<std::int64_t, Symbol>> cells;
            for (const auto& c : f.cells()) cells.emplace_back(*lattice.index_of(c.offset + v), c.symbol);
            // Cells are in canonical order, so the last one is set last.
            auto [last, sym] = cells.back();
            cells.pop_back();
            by_last_[static_cast<std::size_t>(last)].push_back({sym, std::move(cells)});
        }
    }
}

bool PatternSearch::admissible_at(std::size_t index, Symbol s, const std::vector<Symbol>& values) const
{
    for (const auto& c : by_last_[index]) {
        if (c.symbol != s) continue;
        bool match = true;
        for (const auto& [i, sym] : c.others) {
            if (values[static_cast<std::size_t>(i)] != sym) {
                match = false;
                break;
            }
        }
        if (match) return false;
    }
    return true;
}

namespace {

template <class Visit>
bool search(const std::vector<Symbol>& fixed, std::vector<Symbol>& values, std::size_t index, int alphabet,
            const auto& ok, Visit&& visit)
{
    if (index == values.size()) return visit(values);
    Symbol lo = 0, hi = alphabet - 1;
    if (fixed[index] >= 0) lo = hi = fixed[index];
    for (Symbol s = lo; s <= hi; ++s) {
        if (!ok(index, s, values)) continue;
        values[index] = s;
        if (!search(fixed, values, index + 1, alphabet, ok, visit)) return false;
    }
    values[index] = -1;
    return true;
}

}  // namespace

std::uint64_t PatternSearch::count(const std::vector<Symbol>& fixed) const
{
    std::vector<Symbol> values(fixed.size(), -1);
    std::uint64_t total = 0;
    auto ok = [this](std::size_t i, Symbol s, const std::vector<Symbol>& v) { return admissible_at(i, s, v); };
    search(fixed, values, 0, alphabet_size_, ok, [&](const std::vector<Symbol>&) {
        ++total;
        return true;
    });
    return total;
}

bool PatternSearch::exists(const std::vector<Symbol>& fixed, std::uint64_t node_budget) const
{
    std::vector<Symbol> values(fixed.size(), -1);
    std::uint64_t nodes = 0;
    bool found = false;
    auto ok = [&](std::size_t i, Symbol s, const std::vector<Symbol>& v) {
        if (++nodes > node_budget) throw BudgetExceeded("extension search exceeded its node budget");
        return admissible_at(i, s, v);
    };
    search(fixed, values, 0, alphabet_size_, ok, [&](const std::vector<Symbol>&) {
        found = true;
        return false;
    });
    return found;
}

void PatternSearch::enumerate(const std::vector<Symbol>& fixed, const std::function<bool(const std::vector<Symbol>&)>& visit) const
{
    std::vector<Symbol> values(fixed.size(), -1);
    auto ok = [this](std::size_t i, Symbol s, const std::vector<Symbol>& v) { return admissible_at(i, s, v); };
    search(fixed, values, 0, alphabet_size_, ok, visit);
}

namespace {

std::vector<Symbol> fixed_from_pins(const FiniteLattice& lattice, const Pins& pins, int alphabet)
{
    std::vector<Symbol> fixed(static_cast<std::size_t>(lattice.size()), -1);
    for (const auto& [p, s] : pins) {
        auto idx = lattice.index_of(p);
        if (!idx) throw std::invalid_argument("pinned site " + to_string(p) + " is outside the lattice");
        if (s < 0 || s >= alphabet) throw SymbolOutOfRange("pinned symbol " + std::to_string(s) + " outside alphabet");
        fixed[static_cast<std::size_t>(*idx)] = s;
    }
    return fixed;
}

void check_bruteforce_budget(std::int64_t free_sites, int alphabet, const Budget& budget)
{
    double bits = static_cast<double>(free_sites) * std::log2(static_cast<double>(alphabet));
    if (bits > std::min(budget.bruteforce_bits, 62) + 1e-9)
        throw BudgetExceeded("brute force over " + std::to_string(free_sites) + " sites exceeds the budget of 2^" +
                             std::to_string(budget.bruteforce_bits) + " assignments");
}

}  // namespace

CountResult count_bruteforce(const FiniteLattice& lattice, const SftSpec& spec, const Budget& budget)
{
    check_bruteforce_budget(lattice.size(), spec.alphabet_size(), budget);
    PatternSearch search(lattice, spec);
    std::vector<Symbol> fixed(static_cast<std::size_t>(lattice.size()), -1);
    return {BigInt(search.count(fixed)), CountMode::local(), lattice.size()};
}

// ---------------------------------------------------------------------------
// Interaction components

std::vector<FiniteLattice> interaction_components(const FiniteLattice& lattice, const SftSpec& spec)
{
    const auto n = static_cast<std::size_t>(lattice.size());
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (const auto& f : spec.forbidden()) {
        if (f.cells().size() < 2) continue;
        const auto shape = f.shape().points();
        for (const Point& v : placements(f.shape(), lattice)) {
            auto root = find(static_cast<std::size_t>(*lattice.index_of(shape[0] + v)));
            for (std::size_t i = 1; i < shape.size(); ++i) {
                auto r = find(static_cast<std::size_t>(*lattice.index_of(shape[i] + v)));
                if (r != root) parent[r] = root;
            }
        }
    }
    std::unordered_map<std::size_t, std::vector<Point>> groups;
    std::vector<std::size_t> order;
    std::size_t i = 0;
    lattice.for_each([&](Point p) {
        auto r = find(i++);
        auto [it, fresh] = groups.try_emplace(r);
        if (fresh) order.push_back(r);
        it->second.push_back(p);
    });
    std::vector<FiniteLattice> out;
    out.reserve(order.size());
    for (auto r : order) out.push_back(FiniteLattice::from_points(groups[r]));
    return out;
}

// ---------------------------------------------------------------------------
// Profile dynamic program

namespace {

enum Slot { kCur, kLeft, kUpLeft, kUp, kUpRight };

struct WindowRule {
    std::vector<std::pair<Slot, Symbol>> cells;
};

std::vector<WindowRule> window_rules(const std::vector<ForbiddenPattern>& forbidden, bool transpose)
{
    std::vector<WindowRule> rules;
    for (const auto& f : forbidden) {
        std::vector<PatternCell> cells = f.cells();
        if (transpose) {
            for (auto& c : cells) c.offset = {c.offset.y, c.offset.x};
            std::sort(cells.begin(), cells.end(), [](const PatternCell& a, const PatternCell& b) { return a.offset < b.offset; });
        }
        const Point anchor = cells.back().offset;
        WindowRule rule;
        for (const auto& c : cells) {
            Point d = c.offset - anchor;
            Slot s;
            if (d == Point{0, 0})
                s = kCur;
            else if (d == Point{-1, 0})
                s = kLeft;
            else if (d == Point{-1, -1})
                s = kUpLeft;
            else if (d == Point{0, -1})
                s = kUp;
            else if (d == Point{1, -1})
                s = kUpRight;
            else
                throw UnsupportedForbiddenShape("forbidden shape does not fit a 2x2 window");
            rule.cells.emplace_back(s, c.symbol);
        }
        rules.push_back(std::move(rule));
    }
    return rules;
}

struct ExactValue {
    using type = BigInt;
    static type one() { return 1; }
    static type zero() { return 0; }
};

struct LogValue {
    using type = double;
    static type one() { return 1.0; }
    static type zero() { return 0.0; }
};

// Result of one component: exact value, or (mantissa, log scale) for the log domain.
template <class V>
struct Scaled {
    typename V::type value;
    double log_scale = 0.0;
};

int bits_per_symbol(int alphabet)
{
    int b = 1;
    while ((1 << b) < alphabet) ++b;
    return b;
}

// Counts assignments of `cells` (a single component, sorted canonically) that
// avoid every rule, honoring per-site pins (-1 = free).
template <class V>
Scaled<V> profile_dp(std::vector<Point> cells, std::vector<Symbol> pins, const SftSpec& spec, const Budget& budget)
{
    Coord xmin = cells[0].x, xmax = cells[0].x, ymin = cells[0].y, ymax = cells[0].y;
    for (const auto& p : cells) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    // Sweep along the longer side so the frontier spans the shorter one.
    const bool transpose = (ymax - ymin) > (xmax - xmin);
    const auto W = static_cast<std::size_t>(transpose ? ymax - ymin + 1 : xmax - xmin + 1);
    const auto H = static_cast<std::size_t>(transpose ? xmax - xmin + 1 : ymax - ymin + 1);
    const auto rules = window_rules(spec.forbidden(), transpose);

    constexpr Symbol kAbsent = -2;
    std::vector<Symbol> grid(W * H, kAbsent);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        auto x = static_cast<std::size_t>(cells[i].x - xmin), y = static_cast<std::size_t>(cells[i].y - ymin);
        if (transpose) std::swap(x, y);
        grid[y * W + x] = pins[i];
    }

    const int alphabet = spec.alphabet_size();
    const int bits = bits_per_symbol(alphabet);
    const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
    const int max_slots = std::min(budget.frontier + 1, 64 / bits);

    std::vector<char> layout(W + 1, 0), after(W + 1, 0);
    std::unordered_map<std::uint64_t, typename V::type> states{{0, V::one()}}, next;
    std::vector<Symbol> slots(W + 1), moved(W + 1);
    double log_scale = 0.0;

    auto decode = [&](std::uint64_t key, const std::vector<char>& lay, std::vector<Symbol>& out) {
        for (std::size_t i = 0; i <= W; ++i) {
            if (lay[i]) {
                out[i] = static_cast<Symbol>(key & mask);
                key >>= bits;
            } else {
                out[i] = kAbsent;
            }
        }
    };
    auto encode = [&](const std::vector<Symbol>& in, const std::vector<char>& lay) {
        std::uint64_t key = 0;
        int shift = 0;
        for (std::size_t i = 0; i <= W; ++i) {
            if (!lay[i]) continue;
            key |= static_cast<std::uint64_t>(in[i]) << shift;
            shift += bits;
        }
        return key;
    };

    for (std::size_t y = 0; y < H; ++y) {
        for (std::size_t x = 0; x < W; ++x) {
            const Symbol cell = grid[y * W + x];
            const bool present = cell != kAbsent;
            // A site stays on the frontier only while a later site can still see it:
            // its right neighbor, or one of the three sites below it.
            auto later = [&](std::size_t cx, std::size_t cy) { return cy < H && cx < W && grid[cy * W + cx] != kAbsent; };
            auto seen_below = [&](std::size_t cx) {
                return later(cx, y + 1) || later(cx + 1, y + 1) || (cx > 0 && later(cx - 1, y + 1));
            };
            const bool keep = present && (later(x + 1, y) || seen_below(x));
            const bool drop_left = x > 0 && layout[x - 1] && !seen_below(x - 1);
            after = layout;
            after[W] = layout[x];
            after[x] = keep;
            if (drop_left) after[x - 1] = 0;
            if (!present && after == layout) continue;
            if (std::count(after.begin(), after.end(), 1) > max_slots)
                throw BudgetExceeded("profile DP frontier exceeds " + std::to_string(max_slots - 1) +
                                     " occupied sites plus the diagonal slot");

            next.clear();
            next.reserve(states.size() * 2);
            for (const auto& [key, value] : states) {
                decode(key, layout, slots);
                const Symbol left = x > 0 ? slots[x - 1] : kAbsent;
                const Symbol up = slots[x];
                const Symbol upright = x + 1 < W ? slots[x + 1] : kAbsent;
                const Symbol upleft = x > 0 ? slots[W] : kAbsent;
                moved = slots;
                moved[W] = slots[x];
                if (drop_left) moved[x - 1] = kAbsent;
                if (!present) {
                    moved[x] = kAbsent;
                    next[encode(moved, after)] += value;
                    continue;
                }
                Symbol lo = 0, hi = alphabet - 1;
                if (cell >= 0) lo = hi = cell;
                for (Symbol s = lo; s <= hi; ++s) {
                    bool forbidden = false;
                    for (const auto& rule : rules) {
                        bool match = true;
                        for (const auto& [slot, sym] : rule.cells) {
                            Symbol have = slot == kCur ? s
                                          : slot == kLeft ? left
                                          : slot == kUp ? up
                                          : slot == kUpLeft ? upleft
                                                            : upright;
                            if (have != sym) {
                                match = false;
                                break;
                            }
                        }
                        if (match) {
                            forbidden = true;
                            break;
                        }
                    }
                    if (forbidden) continue;
                    moved[x] = keep ? s : kAbsent;
                    next[encode(moved, after)] += value;
                }
            }
            if (next.size() > budget.max_states)
                throw BudgetExceeded("profile DP exceeded " + std::to_string(budget.max_states) + " frontier states");
            std::swap(states, next);
            layout = after;
            if constexpr (std::is_same_v<V, LogValue>) {
                double top = 0.0;
                for (const auto& [key, value] : states) top = std::max(top, value);
                if (top > 0.0) {
                    for (auto& [key, value] : states) value /= top;
                    log_scale += std::log(top);
                }
            }
        }
    }
    typename V::type total = V::zero();
    for (const auto& [key, value] : states) total += value;
    return {total, log_scale};
}

// Runs the DP per interaction component and combines the results.
template <class V>
Scaled<V> component_product(const FiniteLattice& lattice, const SftSpec& spec, const Pins& pins, const Budget& budget)
{
    if (!dp_eligible(spec)) throw UnsupportedForbiddenShape("profile DP needs every forbidden shape inside a 2x2 window");
    for (const auto& [p, s] : pins) {
        if (!lattice.contains(p)) throw std::invalid_argument("pinned site " + to_string(p) + " is outside the lattice");
        if (s < 0 || s >= spec.alphabet_size()) throw SymbolOutOfRange("pinned symbol outside alphabet");
    }
    Scaled<V> acc{V::one(), 0.0};
    std::map<std::vector<Point>, Scaled<V>> memo;
    for (const auto& comp : interaction_components(lattice, spec)) {
        std::vector<Point> cells = comp.points();
        std::vector<Symbol> fixed(cells.size(), -1);
        bool pinned = false;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (auto it = pins.find(cells[i]); it != pins.end()) {
                fixed[i] = it->second;
                pinned = true;
            }
        }
        Scaled<V> part;
        if (pinned) {
            part = profile_dp<V>(cells, fixed, spec, budget);
        } else {
            const Point base = {comp.bounds().origin.x, comp.bounds().origin.y};
            for (auto& p : cells) p = p - base;
            auto it = memo.find(cells);
            if (it == memo.end()) it = memo.emplace(cells, profile_dp<V>(cells, fixed, spec, budget)).first;
            part = it->second;
        }
        if constexpr (std::is_same_v<V, LogValue>) {
            if (part.value <= 0.0) return {0.0, 0.0};
            acc.log_scale += part.log_scale + std::log(part.value);
        } else {
            acc.value *= part.value;
            if (acc.value == 0) return acc;
        }
    }
    return acc;
}

}  // namespace

CountResult count_profile_dp(const FiniteLattice& lattice, const SftSpec& spec, const Budget& budget)
{
    auto r = component_product<ExactValue>(lattice, spec, {}, budget);
    return {std::move(r.value), CountMode::local(), lattice.size()};
}

double log_count(const FiniteLattice& lattice, const SftSpec& spec, const Budget& budget)
{
    auto r = component_product<LogValue>(lattice, spec, {}, budget);
    if (r.value <= 0.0) return -std::numeric_limits<double>::infinity();
    return r.log_scale;
}

BigInt count_pinned(const FiniteLattice& lattice, const SftSpec& spec, const Pins& pins, const Budget& budget)
{
    if (dp_eligible(spec)) return component_product<ExactValue>(lattice, spec, pins, budget).value;
    auto fixed = fixed_from_pins(lattice, pins, spec.alphabet_size());
    check_bruteforce_budget(lattice.size() - static_cast<std::int64_t>(pins.size()), spec.alphabet_size(), budget);
    return BigInt(PatternSearch(lattice, spec).count(fixed));
}

CountResult count(const FiniteLattice& lattice, const SftSpec& spec, CountMode mode, const Budget& budget)
{
    if (mode.kind == CountMode::Kind::extendable) return count_extendable(lattice, spec, mode.margin, budget);
    if (dp_eligible(spec)) return count_profile_dp(lattice, spec, budget);
    return count_bruteforce(lattice, spec, budget);
}

CountResult count_extendable(const FiniteLattice& lattice, const SftSpec& spec, Coord margin, const Budget& budget)
{
    if (margin < 0) throw std::invalid_argument("extension margin must be nonnegative");
    if (margin == 0) {
        auto r = count(lattice, spec, CountMode::local(), budget);
        r.mode = CountMode::extendable(0);
        return r;
    }
    const FiniteLattice grown = dilate(lattice, margin);
    const PatternSearch inner(lattice, spec);
    const PatternSearch outer(grown, spec);

    // Sites of the core inside the dilation, in the core's canonical order.
    std::vector<std::size_t> where;
    where.reserve(static_cast<std::size_t>(lattice.size()));
    lattice.for_each([&](Point p) { where.push_back(static_cast<std::size_t>(*grown.index_of(p))); });

    std::uint64_t seen = 0, extendable = 0;
    std::vector<Symbol> fixed_outer(static_cast<std::size_t>(grown.size()), -1);
    inner.enumerate(std::vector<Symbol>(static_cast<std::size_t>(lattice.size()), -1), [&](const std::vector<Symbol>& values) {
        if (++seen > budget.max_enumerated)
            throw BudgetExceeded("extendable count enumerates more than " + std::to_string(budget.max_enumerated) + " patterns");
        for (std::size_t i = 0; i < values.size(); ++i) fixed_outer[where[i]] = values[i];
        if (outer.exists(fixed_outer, budget.max_search_nodes)) ++extendable;
        return true;
    });
    return {BigInt(extendable), CountMode::extendable(margin), lattice.size()};
}

}  // namespace sft
