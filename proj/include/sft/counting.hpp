#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sft/bigint.hpp"
#include "sft/lattice.hpp"
#include "sft/shift.hpp"

namespace sft {

// local: forbidden shapes are checked only where they fit entirely inside
// the lattice. extendable(m): additionally the pattern must extend to a
// locally admissible pattern on the Chebyshev m-dilation of the lattice.
struct CountMode {
    enum class Kind { local, extendable };
    Kind kind = Kind::local;
    Coord margin = 0;

    static CountMode local() { return {}; }
    static CountMode extendable(Coord m) { return {Kind::extendable, m}; }
    std::string str() const;
    // Accepts "local" and "ext:<m>".
    static CountMode parse(const std::string& text);

    friend bool operator==(const CountMode&, const CountMode&) = default;
};

struct CountResult {
    BigInt value;
    CountMode mode;
    std::int64_t lattice_size = 0;
};

struct Budget {
    // Brute force runs only when N^|L| <= 2^bruteforce_bits.
    int bruteforce_bits = 24;
    // Maximum number of occupied frontier sites in the profile DP.
    int frontier = 24;
    std::size_t max_states = std::size_t{1} << 22;
    // Patterns enumerated by extendable counting.
    std::uint64_t max_enumerated = std::uint64_t{1} << 20;
    // Search nodes per extension query.
    std::uint64_t max_search_nodes = std::uint64_t{1} << 26;
};

using Pins = std::map<Point, Symbol>;

CountResult count_bruteforce(const FiniteLattice& lattice, const SftSpec& spec, const Budget& budget = {});
CountResult count_profile_dp(const FiniteLattice& lattice, const SftSpec& spec, const Budget& budget = {});
CountResult count(const FiniteLattice& lattice, const SftSpec& spec, CountMode mode = CountMode::local(),
                  const Budget& budget = {});
CountResult count_extendable(const FiniteLattice& lattice, const SftSpec& spec, Coord margin, const Budget& budget = {});

// Natural log of the local count, computed in the log domain.
double log_count(const FiniteLattice& lattice, const SftSpec& spec, const Budget& budget = {});

// Local count restricted to patterns that agree with `pins` (pins must lie in the lattice).
BigInt count_pinned(const FiniteLattice& lattice, const SftSpec& spec, const Pins& pins, const Budget& budget = {});

// True when the profile DP accepts the spec.
bool dp_eligible(const SftSpec& spec);

// Groups of sites linked by some forbidden-shape placement inside the lattice;
// local counts factor over these groups.
std::vector<FiniteLattice> interaction_components(const FiniteLattice& lattice, const SftSpec& spec);

// Depth-first search over assignments of a fixed lattice, checking each
// forbidden placement as soon as its last site (in canonical order) is set.
class PatternSearch {
public:
    PatternSearch(const FiniteLattice& lattice, const SftSpec& spec);

    const FiniteLattice& lattice() const { return lattice_; }

    // `fixed` holds one entry per site in canonical order: a symbol, or -1 for free.
    std::uint64_t count(const std::vector<Symbol>& fixed) const;
    // Throws BudgetExceeded after `node_budget` search nodes.
    bool exists(const std::vector<Symbol>& fixed, std::uint64_t node_budget) const;
    // Calls `visit` for each admissible completion; stops early when it returns false.
    void enumerate(const std::vector<Symbol>& fixed, const std::function<bool(const std::vector<Symbol>&)>& visit) const;

private:
    struct Constraint {
        Symbol symbol;
        std::vector<std::pair<std::int64_t, Symbol>> others;
    };

    bool admissible_at(std::size_t index, Symbol s, const std::vector<Symbol>& values) const;

    FiniteLattice lattice_;
    int alphabet_size_;
    std::vector<std::vector<Constraint>> by_last_;
};

}  // namespace sft
