#pragma once

#include <string>

#include "sft/lattice.hpp"

namespace sft {

struct TessellationVerdict {
    enum class Kind { yes, no, unknown };
    Kind kind = Kind::unknown;
    // Period vectors of a verified tiling (Kind::yes only). T + Z v1 + Z v2 is
    // the translate set when `lattice_tiling`; otherwise v1, v2 are the periods
    // of a torus on which `translates_per_period` copies of T tile exactly.
    Point v1;
    Point v2;
    bool lattice_tiling = false;
    int translates_per_period = 1;
    std::string reason;
};

// Decides whether translates of `tile` partition Z^2.
//
// Every lattice of index |tile| is enumerated in Hermite normal form, so the
// lattice-tiling question is settled exactly. For polyominoes (connected and
// simply connected) a translational tiling exists only if a lattice tiling
// does, which certifies `no`. Other shapes fall back to an exact-cover search
// on tori whose area is at most `bound` * |tile|, answering `unknown` when
// that search is inconclusive.
TessellationVerdict is_tessellation(const FiniteLattice& tile, int bound = 4);

// True when residues of `tile` modulo the lattice spanned by v1, v2 are pairwise
// distinct and exhaust Z^2 / <v1, v2>.
bool tiles_by_lattice(const FiniteLattice& tile, Point v1, Point v2);

}  // namespace sft
