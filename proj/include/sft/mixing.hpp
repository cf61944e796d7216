#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sft/bigint.hpp"
#include "sft/counting.hpp"
#include "sft/lattice.hpp"
#include "sft/shift.hpp"

namespace sft {

enum class GluingVariant { full, horizontal, vertical };

std::string to_string(GluingVariant v);
GluingVariant parse_gluing_variant(const std::string& text);

// Distance between two disjoint rectangles: sqrt(gx^2 + gy^2), where gx and gy
// count the empty columns and rows strictly between them.
double rect_distance(const Rect& a, const Rect& b);

struct GluingCounterexample {
    Pattern first;   // on Z_{w x w} at the origin
    Pattern second;  // on Z_{w x w} at `offset`
    Point offset;
    double distance = 0.0;
};

// Bounded check only: "verified" means every pair within the window and
// extent extends, nothing more.
struct GluingVerdict {
    std::string spec_name;
    Coord gap = 0;
    int window = 0;
    Coord extent = 0;
    GluingVariant variant = GluingVariant::full;
    bool verified = false;
    std::optional<GluingCounterexample> counterexample;
    std::uint64_t pairs_checked = 0;
    std::uint64_t offsets_checked = 0;
};

// Places a second w x w rectangle at every offset (dx, dy) with |dx|, |dy| <= extent
// and distance >= gap (dy = 0 for horizontal, dx = 0 for vertical), and checks that
// every pair of locally admissible patterns has a locally admissible joint
// extension on their bounding box dilated by the forbidden-shape diameter.
GluingVerdict verify_block_gluing(const SftSpec& spec, Coord gap, int window, Coord extent,
                                  GluingVariant variant = GluingVariant::full, const Budget& budget = {});

// Bounding box of both blocks dilated by the forbidden-shape diameter.
FiniteLattice witness_region(const GluingCounterexample& c, const SftSpec& spec);
// Number of locally admissible patterns on the witness region agreeing with both blocks.
BigInt replay_counterexample(const GluingCounterexample& c, const SftSpec& spec, const Budget& budget = {});

}  // namespace sft
