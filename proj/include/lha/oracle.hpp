#pragma once

#include <set>
#include <string>
#include <vector>

#include "lha/int_math.hpp"
#include "lha/partition.hpp"

// Deliberately literal reference implementations used by tests to
// cross-check the production bijections. Bead sets are materialized
// explicitly — nothing here derives membership from defining beads, and the
// position arithmetic is written out independently of the abacus module.
namespace lha::oracle {

// A finite board: bead membership is stored, row range inclusive.
struct MaterializedGrid {
    Int n = 0;
    Int row_lo = 0;
    Int row_hi = 0;
    std::set<Int> beads;

    Int lo_position() const { return 2 * n * row_lo + 1; }
    Int hi_position() const { return 2 * n * (row_hi + 1); }
    bool in_range(Int position) const {
        return position >= lo_position() && position <= hi_position();
    }

    // range_error outside the materialized rows.
    bool bead_at(Int position) const;
};

// Every length-n sequence with entries in [0, max_weight] and sum
// <= max_weight, kept iff is_lecture_hall accepts it. No structural pruning
// beyond the running-sum bound that defines the domain.
std::set<std::vector<Int>> brute_lecture_hall(Int n, Int max_weight);

// Literal bead placement walk for a lecture hall partition: count positions
// in reading order skipping used columns, drop each defining bead, then fill
// its column upward and its dual column from the mirrored entry upward.
// range_error if a defining bead falls outside the requested rows.
MaterializedGrid simulate_encoding(const LectureHallPartition& lambda, Int row_lo, Int row_hi);

// Number of gaps strictly between position-2n and position, by explicit
// lookups; range_error unless both endpoints are in range.
Int brute_gap_count(const MaterializedGrid& grid, Int position);

// Debug dump in the same visual format as the production renderer: beads as
// "(p)", gaps as " p ", one extra space at the window boundary of each row.
std::string render_grid(const MaterializedGrid& grid);

}  // namespace lha::oracle
