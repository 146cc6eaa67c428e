#include "lha/oracle.hpp"

#include <algorithm>
#include <string>

#include "lha/errors.hpp"

namespace lha::oracle {

bool MaterializedGrid::bead_at(Int position) const {
    if (!in_range(position))
        throw range_error("position " + std::to_string(position) + " outside materialized rows");
    return beads.count(position) > 0;
}

namespace {

void all_sequences(Int n, Int max_weight, Int sum, std::vector<Int>& seq,
                   std::set<std::vector<Int>>& out) {
    if (static_cast<Int>(seq.size()) == n) {
        if (is_lecture_hall(n, seq)) out.insert(seq);
        return;
    }
    for (Int v = 0; sum + v <= max_weight; ++v) {
        seq.push_back(v);
        all_sequences(n, max_weight, sum + v, seq, out);
        seq.pop_back();
    }
}

// Column arithmetic written out locally; shares nothing with the abacus
// module's geometry.
Int col_of(Int n, Int p) {
    Int m = (p - 1) % (2 * n);
    if (m < 0) m += 2 * n;
    return m + 1;
}

}  // namespace

std::set<std::vector<Int>> brute_lecture_hall(Int n, Int max_weight) {
    std::set<std::vector<Int>> out;
    if (n < 1 || max_weight < 0) return out;
    std::vector<Int> seq;
    seq.reserve(static_cast<std::size_t>(n));
    all_sequences(n, max_weight, 0, seq, out);
    return out;
}

MaterializedGrid simulate_encoding(const LectureHallPartition& lambda, Int row_lo, Int row_hi) {
    if (!is_lecture_hall(lambda.n, lambda.parts))
        throw validation_error("not a lecture hall partition");
    const Int n = lambda.n;
    const Int two_n = 2 * n;

    MaterializedGrid grid{n, row_lo, row_hi, {}};

    std::set<Int> used_columns;
    std::vector<Int> placed;
    for (Int i = n; i >= 1; --i) {
        Int part = lambda.parts[static_cast<std::size_t>(i - 1)];
        Int b = 0;
        if (part > 0) {
            Int seen = 0;
            for (Int p = 1;; ++p) {
                if (used_columns.count(col_of(n, p))) continue;
                if (++seen == part) {
                    b = p;
                    break;
                }
            }
        } else {
            for (Int p = 0;; --p) {
                if (!used_columns.count(col_of(n, p))) {
                    b = p;
                    break;
                }
            }
        }
        placed.push_back(b);
        used_columns.insert(col_of(n, b));
        used_columns.insert(col_of(n, 1 - two_n - b));
    }

    for (Int b : placed) {
        Int row = floor_div(b - 1, two_n);
        if (row < row_lo || row > row_hi)
            throw range_error("defining bead " + std::to_string(b) +
                              " outside materialized rows");
        // own column upward, then the dual column from the mirrored entry up
        for (Int start : {b, 1 - two_n - b}) {
            Int q = start;
            while (q > grid.hi_position()) q -= two_n;
            for (; q >= grid.lo_position(); q -= two_n) grid.beads.insert(q);
        }
    }
    return grid;
}

Int brute_gap_count(const MaterializedGrid& grid, Int position) {
    if (!grid.in_range(position) || !grid.in_range(position - 2 * grid.n))
        throw range_error("gap count window for position " + std::to_string(position) +
                          " leaves the materialized rows");
    Int gaps = 0;
    for (Int q = position - 2 * grid.n + 1; q < position; ++q)
        if (!grid.bead_at(q)) ++gaps;
    return gaps;
}

std::string render_grid(const MaterializedGrid& grid) {
    const Int two_n = 2 * grid.n;
    std::size_t width = std::max({std::to_string(grid.lo_position()).size(),
                                  std::to_string(grid.hi_position()).size(),
                                  std::to_string(grid.n).size()});
    std::string out;
    for (Int row = grid.row_lo; row <= grid.row_hi; ++row) {
        std::string line;
        for (Int col = 1; col <= two_n; ++col) {
            Int p = col + two_n * row;
            std::string label = std::to_string(p);
            label.insert(0, width - std::min(width, label.size()), ' ');
            line += grid.beads.count(p) ? "(" + label + ")" : " " + label + " ";
            if (col == grid.n) line += ' ';
        }
        out += line + '\n';
    }
    return out;
}

}  // namespace lha::oracle

