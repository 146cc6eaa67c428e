#pragma once

#include <string>
#include <vector>

#include "lha/int_math.hpp"

namespace lha {

// Text rendering of a row range of an abacus diagram. Beads print as "(p)"
// and gaps as " p " with labels right-aligned to the widest label in range;
// the two windows of each row are separated by one extra space at the
// column n | n+1 boundary. show_class_row appends a footer of [class] cells
// aligned under the columns.
struct RenderSpec {
    Int n = 0;
    std::vector<Int> defining_beads;
    Int row_lo = 0;
    Int row_hi = 0;
    bool show_class_row = false;
};

// Validates the diagram (validation_error on a bad one or an empty row
// range) and returns the grid, one '\n'-terminated line per row.
std::string render_abacus(const RenderSpec& spec);

}  // namespace lha
