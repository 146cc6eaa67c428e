#include "lha/render.hpp"

#include <algorithm>
#include <string>

#include "lha/abacus.hpp"
#include "lha/errors.hpp"

namespace lha {

namespace {

std::string pad_left(const std::string& s, std::size_t width) {
    return std::string(width - std::min(width, s.size()), ' ') + s;
}

}  // namespace

std::string render_abacus(const RenderSpec& spec) {
    AbacusDiagram a{spec.n, spec.defining_beads};
    validate_or_throw(a);
    if (spec.row_hi < spec.row_lo) throw validation_error("empty row range");

    const Int n = spec.n;
    const Int two_n = 2 * n;
    const Int lo_label = two_n * spec.row_lo + 1;
    const Int hi_label = two_n * (spec.row_hi + 1);

    std::size_t width = std::max({std::to_string(lo_label).size(),
                                  std::to_string(hi_label).size(),
                                  std::to_string(n).size()});

    std::vector<Int> table = class_table(a);
    std::string out;
    for (Int row = spec.row_lo; row <= spec.row_hi; ++row) {
        std::string line;
        for (Int col = 1; col <= two_n; ++col) {
            Int p = col + two_n * row;
            std::string label = pad_left(std::to_string(p), width);
            line += is_bead(a, p) ? "(" + label + ")" : " " + label + " ";
            if (col == n) line += ' ';  // window boundary
        }
        out += line + '\n';
    }

    if (spec.show_class_row) {
        std::string line;
        for (Int col = 1; col <= two_n; ++col) {
            std::string cell = "[" + std::to_string(table[static_cast<std::size_t>(col)]) + "]";
            std::size_t total = width + 2;
            std::size_t pad = total - std::min(total, cell.size());
            line += std::string(pad / 2, ' ') + cell + std::string(pad - pad / 2, ' ');
            if (col == n) line += ' ';
        }
        out += line + '\n';
    }

    return out;
}

}  // namespace lha
