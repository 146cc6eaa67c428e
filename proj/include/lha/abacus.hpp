#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lha/int_math.hpp"
#include "lha/partition.hpp"

namespace lha {

// The board is an array with 2n columns and a row for every integer. The
// entry in row r, column j (1 <= j <= 2n) is labeled j + 2n*r, so the integer
// labels themselves give the reading order: rows top to bottom, columns left
// to right. Column j is dual to column 2n+1-j, and window k is the run of n
// consecutive positions (k-1)n+1 .. kn, so each row holds two windows and
// each window holds exactly one position of every class.
//
// A diagram is stored by its n defining beads b_1 < ... < b_n only. The full
// bead set is the derived predicate is_bead: class i owns the column of b_i
// (beads at every position <= b_i there) and its dual column (beads at every
// position <= 1-2n-b_i). Flushness and balance are structural under this
// representation; validate() re-checks them on a finite range anyway.
struct AbacusDiagram {
    Int n = 0;
    std::vector<Int> defining_beads;  // ascending; the class of b_i is i (1-based)

    Int bead(Int i) const { return defining_beads[static_cast<std::size_t>(i - 1)]; }

    bool operator==(const AbacusDiagram&) const = default;
};

struct PositionGeometry {
    Int position = 0;
    Int row = 0;          // position = column + 2n*row
    Int column = 0;       // in [1, 2n]
    Int dual_column = 0;  // 2n+1 - column
    Int window = 0;       // ceil(position / n)
};

// pre: n >= 1.
PositionGeometry geometry(Int n, Int position);

struct AbacusDefect {
    enum class Kind {
        Shape,                 // n < 1 or wrong bead count
        BeadOrder,             // defining beads not strictly increasing
        ColumnCollision,       // two defining beads share a column pair
        DefiningBeadMismatch,  // stored beads are not the induced diagram's defining beads
        NotFlush,
        NotBalanced,
    };

    Kind kind = Kind::Shape;
    Int position = 0;  // first offending position (or index value for Shape)
    std::string message;
};

// Structural check; nullopt means valid. The flush/balanced/extraction scan
// covers positions [1-2nR, 2nR]. The default radius R is window(b_n)+2
// (at least 2); an explicit radius below window(b_n) throws config_error.
std::optional<AbacusDefect> validate(const AbacusDiagram& a,
                                     std::optional<Int> radius = std::nullopt);

// Throws validation_error carrying the defect message.
void validate_or_throw(const AbacusDiagram& a);

// pre: a valid. Class of the column containing `position`, in [1, n].
Int class_of(const AbacusDiagram& a, Int position);

// pre: a valid.
bool is_bead(const AbacusDiagram& a, Int position);

// pre: a valid. class_table(a)[j] is the class owning column j (1-based).
std::vector<Int> class_table(const AbacusDiagram& a);

// pre: a valid. All positive bead positions, ascending (= reading order).
std::vector<Int> positive_beads(const AbacusDiagram& a);

// Bijection: lecture hall partition -> abacus diagram. Beads are placed for
// i = n down to 1: b_i sits at the l_i-th positive position in reading order
// once columns (and duals) of already placed beads are skipped; l_i = 0 takes
// the largest nonpositive entry among still-free columns.
AbacusDiagram encode(const LectureHallPartition& lambda);

// Inverse of encode: l_i counts the positions 1..b_i whose class is <= i.
LectureHallPartition decode(const AbacusDiagram& a);

// Bijection: abacus diagram -> bounded partition. Positive beads inside
// window 1 give their positions as parts; every later positive bead `b`
// contributes 1 + (number of gaps strictly between b-2n and b).
BoundedPartition to_bounded(const AbacusDiagram& a);

// Inverse of to_bounded. Small parts fill window 1, window 0 is their
// balanced complement, and each large part p_i places a bead at a supported
// position (one whose predecessor p-2n is already a bead) counted from the
// previous placement — from position n for the first large part.
AbacusDiagram from_bounded(const BoundedPartition& p);

// Insert a bead directly below defining bead i, i.e. replace b_i by b_i+2n.
// The moved bead must come last in reading order among the resulting
// defining beads (b_i + 2n > b_n), otherwise placement_error. The decoded
// partition's weight grows by exactly n+i and the bounded partition gains
// one part n+i.
AbacusDiagram append_bead(const AbacusDiagram& a, Int i);

// pre: a valid. Number of positive positions strictly before `bound` whose
// class is k.
Int class_count_before(const AbacusDiagram& a, Int bound, Int k);

// pre: a valid. w_i = number of positive class-i positions <= b_i; equals
// both the window index of b_i and ceil(l_i / i).
std::vector<Int> window_vector(const AbacusDiagram& a);

}  // namespace lha
