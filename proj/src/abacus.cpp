#include "lha/abacus.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "lha/errors.hpp"

namespace lha {

PositionGeometry geometry(Int n, Int position) {
    PositionGeometry g;
    g.position = position;
    g.row = floor_div(position - 1, 2 * n);
    g.column = position - 2 * n * g.row;
    g.dual_column = 2 * n + 1 - g.column;
    g.window = ceil_div(position, n);
    return g;
}

namespace {

std::string defect_text(const char* what, Int position) {
    return std::string(what) + " (position " + std::to_string(position) + ")";
}

// Bead predicate shared by validate and the public accessors; `table` maps
// column -> class, `a` must already pass the structural checks.
bool bead_with_table(const AbacusDiagram& a, const std::vector<Int>& table, Int position) {
    PositionGeometry g = geometry(a.n, position);
    Int i = table[static_cast<std::size_t>(g.column)];
    Int b = a.bead(i);
    if (g.column == geometry(a.n, b).column) return position <= b;
    return position <= 1 - 2 * a.n - b;
}

}  // namespace

std::optional<AbacusDefect> validate(const AbacusDiagram& a, std::optional<Int> radius) {
    if (a.n < 1)
        return AbacusDefect{AbacusDefect::Kind::Shape, a.n, "n must be >= 1"};
    if (static_cast<Int>(a.defining_beads.size()) != a.n)
        return AbacusDefect{AbacusDefect::Kind::Shape, static_cast<Int>(a.defining_beads.size()),
                            "expected " + std::to_string(a.n) + " defining beads, got " +
                                std::to_string(a.defining_beads.size())};

    const Int n = a.n;
    const Int two_n = 2 * n;

    for (Int i = 2; i <= n; ++i)
        if (a.bead(i - 1) >= a.bead(i))
            return AbacusDefect{AbacusDefect::Kind::BeadOrder, a.bead(i),
                                defect_text("defining beads not strictly increasing", a.bead(i))};

    std::vector<Int> table(static_cast<std::size_t>(two_n + 1), 0);
    for (Int i = 1; i <= n; ++i) {
        PositionGeometry g = geometry(n, a.bead(i));
        if (table[static_cast<std::size_t>(g.column)] != 0)
            return AbacusDefect{AbacusDefect::Kind::ColumnCollision, a.bead(i),
                                defect_text("defining bead shares a column or dual column with an "
                                            "earlier one",
                                            a.bead(i))};
        table[static_cast<std::size_t>(g.column)] = i;
        table[static_cast<std::size_t>(g.dual_column)] = i;
    }

    Int top_window = geometry(n, a.bead(n)).window;
    Int r = std::max<Int>(top_window + 2, 2);
    if (radius) {
        if (*radius < top_window || *radius < 1)
            throw config_error("validation radius " + std::to_string(*radius) +
                               " does not cover window " + std::to_string(top_window));
        r = *radius;
    }

    // Flush and balanced on [1-2nR, 2nR]; both are structural consequences of
    // the bead predicate, so a hit here means the predicate itself regressed.
    for (Int p = 1 - two_n * r; p <= two_n * r; ++p) {
        if (bead_with_table(a, table, p) && p - two_n >= 1 - two_n * r &&
            !bead_with_table(a, table, p - two_n))
            return AbacusDefect{AbacusDefect::Kind::NotFlush,
                                p, defect_text("bead below a gap in its column", p)};
        if (p >= 1 && !(bead_with_table(a, table, p) ^ bead_with_table(a, table, 1 - p)))
            return AbacusDefect{AbacusDefect::Kind::NotBalanced, p,
                                defect_text("positions p and 1-p are both beads or both gaps", p)};
    }

    // Self-consistency: the lowest bead of each column is b_i in the own
    // column and 1-2n-b_i in the dual; the last n of these 2n beads in
    // reading order must be exactly the stored defining beads.
    std::vector<Int> lowest;
    lowest.reserve(static_cast<std::size_t>(two_n));
    for (Int i = 1; i <= n; ++i) {
        lowest.push_back(a.bead(i));
        lowest.push_back(1 - two_n - a.bead(i));
    }
    std::sort(lowest.begin(), lowest.end());
    for (Int i = 1; i <= n; ++i) {
        Int expected = lowest[static_cast<std::size_t>(n + i - 1)];
        if (expected != a.bead(i))
            return AbacusDefect{
                AbacusDefect::Kind::DefiningBeadMismatch, a.bead(i),
                defect_text("stored defining beads are not the last n lowest beads in "
                            "reading order",
                            a.bead(i))};
    }

    return std::nullopt;
}

void validate_or_throw(const AbacusDiagram& a) {
    if (auto defect = validate(a)) throw validation_error(defect->message);
}

Int class_of(const AbacusDiagram& a, Int position) {
    PositionGeometry g = geometry(a.n, position);
    for (Int i = 1; i <= a.n; ++i) {
        Int col = geometry(a.n, a.bead(i)).column;
        if (g.column == col || g.column == 2 * a.n + 1 - col) return i;
    }
    return 0;  // unreachable for a valid diagram: every column is classed
}

std::vector<Int> class_table(const AbacusDiagram& a) {
    std::vector<Int> table(static_cast<std::size_t>(2 * a.n + 1), 0);
    for (Int i = 1; i <= a.n; ++i) {
        PositionGeometry g = geometry(a.n, a.bead(i));
        table[static_cast<std::size_t>(g.column)] = i;
        table[static_cast<std::size_t>(g.dual_column)] = i;
    }
    return table;
}

bool is_bead(const AbacusDiagram& a, Int position) {
    return bead_with_table(a, class_table(a), position);
}

std::vector<Int> positive_beads(const AbacusDiagram& a) {
    std::vector<Int> out;
    std::vector<Int> table = class_table(a);
    for (Int p = 1; p <= a.bead(a.n); ++p)
        if (bead_with_table(a, table, p)) out.push_back(p);
    return out;
}

AbacusDiagram encode(const LectureHallPartition& lambda) {
    if (!is_lecture_hall(lambda.n, lambda.parts))
        throw validation_error("not a lecture hall partition");
    const Int n = lambda.n;
    const Int two_n = 2 * n;

    std::vector<char> blocked(static_cast<std::size_t>(two_n + 1), 0);
    auto block = [&](Int position) {
        PositionGeometry g = geometry(n, position);
        blocked[static_cast<std::size_t>(g.column)] = 1;
        blocked[static_cast<std::size_t>(g.dual_column)] = 1;
    };

    std::vector<Int> beads(static_cast<std::size_t>(n), 0);
    for (Int i = n; i >= 1; --i) {
        Int part = lambda.parts[static_cast<std::size_t>(i - 1)];
        Int b;
        if (part > 0) {
            // the part-th positive position whose column is still free
            Int seen = 0;
            Int p = 0;
            while (seen < part) {
                ++p;
                if (!blocked[static_cast<std::size_t>(geometry(n, p).column)]) ++seen;
            }
            b = p;
        } else {
            // largest nonpositive entry over free columns: column j tops out
            // at j - 2n among nonpositive labels
            b = std::numeric_limits<Int>::min();
            for (Int j = 1; j <= two_n; ++j)
                if (!blocked[static_cast<std::size_t>(j)]) b = std::max(b, j - two_n);
        }
        beads[static_cast<std::size_t>(i - 1)] = b;
        block(b);
    }
    return AbacusDiagram{n, beads};
}

LectureHallPartition decode(const AbacusDiagram& a) {
    validate_or_throw(a);
    std::vector<Int> table = class_table(a);
    std::vector<Int> parts(static_cast<std::size_t>(a.n), 0);
    for (Int i = 1; i <= a.n; ++i) {
        Int count = 0;
        for (Int p = 1; p <= a.bead(i); ++p)
            if (table[static_cast<std::size_t>(geometry(a.n, p).column)] <= i) ++count;
        parts[static_cast<std::size_t>(i - 1)] = count;
    }
    return LectureHallPartition{a.n, parts};
}

BoundedPartition to_bounded(const AbacusDiagram& a) {
    validate_or_throw(a);
    const Int two_n = 2 * a.n;
    std::vector<Int> table = class_table(a);
    std::vector<Int> parts;
    for (Int b : positive_beads(a)) {
        if (b <= a.n) {
            parts.push_back(b);  // window 1: the position is the part
        } else {
            Int gaps = 0;
            for (Int q = b - two_n + 1; q < b; ++q)
                if (!bead_with_table(a, table, q)) ++gaps;
            parts.push_back(gaps + 1);
        }
    }
    return BoundedPartition{a.n, parts};
}

AbacusDiagram from_bounded(const BoundedPartition& p) {
    if (!is_bounded(p.n, p.parts)) throw validation_error("not a bounded partition");
    const Int n = p.n;
    const Int two_n = 2 * n;

    std::vector<Int> smalls, larges;
    for (Int part : p.parts) (part <= n ? smalls : larges).push_back(part);

    // Materialize the bead set on positions >= 1-n; everything above window 0
    // is implicitly full of beads.
    std::set<Int> explicit_beads(smalls.begin(), smalls.end());
    std::set<Int> small_set(smalls.begin(), smalls.end());
    for (Int j = 1; j <= n; ++j)
        if (!small_set.count(j)) explicit_beads.insert(1 - j);
    auto bead_at = [&](Int q) { return q <= -n || explicit_beads.count(q) > 0; };

    // A position is supported when the position directly above it (q - 2n)
    // is a bead; each large part takes a counted supported position.
    Int origin = n;
    Int prev_part = 0;
    bool first = true;
    for (Int part : larges) {
        Int target = first ? part - n : part - prev_part + 1;
        first = false;
        Int q = origin;
        for (Int seen = 0; seen < target;) {
            ++q;
            if (bead_at(q - two_n)) ++seen;
        }
        explicit_beads.insert(q);
        origin = q;
        prev_part = part;
    }

    // Defining beads: the n lowest-per-column beads that come last in reading
    // order. A column with no materialized bead bottoms out above window 0.
    std::map<Int, Int> lowest_by_column;
    for (Int q : explicit_beads) {
        Int col = geometry(n, q).column;
        auto [it, inserted] = lowest_by_column.try_emplace(col, q);
        if (!inserted) it->second = std::max(it->second, q);
    }
    std::vector<Int> lowest;
    lowest.reserve(static_cast<std::size_t>(two_n));
    for (Int j = 1; j <= two_n; ++j) {
        auto it = lowest_by_column.find(j);
        if (it != lowest_by_column.end())
            lowest.push_back(it->second);
        else
            lowest.push_back(j <= n ? j - two_n : j - 2 * two_n);
    }
    std::sort(lowest.begin(), lowest.end());
    std::vector<Int> beads(lowest.end() - static_cast<std::ptrdiff_t>(n), lowest.end());

    AbacusDiagram a{n, beads};
    validate_or_throw(a);
    return a;
}

AbacusDiagram append_bead(const AbacusDiagram& a, Int i) {
    validate_or_throw(a);
    if (i < 1 || i > a.n)
        throw placement_error("class index " + std::to_string(i) + " out of [1, " +
                              std::to_string(a.n) + "]");
    Int moved = a.bead(i) + 2 * a.n;
    if (moved <= a.bead(a.n))
        throw placement_error("bead " + std::to_string(moved) +
                              " would not be last in reading order");
    std::vector<Int> beads = a.defining_beads;
    beads.erase(beads.begin() + static_cast<std::ptrdiff_t>(i - 1));
    beads.push_back(moved);
    return AbacusDiagram{a.n, beads};
}

Int class_count_before(const AbacusDiagram& a, Int bound, Int k) {
    std::vector<Int> table = class_table(a);
    Int count = 0;
    for (Int p = 1; p < bound; ++p)
        if (table[static_cast<std::size_t>(geometry(a.n, p).column)] == k) ++count;
    return count;
}

std::vector<Int> window_vector(const AbacusDiagram& a) {
    std::vector<Int> table = class_table(a);
    std::vector<Int> w(static_cast<std::size_t>(a.n), 0);
    for (Int i = 1; i <= a.n; ++i) {
        Int count = 0;
        for (Int p = 1; p <= a.bead(i); ++p)
            if (table[static_cast<std::size_t>(geometry(a.n, p).column)] == i) ++count;
        w[static_cast<std::size_t>(i - 1)] = count;
    }
    return w;
}

}  // namespace lha
