#include "lha/partition.hpp"

#include <set>
#include <string>

#include "lha/errors.hpp"

namespace lha {

bool is_lecture_hall(Int n, const std::vector<Int>& seq) {
    if (n < 1) throw validation_error("lecture hall partition needs n >= 1");
    if (static_cast<Int>(seq.size()) != n)
        throw validation_error("expected " + std::to_string(n) + " parts, got " +
                               std::to_string(seq.size()));
    for (Int v : seq)
        if (v < 0) return false;
    for (Int i = 1; i < n; ++i) {
        // l_i / i <= l_{i+1} / (i+1), cross-multiplied.
        Int lhs = checked_mul(seq[static_cast<std::size_t>(i - 1)], i + 1);
        Int rhs = checked_mul(seq[static_cast<std::size_t>(i)], i);
        if (lhs > rhs) return false;
    }
    return true;
}

bool is_bounded(Int n, const std::vector<Int>& seq) {
    if (n < 1) return false;
    Int prev = 0;
    for (Int v : seq) {
        if (v < 1 || v > 2 * n) return false;
        if (v < prev) return false;
        if (v == prev && v <= n) return false;  // small parts are distinct
        prev = v;
    }
    return true;
}

Int weight(const std::vector<Int>& parts) {
    Int total = 0;
    for (Int v : parts) total = checked_add(total, v);
    return total;
}

CeilingVector ceiling_stats(const LectureHallPartition& lambda) {
    CeilingVector cv;
    cv.entries.reserve(lambda.parts.size());
    for (Int i = 1; i <= lambda.n; ++i) {
        Int e = ceil_div(lambda.parts[static_cast<std::size_t>(i - 1)], i);
        cv.entries.push_back(e);
        cv.weight = checked_add(cv.weight, e);
        if (e % 2 != 0) ++cv.odd_count;
    }
    return cv;
}

namespace {

void extend_lecture_hall(Int n, Int max_weight, Int index, Int sum, std::vector<Int>& parts,
                         const std::function<void(const LectureHallPartition&)>& visit) {
    if (index > n) {
        visit(LectureHallPartition{n, parts});
        return;
    }
    // slope bound: l_{index} >= ceil(l_{index-1} * index / (index-1))
    Int lo = 0;
    if (index > 1) {
        Int prev = parts[static_cast<std::size_t>(index - 2)];
        lo = ceil_div(checked_mul(prev, index), index - 1);
    }
    for (Int v = lo; v <= max_weight - sum; ++v) {
        parts.push_back(v);
        extend_lecture_hall(n, max_weight, index + 1, sum + v, parts, visit);
        parts.pop_back();
    }
}

void extend_bounded(Int n, Int max_weight, Int sum, std::vector<Int>& parts,
                    const std::function<void(const BoundedPartition&)>& visit) {
    visit(BoundedPartition{n, parts});
    Int last = parts.empty() ? 1 : parts.back();
    for (Int v = last; v <= 2 * n; ++v) {
        if (!parts.empty() && v == last && v <= n) continue;  // small parts are distinct
        if (sum + v > max_weight) break;
        parts.push_back(v);
        extend_bounded(n, max_weight, sum + v, parts, visit);
        parts.pop_back();
    }
}

}  // namespace

void for_each_lecture_hall(Int n, Int max_weight,
                           const std::function<void(const LectureHallPartition&)>& visit) {
    if (n < 1) throw validation_error("enumeration needs n >= 1");
    if (max_weight < 0) return;
    std::vector<Int> parts;
    parts.reserve(static_cast<std::size_t>(n));
    extend_lecture_hall(n, max_weight, 1, 0, parts, visit);
}

std::vector<LectureHallPartition> enumerate_lecture_hall(Int n, Int max_weight) {
    std::vector<LectureHallPartition> out;
    for_each_lecture_hall(n, max_weight, [&](const LectureHallPartition& p) { out.push_back(p); });
    return out;
}

void for_each_bounded(Int n, Int max_weight,
                      const std::function<void(const BoundedPartition&)>& visit) {
    if (n < 1) throw validation_error("enumeration needs n >= 1");
    if (max_weight < 0) return;
    std::vector<Int> parts;
    extend_bounded(n, max_weight, 0, parts, visit);
}

std::vector<BoundedPartition> enumerate_bounded(Int n, Int max_weight) {
    std::vector<BoundedPartition> out;
    for_each_bounded(n, max_weight, [&](const BoundedPartition& p) { out.push_back(p); });
    return out;
}

}  // namespace lha
