#pragma once

#include <functional>
#include <vector>

#include "lha/int_math.hpp"

namespace lha {

// A lecture hall partition: n non-negative parts, smallest first, satisfying
//
//     l_1/1 <= l_2/2 <= ... <= l_n/n.
//
// The slope condition forces all positive parts to be strictly increasing.
// Zero parts form a (possibly empty) prefix.
struct LectureHallPartition {
    Int n = 0;
    std::vector<Int> parts;  // parts[i-1] = l_i

    bool operator==(const LectureHallPartition&) const = default;
};

// A partition with parts in [1, 2n], weakly increasing, where parts <= n are
// distinct; parts in (n, 2n] may repeat. The empty partition is valid for
// every n.
struct BoundedPartition {
    Int n = 0;
    std::vector<Int> parts;

    bool operator==(const BoundedPartition&) const = default;
};

// Per-part ceilings ceil(l_i / i) together with their sum and the number of
// odd entries. Entries are weakly increasing for a valid input.
struct CeilingVector {
    std::vector<Int> entries;
    Int weight = 0;
    Int odd_count = 0;

    bool operator==(const CeilingVector&) const = default;
};

// True iff seq is a lecture hall partition for n. Pure integer
// cross-multiplication: l_i * (i+1) <= l_{i+1} * i. seq must hold exactly
// n entries; a length mismatch throws validation_error.
bool is_lecture_hall(Int n, const std::vector<Int>& seq);

// True iff (n, seq) is a valid bounded partition.
bool is_bounded(Int n, const std::vector<Int>& seq);

// Sum of parts; the empty sum is 0.
Int weight(const std::vector<Int>& parts);

// pre: lambda valid.
CeilingVector ceiling_stats(const LectureHallPartition& lambda);

// Visit every lecture hall partition with n parts and weight <= max_weight,
// parts in lexicographic order. Prefixes are extended directly under the
// slope bound, so nothing is generated and filtered. A negative max_weight
// visits nothing.
void for_each_lecture_hall(Int n, Int max_weight,
                           const std::function<void(const LectureHallPartition&)>& visit);

std::vector<LectureHallPartition> enumerate_lecture_hall(Int n, Int max_weight);

// Visit every bounded partition for n with weight <= max_weight (the empty
// partition included), lexicographic order with prefixes first.
void for_each_bounded(Int n, Int max_weight,
                      const std::function<void(const BoundedPartition&)>& visit);

std::vector<BoundedPartition> enumerate_bounded(Int n, Int max_weight);

}  // namespace lha
