// Acceptance gate: one line per criterion, exit code = number of failures.
//
// Criterion 4 states the class-count difference identity over *all* abaci in
// the round-trip range. That claim is false as stated: when a defining bead
// is nonpositive the difference can be 0 (smallest case n=2, beads (-1,0),
// decoded from the all-zero partition). The check below runs the literal
// condition anyway and reports the counterexample rather than narrowing the
// domain; the restricted identity (both beads positive) is covered by the
// unit tests.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lha/abacus.hpp"
#include "lha/oracle.hpp"
#include "lha/partition.hpp"
#include "lha/series.hpp"

namespace {

using namespace lha;
using Clock = std::chrono::steady_clock;

struct Criterion {
    std::string name;
    std::function<bool(std::vector<std::string>&)> run;
};

std::string fmt(const char* pattern, auto... args) {
    char buffer[512];
    std::snprintf(buffer, sizeof(buffer), pattern, args...);
    return std::string(buffer);
}

std::string join(const std::vector<Int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(xs[i]);
    }
    return s;
}

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// ---- 1: worked-example golden values ------------------------------------

bool golden_values(std::vector<std::string>& detail) {
    auto t0 = Clock::now();
    LectureHallPartition lambda{6, {0, 1, 4, 8, 14, 30}};
    AbacusDiagram a = encode(lambda);
    BoundedPartition b = to_bounded(a);
    bool ok = a.defining_beads == std::vector<Int>{-2, 2, 8, 12, 16, 30} &&
              b.parts == std::vector<Int>{2, 4, 6, 7, 8, 9, 9, 12} &&
              weight(lambda.parts) == 57 && weight(b.parts) == 57 &&
              decode(a) == lambda && from_bounded(b) == a;
    double elapsed = ms_since(t0);
    if (elapsed >= 1.0) {
        detail.push_back(fmt("took %.3f ms, limit is 1 ms", elapsed));
        ok = false;
    }
    if (!ok && detail.empty()) detail.push_back("golden values do not match");
    return ok;
}

// ---- 2: bijection round trips --------------------------------------------

constexpr Int kRangeN = 4;
constexpr Int kRangeWeight = 25;

bool round_trips(std::vector<std::string>& detail) {
    auto t0 = Clock::now();
    Int checked = 0;
    for (Int n = 1; n <= kRangeN; ++n) {
        std::set<std::vector<Int>> expected = oracle::brute_lecture_hall(n, kRangeWeight);
        std::set<std::vector<Int>> produced;
        for (const LectureHallPartition& lambda : enumerate_lecture_hall(n, kRangeWeight))
            produced.insert(lambda.parts);
        if (produced != expected) {
            detail.push_back(fmt("n=%lld: enumeration disagrees with the brute-force oracle",
                                 static_cast<long long>(n)));
            return false;
        }
        for (const std::vector<Int>& parts : expected) {
            LectureHallPartition lambda{n, parts};
            if (decode(encode(lambda)) != lambda) {
                detail.push_back(fmt("decode(encode(.)) != id at n=%lld parts=%s",
                                     static_cast<long long>(n), join(parts).c_str()));
                return false;
            }
            ++checked;
        }
        for (const BoundedPartition& p : enumerate_bounded(n, kRangeWeight)) {
            if (to_bounded(from_bounded(p)) != p) {
                detail.push_back(fmt("to_bounded(from_bounded(.)) != id at n=%lld parts=%s",
                                     static_cast<long long>(n), join(p.parts).c_str()));
                return false;
            }
            ++checked;
        }
    }
    double elapsed = ms_since(t0);
    detail.push_back(fmt("%lld round trips", static_cast<long long>(checked)));
    if (elapsed >= 30000.0) {
        detail.push_back(fmt("took %.0f ms, limit is 30 s", elapsed));
        return false;
    }
    return true;
}

// ---- 3: weight preservation ----------------------------------------------

bool weight_preservation(std::vector<std::string>& detail) {
    for (Int n = 1; n <= kRangeN; ++n)
        for (const LectureHallPartition& lambda : enumerate_lecture_hall(n, kRangeWeight)) {
            AbacusDiagram a = encode(lambda);
            if (weight(decode(a).parts) != weight(to_bounded(a).parts)) {
                detail.push_back(fmt("weight mismatch at n=%lld parts=%s",
                                     static_cast<long long>(n), join(lambda.parts).c_str()));
                return false;
            }
        }
    return true;
}

// ---- 4: class-count difference identity ----------------------------------

bool class_count_identity(std::vector<std::string>& detail) {
    bool ok = true;
    bool positive_ok = true;
    for (Int n = 1; n <= kRangeN; ++n)
        for (const LectureHallPartition& lambda : enumerate_lecture_hall(n, kRangeWeight)) {
            AbacusDiagram a = encode(lambda);
            for (Int i = 1; i <= n; ++i)
                for (Int k = i + 1; k <= n; ++k) {
                    if (a.bead(k) - a.bead(i) >= 2 * n) continue;
                    Int diff = class_count_before(a, a.bead(k), i) -
                               class_count_before(a, a.bead(i), k);
                    if (diff == 1) continue;
                    if (a.bead(i) >= 1) positive_ok = false;
                    if (ok) {
                        detail.push_back(fmt(
                            "first counterexample: n=%lld beads=(%s) pair i=%lld k=%lld "
                            "difference %lld",
                            static_cast<long long>(n), join(a.defining_beads).c_str(),
                            static_cast<long long>(i), static_cast<long long>(k),
                            static_cast<long long>(diff)));
                    }
                    ok = false;
                }
        }
    if (!ok && positive_ok)
        detail.push_back(
            "every failing pair has a nonpositive smaller bead; all pairs with "
            "both beads positive satisfy the identity on this range");
    return ok;
}

// ---- 5 / 6: product identities -------------------------------------------

bool plain_identity(std::vector<std::string>& detail) {
    auto t0 = Clock::now();
    Int compared = 0;
    for (Int n = 1; n <= 5; ++n) {
        ComparisonReport r = compare_series(lhs_plain(n, 40), rhs_plain(n, 40));
        compared += r.coefficients_compared;
        if (!r.equal) {
            const CoefficientMismatch& m = *r.mismatch;
            detail.push_back(fmt("n=%lld: mismatch at x^%lld: lhs=%lld rhs=%lld",
                                 static_cast<long long>(n),
                                 static_cast<long long>(m.monomial.x),
                                 static_cast<long long>(m.lhs),
                                 static_cast<long long>(m.rhs)));
            return false;
        }
    }
    double elapsed = ms_since(t0);
    detail.push_back(fmt("%lld coefficients compared", static_cast<long long>(compared)));
    if (elapsed >= 60000.0) {
        detail.push_back(fmt("took %.0f ms, limit is 60 s", elapsed));
        return false;
    }
    return true;
}

bool refined_identity(std::vector<std::string>& detail) {
    Int compared = 0;
    for (Int n = 1; n <= 4; ++n) {
        TruncatedSeries lhs = lhs_refined(n, 30);
        TruncatedSeries rhs = rhs_refined(n, 30);
        ComparisonReport r = compare_series(lhs, rhs);
        compared += r.coefficients_compared;
        if (!r.equal) {
            const CoefficientMismatch& m = *r.mismatch;
            detail.push_back(fmt("n=%lld: mismatch at x^%lld u^%lld v^%lld: lhs=%lld rhs=%lld",
                                 static_cast<long long>(n),
                                 static_cast<long long>(m.monomial.x),
                                 static_cast<long long>(m.monomial.u),
                                 static_cast<long long>(m.monomial.v),
                                 static_cast<long long>(m.lhs),
                                 static_cast<long long>(m.rhs)));
            return false;
        }
        if (lhs.specialize_uv_one() != lhs_plain(n, 30) ||
            rhs.specialize_uv_one() != rhs_plain(n, 30)) {
            detail.push_back(fmt("n=%lld: u=v=1 specialization differs from the plain series",
                                 static_cast<long long>(n)));
            return false;
        }
    }
    detail.push_back(fmt("%lld coefficients compared", static_cast<long long>(compared)));
    return true;
}

// ---- 7: ceiling statistics ------------------------------------------------

bool ceiling_statistics(std::vector<std::string>& detail) {
    for (Int n = 1; n <= kRangeN; ++n)
        for (const LectureHallPartition& lambda : enumerate_lecture_hall(n, kRangeWeight)) {
            CeilingVector cv = ceiling_stats(lambda);
            BoundedPartition b = to_bounded(encode(lambda));
            Int small = 0, large = 0;
            for (Int p : b.parts) (p <= n ? small : large) += 1;
            if (cv.weight != 2 * large + small || cv.odd_count != small) {
                detail.push_back(fmt("statistics mismatch at n=%lld parts=%s",
                                     static_cast<long long>(n), join(lambda.parts).c_str()));
                return false;
            }
        }
    return true;
}

// ---- 8: bounded generating function ---------------------------------------

bool bounded_gf(std::vector<std::string>& detail) {
    for (Int n = 1; n <= 5; ++n) {
        ComparisonReport r = bounded_gf_identity(n, 40);
        if (!r.equal) {
            const CoefficientMismatch& m = *r.mismatch;
            detail.push_back(fmt("n=%lld: mismatch at x^%lld: lhs=%lld rhs=%lld",
                                 static_cast<long long>(n),
                                 static_cast<long long>(m.monomial.x),
                                 static_cast<long long>(m.lhs),
                                 static_cast<long long>(m.rhs)));
            return false;
        }
    }
    return true;
}

// ---- 9: randomized bead insertions ----------------------------------------

bool multiset_gains_one(const std::vector<Int>& before, const std::vector<Int>& after,
                        Int expected) {
    std::multiset<Int> gained(after.begin(), after.end());
    for (Int p : before) {
        auto it = gained.find(p);
        if (it == gained.end()) return false;
        gained.erase(it);
    }
    return gained.size() == 1 && *gained.begin() == expected;
}

bool bead_insertions(std::vector<std::string>& detail) {
    // Fixed case first: grow the worked example by one bead below class 3.
    {
        AbacusDiagram a = encode({6, {0, 1, 3, 6, 10, 16}});
        if (a.defining_beads != std::vector<Int>{-2, 2, 6, 8, 12, 16}) {
            detail.push_back("fixed case: unexpected starting abacus");
            return false;
        }
        AbacusDiagram grown = append_bead(a, 3);
        if (grown.defining_beads != std::vector<Int>{-2, 2, 8, 12, 16, 18} ||
            decode(grown).parts != std::vector<Int>{0, 1, 4, 8, 14, 18} ||
            !multiset_gains_one(to_bounded(a).parts, to_bounded(grown).parts, 9)) {
            detail.push_back("fixed case: insertion below class 3 did not add a part 9");
            return false;
        }
    }

    std::mt19937 rng(0xC0FFEE);
    Int insertions = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Int n = 1 + static_cast<Int>(rng() % 5);
        AbacusDiagram a = encode({n, std::vector<Int>(n, 0)});
        int steps = 1 + static_cast<int>(rng() % 10);
        for (int s = 0; s < steps; ++s) {
            std::vector<Int> legal;
            for (Int i = 1; i <= n; ++i)
                if (a.bead(i) + 2 * n > a.bead(n)) legal.push_back(i);
            Int i = legal[rng() % legal.size()];
            AbacusDiagram grown = append_bead(a, i);
            Int delta = weight(decode(grown).parts) - weight(decode(a).parts);
            if (delta != n + i) {
                detail.push_back(fmt("weight delta %lld != %lld at n=%lld beads=(%s) class %lld",
                                     static_cast<long long>(delta),
                                     static_cast<long long>(n + i),
                                     static_cast<long long>(n),
                                     join(a.defining_beads).c_str(),
                                     static_cast<long long>(i)));
                return false;
            }
            if (!multiset_gains_one(to_bounded(a).parts, to_bounded(grown).parts, n + i)) {
                detail.push_back(fmt("bounded parts did not gain %lld at n=%lld beads=(%s)",
                                     static_cast<long long>(n + i),
                                     static_cast<long long>(n),
                                     join(a.defining_beads).c_str()));
                return false;
            }
            a = grown;
            ++insertions;
        }
    }
    detail.push_back(fmt("%lld insertions across 200 grown abaci",
                         static_cast<long long>(insertions)));
    return true;
}

// ---- 10: independent oracle agreement -------------------------------------

bool oracle_agreement(std::vector<std::string>& detail) {
    for (Int n = 1; n <= kRangeN; ++n)
        for (const LectureHallPartition& lambda : enumerate_lecture_hall(n, kRangeWeight)) {
            AbacusDiagram a = encode(lambda);
            Int radius = ceil_div(a.bead(n) > 0 ? a.bead(n) : 1, n) + 2;
            oracle::MaterializedGrid grid = oracle::simulate_encoding(lambda, -radius, radius);
            for (Int p = grid.lo_position(); p <= grid.hi_position(); ++p)
                if (grid.bead_at(p) != is_bead(a, p)) {
                    detail.push_back(fmt("bead sets differ at position %lld for n=%lld parts=%s",
                                         static_cast<long long>(p),
                                         static_cast<long long>(n),
                                         join(lambda.parts).c_str()));
                    return false;
                }
            std::vector<Int> beads = positive_beads(a);
            std::vector<Int> parts = to_bounded(a).parts;
            if (beads.size() != parts.size()) {
                detail.push_back(fmt("bead/part count mismatch for n=%lld parts=%s",
                                     static_cast<long long>(n), join(lambda.parts).c_str()));
                return false;
            }
            for (std::size_t j = 0; j < beads.size(); ++j) {
                Int expected =
                    beads[j] <= n ? beads[j] : 1 + oracle::brute_gap_count(grid, beads[j]);
                if (parts[j] != expected) {
                    detail.push_back(fmt("part %lld != oracle value %lld at bead %lld, n=%lld "
                                         "parts=%s",
                                         static_cast<long long>(parts[j]),
                                         static_cast<long long>(expected),
                                         static_cast<long long>(beads[j]),
                                         static_cast<long long>(n),
                                         join(lambda.parts).c_str()));
                    return false;
                }
            }
        }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"worked-example golden values", golden_values},
        {"bijection round trips", round_trips},
        {"weight preservation", weight_preservation},
        {"class-count difference identity", class_count_identity},
        {"plain product identity", plain_identity},
        {"refined product identity", refined_identity},
        {"ceiling statistics", ceiling_statistics},
        {"bounded generating function", bounded_gf},
        {"randomized bead insertions", bead_insertions},
        {"independent oracle agreement", oracle_agreement},
    };

    int failures = 0;
    for (std::size_t idx = 0; idx < criteria.size(); ++idx) {
        std::vector<std::string> detail;
        bool ok = false;
        auto t0 = Clock::now();
        try {
            ok = criteria[idx].run(detail);
        } catch (const std::exception& e) {
            detail.push_back(std::string("unexpected exception: ") + e.what());
        }
        double elapsed = ms_since(t0);
        std::printf("[%2zu] %s %s (%.0f ms)\n", idx + 1, ok ? "PASS" : "FAIL",
                    criteria[idx].name.c_str(), elapsed);
        for (const std::string& line : detail) std::printf("     %s\n", line.c_str());
        if (!ok) ++failures;
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures;
}
