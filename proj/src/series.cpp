#include "lha/series.hpp"

#include <string>

#include "lha/errors.hpp"
#include "lha/partition.hpp"

namespace lha {

TruncatedSeries::TruncatedSeries(Int max_x) : max_x_(max_x) {
    if (max_x < 0) throw config_error("truncation bound must be >= 0");
}

TruncatedSeries TruncatedSeries::constant(Int max_x, Int value) {
    TruncatedSeries s(max_x);
    s.add_term({0, 0, 0}, value);
    return s;
}

void TruncatedSeries::add_term(const Monomial& m, Int coefficient) {
    if (m.x < 0 || m.u < 0 || m.v < 0) throw config_error("negative exponent");
    if (m.x > max_x_ || m.u > max_u() || m.v > max_v()) return;
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coefficient);
    if (!inserted) {
        it->second = checked_add(it->second, coefficient);
        if (it->second == 0) terms_.erase(it);
    }
}

Int TruncatedSeries::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

TruncatedSeries TruncatedSeries::specialize_uv_one() const {
    TruncatedSeries s(max_x_);
    for (const auto& [m, c] : terms_) s.add_term({m.x, 0, 0}, c);
    return s;
}

namespace {

void append_factor(std::string& out, const char* name, Int exponent, bool& any) {
    if (exponent == 0) return;
    if (any) out += '*';
    out += name;
    if (exponent != 1) out += '^' + std::to_string(exponent);
    any = true;
}

}  // namespace

std::string TruncatedSeries::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int magnitude = c;
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (c < 0) magnitude = -c;
        first = false;

        std::string factors;
        bool any = false;
        append_factor(factors, "u", m.u, any);
        append_factor(factors, "v", m.v, any);
        append_factor(factors, "x", m.x, any);
        if (!any) {
            out += std::to_string(magnitude);
        } else {
            if (magnitude != 1) out += std::to_string(magnitude) + '*';
            out += factors;
        }
    }
    return out;
}

namespace {

void require_same_bounds(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.max_x() != b.max_x())
        throw config_error("truncation bounds differ: " + std::to_string(a.max_x()) + " vs " +
                           std::to_string(b.max_x()));
}

}  // namespace

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_bounds(a, b);
    TruncatedSeries out = a;
    for (const auto& [m, c] : b.terms()) out.add_term(m, c);
    return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_bounds(a, b);
    TruncatedSeries out(a.max_x());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m{ma.x + mb.x, ma.u + mb.u, ma.v + mb.v};
            if (m.x > out.max_x()) break;  // mb.x ascends within a fixed ma
            out.add_term(m, checked_mul(ca, cb));
        }
    }
    return out;
}

TruncatedSeries geometric_factor(Int max_x, Int x_exp, Int u_exp) {
    if (x_exp < 1) throw config_error("geometric factor needs x exponent >= 1");
    if (u_exp < 0) throw config_error("geometric factor needs u exponent >= 0");
    TruncatedSeries s(max_x);
    for (Int k = 0; checked_mul(k, x_exp) <= max_x; ++k)
        s.add_term({k * x_exp, k * u_exp, 0}, 1);
    return s;
}

TruncatedSeries lhs_plain(Int n, Int max_x) {
    TruncatedSeries s(max_x);
    for_each_lecture_hall(n, max_x, [&](const LectureHallPartition& lambda) {
        s.add_term({weight(lambda.parts), 0, 0}, 1);
    });
    return s;
}

TruncatedSeries rhs_plain(Int n, Int max_x) {
    TruncatedSeries s = TruncatedSeries::constant(max_x, 1);
    for (Int i = 1; i <= n; ++i) s = series_mul(s, geometric_factor(max_x, 2 * i - 1));
    return s;
}

TruncatedSeries lhs_refined(Int n, Int max_x) {
    TruncatedSeries s(max_x);
    for_each_lecture_hall(n, max_x, [&](const LectureHallPartition& lambda) {
        CeilingVector cv = ceiling_stats(lambda);
        s.add_term({weight(lambda.parts), cv.weight, cv.odd_count}, 1);
    });
    return s;
}

TruncatedSeries rhs_refined(Int n, Int max_x) {
    TruncatedSeries s = TruncatedSeries::constant(max_x, 1);
    for (Int i = 1; i <= n; ++i) {
        TruncatedSeries factor = TruncatedSeries::constant(max_x, 1);
        factor.add_term({i, 1, 1}, 1);  // 1 + u*v*x^i
        s = series_mul(s, factor);
    }
    for (Int i = 1; i <= n; ++i) s = series_mul(s, geometric_factor(max_x, n + i, 2));
    return s;
}

ComparisonReport compare_series(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_bounds(a, b);
    ComparisonReport report;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    while (ia != a.terms().end() || ib != b.terms().end()) {
        Monomial m;
        Int ca = 0, cb = 0;
        bool take_a = ib == b.terms().end() ||
                      (ia != a.terms().end() && !(ib->first < ia->first));
        bool take_b = ia == a.terms().end() ||
                      (ib != b.terms().end() && !(ia->first < ib->first));
        if (take_a) {
            m = ia->first;
            ca = ia->second;
            ++ia;
        }
        if (take_b) {
            m = ib->first;
            cb = ib->second;
            ++ib;
        }
        ++report.coefficients_compared;
        if (ca != cb && !report.mismatch) report.mismatch = CoefficientMismatch{m, ca, cb};
    }
    report.equal = !report.mismatch.has_value();
    return report;
}

ComparisonReport bounded_gf_identity(Int n, Int max_x) {
    TruncatedSeries product = TruncatedSeries::constant(max_x, 1);
    for (Int i = 1; i <= n; ++i) {
        TruncatedSeries factor = TruncatedSeries::constant(max_x, 1);
        factor.add_term({i, 0, 0}, 1);  // 1 + x^i
        product = series_mul(product, factor);
    }
    for (Int i = 1; i <= n; ++i) product = series_mul(product, geometric_factor(max_x, n + i));

    TruncatedSeries odd_parts = rhs_plain(n, max_x);

    TruncatedSeries enumerated(max_x);
    for_each_bounded(n, max_x, [&](const BoundedPartition& p) {
        enumerated.add_term({weight(p.parts), 0, 0}, 1);
    });

    ComparisonReport first = compare_series(product, odd_parts);
    ComparisonReport second = compare_series(enumerated, odd_parts);
    ComparisonReport report;
    report.equal = first.equal && second.equal;
    report.coefficients_compared = first.coefficients_compared + second.coefficients_compared;
    report.mismatch = first.mismatch ? first.mismatch : second.mismatch;
    return report;
}

}  // namespace lha
