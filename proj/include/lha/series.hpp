#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "lha/int_math.hpp"

namespace lha {

struct Monomial {
    Int x = 0;
    Int u = 0;
    Int v = 0;

    auto operator<=>(const Monomial&) const = default;
};

// Polynomial in x, u, v with exact int64 coefficients, truncated strictly at
// a total x-degree bound. The u and v exponents are capped at 2*max_x; every
// series built here satisfies du <= 2*dx and dv <= dx, so the caps only
// guarantee that both sides of a comparison discard identically. Values are
// immutable after construction apart from add_term; coefficient arithmetic
// is overflow-checked.
class TruncatedSeries {
public:
    explicit TruncatedSeries(Int max_x);

    static TruncatedSeries constant(Int max_x, Int value);

    Int max_x() const { return max_x_; }
    Int max_u() const { return 2 * max_x_; }
    Int max_v() const { return 2 * max_x_; }

    // Adds coefficient*X^m, silently dropping monomials beyond the bounds.
    // Negative exponents throw config_error.
    void add_term(const Monomial& m, Int coefficient);

    Int coefficient(const Monomial& m) const;
    Int coefficient_x(Int dx) const { return coefficient({dx, 0, 0}); }

    // Zero coefficients are never stored; keys ascend by (x, u, v).
    const std::map<Monomial, Int>& terms() const { return terms_; }

    // Substitute u = 1, v = 1, collapsing onto pure x-terms.
    TruncatedSeries specialize_uv_one() const;

    // Canonical text form: terms ascending by (x, u, v), factors written
    // u^a*v^b*x^c, exponent 1 omitted, e.g. "1 + u*v*x + u^2*x^2".
    std::string str() const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    Int max_x_ = 0;
    std::map<Monomial, Int> terms_;
};

// Addition/multiplication require identical truncation bounds
// (config_error otherwise); products beyond the bounds vanish.
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Expansion of 1/(1 - x^x_exp * u^u_exp) up to the bounds. x_exp < 1 is a
// divergent request and throws config_error; u_exp must be >= 0.
TruncatedSeries geometric_factor(Int max_x, Int x_exp, Int u_exp = 0);

// Enumeration side: sum of x^|l| over lecture hall partitions, weight <= max_x.
TruncatedSeries lhs_plain(Int n, Int max_x);

// Product side: prod_{i=1..n} 1/(1 - x^{2i-1}).
TruncatedSeries rhs_plain(Int n, Int max_x);

// Enumeration side with ceiling statistics: x^|l| * u^|ceil(l)| * v^odd(ceil(l)).
TruncatedSeries lhs_refined(Int n, Int max_x);

// Product side: (1+uvx)(1+uvx^2)...(1+uvx^n) / prod_{i=1..n} (1 - u^2 x^{n+i}).
TruncatedSeries rhs_refined(Int n, Int max_x);

struct CoefficientMismatch {
    Monomial monomial;  // lexicographically smallest differing (x, u, v)
    Int lhs = 0;
    Int rhs = 0;
};

struct ComparisonReport {
    bool equal = false;
    Int coefficients_compared = 0;  // size of the union of stored monomials
    std::optional<CoefficientMismatch> mismatch;
};

// pre: identical truncation bounds (config_error otherwise).
ComparisonReport compare_series(const TruncatedSeries& a, const TruncatedSeries& b);

// Checks (1+x)...(1+x^n) * prod 1/(1-x^{n+i})  ==  prod 1/(1-x^{2i-1}) up to
// max_x, and that the enumerated bounded-partition weight series matches the
// same product. The report carries the first mismatching coefficient if any.
ComparisonReport bounded_gf_identity(Int n, Int max_x);

}  // namespace lha
