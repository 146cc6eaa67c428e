#pragma once

#include <stdexcept>

namespace lha {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: wrong JSON shape, unparseable flag values.
struct parse_error : error {
    using error::error;
};

// Structurally well-formed input violating a domain invariant; the message
// names the first violated condition.
struct validation_error : error {
    using error::error;
};

// Illegal bead insertion: the moved bead would not be last in reading order.
struct placement_error : error {
    using error::error;
};

// Mismatched truncation bounds, divergent factor request, or an out-of-range
// configuration parameter.
struct config_error : error {
    using error::error;
};

// Grid query or placement outside a materialized range.
struct range_error : error {
    using error::error;
};

// Resource guard tripped (CLI verify).
struct budget_error : error {
    using error::error;
};

}  // namespace lha
