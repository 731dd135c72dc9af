#pragma once

#include <stdexcept>
#include <string>

namespace echcap {

// Parameter outside an operation's documented domain (non-positive axis,
// evaluation point >= 1, malformed rational text, ...).
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Power series inversion is impossible: denominator constant term is zero.
struct InvalidSeriesError : std::domain_error {
    explicit InvalidSeriesError(const std::string& what) : std::domain_error(what) {}
};

// A redundant internal cross-check failed.  This never means "bad input";
// it means the library itself is broken and results cannot be trusted.
struct InternalConsistencyError : std::logic_error {
    explicit InternalConsistencyError(const std::string& what) : std::logic_error(what) {}
};

// The requested exact decision is correct to ask for but exceeds the
// configured time/memory budgets (see decide.hpp for the limits).
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace echcap
