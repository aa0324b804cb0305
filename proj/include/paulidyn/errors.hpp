#pragma once

#include <stdexcept>
#include <string>

namespace paulidyn {

// Evaluation requested outside a function's declared time domain.
struct OutOfDomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Quadrature or integration range contains a declared pole.
struct PoleInRangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Kraus extraction requested for a map that is not completely positive.
struct NotCompletelyPositiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Intermediate map E(t_f, t) requested at a time where the map is non-invertible.
struct UndefinedIntermediateMapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sign-classification window straddles an adjacent rate pole.
struct IllConditionedWindowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixture weights are negative or do not sum to one.
struct InvalidWeightsError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Channel-spec file could not be parsed; carries the offending position.
struct SpecParseError : std::runtime_error {
    SpecParseError(const std::string& what, int line, int column)
        : std::runtime_error(what), line(line), column(column) {}
    int line;
    int column;
};

}  // namespace paulidyn
