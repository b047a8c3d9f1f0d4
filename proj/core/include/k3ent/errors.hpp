#pragma once

#include <stdexcept>
#include <string>

namespace k3ent {

struct DivisionByZeroError : std::domain_error {
    using std::domain_error::domain_error;
};

struct InvalidPointError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ZeroPolynomialError : std::domain_error {
    using std::domain_error::domain_error;
};

struct BothZeroError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NoSignChangeError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NonConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonSquareError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonMonicError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonIntegerResultError : std::logic_error {
    using std::logic_error::logic_error;
};

struct DimensionMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnknownNameError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndeterminatePointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SharedComponentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotInSpanError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularGramError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace k3ent
