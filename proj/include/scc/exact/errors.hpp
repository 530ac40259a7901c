#pragma once

#include <stdexcept>
#include <string>

namespace scc {

struct ArithmeticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OrderOverflow : ArithmeticError {
    using ArithmeticError::ArithmeticError;
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace scc
