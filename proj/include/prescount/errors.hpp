#pragma once

#include <stdexcept>
#include <string>

namespace prescount {

// Recoverable input/usage errors.
struct invalid_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct division_by_zero : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct zero_constant : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct unknown_class : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct group_too_large : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal math errors: a value that must be a (nonnegative) rational integer
// came out otherwise. These indicate a bug, never bad user input.
struct not_rational : std::logic_error {
    using std::logic_error::logic_error;
};
struct not_integer : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace prescount
