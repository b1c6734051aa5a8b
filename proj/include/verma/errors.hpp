#pragma once

// Error types shared across the library.
//
// Invalid arguments (malformed flags, out-of-range indices, mismatched root
// data) throw std::invalid_argument directly.  The two types below mark the
// cases callers are expected to distinguish programmatically.

#include <stdexcept>
#include <string>

namespace verma {

// Thrown when an element is evaluated against a parabolic character but does
// not lie in the parabolic subalgebra.
struct not_in_parabolic : std::invalid_argument {
    explicit not_in_parabolic(const std::string& msg) : std::invalid_argument(msg) {}
};

// Thrown when a computation is handed prerequisite data truncated at a lower
// level than the one requested.
struct dependency_error : std::runtime_error {
    explicit dependency_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace verma
