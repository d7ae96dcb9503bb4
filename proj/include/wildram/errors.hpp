#pragma once

#include <stdexcept>
#include <string>

namespace wildram {

// Malformed or out-of-domain input (bad descriptor, non-prime p, ...).
// CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A checked identity failed. CLI maps this to exit code 1.
struct verification_error : std::runtime_error {
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

// A window/precision did not stabilize within the policy bounds.
// CLI maps this to exit code 3.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

// Invariant breakage inside the library itself.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace wildram
