#pragma once

#include <stdexcept>
#include <string>

namespace trimod {

// Bad caller input (invalid genus, empty window, non-proper subtriple, ...).
// The CLI maps this to exit code 1.
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Broken internal invariant (formula/oracle disagreement, arithmetic overflow).
// The CLI maps this to exit code 2.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace trimod
