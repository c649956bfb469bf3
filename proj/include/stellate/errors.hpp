#ifndef STELLATE_ERRORS_HPP
#define STELLATE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stellate {

// Bad user-supplied data (malformed graph6, invalid vertex, non-permutation order, ...).
// The CLI maps this to exit code 3.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was hit (stable-set cap, variable budget, search cap, ...).
// The CLI maps this to exit code 2; the analysis harness catches it per stage and
// marks the stage "skipped".
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace stellate

#endif
