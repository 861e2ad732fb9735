#ifndef TMAT_ERRORS_HPP
#define TMAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tmat {

// Malformed input: bad file syntax, out-of-range index, violated precondition.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or search exceeded its configured budget.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Two routes that a theorem forces to agree produced different answers.
struct consistency_error : std::runtime_error {
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tmat

#endif
