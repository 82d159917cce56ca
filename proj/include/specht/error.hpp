#pragma once

#include <stdexcept>
#include <string>

namespace specht {

/// Violated precondition or malformed input. CLI maps this to exit code 2.
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A theorem-backed identity failed to hold on concrete data. This always
/// signals a bug in the library, never a property of the input; the CLI maps
/// it to exit code 3.
class check_error : public std::logic_error {
public:
    explicit check_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw precondition_error(msg);
}

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw check_error(msg);
}

} // namespace specht
