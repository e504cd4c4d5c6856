#pragma once

#include <stdexcept>
#include <string>

namespace brachy {

// Bad input: malformed syntax, mismatched flavors, out-of-range arguments.
// The CLI maps this to exit code 2.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured cap (closure size, node budget, order cap) was exceeded.
// The CLI maps this to exit code 3.
struct ResourceError : std::runtime_error {
    ResourceError(const std::string& msg, long long cap_)
        : std::runtime_error(msg), cap(cap_) {}
    long long cap;
};

} // namespace brachy
