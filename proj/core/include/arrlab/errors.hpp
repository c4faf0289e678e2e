#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arrlab {

// Malformed input: bad JSON, duplicate hyperplanes, a subspace that is not a flat, ...
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A search or enumeration hit its configured cap.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::size_t count)
        : std::runtime_error(what), count_(count) {}

    std::size_t count() const noexcept { return count_; }

private:
    std::size_t count_;
};

// Exact integer arithmetic left the int64 range.
class ArithmeticOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

} // namespace arrlab
