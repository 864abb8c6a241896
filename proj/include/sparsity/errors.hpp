#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sparsity {

/// Malformed or out-of-contract input (bad vertex ids, loops, violated
/// hypotheses, parameter ranges).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive computation was refused because the instance exceeds a
/// configured guardrail.
class LimitExceeded : public std::runtime_error {
public:
    LimitExceeded(std::string limit_name, std::int64_t limit, std::int64_t requested)
        : std::runtime_error("refused: " + limit_name + " is " + std::to_string(limit) +
                             ", instance needs " + std::to_string(requested)),
          limit_name_(std::move(limit_name)),
          limit_(limit),
          requested_(requested)
    {
    }

    const std::string& limit_name() const noexcept { return limit_name_; }
    std::int64_t limit() const noexcept { return limit_; }
    std::int64_t requested() const noexcept { return requested_; }

private:
    std::string limit_name_;
    std::int64_t limit_;
    std::int64_t requested_;
};

} // namespace sparsity
