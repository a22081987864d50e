#pragma once

#include <stdexcept>
#include <string>

namespace nilclean {

// Base class for every error thrown by the library.
struct RingError : std::runtime_error {
    explicit RingError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed ring description: zero modulus or zero matrix size.
struct InvalidSpec : RingError {
    explicit InvalidSpec(const std::string& what) : RingError(what) {}
};

// A ring (or one of its building blocks) would exceed the configured order cap.
struct OrderCapExceeded : RingError {
    explicit OrderCapExceeded(const std::string& what) : RingError(what) {}
};

// Two elements of different rings were combined.
struct RingMismatch : RingError {
    explicit RingMismatch(const std::string& what) : RingError(what) {}
};

// A member set handed to quotient construction is not a two-sided ideal.
struct NotAnIdeal : RingError {
    explicit NotAnIdeal(const std::string& what) : RingError(what) {}
};

// An operation's documented precondition does not hold for the given inputs.
struct PreconditionViolated : RingError {
    explicit PreconditionViolated(const std::string& what) : RingError(what) {}
};

}  // namespace nilclean
