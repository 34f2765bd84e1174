#pragma once

#include <stdexcept>
#include <string>

namespace arclimit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Map construction
struct NotAnchored : Error { using Error::Error; };
struct NotSorted : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };

// Evaluation / iteration
struct DomainError : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };

// Dynamics
struct NotIsolatedFixedPoint : Error { using Error::Error; };
struct NotSurjective : Error { using Error::Error; };

// Splitting
struct NotAViolation : Error { using Error::Error; };

struct ReplayFailure : Error {
    std::size_t step;
    std::string condition;
    ReplayFailure(std::size_t step_, std::string condition_)
        : Error("replay failure at step " + std::to_string(step_) + ": " + condition_),
          step(step_), condition(std::move(condition_)) {}
};

// Inverse-limit machinery
struct NotAnOrbit : Error { using Error::Error; };
struct PNotInterior : Error { using Error::Error; };
struct BadAxes : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };

// Decider
struct NotUnimodal : Error { using Error::Error; };
struct NoFixedStructure : Error { using Error::Error; };

// I/O
struct ParseError : Error { using Error::Error; };

} // namespace arclimit
