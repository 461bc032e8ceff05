#pragma once

#include <stdexcept>
#include <string>

namespace cperm {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text input (one-line/cycle notation, partition strings, ...).
struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

// Invalid parameters: dimension mismatch, out-of-range index, bad modulus.
struct invalid_argument_error : error {
    explicit invalid_argument_error(const std::string& what) : error(what) {}
};

// A closed-form formula or algorithm was asked to run outside its
// hypothesis: the cycle type contains cycles that are too short.
struct short_cycle_error : error {
    explicit short_cycle_error(const std::string& what) : error(what) {}
};

// The requested exact computation exceeds the configured size cap.
struct infeasible_error : error {
    explicit infeasible_error(const std::string& what) : error(what) {}
};

}  // namespace cperm
