#pragma once

#include <stdexcept>
#include <string>

namespace motivic {

// Hard failures: a theorem-level identity did not hold. These abort the
// computation and map to CLI exit code 1.
struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};
struct NonIntegralResult : std::runtime_error {
    explicit NonIntegralResult(const std::string& what) : std::runtime_error(what) {}
};
struct NonIntegralSolution : std::runtime_error {
    explicit NonIntegralSolution(const std::string& what) : std::runtime_error(what) {}
};
struct NotStabilized : std::runtime_error {
    explicit NotStabilized(const std::string& what) : std::runtime_error(what) {}
};

// Usage errors: bad arguments or requests outside the supported range.
// These map to CLI exit code 2.
struct BadConstantTerm : std::invalid_argument {
    explicit BadConstantTerm(const std::string& what) : std::invalid_argument(what) {}
};
struct NotAMonomial : std::invalid_argument {
    explicit NotAMonomial(const std::string& what) : std::invalid_argument(what) {}
};
struct LimitExceeded : std::invalid_argument {
    explicit LimitExceeded(const std::string& what) : std::invalid_argument(what) {}
};
struct ModeMismatch : std::invalid_argument {
    explicit ModeMismatch(const std::string& what) : std::invalid_argument(what) {}
};
struct HalfExponentInput : std::invalid_argument {
    explicit HalfExponentInput(const std::string& what) : std::invalid_argument(what) {}
};
struct UnsupportedG : std::invalid_argument {
    explicit UnsupportedG(const std::string& what) : std::invalid_argument(what) {}
};
struct UnknownPreset : std::invalid_argument {
    explicit UnknownPreset(const std::string& what) : std::invalid_argument(what) {}
};
struct MalformedDiamond : std::invalid_argument {
    explicit MalformedDiamond(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace motivic
