#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace affrkl {

struct Error : std::runtime_error {
    explicit Error(const std::string& m) : std::runtime_error(m) {}
};

/// Bad GCM / datum / element input.
struct InputError : Error {
    explicit InputError(const std::string& m) : Error(m) {}
};

/// A bounded search ran out of budget without a definite answer. `budget`
/// names the exhausted parameter so callers know what to raise.
struct CutoffExceeded : Error {
    CutoffExceeded(const std::string& m, const std::string& budget_name)
        : Error(m + " (budget: " + budget_name + ")"), budget(budget_name) {}
    std::string budget;
};

/// A stabilization-style check could not certify its answer at the given
/// cutoff.
struct CutoffInconclusive : Error {
    explicit CutoffInconclusive(const std::string& m) : Error(m) {}
};

/// Raised when an operation needs a spherical coweight (finite fixator) and
/// the fixator type J is infinite.
struct NotSpherical : Error {
    NotSpherical(const std::string& m, std::vector<int> J_)
        : Error(m), J(std::move(J_)) {}
    std::vector<int> J;
};

struct BaseMismatch : Error {
    explicit BaseMismatch(const std::string& m) : Error(m) {}
};
struct SignMismatch : Error {
    explicit SignMismatch(const std::string& m) : Error(m) {}
};
struct NotDominating : Error {
    explicit NotDominating(const std::string& m) : Error(m) {}
};
struct NotOnWall : Error {
    explicit NotOnWall(const std::string& m) : Error(m) {}
};
struct DegeneratePath : Error {
    explicit DegeneratePath(const std::string& m) : Error(m) {}
};

}  // namespace affrkl
