#pragma once

#include <stdexcept>
#include <string>

namespace ospchar {

// Invalid input: malformed weight text, labels outside the admissible set,
// signature constraints violated, convention not applicable.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A formula denominator vanishes at the requested evaluation point.
struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// A deformation direction fails to separate the colliding roots: the reduced
// denominator vanishes identically along the whole line.
struct DegenerateDirection : std::runtime_error {
    explicit DegenerateDirection(const std::string& what) : std::runtime_error(what) {}
};

// An exact linear system has no unique solution.
struct SingularSystem : std::runtime_error {
    explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ospchar
