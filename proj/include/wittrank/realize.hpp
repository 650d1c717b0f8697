#pragma once

#include "wittrank/rank.hpp"

#include <string>
#include <vector>

namespace wittrank {

struct StepPoint {
    AlgebraicAngle angle;
    int J = 0;
};

/// A candidate signature function given by σ(0) and half-jumps at points.
/// Roots of a listed minimal polynomial that are not listed have J = 0.
struct StepSpec {
    int sigma_at_zero = 0;
    std::vector<StepPoint> points;
};

struct Violation {
    int condition;
    std::string message;
};

/// Checks the defining conditions of the realizable class, returning one
/// entry per violation (empty when valid). Duplicate points violate (2); a
/// minimal polynomial without circle roots violates (4); J of mixed parity
/// over the roots of one minimal polynomial violates (5).
std::vector<Violation> validate_step(const StepSpec& spec);

/// The step function as a profile: groups hold every root of every listed
/// minimal polynomial. Throws MathError ("invalid_step") on violations.
SignatureProfile profile_from_step(const StepSpec& spec);

/// All group points of a profile, J = 0 points included.
StepSpec step_from_profile(const SignatureProfile& p);

int r_of_step(const StepSpec& spec);

/// r(spec) ≡ σ(0) mod 2.
bool parity(const StepSpec& spec);

/// A diagonal form of dimension r_of_step(spec) whose profile equals the
/// spec. Throws MathError ("invalid_step") on invalid input and
/// std::logic_error if the construction fails its own checks.
WittDiagonal realize(const StepSpec& spec);

}  // namespace wittrank
