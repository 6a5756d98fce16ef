#pragma once

#include <stdexcept>
#include <string>

namespace spinoptics {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// geometry / polarization input violations
struct NonIsotropicInput : Error { using Error::Error; };
struct NotOrthonormal : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct OutOfPlane : Error { using Error::Error; };
struct ConstraintViolation : Error { using Error::Error; };

// metric / dynamics
struct DomainExit : Error {
    explicit DomainExit(const std::string& msg, long step = -1) : Error(msg), step(step) {}
    long step;  // integration step index, -1 if not raised inside an integrator
};
struct SingularDenominator : Error {
    explicit SingularDenominator(const std::string& msg, long step = -1) : Error(msg), step(step) {}
    long step;
};
struct LoopNotClosed : Error { using Error::Error; };

// scattering
struct GrazingIncidence : Error { using Error::Error; };

// scenario / cli
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

}  // namespace spinoptics
