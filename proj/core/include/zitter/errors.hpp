#pragma once

#include <stdexcept>
#include <string>

namespace zitter {

/// Base class for every error raised by the zitter core library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value or parameter outside its admissible domain (|beta| > 1, bad
/// probabilities, malformed configuration).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Frame composition of light-speed motions in opposite directions. The
/// normaliser of the composed distribution is exactly zero there.
class IndeterminateComposition : public Error {
public:
    IndeterminateComposition(double u, double v);

    double u() const noexcept { return u_; }
    double v() const noexcept { return v_; }

private:
    double u_;
    double v_;
};

/// Rapidity requested for |beta| = 1.
class LightSpeedRapidity : public Error {
public:
    explicit LightSpeedRapidity(double beta);
};

/// gamma, 1+z or the relativistic entropy form evaluated at |beta| = 1.
class LightSpeedSingularity : public Error {
public:
    explicit LightSpeedSingularity(double beta);
};

class EmptyPath : public Error {
public:
    EmptyPath() : Error("drift estimate requested for an empty path") {}
};

class NonPositiveMass : public Error {
public:
    explicit NonPositiveMass(double mass_kg);
};

class UnknownParticle : public Error {
public:
    explicit UnknownParticle(const std::string& name);
};

} // namespace zitter
