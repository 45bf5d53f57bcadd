#pragma once

#include <stdexcept>
#include <string>

namespace geodual {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// An iteration failed to reach the requested tolerance.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

/// Root finding called without a sign change on the interval.
class BracketError : public Error {
public:
    explicit BracketError(const std::string& msg) : Error(msg) {}
};

/// Riccati solution ran into a pole; carries the estimated location.
class BlowupError : public Error {
public:
    BlowupError(const std::string& msg, double pole_estimate)
        : Error(msg), pole_estimate(pole_estimate) {}
    double pole_estimate;
};

/// Scattering grid cannot resolve the wavelength (k*h too large).
class ResolutionError : public Error {
public:
    explicit ResolutionError(const std::string& msg) : Error(msg) {}
};

/// The Lorentz embedding is not real at the requested point (radicand < 0).
class EmbeddingComplexError : public Error {
public:
    EmbeddingComplexError(const std::string& msg, double radicand)
        : Error(msg), radicand(radicand) {}
    double radicand;
};

/// Bad or inconsistent run configuration.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

} // namespace geodual
