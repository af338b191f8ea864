#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gfdtd {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Critically damped pole (delta_p == omega_p): the two roots coincide.
class DegeneratePoleError : public Error {
public:
    using Error::Error;
};

/// Lossless pole evaluated exactly on its resonance.
class ResonanceError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain where a closed form is valid.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A quantity that must be real came out with a non-negligible imaginary part.
class RealnessError : public Error {
public:
    using Error::Error;
};

class AnalysisError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    ConfigError(const std::string& what, std::size_t line = 0)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    /// 1-based line of the offending input, 0 for semantic validation errors.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace gfdtd
