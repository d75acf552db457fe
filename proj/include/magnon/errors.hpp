// errors.hpp — exception taxonomy for the magnon toolkit.
//
// Domain errors carry a stable `kind` tag so the CLI can map them onto
// exit codes without string matching.

#pragma once

#include <stdexcept>
#include <string>

namespace magnon {

/// Broad failure classes, mirrored in the CLI exit codes.
enum class ErrorKind {
    Validation,  ///< bad input value or violated invariant
    Numerical,   ///< solver could not produce a result
    Io,          ///< file system / serialization failure
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string what) : std::runtime_error(std::move(what)), kind_(kind) {}
    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(ErrorKind::Validation, what) {}
};

struct NumericalError : Error {
    explicit NumericalError(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

// -- materials ---------------------------------------------------------------

struct NonPositiveFrequency : ValidationError {
    explicit NonPositiveFrequency(double f)
        : ValidationError("frequency must be positive, got " + std::to_string(f) + " Hz") {}
};

struct NonPositiveField : ValidationError {
    explicit NonPositiveField(double h0)
        : ValidationError("bias field must be positive, got " + std::to_string(h0) + " G") {}
};

/// The permeability pole at omega == omega_H.
struct SingularPermeability : NumericalError {
    explicit SingularPermeability(double f)
        : NumericalError("permeability singular near the FMR pole at f = " + std::to_string(f) +
                         " Hz") {}
};

// -- dispersion --------------------------------------------------------------

struct NegativeArgument : ValidationError {
    explicit NegativeArgument(const std::string& what) : ValidationError(what) {}
};

struct NegativeRadicand : NumericalError {
    explicit NegativeRadicand(const std::string& what) : NumericalError(what) {}
};

struct NoSolutionInBand : NumericalError {
    explicit NoSolutionInBand(const std::string& what) : NumericalError(what) {}
};

struct NonConvergence : NumericalError {
    explicit NonConvergence(const std::string& what) : NumericalError(what) {}
};

// -- cavity ------------------------------------------------------------------

struct TooFewModes : ValidationError {
    explicit TooFewModes(const std::string& what) : ValidationError(what) {}
};

// -- transducer --------------------------------------------------------------

struct OutOfDomain : ValidationError {
    explicit OutOfDomain(const std::string& what) : ValidationError(what) {}
};

struct NonPhysicalGap : ValidationError {
    explicit NonPhysicalGap(const std::string& what) : ValidationError(what) {}
};

struct QuadratureFailure : NumericalError {
    explicit QuadratureFailure(const std::string& what) : NumericalError(what) {}
};

// -- response ----------------------------------------------------------------

struct DegenerateLoad : ValidationError {
    explicit DegenerateLoad(const std::string& what) : ValidationError(what) {}
};

struct EmptyModeSet : NumericalError {
    explicit EmptyModeSet(const std::string& what) : NumericalError(what) {}
};

struct NoPassband : NumericalError {
    explicit NoPassband(const std::string& what) : NumericalError(what) {}
};

// -- cli_io ------------------------------------------------------------------

struct ParseError : ValidationError {
    explicit ParseError(const std::string& what) : ValidationError(what) {}
};

}  // namespace magnon
