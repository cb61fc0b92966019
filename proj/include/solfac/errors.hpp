#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace solfac {

// Base of all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad inputs: rejected before any numerics run.  Maps to process exit code 1.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Numerical breakdown during an otherwise valid computation.  Exit code 2.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& msg) : Error(msg) {}
};

class SingularMatrix : public NumericalError {
public:
    explicit SingularMatrix(const std::string& msg) : NumericalError(msg) {}
};

class SingularSystem : public NumericalError {
public:
    explicit SingularSystem(const std::string& msg) : NumericalError(msg) {}
};

class StructureViolation : public NumericalError {
public:
    explicit StructureViolation(const std::string& msg) : NumericalError(msg) {}
};

class DegenerateInput : public NumericalError {
public:
    explicit DegenerateInput(const std::string& msg) : NumericalError(msg) {}
};

class ZeroArgument : public NumericalError {
public:
    explicit ZeroArgument(const std::string& msg) : NumericalError(msg) {}
};

class NonFiniteSample : public NumericalError {
public:
    explicit NonFiniteSample(const std::string& msg) : NumericalError(msg) {}
};

class BoundaryNotDecayed : public NumericalError {
public:
    explicit BoundaryNotDecayed(const std::string& msg) : NumericalError(msg) {}
};

// Spectral-data validation failures; `index` is the 1-based offending pair.
class SpectralDataError : public ValidationError {
public:
    SpectralDataError(const std::string& msg, std::size_t index)
        : ValidationError(msg), index(index) {}
    std::size_t index;
};

class PointOutsideDisk : public SpectralDataError {
public:
    using SpectralDataError::SpectralDataError;
};

class RealSpectralPoint : public SpectralDataError {
public:
    using SpectralDataError::SpectralDataError;
};

class DuplicatePoint : public SpectralDataError {
public:
    using SpectralDataError::SpectralDataError;
};

class ZeroLambda : public SpectralDataError {
public:
    using SpectralDataError::SpectralDataError;
};

class GridTooSmall : public ValidationError {
public:
    explicit GridTooSmall(const std::string& msg) : ValidationError(msg) {}
};

class RefinementMismatch : public ValidationError {
public:
    explicit RefinementMismatch(const std::string& msg) : ValidationError(msg) {}
};

// Config-file syntax or schema violation; 1-based line/column of the offence.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column = 0)
        : ValidationError(msg + " (line " + std::to_string(line) +
                          (column ? ", column " + std::to_string(column) : "") + ")"),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};

}  // namespace solfac
