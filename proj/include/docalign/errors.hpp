#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace docalign {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed input container: bad header, bad framing, schema violation.
class FormatError : public Error {
  public:
    using Error::Error;
};

// A single input record is invalid. Carries the 1-based line number when the
// input is line-oriented (0 when it is not, e.g. JSON paths).
class RowError : public Error {
  public:
    explicit RowError(const std::string& what) : Error(what), line_(0) {}
    RowError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

// The input carries no page dimensions (no level-1 TSV row, no ocr_page bbox).
class MissingPageGeometryError : public Error {
  public:
    using Error::Error;
};

class IoError : public Error {
  public:
    using Error::Error;
};

// Argument outside an operation's stated domain.
class DomainError : public Error {
  public:
    using Error::Error;
};

class ZeroMatrixError : public Error {
  public:
    using Error::Error;
};

class SingularMatrixError : public Error {
  public:
    using Error::Error;
};

// Homogeneous point maps to (or comes from) the line at infinity.
class PointAtInfinityError : public Error {
  public:
    using Error::Error;
};

// A minimal sample contains three (near-)collinear points.
class DegenerateConfigurationError : public Error {
  public:
    using Error::Error;
};

// The DLT system does not determine a unique homography.
class RankDeficientError : public Error {
  public:
    using Error::Error;
};

class InsufficientMatchesError : public Error {
  public:
    using Error::Error;
};

// Every sampled minimal subset was degenerate; no model could be fit.
class NoModelError : public Error {
  public:
    using Error::Error;
};

// Combinatorial guard of the exhaustive search tripped.
class SizeGuardError : public Error {
  public:
    using Error::Error;
};

// Synthetic word placement failed (page too dense).
class PlacementError : public Error {
  public:
    using Error::Error;
};

class EmptyInputError : public Error {
  public:
    using Error::Error;
};

}  // namespace docalign
