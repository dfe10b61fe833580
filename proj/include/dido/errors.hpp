#ifndef DIDO_ERRORS_HPP
#define DIDO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dido {

// Base of all toolkit errors. The CLI maps each subclass to a documented
// exit code; see tools/dido.cpp.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two measures (or a map and a measure) do not share the same quantile grid.
class GridMismatch : public Error {
 public:
  using Error::Error;
};

// Tangent maps combined with oplus must sit at the identical base measure.
class BaseMismatch : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

// Too few samples, or zero variance where positive variance is required.
class DegenerateSample : public Error {
 public:
  using Error::Error;
};

// All response measures identical: total Frechet variation is zero.
class DegenerateResponse : public Error {
 public:
  using Error::Error;
};

// Normal system is rank deficient beyond the jitter rescue; signals
// collinear or constant predictors.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

// A produced quantile sequence is not non-decreasing (strict mode), or a
// predicted Gaussian standard deviation is not positive.
class NotAMeasure : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// Malformed input file; message carries the file name and line number.
class ParseError : public Error {
 public:
  using Error::Error;
  ParseError(const std::string& path, std::size_t line, const std::string& what)
      : Error(path + ":" + std::to_string(line) + ": " + what) {}
};

class NoCompleteWindows : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace dido

#endif  // DIDO_ERRORS_HPP
