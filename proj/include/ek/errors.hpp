#pragma once

#include <stdexcept>
#include <string>

namespace ek {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration value (out-of-range bound, bad segment length...).
class ConfigError : public Error { using Error::Error; };

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error { using Error::Error; };

/// Argument outside the mathematical domain of a formula (e.g. log log x <= 0).
class DomainError : public Error { using Error::Error; };

/// Evaluation hit a pole.
class PoleError : public Error { using Error::Error; };

/// Euler product whose factors are not 1 + O(1/p^2).
class DivergenceError : public Error { using Error::Error; };

/// Statistic requested on an empty class E_k(x).
class EmptyClassError : public Error { using Error::Error; };

/// Roots-of-unity extraction with too few sample points.
class AliasingError : public Error { using Error::Error; };

/// Base for histogram cache load failures.
class IoError : public Error { using Error::Error; };
class FormatError : public IoError { using IoError::IoError; };
class ChecksumError : public IoError { using IoError::IoError; };
class TruncatedError : public IoError { using IoError::IoError; };

} // namespace ek
