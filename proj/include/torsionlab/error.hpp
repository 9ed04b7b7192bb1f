#ifndef TORSIONLAB_ERROR_HPP_
#define TORSIONLAB_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace torsionlab {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class FieldMismatch : public Error {
   public:
    using Error::Error;
  };

  class DimensionMismatch : public Error {
   public:
    using Error::Error;
  };

  //! Two values that must live over the same category do not.
  class CategoryMismatch : public Error {
   public:
    using Error::Error;
  };

  //! A morphism or element is used somewhere its endpoints do not fit.
  class TargetMismatch : public Error {
   public:
    using Error::Error;
  };

  class UnknownObject : public Error {
   public:
    using Error::Error;
  };

  //! A presentation is malformed or collapses an identity to zero.
  class DegeneratePresentation : public Error {
   public:
    using Error::Error;
  };

  //! Module data violates a structural invariant (stability, naturality, ...).
  class InvariantViolation : public Error {
   public:
    using Error::Error;
  };

  //! An exhaustive enumeration would exceed the configured ceiling.
  class CeilingExceeded : public Error {
   public:
    CeilingExceeded(std::string const& what, double estimate, double ceiling)
        : Error(what + ": estimated " + std::to_string(estimate)
                + " candidates exceeds ceiling " + std::to_string(ceiling)),
          _estimate(estimate),
          _ceiling(ceiling) {}

    double estimate() const noexcept {
      return _estimate;
    }
    double ceiling() const noexcept {
      return _ceiling;
    }

   private:
    double _estimate;
    double _ceiling;
  };

  //! Positioned syntax or semantic error in a text file.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column "
                + std::to_string(column) + ": " + msg),
          _message(msg),
          _line(line),
          _column(column) {}

    //! The message without the position prefix.
    std::string const& message() const noexcept {
      return _message;
    }
    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::string _message;
    std::size_t _line;
    std::size_t _column;
  };

  //! A family of ideals collected from a module class is not a filter.
  class NotAFilter : public Error {
   public:
    using Error::Error;
  };

}  // namespace torsionlab

#endif  // TORSIONLAB_ERROR_HPP_
