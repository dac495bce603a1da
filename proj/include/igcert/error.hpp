// Exception types thrown by igcert.
//
// Every error derives from igcert::Error so callers (the CLI in particular)
// can map failures onto exit codes without knowing the full hierarchy.

#ifndef IGCERT_ERROR_HPP_
#define IGCERT_ERROR_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace igcert {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed semigroup specification (bad images, unsupported field, ...).
  class SpecError : public Error {
   public:
    using Error::Error;
  };

  //! Text input that could not be parsed; carries a 1-based position.
  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column "
                + std::to_string(column) + ": " + what),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  //! A Cayley table that is not associative; `triple()` is (i, j, k) with
  //! (ij)k != i(jk).
  class AssociativityError : public Error {
   public:
    AssociativityError(std::uint32_t i, std::uint32_t j, std::uint32_t k)
        : Error("table is not associative at (" + std::to_string(i) + ", "
                + std::to_string(j) + ", " + std::to_string(k) + ")"),
          _triple{i, j, k} {}

    std::array<std::uint32_t, 3> const& triple() const noexcept {
      return _triple;
    }

   private:
    std::array<std::uint32_t, 3> _triple;
  };

  //! A transition whose pattern does not match the word it is applied to.
  class PatternMismatch : public Error {
   public:
    PatternMismatch(std::string const& what, std::size_t step)
        : Error("step " + std::to_string(step) + ": " + what), _step(step) {}

    std::size_t step() const noexcept {
      return _step;
    }

   private:
    std::size_t _step;
  };

  class EndpointMismatch : public Error {
   public:
    using Error::Error;
  };

  class BudgetError : public Error {
   public:
    using Error::Error;
  };

  //! Transporting a Green witness on the side where it is not a congruence.
  class SideError : public Error {
   public:
    using Error::Error;
  };

  //! An input certificate failed replay.
  class VerificationError : public Error {
   public:
    using Error::Error;
  };

  //! A contraction site with no basic-product case; only reachable through a
  //! corrupted certificate.
  class CaseError : public Error {
   public:
    using Error::Error;
  };

}  // namespace igcert

#endif  // IGCERT_ERROR_HPP_
