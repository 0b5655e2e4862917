#ifndef KBG_ERROR_HPP_
#define KBG_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kbg {

// Base error. `kind()` is the stable taxonomy name surfaced by the CLI
// ("Overflow", "NotInDomain", "NotInImage", "NotInSubgroup", "TargetNotInK",
// "VerificationFailed", "ArityMismatch", "IndexOutOfRange", "CarrierMismatch",
// "ParseError", "WordTooLarge").
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class OverflowError final : public Error {
 public:
  explicit OverflowError(const std::string& what) : Error("Overflow", what) {}
};

// Preconditions violated at the value level (NotInDomain, NotInImage, ...).
class DomainError final : public Error {
 public:
  DomainError(std::string kind, const std::string& what)
      : Error(std::move(kind), what) {}
};

// A defensive internal re-check failed; indicates a bug, not bad input.
class VerificationError final : public Error {
 public:
  explicit VerificationError(const std::string& what)
      : Error("VerificationFailed", what) {}
};

class ParseError final : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("ParseError", what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace kbg

#endif  // KBG_ERROR_HPP_
