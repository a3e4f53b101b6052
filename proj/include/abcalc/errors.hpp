#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace abcalc {

// Coarse classification used by the CLI to pick an exit code:
// Parse -> 2, Domain -> 3, Exhausted -> 4 (a configured bound or precision
// ran out; the answer is unknown, not wrong).
enum class ErrorKind { Parse, Domain, Exhausted };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct LaurentNotAllowed : Error {
  explicit LaurentNotAllowed(const std::string& what)
      : Error(ErrorKind::Domain, what) {}
};

struct LaurentWindowExceeded : Error {
  explicit LaurentWindowExceeded(const std::string& what)
      : Error(ErrorKind::Exhausted, what) {}
};

struct NotAUnit : Error {
  explicit NotAUnit(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

struct ZeroElement : Error {
  explicit ZeroElement(const std::string& what)
      : Error(ErrorKind::Domain, what) {}
};

struct PrecisionTooLow : Error {
  explicit PrecisionTooLow(const std::string& what)
      : Error(ErrorKind::Exhausted, what) {}
};

struct PrecisionExhausted : Error {
  explicit PrecisionExhausted(const std::string& what)
      : Error(ErrorKind::Exhausted, what) {}
};

struct NotMonic : Error {
  explicit NotMonic(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

struct NotHomogeneous : Error {
  explicit NotHomogeneous(const std::string& what)
      : Error(ErrorKind::Domain, what) {}
};

// Carries the offending remainder in rendered form.
struct NotDivisible : Error {
  NotDivisible(const std::string& what, std::string remainder)
      : Error(ErrorKind::Domain, what), remainder_text(std::move(remainder)) {}
  std::string remainder_text;
};

struct NotStabilized : Error {
  explicit NotStabilized(const std::string& what)
      : Error(ErrorKind::Exhausted, what) {}
};

struct DegenerateExponents : Error {
  explicit DegenerateExponents(const std::string& what)
      : Error(ErrorKind::Domain, what) {}
};

struct DegenerateRecurrence : Error {
  explicit DegenerateRecurrence(const std::string& what)
      : Error(ErrorKind::Domain, what) {}
};

// Domain when no nonnegative solution can exist at all, Exhausted when the
// configured search bound was hit before deciding.
struct NoClosure : Error {
  NoClosure(ErrorKind kind, const std::string& what) : Error(kind, what) {}
};

struct InconsistentLedger : Error {
  explicit InconsistentLedger(const std::string& what)
      : Error(ErrorKind::Domain, what) {}
};

// Malformed JSON payloads and schema violations.
struct SchemaError : Error {
  explicit SchemaError(const std::string& what)
      : Error(ErrorKind::Domain, what) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected,
             const std::string& what)
      : Error(ErrorKind::Parse, what),
        offset_(offset),
        expected_(std::move(expected)) {}
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept {
    return expected_;
  }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace abcalc
