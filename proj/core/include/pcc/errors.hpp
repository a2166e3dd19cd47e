#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace pcc {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// The encoder walked more than iter_cap steps. Never happens for the
// built-in constructions; indicates a non-injective user step function.
class IterationCapExceeded : public Error {
 public:
  using Error::Error;
};

// decode() was handed a word outside the image of the encoder.
class NotACodeword : public Error {
 public:
  using Error::Error;
};

class SlackMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOverflow : public Error {
 public:
  using Error::Error;
};

// A shrink map or window compressor was evaluated outside its domain
// (e.g. xi on a word that already satisfies the constraint).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A builder's parameter-validity inequality failed. When the failing
// parameter has a smallest admissible value it is carried along.
class ParameterViolation : public Error {
 public:
  explicit ParameterViolation(const std::string& what,
                              std::optional<std::int64_t> minimal = std::nullopt)
      : Error(what), minimal_admissible_(minimal) {}

  std::optional<std::int64_t> minimal_admissible() const { return minimal_admissible_; }

 private:
  std::optional<std::int64_t> minimal_admissible_;
};

class RankOutOfRange : public Error {
 public:
  using Error::Error;
};

// Exhaustive oracle refused: the state space exceeds the configured bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class PropertyViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace pcc
