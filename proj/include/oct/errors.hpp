#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oct {

/// Bad caller-supplied data: unknown letters, mismatched alphabets, words
/// outside the required language, out-of-range agent indices.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A malformed automaton where a well-formed one is required, e.g. a
/// nondeterministic transition set passed to complete().
class StructuralError : public std::runtime_error {
 public:
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

/// Problem-file syntax or validation failure; carries a 1-based line number
/// when the offending line is known (0 otherwise).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A "can't happen" condition that indicates a bug in the toolkit itself,
/// e.g. a witness-recovery product with no accepted word, or observers
/// disagreeing Y vs N on the same run.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// Raised by the oracle when the exhaustive search would exceed its work cap.
class OracleCapacityError : public std::runtime_error {
 public:
  explicit OracleCapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oct
