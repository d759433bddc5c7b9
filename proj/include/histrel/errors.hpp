#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace histrel {

// Each error class maps to a distinct process exit code (see README).
enum class ErrorCode {
  unknown_symbol = 10,
  alphabet_mismatch = 11,
  length_mismatch = 12,
  empty_set = 13,
  parse_error = 14,
  io_error = 15,
  not_binary = 20,
  wrong_case = 21,
  degenerate_pair = 22,
  numerical_failure = 30,
  iteration_cap_exceeded = 31,
  cap_exceeded = 40,
  certificate_failure = 50,
  verification_failure = 51,
  invalid_argument = 64,
};

std::string_view to_string(ErrorCode code);
int exit_code(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Positions and lines are 1-based in messages and accessors.
class UnknownSymbol : public Error {
 public:
  UnknownSymbol(std::size_t line, std::size_t position, std::string label);

  std::size_t line() const noexcept { return line_; }
  std::size_t position() const noexcept { return position_; }
  const std::string& label() const noexcept { return label_; }

 private:
  std::size_t line_;
  std::size_t position_;
  std::string label_;
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t line, std::size_t expected, std::size_t actual);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& detail);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace histrel
