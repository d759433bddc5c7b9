#include "histrel/errors.hpp"

namespace histrel {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::unknown_symbol: return "UnknownSymbol";
    case ErrorCode::alphabet_mismatch: return "AlphabetMismatch";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::empty_set: return "EmptySet";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::io_error: return "IoError";
    case ErrorCode::not_binary: return "NotBinary";
    case ErrorCode::wrong_case: return "WrongCase";
    case ErrorCode::degenerate_pair: return "DegeneratePair";
    case ErrorCode::numerical_failure: return "NumericalFailure";
    case ErrorCode::iteration_cap_exceeded: return "IterationCapExceeded";
    case ErrorCode::cap_exceeded: return "CapExceeded";
    case ErrorCode::certificate_failure: return "CertificateFailure";
    case ErrorCode::verification_failure: return "VerificationFailure";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "Error";
}

int exit_code(ErrorCode code) { return static_cast<int>(code); }

UnknownSymbol::UnknownSymbol(std::size_t line, std::size_t position, std::string label)
    : Error(ErrorCode::unknown_symbol,
            "unknown symbol '" + label + "' at position " + std::to_string(position) +
                (line ? " on line " + std::to_string(line) : std::string())),
      line_(line),
      position_(position),
      label_(std::move(label)) {}

LengthMismatch::LengthMismatch(std::size_t line, std::size_t expected, std::size_t actual)
    : Error(ErrorCode::length_mismatch,
            "sample length " + std::to_string(actual) + " differs from expected " +
                std::to_string(expected) + (line ? " on line " + std::to_string(line) : std::string())),
      line_(line) {}

ParseError::ParseError(std::size_t line, const std::string& detail)
    : Error(ErrorCode::parse_error,
            (line ? "line " + std::to_string(line) + ": " : std::string()) + detail),
      line_(line) {}

}  // namespace histrel
