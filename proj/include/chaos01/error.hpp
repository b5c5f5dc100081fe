#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chaos01 {

enum class ErrorCode {
  EmptyInput,
  DomainError,
  InvalidConfig,
  TooShort,
  InvalidC,
  ResonantC,
  ZeroVariance,
  NoValidFrequency,
  EmptyGrid,
  ParseError,
  ValueError,
  IoError,
};

const char* to_string(ErrorCode code);

// Input errors are caller mistakes (bad file, bad flag value); numerical
// degeneracies mean the data cannot support the computation.
bool is_numerical_degeneracy(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}

  // 1-based line number of the offending input.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace chaos01
