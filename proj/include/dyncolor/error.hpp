#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dyncolor {

enum class Errc {
  VertexOutOfRange,
  SelfLoop,
  EdgeExists,
  EdgeMissing,
  NotARoot,
  SameTree,
  IsRoot,
  AlreadyPresent,
  NotPresent,
  SameRoot,
  PaletteExhausted,
  CapacityExceeded,
  AuxVertexInUse,
  UnsupportedEvent,
  ParseError,
  InvalidSpec,
  ContractViolation,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error(Errc::ParseError, "line " + std::to_string(line) + ": " + reason), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dyncolor
