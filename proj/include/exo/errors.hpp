#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax errors carry the byte offset into the parsed text.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

struct VariableError : Error {
  using Error::Error;
};

// Parameter constraint violations for DomainSpec and friends.
struct SpecError : Error {
  using Error::Error;
};

} // namespace exo
