#pragma once

#include <stdexcept>
#include <string>

namespace gridlab {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// thrown by the formula parser; carries the offending input position
struct ParseError : Error {
  ParseError(const std::string& what, size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), pos(position) {}
  size_t pos;
};

}  // namespace gridlab
