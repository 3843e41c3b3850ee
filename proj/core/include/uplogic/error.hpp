#pragma once

#include <stdexcept>
#include <string>

namespace uplogic {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input would exceed a configured resource cap (atom count, ground-set size,
// cover enumeration budget).
struct CapError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line = 0;
  int col = 0;
  ParseError(int line_, int col_, const std::string& msg)
      : Error("parse error at " + std::to_string(line_) + ":" +
              std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

}  // namespace uplogic
