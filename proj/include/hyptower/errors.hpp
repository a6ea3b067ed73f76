#pragma once

#include <stdexcept>
#include <string>

namespace hyptower {

// Base class for everything this library throws on bad input.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Words from incompatible alphabets were combined.
struct AlphabetMismatch : Error {
  using Error::Error;
};

// Text input that does not conform to the document grammar.
struct ParseError : Error {
  ParseError(const std::string& msg, int line, int col)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line(line), col(col) {}
  int line = 0;
  int col = 0;
};

// A request the library recognises but cannot decide or represent
// (e.g. a presentation outside the supported solver classes).
struct Unsupported : Error {
  using Error::Error;
};

}  // namespace hyptower
