#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpmine {

/// Base class for all errors thrown by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input file/stream could not be parsed; carries the 1-based line number.
class parse_error : public error {
public:
  parse_error(std::size_t line, const std::string& what)
      : error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

}  // namespace gpmine
