#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace flatavoid {

// Thrown when an enumeration would scan more objects than the caller's
// budget allows. The work is refused up front; nothing is partially done.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rejected input file. `line()` is 1-based and refers to the offending
// line; it is 0 for failures that precede reading (e.g. unopenable file).
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  explicit parse_error(const std::string& message)
      : std::runtime_error(message), line_(0) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace flatavoid
