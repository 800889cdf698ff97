#pragma once

#include <stdexcept>
#include <string>

namespace xylab {

/// Mismatched qubit counts or malformed indices.
class validation_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Requested computation exceeds a configured capacity limit
/// (dense-matrix size, statevector size, basis dimension cap, ...).
class capacity_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Input files that fail to parse; carries a line number when known.
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& what, long line = -1)
        : std::runtime_error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}
    long line() const { return line_; }

  private:
    long line_;
};

}  // namespace xylab
