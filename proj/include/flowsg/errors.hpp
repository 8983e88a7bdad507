#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flowsg {

// Input text could not be parsed; `line` is 1-based.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A semigroup enumeration grew past its element cap.
class cap_exceeded : public std::runtime_error {
 public:
  explicit cap_exceeded(std::size_t cap)
      : std::runtime_error("oracle too large: closure exceeds cap of " +
                           std::to_string(cap) + " elements"),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

}  // namespace flowsg
