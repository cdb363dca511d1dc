#ifndef THETAKIT_ERROR_HPP_
#define THETAKIT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thetakit {

// Precondition violations on otherwise well-formed values (a = b where
// distinct candidates are required, r < 1, clique parity of the empty graph).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// An exact search ran out of its state budget or wall-clock allowance. Never
// replaced by an approximate answer.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when solver output contradicts a structural guarantee, e.g. a
// non-monotone row of threshold answers.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  // 1-based; 0 when the error is not tied to a single line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace thetakit

#endif  // THETAKIT_ERROR_HPP_
