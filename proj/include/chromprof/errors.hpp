#pragma once

#include <stdexcept>
#include <string>

namespace chromprof {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class LoopError : public Error {
public:
  using Error::Error;
};

class RangeError : public Error {
public:
  using Error::Error;
};

class EmptyError : public Error {
public:
  using Error::Error;
};

/// Input exceeds the size an exact routine supports.
class SizeError : public Error {
public:
  using Error::Error;
};

/// A construction or command received parameters outside its validity range.
class ParameterError : public Error {
public:
  using Error::Error;
};

/// The instance does not satisfy the hypothesis a witness finder requires.
class HypothesisError : public Error {
public:
  using Error::Error;
};

/// Something that a proven lemma rules out actually happened: a bug.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

class ShapeError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(int line, const std::string &what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  auto line() const -> int { return line_; }

private:
  int line_;
};

} // namespace chromprof
