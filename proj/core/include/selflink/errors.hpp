#pragma once

#include <stdexcept>
#include <string>

namespace selflink {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: parse failures, precondition violations,
/// degenerate data. Maps to CLI exit code 2.
class InputError : public Error {
public:
  using Error::Error;
};

/// Operands living in different rings.
class RingMismatchError : public InputError {
public:
  RingMismatchError() : InputError("operands belong to different rings") {}
  using InputError::InputError;
};

/// A request the toolkit cannot serve over the given field or degree profile
/// (missing roots, non-integral twist sums). Maps to CLI exit code 3.
class UnsupportedError : public Error {
public:
  using Error::Error;
};

/// A square or cube root needed by a closed-form solution does not exist in
/// the coefficient field. `root()` names the missing root.
class NoRootInField : public UnsupportedError {
public:
  explicit NoRootInField(std::string root)
      : UnsupportedError("no root in field: " + root), root_(std::move(root)) {}
  const std::string& root() const { return root_; }

private:
  std::string root_;
};

} // namespace selflink
