// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ldcat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Errors caused by the user's input (files, flags). The CLI maps these to
/// exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class MalformedInput : public InputError {
 public:
  using InputError::InputError;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class SortError : public InputError {
 public:
  using InputError::InputError;
};

class UnknownSymbol : public InputError {
 public:
  using InputError::InputError;
};

class ScaleExceeded : public InputError {
 public:
  using InputError::InputError;
};

class NotComposable : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class SortMismatch : public Error {
 public:
  using Error::Error;
};

class NoSuchStructure : public Error {
 public:
  using Error::Error;
};

/// A witness that should be universal has zero or several mediators.
class UniversalityBroken : public Error {
 public:
  using Error::Error;
};

class MissingAtom : public Error {
 public:
  using Error::Error;
};

class MissingQuantifierObject : public Error {
 public:
  using Error::Error;
};

class NoMediator : public Error {
 public:
  using Error::Error;
};

class MultipleMediators : public Error {
 public:
  using Error::Error;
};

class CertificateFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace ldcat
