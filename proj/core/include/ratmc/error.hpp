#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ratmc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad symbols, alphabet mismatches,
/// unknown names, states outside the model.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in one of the text formats. `line` and `column` are
/// 1-based; zero means "not applicable".
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A well-formed query that falls outside the fragment this checker can decide.
class UnsupportedFragment : public Error {
 public:
  using Error::Error;
};

/// Constructs for which model checking over rational models is undecidable
/// (the state binder).
class UndecidableConstruct : public UnsupportedFragment {
 public:
  using UnsupportedFragment::UnsupportedFragment;
};

}  // namespace ratmc
