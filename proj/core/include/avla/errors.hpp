#pragma once

#include <stdexcept>
#include <string>

namespace avla {

/// Shape or dimension mismatch between inputs, or a violated precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed fixture file. `where` names the offending field, e.g. "brackets[2].k".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what),
        where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace avla
