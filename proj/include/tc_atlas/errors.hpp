#pragma once

#include <stdexcept>
#include <string>

namespace tc_atlas {

/// Raised when an input violates an operation's precondition (A = B where a
/// distinct pair is required, malformed algebra table, and so on).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for unparseable textual input: space specs, point lists, tree files.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tc_atlas
