#pragma once

#include <stdexcept>
#include <string>

namespace cssplit {

/// Malformed input: bad tokens, invalid diagrams, unreadable files.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input outside the mathematical domain of an operation
/// (level < 1, odd level for observable splitting, intersecting loops, ...).
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace cssplit
