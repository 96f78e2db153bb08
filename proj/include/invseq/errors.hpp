#pragma once

#include <stdexcept>

namespace invseq {

// An enumeration or table request exceeds a configured size guard.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed pattern or decimal text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoReferenceDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoRecurrenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace invseq
