#pragma once

#include <stdexcept>
#include <string>

namespace narayana {

// Malformed polynomial, grammar, or tree text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A negative power of a substituted variable whose image is not a monomial.
class SubstitutionUndefined : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Tree labels are not exactly {1, ..., n}.
class LabelSetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Insertion step names a missing node, or an edge case targets the root.
class InvalidTarget : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotIncreasing : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ZeroPolynomial : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The stability probe met a variable it was not told to sample.
class UnspecializedVariable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request beyond the sizes the command line will enumerate or expand.
class LimitExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace narayana
