#pragma once

#include <stdexcept>
#include <string>

namespace msindex {

// Every library failure derives from Error so callers (the CLI in
// particular) can catch one type and map it to an exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotATree : public Error {
 public:
  using Error::Error;
};

class NotAForest : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class BadRange : public Error {
 public:
  using Error::Error;
};

class NotTreeOfStars : public Error {
 public:
  using Error::Error;
};

class Degenerate : public Error {
 public:
  using Error::Error;
};

class InfeasibleLabels : public Error {
 public:
  using Error::Error;
};

class InvalidRotation : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

class EmptyClass : public Error {
 public:
  using Error::Error;
};

class BadK : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised when an internal invariant the theory guarantees does not hold.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace msindex
