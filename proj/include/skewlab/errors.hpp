#pragma once

#include <stdexcept>
#include <string>

namespace skewlab {

// Structural violations detected by the validators and precondition checks.
// The witness fields name the first offending cell/triple where applicable.
enum class Violation {
  NotLatinSquare,
  NotAssociative,
  NoIdentity,
  IdentityMismatch,
  DistributivityFailure,
  Degenerate,
  NotBijective,
  BraidFailure,
  IllDefined,
  NotTwoSided,
  InvalidSubbrace,
  NotGenerating,
  NotAdditivelyGenerating,
  NotAddSubgroup,
  UnsupportedQuery,
  UnknownClaim,
};

const char* violation_name(Violation v);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(Violation kind, std::string detail, int a = -1, int b = -1,
                  int c = -1)
      : std::runtime_error(std::string(violation_name(kind)) + ": " + detail),
        kind_(kind),
        a_(a),
        b_(b),
        c_(c) {}

  Violation kind() const { return kind_; }
  int witness_a() const { return a_; }
  int witness_b() const { return b_; }
  int witness_c() const { return c_; }

 private:
  Violation kind_;
  int a_, b_, c_;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::string reason)
      : std::runtime_error("parse error: " + std::move(reason)) {}
};

// Resource caps: TooLarge preconditions, orbit Overflow promoted to an error,
// PartialResult from the decomposition atom search.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::string reason)
      : std::runtime_error("cap exceeded: " + std::move(reason)) {}
};

}  // namespace skewlab
