#pragma once

#include <stdexcept>
#include <string>

namespace ehpcalc {

// Violated precondition of a domain operation. The CLI maps these to exit 1.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class IndexOutOfRange : public DomainError {
 public:
  explicit IndexOutOfRange(const std::string& what) : DomainError("index_out_of_range", what) {}
};

class CapExceeded : public DomainError {
 public:
  explicit CapExceeded(const std::string& what) : DomainError("cap_exceeded", what) {}
};

class InvalidComplex : public DomainError {
 public:
  explicit InvalidComplex(const std::string& what) : DomainError("invalid_complex", what) {}
};

class FieldError : public DomainError {
 public:
  explicit FieldError(const std::string& what) : DomainError("field", what) {}
};

class FieldMismatch : public DomainError {
 public:
  explicit FieldMismatch(const std::string& what) : DomainError("field_mismatch", what) {}
};

class DegreeMismatch : public DomainError {
 public:
  explicit DegreeMismatch(const std::string& what) : DomainError("degree_mismatch", what) {}
};

// The requested computation has no decision procedure for this field/input.
class Unsupported : public DomainError {
 public:
  explicit Unsupported(const std::string& what) : DomainError("unsupported", what) {}
};

class NoRule : public DomainError {
 public:
  explicit NoRule(const std::string& what) : DomainError("no_rule", what) {}
};

class HypothesisViolation : public DomainError {
 public:
  explicit HypothesisViolation(const std::string& what) : DomainError("hypothesis", what) {}
};

class NotRegular : public DomainError {
 public:
  explicit NotRegular(const std::string& what) : DomainError("not_regular", what) {}
};

// Malformed textual input (expressions, words, JSON). The CLI maps these to exit 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ehpcalc
