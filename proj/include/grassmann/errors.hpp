#pragma once

#include <stdexcept>
#include <string>

namespace grassmann {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public AlgebraError {
 public:
  DivisionByZero() : AlgebraError("division by zero in F") {}
};

class PoleError : public AlgebraError {
 public:
  PoleError() : AlgebraError("specialization hits pole") {}
};

class ZeroLeg : public AlgebraError {
 public:
  ZeroLeg() : AlgebraError("zero in F^x") {}
};

class NonGenericConfiguration : public AlgebraError {
 public:
  explicit NonGenericConfiguration(const std::string& what = "non-generic configuration")
      : AlgebraError(what) {}
};

class DegenerateArgument : public AlgebraError {
 public:
  explicit DegenerateArgument(const std::string& what) : AlgebraError(what) {}
};

class ShapeMismatch : public AlgebraError {
 public:
  explicit ShapeMismatch(const std::string& what) : AlgebraError("shape mismatch: " + what) {}
};

class ParseError : public AlgebraError {
 public:
  explicit ParseError(const std::string& what) : AlgebraError("parse error: " + what) {}
};

}  // namespace grassmann
