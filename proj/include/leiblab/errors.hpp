#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leiblab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Char2Field : public Error {
 public:
  Char2Field() : Error("characteristic 2 is not supported (1/2 must exist in the field)") {}
};

class InvalidField : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Raised by build_algebra when [e_i,[e_j,e_k]] != [[e_i,e_j],e_k] - [[e_i,e_k],e_j].
class LeibnizViolation : public Error {
 public:
  LeibnizViolation(std::size_t i, std::size_t j, std::size_t k, std::string lhs, std::string rhs)
      : Error("Leibniz identity fails at basis triple (" + std::to_string(i + 1) + "," +
              std::to_string(j + 1) + "," + std::to_string(k + 1) + "): lhs=" + lhs +
              " rhs=" + rhs),
        i(i), j(j), k(k), lhs(std::move(lhs)), rhs(std::move(rhs)) {}

  std::size_t i, j, k;
  std::string lhs, rhs;
};

/// A subspace expected to be a two-sided ideal is not; the witness pair names
/// the basis element u of the subspace and the generator e_g with [u,e_g] or
/// [e_g,u] outside it.
class NotAnIdeal : public Error {
 public:
  NotAnIdeal(std::size_t subspace_index, std::size_t generator, bool left_product)
      : Error(std::string("subspace is not a two-sided ideal: ") +
              (left_product ? "[e_" : "[u_") + std::to_string(left_product ? generator + 1 : subspace_index + 1) +
              (left_product ? ", u_" : ", e_") +
              std::to_string(left_product ? subspace_index + 1 : generator + 1) + "] leaves it"),
        subspace_index(subspace_index), generator(generator), left_product(left_product) {}

  std::size_t subspace_index;
  std::size_t generator;
  bool left_product;
};

class NotClosed : public Error {
 public:
  using Error::Error;
};

class NotInvariant : public Error {
 public:
  using Error::Error;
};

class TargetNotAbelian : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class SpecTooLarge : public Error {
 public:
  using Error::Error;
};

class UnknownFixture : public Error {
 public:
  explicit UnknownFixture(const std::string& name) : Error("unknown fixture: " + name) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace leiblab
