#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leiblab/scalar.hpp"

namespace leiblab {

/// Coordinates of an element in a fixed basis.
using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& v);
/// v += s * w
void axpy(Vector& v, const Scalar& s, const Vector& w);
std::string to_string(const Vector& v);

/// Dense row-major matrix. As a linear map it acts on column vectors:
/// the image of e_j is column j.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Field& f);
  static Matrix identity(std::size_t n, const Field& f);
  static Matrix from_columns(std::size_t rows, std::span<const Vector> cols, const Field& f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  bool is_zero() const;

  /// Row-major flattening, the coordinate vector in the space of matrices.
  const Vector& flat() const { return data_; }
  static Matrix from_flat(std::size_t rows, std::size_t cols, const Vector& flat, const Field& f);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Field field_ = Field::rationals();
  Vector data_;
};

using LinearMap = Matrix;

/// Maintains a set of rows in reduced row-echelon form and accepts new rows
/// one at a time. Used both as a constraint accumulator and as the backing
/// store of canonical subspaces.
class RowReducer {
 public:
  RowReducer(std::size_t width, const Field& f);

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  const Field& field() const { return field_; }

  /// Reduces v against the current rows; zero iff v lies in their span.
  Vector reduce(Vector v) const;
  /// Adds v; returns true when the rank grew.
  bool add(Vector v);

  /// Rows sorted by pivot column, fully reduced.
  std::vector<Vector> rows() const;
  std::vector<std::size_t> pivots() const;

  /// Basis of {x : r . x = 0 for every row r}, canonical (reduced echelon).
  std::vector<Vector> nullspace() const;

 private:
  std::size_t width_;
  Field field_;
  // kept sorted by pivot
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Reduced row-echelon basis of the row space.
std::vector<Vector> row_echelon_basis(std::span<const Vector> rows, std::size_t width, const Field& f);
/// Basis of the right nullspace {x : M x = 0}.
std::vector<Vector> nullspace(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Inverse of a square matrix; std::nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);
/// Solves M x = b; std::nullopt when inconsistent. Free variables are zero.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Every nonzero vector of GF(p)^n with leading coordinate 1, in lexicographic order of
/// the leading position then the tail.
std::vector<Vector> projective_points(const Field& f, std::size_t n);

}  // namespace leiblab
