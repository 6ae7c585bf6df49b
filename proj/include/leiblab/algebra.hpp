#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "leiblab/linalg.hpp"
#include "leiblab/subspace.hpp"

namespace leiblab {

/// One sparse structure constant: [e_i, e_j] gains coeff * e_k (0-based).
struct BracketEntry {
  std::size_t i, j, k;
  Scalar coeff;
};

/// Finite-dimensional Leibniz algebra given by structure constants
/// [e_i, e_j] = sum_k c[i][j][k] e_k, satisfying
///   [x,[y,z]] = [[x,y],z] - [[x,z],y].
/// Instances are immutable and always validated.
class Algebra {
 public:
  /// Accumulates the sparse entries (repeated (i,j,k) add up) and validates
  /// the Leibniz identity on every basis triple.
  static Algebra build(std::size_t n, const Field& field, std::span<const BracketEntry> brackets,
                       std::vector<std::string> labels = {});
  /// Dense form; `tensor` has n^3 entries indexed (i*n + j)*n + k.
  static Algebra from_tensor(std::size_t n, const Field& field, std::vector<Scalar> tensor,
                             std::vector<std::string> labels = {});
  static Algebra abelian(std::size_t n, const Field& field);

  std::size_t dim() const { return n_; }
  const Field& field() const { return field_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Scalar& structure(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }
  const std::vector<Scalar>& tensor() const { return c_; }
  /// Nonzero structure constants in (i, j, k) order.
  std::vector<BracketEntry> sparse() const;

  Vector basis_vector(std::size_t i) const { return unit_vector(field_, n_, i); }
  /// [e_i, e_j]
  Vector basis_bracket(std::size_t i, std::size_t j) const;
  /// [e_i, e_j] + [e_j, e_i]
  Vector basis_lie_bracket(std::size_t i, std::size_t j) const;

  Vector bracket(const Vector& x, const Vector& y) const;
  Vector lie_bracket(const Vector& x, const Vector& y) const;

  /// True when every lie-bracket vanishes, i.e. the algebra is a Lie algebra.
  bool is_lie() const;
  bool is_abelian() const;

  Subspace zero_subspace() const { return Subspace::zero(field_, n_); }
  Subspace whole() const { return Subspace::full(field_, n_); }

  /// Same structure constants with all coefficients reduced into `target`.
  Algebra reduce_to(const Field& target) const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.n_ == b.n_ && a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  Algebra(std::size_t n, const Field& f, std::vector<Scalar> c, std::vector<std::string> labels);
  void validate() const;

  std::size_t n_;
  Field field_;
  std::vector<Scalar> c_;
  std::vector<std::string> labels_;
};

/// g^ann = span{[x, x]}, computed from the polarized products then ideal-closed.
Subspace ann_ideal(const Algebra& a);

struct Quotient {
  Algebra algebra;
  LinearMap projection;                  // quotient_dim x n
  std::vector<std::size_t> representatives;  // basis index of each coset representative
};

/// g / m for a two-sided ideal m (throws NotAnIdeal otherwise).
Quotient quotient_algebra(const Algebra& a, const Subspace& m);
/// g_Lie = g / g^ann.
Quotient liezation(const Algebra& a);
/// Block-diagonal sum; throws FieldMismatch for different fields.
Algebra direct_sum(const Algebra& a, const Algebra& b);

}  // namespace leiblab
