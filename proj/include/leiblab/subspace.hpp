#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "leiblab/linalg.hpp"

namespace leiblab {

class Algebra;

/// Subspace of an ambient coordinate space, stored as its reduced
/// row-echelon basis. The representation is unique, so equality is a plain
/// comparison of bases.
class Subspace {
 public:
  Subspace(const Field& f, std::size_t ambient);  // zero subspace

  static Subspace span(const Field& f, std::size_t ambient, std::span<const Vector> vectors);
  static Subspace zero(const Field& f, std::size_t ambient) { return Subspace(f, ambient); }
  static Subspace full(const Field& f, std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const Field& field() const { return field_; }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in basis(); throws DimensionMismatch when v is not in the subspace.
  Vector coordinates(const Vector& v) const;
  /// Remainder of v after reduction against the basis (zero iff v is contained).
  Vector reduce(const Vector& v) const;

  /// Indices of the lexicographically-first standard basis vectors that
  /// complete basis() to a basis of the ambient space.
  std::vector<std::size_t> complement_indices() const;
  /// Rows w with w . v = 0 for all v in the subspace (a basis of the annihilator).
  std::vector<Vector> annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& v);
/// Zassenhaus intersection.
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

/// Coordinates modulo a subspace m: the quotient basis is the cosets of the
/// standard vectors named by m.complement_indices().
class QuotientFrame {
 public:
  explicit QuotientFrame(const Subspace& m);

  std::size_t quotient_dim() const { return reps_.size(); }
  const std::vector<std::size_t>& representatives() const { return reps_; }
  /// Coordinates of x + m in the quotient basis.
  Vector project(const Vector& x) const;
  /// The element sum_t coords[t] e_{rep_t}.
  Vector lift(const Vector& coords) const;
  /// quotient_dim x ambient matrix of the projection.
  Matrix projection_matrix() const;

 private:
  Field field_;
  std::size_t ambient_;
  std::size_t m_dim_;
  std::vector<std::size_t> reps_;
  Matrix inverse_;  // inverse of [basis(m) | e_reps] as columns
};

// --- constructions inside a Leibniz algebra ---

/// Witness of a failed ideal test, as (basis index in S, generator index, left product?).
struct IdealWitness {
  std::size_t subspace_index;
  std::size_t generator;
  bool left_product;  // true: [e_g, u] escaped, false: [u, e_g] escaped
};

std::optional<IdealWitness> ideal_witness(const Algebra& a, const Subspace& s);
bool is_ideal(const Algebra& a, const Subspace& s);
/// Throws NotAnIdeal with the witness.
void require_ideal(const Algebra& a, const Subspace& s);
bool is_subalgebra(const Algebra& a, const Subspace& s);

/// Smallest two-sided ideal containing s.
Subspace ideal_closure(const Algebra& a, const Subspace& s);
/// [m, n]_Lie: ideal generated by the lie-brackets of basis(m) x basis(n).
Subspace lie_commutator_ideal(const Algebra& a, const Subspace& m, const Subspace& n);
/// Ordinary derived ideal [g, g] = span of all products.
Subspace derived_ideal(const Algebra& a);
/// Z_Lie(g) = {z : [g, z]_lie = 0 for all g}.
Subspace lie_center(const Algebra& a);
/// C_g^Lie(m, n) = {g : [g, u]_lie in n for all u in m}.
Subspace lie_centralizer(const Algebra& a, const Subspace& m, const Subspace& n);
/// N_g(m) = {g : [g, u], [u, g] in m for all u in m}.
Subspace lie_normalizer(const Algebra& a, const Subspace& m);

struct ClassicalCenters {
  Subspace left;   // Z^l, possibly not a subalgebra
  Subspace right;  // Z^r, a two-sided ideal
  Subspace center; // Z = Z^l n Z^r
  bool left_is_subalgebra;
};

ClassicalCenters classical_centers(const Algebra& a);

}  // namespace leiblab
