#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "leiblab/algebra.hpp"
#include "leiblab/linalg.hpp"
#include "leiblab/subspace.hpp"

namespace leiblab {

/// Subspace of the linear maps K^cols -> K^rows, stored through the row-major
/// flattening so that equal spaces have identical bases.
class MapSpace {
 public:
  MapSpace(std::size_t rows, std::size_t cols, Subspace flat, bool closed = false);
  static MapSpace full(std::size_t rows, std::size_t cols, const Field& f);
  static MapSpace zero(std::size_t rows, std::size_t cols, const Field& f);
  static MapSpace span(std::size_t rows, std::size_t cols, const Field& f, std::span<const LinearMap> maps);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t dim() const { return flat_.dim(); }
  const Field& field() const { return flat_.field(); }
  const Subspace& flat() const { return flat_; }
  std::vector<LinearMap> basis() const;

  bool contains(const LinearMap& m) const;
  bool contains(const MapSpace& other) const;

  /// Set only by constructions that verified closure under [d1, d2].
  bool closed_under_commutator() const { return closed_; }

  friend bool operator==(const MapSpace& a, const MapSpace& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.flat_ == b.flat_;
  }

 private:
  std::size_t rows_, cols_;
  Subspace flat_;
  bool closed_;
};

MapSpace intersect(const MapSpace& a, const MapSpace& b);
MapSpace sum(const MapSpace& a, const MapSpace& b);

/// A linear function of a map, with vector values; the solved space is its kernel.
using MapFunctional = std::function<Vector(const LinearMap&)>;

/// Kernel of all the constraints, found by evaluating each one on the unit maps.
MapSpace solve_map_space(std::size_t rows, std::size_t cols, const Field& f,
                         std::span<const MapFunctional> constraints);

/// Square maps with d(e_j) in s for every j.
MapSpace maps_into(const Subspace& s);
/// Square maps vanishing on s.
MapSpace maps_killing(const Subspace& s);

LinearMap map_commutator(const LinearMap& d1, const LinearMap& d2);
/// Checks every basis commutator and returns the space with the flag set accordingly.
MapSpace check_commutator_closure(const MapSpace& s);
/// Throws NotClosed when the flag is not set.
bool is_abelian(const MapSpace& s);
/// {z in S : [z, b] = 0 for every b in S}. Throws NotClosed.
MapSpace center_of(const MapSpace& s);

MapSpace der_lie(const Algebra& a);
MapSpace der_abs(const Algebra& a);
MapSpace der_z(const Algebra& a);
MapSpace centroid_lie(const Algebra& a);
MapSpace id_lie(const Algebra& a);
MapSpace id_star(const Algebra& a);

/// dim T(A, B) = a * b
std::size_t hom_space(std::size_t a, std::size_t b);

/// Every centroid element maps m into itself.
bool is_gamma_invariant(const Algebra& a, const Subspace& m);
/// Centroid elements killing m. Throws NotInvariant.
MapSpace v_of_ideal(const Algebra& a, const Subspace& m);

struct TSpace {
  std::size_t dim;
  MapSpace lifted;  // the maps g -> g/m -> C_g^Lie(m, 0) -> g
};
/// Maps f : g/m -> C_g^Lie(m, 0) with f[x,y]_lie = [f(x),y]_lie = [x,f(y)]_lie,
/// solved in the quotient coordinates. Throws NotInvariant.
TSpace t_of_ideal(const Algebra& a, const Subspace& m);

/// Common kernel of all homomorphisms g -> gamma2^Lie(g). Throws TargetNotAbelian.
Subspace k_intersection(const Algebra& a);

struct CentroidDecomposition {
  std::size_t sum_dim;    // Gamma^Lie(A1 + A2), solved directly
  std::size_t gamma1, gamma2, c1, c2;
  bool verified;          // dimensions add up and the blocks span the whole space
};
/// C1 = maps A1 -> Z_Lie(A2) killing gamma2^Lie(A1), C2 likewise. Throws FieldMismatch.
CentroidDecomposition centroid_decomposition(const Algebra& a1, const Algebra& a2);

}  // namespace leiblab
