#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "leiblab/algebra.hpp"
#include "leiblab/checks.hpp"
#include "leiblab/inner_maps.hpp"

namespace leiblab {

/// C(x + Z_Lie, y + Z_Lie) = [x, y]_lie over the quotient basis of g/Z_Lie.
struct CommutatorTable {
  std::size_t quotient_dim;
  std::size_t gamma_dim;
  std::vector<std::size_t> representatives;
  std::vector<Vector> values;  // ambient vectors, index s * quotient_dim + t
  std::vector<Vector> coords;  // the same values in the basis of gamma2^Lie
  bool well_defined;           // unchanged when representatives move inside Z_Lie

  const Vector& at(std::size_t s, std::size_t t) const { return values[s * quotient_dim + t]; }
  const Vector& coord(std::size_t s, std::size_t t) const { return coords[s * quotient_dim + t]; }
};

CommutatorTable commutator_map(const Algebra& a, std::uint64_t seed = kDefaultSeed);

/// eta : g1/Z_Lie(g1) -> g2/Z_Lie(g2) and xi : gamma2^Lie(g1) -> gamma2^Lie(g2)
/// in the canonical quotient basis and the echelon basis of gamma2^Lie.
struct IsoclinismWitness {
  Matrix eta;
  Matrix xi;
};

/// True iff eta and xi are invertible and xi(C1(x, y)) = C2(eta x, eta y).
/// Throws ShapeMismatch when the matrices do not fit the two algebras.
bool verify_isoclinism(const Algebra& a, const Algebra& b, const IsoclinismWitness& w);

/// Witness induced by an injective map `embed` : a -> b (columns are images of the basis).
IsoclinismWitness induced_witness(const Algebra& a, const Algebra& b, const Matrix& embed);
IsoclinismWitness identity_witness(const Algebra& a);
/// Witness between a and a + abelian(k) induced by the first-summand embedding.
IsoclinismWitness padding_witness(const Algebra& a, std::size_t k);

struct IsoclinismInvariants {
  std::size_t gamma2_dim;
  std::size_t quotient_dim;  // dim g/Z_Lie
  bool nilpotent;
  std::optional<std::size_t> class_c;
  std::size_t table_rank;   // rank of C as a map g/Z_Lie -> Hom(g/Z_Lie, gamma2)
  std::size_t value_rank;   // dimension of the span of the values of C
  std::size_t id_star_dim;
  std::size_t der_c_dim;
  Certainty der_c_certainty;

  friend bool operator==(const IsoclinismInvariants&, const IsoclinismInvariants&) = default;
};

IsoclinismInvariants isoclinism_invariants(const Algebra& a, std::size_t samples = kDefaultSamples,
                                           std::uint64_t seed = kDefaultSeed);

/// Dimension statements about stem and class-2 algebras, the abelian-Der_z
/// criterion and the comparison of K(g) with gamma2^Lie.
std::vector<Check> stem_dim_audit(const Algebra& a);

}  // namespace leiblab
