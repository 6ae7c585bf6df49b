#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "leiblab/algebra.hpp"
#include "leiblab/checks.hpp"
#include "leiblab/map_spaces.hpp"

namespace leiblab {

/// R_x(y) = [y, x]
LinearMap right_mul(const Algebra& a, const Vector& x);
/// L_x(y) = [x, y]
LinearMap left_mul(const Algebra& a, const Vector& x);

struct InnerFamily {
  std::vector<LinearMap> r_basis;  // R_{e_i}
  std::vector<LinearMap> l_basis;  // L_{e_i}
  MapSpace rl_space;               // span of R_{e_i} + L_{e_i}
};

InnerFamily inner_family(const Algebra& a);
/// R(s) = span{R_x : x in s}
MapSpace right_space(const Algebra& a, const Subspace& s);

enum class Certainty { exact, monte_carlo };
std::string to_string(Certainty c);

constexpr std::size_t kDefaultSamples = 64;
constexpr std::uint64_t kDefaultSeed = 1;

struct SampledSpace {
  MapSpace space;
  Certainty certainty;
  std::size_t samples;           // sample points imposed
  std::size_t stabilized_after;  // samples after which the space stopped shrinking
};

/// Almost inner Lie-derivations: d with d(x) in [x, g]_lie for every x.
/// Exact over GF(p) when p^n <= 10^6 (every projective point is imposed);
/// otherwise the basis, pairwise sums, structural subspace bases and
/// `samples` seeded random points give a space containing the true one.
SampledSpace der_c(const Algebra& a, std::size_t samples = kDefaultSamples, std::uint64_t seed = kDefaultSeed);
/// der_c intersected with R(Z^l) + Hom(g, Z_Lie).
SampledSpace der_cz(const Algebra& a, std::size_t samples = kDefaultSamples, std::uint64_t seed = kDefaultSeed);
/// der_cz computed from an already solved der_c.
SampledSpace der_cz_from(const Algebra& a, const SampledSpace& dc);

/// Structural checks on almost inner derivations: image, kernel, preserved
/// ideals, nilpotence. The direct-sum check runs once per partner.
std::vector<Check> almost_inner_audit(const Algebra& a, const std::vector<Algebra>& partners = {},
                                      std::size_t samples = kDefaultSamples, std::uint64_t seed = kDefaultSeed);

}  // namespace leiblab
