#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "leiblab/algebra.hpp"
#include "leiblab/checks.hpp"
#include "leiblab/inner_maps.hpp"

namespace leiblab {

/// Canonical two-sided ideals: g, [g,g], g^ann, gamma2^Lie, Z_Lie, Z^r and
/// the terms of both Lie-central series, without repeats.
std::vector<Subspace> canonical_ideals(const Algebra& a);

/// The ideal m as an algebra in its echelon basis.
Algebra restrict_to_ideal(const Algebra& a, const Subspace& m);

/// Lie-centroid statements: Der_z = Der^Lie ∩ Gamma^Lie, closure of Gamma^Lie,
/// the composition criteria, invariant ideals, V(m) = T(m) and the scalar split.
std::vector<Check> centroid_audit(const Algebra& a);

/// der_c ⊆ ID_* ⊆ ID ⊆ Der^Lie and the other inclusions between solved spaces.
std::vector<Check> inclusion_audit(const Algebra& a, const SampledSpace& dc);

/// Identity and abelian-padding witnesses for k = 1..max_padding, and
/// agreement of the invariants along the padding.
std::vector<Check> isoclinism_audit(const Algebra& a, std::size_t max_padding = 3,
                                    std::size_t samples = kDefaultSamples, std::uint64_t seed = kDefaultSeed);

/// Gamma^Lie(A1 + A2) = Gamma^Lie(A1) + Gamma^Lie(A2) + C1 + C2.
Check direct_sum_centroid_check(const Algebra& a, const Algebra& b);

struct AuditOptions {
  std::size_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  std::vector<Algebra> partners;  // direct-sum partners for der_c additivity
  bool isoclinism = true;
};

std::vector<Check> full_audit(const Algebra& a, const AuditOptions& opts = {});

}  // namespace leiblab
