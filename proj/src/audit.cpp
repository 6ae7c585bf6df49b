#include "leiblab/audit.hpp"

#include "leiblab/central_series.hpp"
#include "leiblab/errors.hpp"
#include "leiblab/isoclinism.hpp"
#include "leiblab/map_spaces.hpp"

namespace leiblab {

namespace {

std::string count_of(std::size_t bad, std::size_t total) {
  return std::to_string(total - bad) + "/" + std::to_string(total) + " pairs";
}

void add_unique(std::vector<Subspace>& out, const Subspace& s) {
  for (const auto& t : out)
    if (t == s) return;
  out.push_back(s);
}

}  // namespace

std::vector<Subspace> canonical_ideals(const Algebra& a) {
  std::vector<Subspace> out;
  add_unique(out, a.whole());
  add_unique(out, derived_ideal(a));
  add_unique(out, ann_ideal(a));
  add_unique(out, gamma2(a));
  add_unique(out, lie_center(a));
  add_unique(out, classical_centers(a).right);
  for (const auto& t : lower_lie_series(a).terms) add_unique(out, t);
  for (const auto& t : upper_lie_series(a).terms) add_unique(out, t);
  return out;
}

Algebra restrict_to_ideal(const Algebra& a, const Subspace& m) {
  if (!is_subalgebra(a, m)) throw NotClosed("subspace is not closed under the bracket");
  const auto& b = m.basis();
  std::vector<BracketEntry> entries;
  for (std::size_t s = 0; s < b.size(); ++s)
    for (std::size_t t = 0; t < b.size(); ++t) {
      Vector c = m.coordinates(a.bracket(b[s], b[t]));
      for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) entries.push_back({s, t, k, c[k]});
    }
  return Algebra::build(b.size(), a.field(), entries);
}

std::vector<Check> centroid_audit(const Algebra& a) {
  std::vector<Check> out;
  const std::size_t n = a.dim();
  const Field& f = a.field();
  const MapSpace gamma = centroid_lie(a);
  const MapSpace der = der_lie(a);
  const MapSpace dz = der_z(a);
  const auto gb = gamma.basis();
  const auto db = der.basis();

  out.push_back(verdict("centroid.der_z_intersection", "Der_z = Der^Lie ∩ Gamma^Lie", true,
                        dz == intersect(der, gamma), "dim Der_z = " + std::to_string(dz.dim())));

  std::size_t bad = 0;
  for (const auto& p : gb)
    for (const auto& q : gb)
      if (!gamma.contains(p * q)) ++bad;
  out.push_back(verdict("centroid.subalgebra", "Gamma^Lie is closed under composition", true, bad == 0,
                        count_of(bad, gb.size() * gb.size())));

  std::size_t bad_norm = 0, bad_comp = 0, bad_comm = 0;
  for (const auto& d : db)
    for (const auto& p : gb) {
      const LinearMap br = map_commutator(d, p);
      if (!gamma.contains(br)) ++bad_norm;
      if (gamma.contains(d * p) != dz.contains(p * d)) ++bad_comp;
      if (der.contains(d * p) != dz.contains(br)) ++bad_comm;
    }
  const std::size_t pairs = db.size() * gb.size();
  out.push_back(verdict("centroid.normalized_by_der", "[d, phi] in Gamma^Lie for d in Der^Lie, phi in Gamma^Lie", true,
                        bad_norm == 0, count_of(bad_norm, pairs)));
  out.push_back(verdict("centroid.composition_criterion", "d phi in Gamma^Lie iff phi d in Der_z", true, bad_comp == 0,
                        count_of(bad_comp, pairs)));
  out.push_back(verdict("centroid.commutator_criterion", "d phi in Der^Lie iff [d, phi] in Der_z", true, bad_comm == 0,
                        count_of(bad_comm, pairs)));

  const auto ideals = canonical_ideals(a);
  bool cent_inv = true;
  std::size_t perfect = 0;
  bool perfect_inv = true;
  for (const auto& m : ideals) {
    if (!is_gamma_invariant(a, lie_centralizer(a, m, a.zero_subspace()))) cent_inv = false;
    if (!m.is_zero() && is_lie_perfect_ideal(a, m)) {
      ++perfect;
      if (!is_gamma_invariant(a, m)) perfect_inv = false;
    }
  }
  out.push_back(verdict("centroid.centralizer_invariant", "C_g^Lie(m, 0) is Gamma^Lie-invariant for every ideal m",
                        true, cent_inv, std::to_string(ideals.size()) + " ideals"));
  out.push_back(verdict("centroid.perfect_invariant", "Lie-perfect ideals are Gamma^Lie-invariant", perfect > 0,
                        perfect_inv, std::to_string(perfect) + " nonzero Lie-perfect ideals"));

  // V(m) and T(m) on every nonzero invariant canonical ideal
  std::size_t tested = 0, vt_bad = 0, split_tested = 0, split_bad = 0;
  for (const auto& m : ideals) {
    if (m.is_zero() || !is_gamma_invariant(a, m)) continue;
    ++tested;
    const MapSpace v = v_of_ideal(a, m);
    const TSpace t = t_of_ideal(a, m);
    if (t.dim != v.dim() || !(t.lifted == v)) ++vt_bad;

    const Algebra sub = restrict_to_ideal(a, m);
    if (centroid_lie(sub).dim() == 1) {
      ++split_tested;
      MapSpace scalars = MapSpace::span(n, n, f, std::vector<LinearMap>{Matrix::identity(n, f)});
      MapSpace both = sum(scalars, v);
      if (!(both == gamma) || both.dim() != v.dim() + 1) ++split_bad;
    }
  }
  out.push_back(verdict("centroid.v_equals_t", "V(m) is isomorphic to T(m) for nonzero invariant ideals m",
                        tested > 0, vt_bad == 0, std::to_string(tested - vt_bad) + "/" + std::to_string(tested) +
                                                     " ideals"));
  out.push_back(verdict("centroid.scalar_split", "Gamma^Lie(m) = K Id implies Gamma^Lie(g) = K Id + V(m)",
                        split_tested > 0, split_bad == 0,
                        std::to_string(split_tested - split_bad) + "/" + std::to_string(split_tested) + " ideals"));

  {
    const Subspace g2 = gamma2(a);
    const MapSpace v = v_of_ideal(a, g2);
    const TSpace t = t_of_ideal(a, g2);
    bool holds = dz == v && t.dim == dz.dim();
    out.push_back(verdict("centroid.der_z_v_t", "characteristic 0 implies Der_z = V(gamma2^Lie) = T(gamma2^Lie)",
                          !f.is_finite(), holds,
                          std::to_string(dz.dim()) + ", " + std::to_string(v.dim()) + ", " + std::to_string(t.dim)));
  }
  return out;
}

std::vector<Check> inclusion_audit(const Algebra& a, const SampledSpace& dc) {
  std::vector<Check> out;
  const MapSpace der = der_lie(a), abs = der_abs(a), dz = der_z(a), id = id_lie(a), ids = id_star(a);
  const SampledSpace dcz = der_cz_from(a, dc);
  const std::string cert = to_string(dc.certainty);
  out.push_back(verdict("chain.der_c_in_id_star", "Der_c ⊆ ID_*", true, ids.contains(dc.space), cert));
  out.push_back(verdict("chain.id_star_in_id", "ID_* ⊆ ID", true, id.contains(ids)));
  out.push_back(verdict("chain.id_in_der_lie", "ID ⊆ Der^Lie", true, der.contains(id)));
  out.push_back(verdict("chain.der_abs_in_der_lie", "Der ⊆ Der^Lie", true, der.contains(abs)));
  out.push_back(verdict("chain.der_z_in_der_lie", "Der_z ⊆ Der^Lie", true, der.contains(dz)));
  out.push_back(verdict("chain.der_cz_in_der_c", "Der_cz ⊆ Der_c", true, dc.space.contains(dcz.space), cert));
  out.push_back(verdict("closure.der_lie", "Der^Lie is closed under commutators", true, der.closed_under_commutator()));
  out.push_back(verdict("closure.der_abs", "Der is closed under commutators", true, abs.closed_under_commutator()));
  out.push_back(verdict("closure.der_z", "Der_z is closed under commutators", true, dz.closed_under_commutator()));

  bool right = true;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!abs.contains(right_mul(a, a.basis_vector(i)))) right = false;
  out.push_back(verdict("inner.right_mul_derivation", "R_x is a derivation for every x", true, right));
  out.push_back(verdict("series.agree", "lower and upper Lie-central series give the same class", true,
                        lie_nilpotency_class(a).series_agree));
  return out;
}

std::vector<Check> isoclinism_audit(const Algebra& a, std::size_t max_padding, std::size_t samples,
                                    std::uint64_t seed) {
  std::vector<Check> out;
  out.push_back(verdict("isoclinism.commutator_well_defined", "the commutator map is well defined on g/Z_Lie", true,
                        commutator_map(a, seed).well_defined));
  out.push_back(verdict("isoclinism.identity", "the identity pair is an isoclinism", true,
                        verify_isoclinism(a, a, identity_witness(a))));
  const IsoclinismInvariants base = isoclinism_invariants(a, samples, seed);
  for (std::size_t k = 1; k <= max_padding; ++k) {
    const Algebra b = direct_sum(a, Algebra::abelian(k, a.field()));
    const std::string ks = std::to_string(k);
    out.push_back(verdict("isoclinism.padding." + ks, "g and g + abelian(" + ks + ") are isoclinic", true,
                          verify_isoclinism(a, b, padding_witness(a, k))));
    const IsoclinismInvariants other = isoclinism_invariants(b, samples, seed);
    out.push_back(verdict("isoclinism.invariants." + ks, "invariants agree between g and g + abelian(" + ks + ")",
                          true, base == other,
                          "dim ID_* " + std::to_string(base.id_star_dim) + " vs " + std::to_string(other.id_star_dim)));
  }
  return out;
}

Check direct_sum_centroid_check(const Algebra& a, const Algebra& b) {
  const CentroidDecomposition d = centroid_decomposition(a, b);
  return verdict("centroid.direct_sum", "Gamma^Lie of a direct sum splits into four blocks", true, d.verified,
                 std::to_string(d.sum_dim) + " = " + std::to_string(d.gamma1) + " + " + std::to_string(d.gamma2) +
                     " + " + std::to_string(d.c1) + " + " + std::to_string(d.c2));
}

std::vector<Check> full_audit(const Algebra& a, const AuditOptions& opts) {
  std::vector<Check> out = stem_dim_audit(a);
  auto append = [&](std::vector<Check> more) {
    for (auto& c : more) out.push_back(std::move(c));
  };
  append(almost_inner_audit(a, opts.partners, opts.samples, opts.seed));
  append(centroid_audit(a));
  append(inclusion_audit(a, der_c(a, opts.samples, opts.seed)));
  if (opts.isoclinism) append(isoclinism_audit(a, 3, opts.samples, opts.seed));
  return out;
}

}  // namespace leiblab
