#include "leiblab/inner_maps.hpp"

#include <random>

#include "leiblab/central_series.hpp"
#include "leiblab/errors.hpp"

namespace leiblab {

namespace {

constexpr std::size_t kExhaustiveLimit = 1000000;

// Adds the rows saying d(x) lies in [x, g]_lie.
void impose(RowReducer& rr, const Algebra& a, const Vector& x, bool& grew) {
  const std::size_t n = a.dim();
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(a.lie_bracket(x, a.basis_vector(j)));
  Subspace image = Subspace::span(a.field(), n, cols);
  for (const auto& w : image.annihilator()) {
    Vector row = zero_vector(a.field(), n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!x[j].is_zero()) row[i * n + j] = w[i] * x[j];
    }
    if (rr.add(std::move(row))) grew = true;
  }
}

std::size_t power_of(std::uint32_t p, std::size_t n, std::size_t cap) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < n; ++i) {
    v *= p;
    if (v > cap) return cap + 1;
  }
  return v;
}

Matrix block_diag(const Matrix& a, const Matrix& b, const Field& f) {
  const std::size_t n = a.rows() + b.rows();
  Matrix m(n, n, f);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

// Lower central series of the Lie algebra of maps generated by `s` reaches zero.
bool map_algebra_nilpotent(const MapSpace& s) {
  const std::size_t n = s.rows();
  const auto gens = s.basis();
  MapSpace term = s;
  for (std::size_t step = 0; step <= n * n + 1; ++step) {
    if (term.dim() == 0) return true;
    std::vector<LinearMap> next;
    for (const auto& t : term.basis())
      for (const auto& g : gens) next.push_back(map_commutator(t, g));
    term = MapSpace::span(n, n, s.field(), next);
  }
  return term.dim() == 0;
}

}  // namespace

LinearMap right_mul(const Algebra& a, const Vector& x) {
  if (x.size() != a.dim()) throw DimensionMismatch("operand has wrong dimension");
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < a.dim(); ++j) cols.push_back(a.bracket(a.basis_vector(j), x));
  return Matrix::from_columns(a.dim(), cols, a.field());
}

LinearMap left_mul(const Algebra& a, const Vector& x) {
  if (x.size() != a.dim()) throw DimensionMismatch("operand has wrong dimension");
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < a.dim(); ++j) cols.push_back(a.bracket(x, a.basis_vector(j)));
  return Matrix::from_columns(a.dim(), cols, a.field());
}

InnerFamily inner_family(const Algebra& a) {
  InnerFamily fam{{}, {}, MapSpace::zero(a.dim(), a.dim(), a.field())};
  std::vector<LinearMap> rl;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    fam.r_basis.push_back(right_mul(a, a.basis_vector(i)));
    fam.l_basis.push_back(left_mul(a, a.basis_vector(i)));
    rl.push_back(fam.r_basis.back() + fam.l_basis.back());
  }
  fam.rl_space = MapSpace::span(a.dim(), a.dim(), a.field(), rl);
  return fam;
}

MapSpace right_space(const Algebra& a, const Subspace& s) {
  std::vector<LinearMap> maps;
  for (const auto& x : s.basis()) maps.push_back(right_mul(a, x));
  return MapSpace::span(a.dim(), a.dim(), a.field(), maps);
}

std::string to_string(Certainty c) { return c == Certainty::exact ? "exact" : "monte_carlo"; }

SampledSpace der_c(const Algebra& a, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  RowReducer rr(n * n, f);
  for (const auto& w : der_lie(a).flat().annihilator()) rr.add(w);

  std::size_t used = 0, last_growth = 0;
  auto take = [&](const Vector& x) {
    bool grew = false;
    impose(rr, a, x, grew);
    ++used;
    if (grew) last_growth = used;
  };

  Certainty certainty = Certainty::monte_carlo;
  if (f.is_finite() && power_of(f.characteristic(), n, kExhaustiveLimit) <= kExhaustiveLimit) {
    // scaling x does not change the constraint, so projective points cover all of g
    for (const auto& x : projective_points(f, n)) take(x);
    certainty = Certainty::exact;
  } else {
    for (std::size_t i = 0; i < n; ++i) take(a.basis_vector(i));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) take(add(a.basis_vector(i), a.basis_vector(j)));
    auto centers = classical_centers(a);
    for (const auto& s : {lie_center(a), gamma2(a), centers.left, centers.right, derived_ideal(a)})
      for (const auto& x : s.basis()) take(x);
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < samples; ++k) {
      Vector x = zero_vector(f, n);
      for (auto& c : x) c = f.from_int(static_cast<std::int64_t>(rng() % 19) - 9);
      take(x);
    }
  }
  auto ker = rr.nullspace();
  MapSpace space(n, n, Subspace::span(f, n * n, ker));
  return SampledSpace{check_commutator_closure(space), certainty, used, last_growth};
}

SampledSpace der_cz_from(const Algebra& a, const SampledSpace& dc) {
  MapSpace allowed = sum(right_space(a, classical_centers(a).left), maps_into(lie_center(a)));
  MapSpace s = check_commutator_closure(intersect(dc.space, allowed));
  return SampledSpace{s, dc.certainty, dc.samples, dc.stabilized_after};
}

SampledSpace der_cz(const Algebra& a, std::size_t samples, std::uint64_t seed) {
  return der_cz_from(a, der_c(a, samples, seed));
}

std::vector<Check> almost_inner_audit(const Algebra& a, const std::vector<Algebra>& partners, std::size_t samples,
                                 std::uint64_t seed) {
  std::vector<Check> out;
  const std::size_t n = a.dim();
  const Field& f = a.field();
  const SampledSpace dc = der_c(a, samples, seed);
  const SampledSpace dcz = der_cz_from(a, dc);
  const auto cert = " (" + to_string(dc.certainty) + ")";
  const Subspace z = lie_center(a), g2 = gamma2(a);
  const auto centers = classical_centers(a);
  const auto cls = lie_nilpotency_class(a);
  const auto basis = dc.space.basis();

  bool image = maps_into(g2).contains(dc.space);
  bool kills = maps_killing(z).contains(dc.space);
  std::vector<Subspace> ideals{g2, z, centers.right, derived_ideal(a), ann_ideal(a)};
  for (auto& t : lower_lie_series(a).terms) ideals.push_back(t);
  for (auto& t : upper_lie_series(a).terms) ideals.push_back(t);
  bool preserves = true;
  for (const auto& d : basis)
    for (const auto& m : ideals)
      for (const auto& u : m.basis())
        if (!m.contains(d.apply(u))) preserves = false;
  out.push_back(verdict("der_c.image", "almost inner derivations map g into gamma2^Lie", true, image, to_string(dc.certainty)));
  out.push_back(verdict("der_c.kills_center", "almost inner derivations kill Z_Lie", true, kills, to_string(dc.certainty)));
  out.push_back(verdict("der_c.preserves_ideals", "almost inner derivations preserve the canonical two-sided ideals", true,
                        preserves, std::to_string(ideals.size()) + " ideals" + cert));

  // solve d(u) = [u, x] on gamma2 for x in Z^l
  bool restricts = true;
  const auto& zl = centers.left.basis();
  for (const auto& d : dcz.space.basis()) {
    const std::size_t k = zl.size();
    Matrix sys(g2.dim() * n, k, f);
    Vector rhs = zero_vector(f, g2.dim() * n);
    for (std::size_t u = 0; u < g2.dim(); ++u) {
      Vector du = d.apply(g2.basis()[u]);
      for (std::size_t t = 0; t < k; ++t) {
        Vector r = a.bracket(g2.basis()[u], zl[t]);
        for (std::size_t i = 0; i < n; ++i) sys(u * n + i, t) = r[i];
      }
      for (std::size_t i = 0; i < n; ++i) rhs[u * n + i] = du[i];
    }
    if (!solve(sys, rhs)) restricts = false;
  }
  out.push_back(verdict("der_cz.restricts", "central almost inner derivations agree with some R_x, x in Z^l, on gamma2^Lie", true,
                        restricts, to_string(dc.certainty)));

  bool two_step = cls.nilpotent && *cls.class_c <= 2;
  out.push_back(verdict("der_c.two_step_central", "2-step Lie-nilpotent implies Der_cz = Der_c", two_step, dcz.space == dc.space,
                        "dim Der_c = " + std::to_string(dc.space.dim()) + ", dim Der_cz = " +
                            std::to_string(dcz.space.dim()) + cert));

  bool zero_center = z.is_zero();
  bool d_holds = right_space(a, a.whole()).contains(dcz.space) &&
                 dcz.space.contains(right_space(a, centers.left));
  out.push_back(verdict("der_cz.centerless", "Z_Lie = 0 implies Der_cz in R(g) and R(Z^l) in Der_cz", zero_center, d_holds,
                        to_string(dc.certainty)));

  bool powers = true;
  if (cls.nilpotent) {
    for (const auto& d : basis) {
      Matrix p = Matrix::identity(n, f);
      for (std::size_t i = 0; i < *cls.class_c; ++i) p = p * d;
      if (!p.is_zero()) powers = false;
    }
  }
  bool nil_alg = cls.nilpotent && map_algebra_nilpotent(dc.space);
  out.push_back(verdict("der_c.nilpotent_powers", "Lie-nilpotent of class c implies d^c = 0 on Der_c", cls.nilpotent, powers,
                        cls.nilpotent ? "c = " + std::to_string(*cls.class_c) + cert : "not Lie-nilpotent"));
  out.push_back(verdict("der_c.nilpotent_algebra", "Lie-nilpotent implies Der_c generates a nilpotent Lie algebra of maps",
                        cls.nilpotent, nil_alg, to_string(dc.certainty)));

  for (const auto& b : partners) {
    std::string id = "der_c.direct_sum." + std::to_string(b.dim());
    if (!(b.field() == f)) {
      out.push_back(verdict(id, "Der_c is additive over direct sums", false, false, "partner over another field"));
      continue;
    }
    const SampledSpace db = der_c(b, samples, seed);
    const SampledSpace ds = der_c(direct_sum(a, b), samples, seed);
    std::vector<LinearMap> blocks;
    for (const auto& d : dc.space.basis()) blocks.push_back(block_diag(d, Matrix(b.dim(), b.dim(), f), f));
    for (const auto& d : db.space.basis()) blocks.push_back(block_diag(Matrix(n, n, f), d, f));
    const std::size_t m = n + b.dim();
    bool equal = MapSpace::span(m, m, f, blocks) == ds.space;
    bool exact = dc.certainty == Certainty::exact && db.certainty == Certainty::exact &&
                 ds.certainty == Certainty::exact;
    out.push_back(verdict(id, "Der_c is additive over direct sums", true, equal,
                          std::to_string(ds.space.dim()) + " = " + std::to_string(dc.space.dim()) + " + " +
                              std::to_string(db.space.dim()) + (exact ? " (exact)" : " (monte_carlo)")));
  }
  return out;
}

}  // namespace leiblab
