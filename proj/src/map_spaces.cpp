#include "leiblab/map_spaces.hpp"

#include "leiblab/central_series.hpp"
#include "leiblab/errors.hpp"

namespace leiblab {

namespace {

MapSpace from_rows(std::size_t rows, std::size_t cols, const Field& f, const std::vector<Vector>& eqs) {
  RowReducer rr(rows * cols, f);
  for (const auto& e : eqs) rr.add(e);
  auto ker = rr.nullspace();
  return MapSpace(rows, cols, Subspace::span(f, rows * cols, ker));
}

// Maps K^cols -> K^rows with every image in s (s lives in K^rows).
MapSpace rect_into(const Subspace& s, std::size_t cols) {
  const std::size_t rows = s.ambient_dim();
  std::vector<Vector> eqs;
  for (const auto& w : s.annihilator())
    for (std::size_t c = 0; c < cols; ++c) {
      Vector e = zero_vector(s.field(), rows * cols);
      for (std::size_t r = 0; r < rows; ++r) e[r * cols + c] = w[r];
      eqs.push_back(std::move(e));
    }
  return from_rows(rows, cols, s.field(), eqs);
}

// Maps K^cols -> K^rows vanishing on s (s lives in K^cols).
MapSpace rect_killing(const Subspace& s, std::size_t rows) {
  const std::size_t cols = s.ambient_dim();
  std::vector<Vector> eqs;
  for (const auto& v : s.basis())
    for (std::size_t r = 0; r < rows; ++r) {
      Vector e = zero_vector(s.field(), rows * cols);
      for (std::size_t c = 0; c < cols; ++c) e[r * cols + c] = v[c];
      eqs.push_back(std::move(e));
    }
  return from_rows(rows, cols, s.field(), eqs);
}

Vector concat(Vector a, const Vector& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Copies `block` into `m` with its top-left corner at (r0, c0).
void place(Matrix& m, const Matrix& block, std::size_t r0, std::size_t c0) {
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c) m(r0 + r, c0 + c) = block(r, c);
}

}  // namespace

MapSpace::MapSpace(std::size_t rows, std::size_t cols, Subspace flat, bool closed)
    : rows_(rows), cols_(cols), flat_(std::move(flat)), closed_(closed) {
  if (flat_.ambient_dim() != rows * cols) throw DimensionMismatch("map space shape differs from its flattening");
}

MapSpace MapSpace::full(std::size_t rows, std::size_t cols, const Field& f) {
  return MapSpace(rows, cols, Subspace::full(f, rows * cols), rows == cols);
}

MapSpace MapSpace::zero(std::size_t rows, std::size_t cols, const Field& f) {
  return MapSpace(rows, cols, Subspace::zero(f, rows * cols), rows == cols);
}

MapSpace MapSpace::span(std::size_t rows, std::size_t cols, const Field& f, std::span<const LinearMap> maps) {
  std::vector<Vector> flats;
  for (const auto& m : maps) {
    if (m.rows() != rows || m.cols() != cols) throw DimensionMismatch("map shape differs from the space");
    flats.push_back(m.flat());
  }
  return MapSpace(rows, cols, Subspace::span(f, rows * cols, flats));
}

std::vector<LinearMap> MapSpace::basis() const {
  std::vector<LinearMap> out;
  for (const auto& v : flat_.basis()) out.push_back(Matrix::from_flat(rows_, cols_, v, field()));
  return out;
}

bool MapSpace::contains(const LinearMap& m) const {
  if (m.rows() != rows_ || m.cols() != cols_) throw DimensionMismatch("map shape differs from the space");
  return flat_.contains(m.flat());
}

bool MapSpace::contains(const MapSpace& other) const {
  if (other.rows_ != rows_ || other.cols_ != cols_) throw DimensionMismatch("map spaces have different shapes");
  return flat_.contains(other.flat_);
}

MapSpace intersect(const MapSpace& a, const MapSpace& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("map spaces have different shapes");
  return MapSpace(a.rows(), a.cols(), subspace_intersect(a.flat(), b.flat()));
}

MapSpace sum(const MapSpace& a, const MapSpace& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("map spaces have different shapes");
  return MapSpace(a.rows(), a.cols(), subspace_sum(a.flat(), b.flat()));
}

MapSpace solve_map_space(std::size_t rows, std::size_t cols, const Field& f,
                         std::span<const MapFunctional> constraints) {
  const std::size_t width = rows * cols;
  std::vector<Vector> eqs;
  for (const auto& c : constraints) {
    // column u of the constraint matrix is its value on the unit map E_u
    std::vector<Vector> values;
    values.reserve(width);
    for (std::size_t u = 0; u < width; ++u) {
      Matrix e(rows, cols, f);
      e(u / cols, u % cols) = f.one();
      values.push_back(c(e));
    }
    const std::size_t out = width ? values[0].size() : 0;
    for (std::size_t l = 0; l < out; ++l) {
      Vector row = zero_vector(f, width);
      for (std::size_t u = 0; u < width; ++u) row[u] = values[u][l];
      eqs.push_back(std::move(row));
    }
  }
  return from_rows(rows, cols, f, eqs);
}

MapSpace maps_into(const Subspace& s) { return rect_into(s, s.ambient_dim()); }
MapSpace maps_killing(const Subspace& s) { return rect_killing(s, s.ambient_dim()); }

LinearMap map_commutator(const LinearMap& d1, const LinearMap& d2) { return d1 * d2 - d2 * d1; }

MapSpace check_commutator_closure(const MapSpace& s) {
  auto b = s.basis();
  bool closed = s.rows() == s.cols();
  for (std::size_t k = 0; closed && k < b.size(); ++k)
    for (std::size_t l = k + 1; closed && l < b.size(); ++l)
      if (!s.contains(map_commutator(b[k], b[l]))) closed = false;
  return MapSpace(s.rows(), s.cols(), s.flat(), closed);
}

bool is_abelian(const MapSpace& s) {
  if (!s.closed_under_commutator()) throw NotClosed("map space is not known to be closed under commutator");
  auto b = s.basis();
  for (std::size_t k = 0; k < b.size(); ++k)
    for (std::size_t l = k + 1; l < b.size(); ++l)
      if (!map_commutator(b[k], b[l]).is_zero()) return false;
  return true;
}

MapSpace center_of(const MapSpace& s) {
  if (!s.closed_under_commutator()) throw NotClosed("map space is not known to be closed under commutator");
  auto b = s.basis();
  const std::size_t k = b.size(), width = s.rows() * s.cols();
  // unknown coefficients c with sum_k c_k [b_k, b_l] = 0 for every l
  RowReducer rr(k, s.field());
  for (std::size_t l = 0; l < k; ++l) {
    std::vector<Vector> comm;
    for (std::size_t j = 0; j < k; ++j) comm.push_back(map_commutator(b[j], b[l]).flat());
    for (std::size_t t = 0; t < width; ++t) {
      Vector row = zero_vector(s.field(), k);
      for (std::size_t j = 0; j < k; ++j) row[j] = comm[j][t];
      rr.add(std::move(row));
    }
  }
  std::vector<Vector> flats;
  for (const auto& c : rr.nullspace()) {
    Vector f = zero_vector(s.field(), width);
    for (std::size_t j = 0; j < k; ++j) axpy(f, c[j], b[j].flat());
    flats.push_back(std::move(f));
  }
  return MapSpace(s.rows(), s.cols(), Subspace::span(s.field(), width, flats), true);
}

MapSpace der_lie(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<MapFunctional> cs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      cs.push_back([&a, i, j](const LinearMap& d) {
        Vector ei = a.basis_vector(i), ej = a.basis_vector(j);
        Vector v = d.apply(a.basis_lie_bracket(i, j));
        v = sub(v, a.lie_bracket(d.column(i), ej));
        return sub(v, a.lie_bracket(ei, d.column(j)));
      });
  return check_commutator_closure(solve_map_space(n, n, a.field(), cs));
}

MapSpace der_abs(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<MapFunctional> cs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      cs.push_back([&a, i, j](const LinearMap& d) {
        Vector ei = a.basis_vector(i), ej = a.basis_vector(j);
        Vector v = d.apply(a.basis_bracket(i, j));
        v = sub(v, a.bracket(d.column(i), ej));
        return sub(v, a.bracket(ei, d.column(j)));
      });
  return check_commutator_closure(solve_map_space(n, n, a.field(), cs));
}

MapSpace der_z(const Algebra& a) {
  return check_commutator_closure(intersect(der_lie(a), maps_into(lie_center(a))));
}

MapSpace centroid_lie(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<MapFunctional> cs;
  // both equalities are symmetric under swapping the pair, so i <= j suffices
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      cs.push_back([&a, i, j](const LinearMap& d) {
        Vector ei = a.basis_vector(i), ej = a.basis_vector(j);
        Vector lhs = d.apply(a.basis_lie_bracket(i, j));
        return concat(sub(lhs, a.lie_bracket(d.column(i), ej)), sub(lhs, a.lie_bracket(ei, d.column(j))));
      });
  return solve_map_space(n, n, a.field(), cs);
}

MapSpace id_lie(const Algebra& a) {
  return check_commutator_closure(intersect(der_lie(a), maps_into(gamma2(a))));
}

MapSpace id_star(const Algebra& a) {
  return check_commutator_closure(intersect(id_lie(a), maps_killing(lie_center(a))));
}

std::size_t hom_space(std::size_t a, std::size_t b) { return a * b; }

bool is_gamma_invariant(const Algebra& a, const Subspace& m) {
  for (const auto& phi : centroid_lie(a).basis())
    for (const auto& u : m.basis())
      if (!m.contains(phi.apply(u))) return false;
  return true;
}

MapSpace v_of_ideal(const Algebra& a, const Subspace& m) {
  require_ideal(a, m);
  MapSpace gamma = centroid_lie(a);
  for (const auto& phi : gamma.basis())
    for (const auto& u : m.basis())
      if (!m.contains(phi.apply(u))) throw NotInvariant("a centroid element moves the ideal out of itself");
  return intersect(gamma, maps_killing(m));
}

TSpace t_of_ideal(const Algebra& a, const Subspace& m) {
  require_ideal(a, m);
  if (!is_gamma_invariant(a, m)) throw NotInvariant("a centroid element moves the ideal out of itself");
  const Field& f = a.field();
  const std::size_t n = a.dim();
  QuotientFrame frame(m);
  const auto& reps = frame.representatives();
  const std::size_t q = reps.size();
  const Subspace c = lie_centralizer(a, m, a.zero_subspace());
  const std::size_t r = c.dim();
  const Matrix iota = Matrix::from_columns(n, c.basis(), f);
  const Matrix pi = frame.projection_matrix();

  // unknown F : K^q -> K^r, column t holds the C-coordinates of f(rep_t)
  std::vector<MapFunctional> cs;
  for (std::size_t s = 0; s < q; ++s)
    for (std::size_t t = s; t < q; ++t)
      cs.push_back([&, s, t](const LinearMap& F) {
        Vector xs = a.basis_vector(reps[s]), xt = a.basis_vector(reps[t]);
        Vector lhs = iota.apply(F.apply(pi.apply(a.lie_bracket(xs, xt))));
        Vector fs = iota.apply(F.column(s)), ft = iota.apply(F.column(t));
        return concat(sub(lhs, a.lie_bracket(fs, xt)), sub(lhs, a.lie_bracket(xs, ft)));
      });
  MapSpace quotient_maps = solve_map_space(r, q, f, cs);

  std::vector<LinearMap> lifted;
  for (const auto& F : quotient_maps.basis()) lifted.push_back(iota * F * pi);
  return TSpace{quotient_maps.dim(), MapSpace::span(n, n, f, lifted)};
}

Subspace k_intersection(const Algebra& a) {
  const Subspace g2 = gamma2(a);
  for (const auto& u : g2.basis())
    for (const auto& v : g2.basis())
      if (!is_zero(a.bracket(u, v))) throw TargetNotAbelian("gamma2^Lie is not an abelian subalgebra");
  MapSpace homs = intersect(maps_into(g2), maps_killing(derived_ideal(a)));
  RowReducer rr(a.dim(), a.field());
  for (const auto& h : homs.basis())
    for (std::size_t r = 0; r < h.rows(); ++r) rr.add(h.row(r));
  auto ker = rr.nullspace();
  return Subspace::span(a.field(), a.dim(), ker);
}

CentroidDecomposition centroid_decomposition(const Algebra& a1, const Algebra& a2) {
  const Algebra s = direct_sum(a1, a2);
  const std::size_t n1 = a1.dim(), n2 = a2.dim(), n = s.dim();
  const Field& f = s.field();

  MapSpace whole = centroid_lie(s);
  MapSpace g1 = centroid_lie(a1), g2 = centroid_lie(a2);
  // C1 : A1 -> Z_Lie(A2), C2 : A2 -> Z_Lie(A1)
  MapSpace c1 = intersect(rect_into(lie_center(a2), n1), rect_killing(gamma2(a1), n2));
  MapSpace c2 = intersect(rect_into(lie_center(a1), n2), rect_killing(gamma2(a2), n1));

  std::vector<LinearMap> blocks;
  auto embed = [&](const MapSpace& sp, std::size_t r0, std::size_t c0) {
    for (const auto& b : sp.basis()) {
      Matrix m(n, n, f);
      place(m, b, r0, c0);
      blocks.push_back(std::move(m));
    }
  };
  embed(g1, 0, 0);
  embed(g2, n1, n1);
  embed(c1, n1, 0);
  embed(c2, 0, n1);

  CentroidDecomposition out{whole.dim(), g1.dim(), g2.dim(), c1.dim(), c2.dim(), false};
  bool dims = out.sum_dim == out.gamma1 + out.gamma2 + out.c1 + out.c2;
  out.verified = dims && MapSpace::span(n, n, f, blocks) == whole;
  return out;
}

}  // namespace leiblab
