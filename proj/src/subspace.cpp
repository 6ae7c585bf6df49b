#include "leiblab/subspace.hpp"

#include <deque>

#include "leiblab/algebra.hpp"
#include "leiblab/errors.hpp"

namespace leiblab {

namespace {

// Subspace of solutions x of r . x = 0 for every row r.
Subspace kernel_of_rows(const Field& f, std::size_t n, const std::vector<Vector>& rows) {
  RowReducer rr(n, f);
  for (const auto& r : rows) rr.add(r);
  auto ker = rr.nullspace();
  return Subspace::span(f, n, ker);
}

// Rows w . M for each annihilator row w of `target`, M given by its columns.
void push_escape_rows(std::vector<Vector>& rows, const std::vector<Vector>& ann,
                      const std::vector<Vector>& columns, const Field& f) {
  for (const auto& w : ann) {
    Vector row = zero_vector(f, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      Scalar s = f.zero();
      for (std::size_t k = 0; k < w.size(); ++k)
        if (!w[k].is_zero() && !columns[j][k].is_zero()) s += w[k] * columns[j][k];
      row[j] = s;
    }
    rows.push_back(std::move(row));
  }
}

void check_ambient(const Algebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw DimensionMismatch("subspace lives in a different ambient space");
}

}  // namespace

Subspace::Subspace(const Field& f, std::size_t ambient) : field_(f), ambient_(ambient) {}

Subspace Subspace::span(const Field& f, std::size_t ambient, std::span<const Vector> vectors) {
  RowReducer rr(ambient, f);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw DimensionMismatch("vector length differs from ambient dimension");
    rr.add(v);
  }
  Subspace s(f, ambient);
  s.basis_ = rr.rows();
  s.pivots_ = rr.pivots();
  return s;
}

Subspace Subspace::full(const Field& f, std::size_t ambient) {
  std::vector<Vector> e;
  for (std::size_t i = 0; i < ambient; ++i) e.push_back(unit_vector(f, ambient, i));
  return span(f, ambient, e);
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
  Vector r = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar c = r[pivots_[k]];
    if (!c.is_zero()) axpy(r, -c, basis_[k]);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return leiblab::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces live in different ambient spaces");
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw DimensionMismatch("vector is not in the subspace");
  Vector c;
  c.reserve(basis_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

std::vector<std::size_t> Subspace::complement_indices() const {
  RowReducer rr(ambient_, field_);
  for (const auto& b : basis_) rr.add(b);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient_ && rr.rank() < ambient_; ++i)
    if (rr.add(unit_vector(field_, ambient_, i))) out.push_back(i);
  return out;
}

std::vector<Vector> Subspace::annihilator() const {
  RowReducer rr(ambient_, field_);
  for (const auto& b : basis_) rr.add(b);
  return rr.nullspace();
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("subspaces live in different ambient spaces");
  std::vector<Vector> all = u.basis();
  all.insert(all.end(), v.basis().begin(), v.basis().end());
  return Subspace::span(u.field(), u.ambient_dim(), all);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("subspaces live in different ambient spaces");
  const std::size_t n = u.ambient_dim();
  const Field& f = u.field();
  // rows (x | x) for x in U and (y | 0) for y in V; the rows with a zero left
  // half span U n V in their right half
  RowReducer rr(2 * n, f);
  for (const auto& x : u.basis()) {
    Vector row = x;
    row.insert(row.end(), x.begin(), x.end());
    rr.add(std::move(row));
  }
  for (const auto& y : v.basis()) {
    Vector row = y;
    Vector z = zero_vector(f, n);
    row.insert(row.end(), z.begin(), z.end());
    rr.add(std::move(row));
  }
  std::vector<Vector> out;
  auto rows = rr.rows();
  auto piv = rr.pivots();
  for (std::size_t k = 0; k < rows.size(); ++k)
    if (piv[k] >= n) out.emplace_back(rows[k].begin() + static_cast<std::ptrdiff_t>(n), rows[k].end());
  return Subspace::span(f, n, out);
}

QuotientFrame::QuotientFrame(const Subspace& m)
    : field_(m.field()), ambient_(m.ambient_dim()), m_dim_(m.dim()), reps_(m.complement_indices()) {
  std::vector<Vector> cols = m.basis();
  for (auto r : reps_) cols.push_back(unit_vector(field_, ambient_, r));
  auto inv = inverse(Matrix::from_columns(ambient_, cols, field_));
  if (!inv) throw DimensionMismatch("complement does not complete the subspace");
  inverse_ = *inv;
}

Vector QuotientFrame::project(const Vector& x) const {
  Vector y = inverse_.apply(x);
  return Vector(y.begin() + static_cast<std::ptrdiff_t>(m_dim_), y.end());
}

Vector QuotientFrame::lift(const Vector& coords) const {
  if (coords.size() != reps_.size()) throw DimensionMismatch("quotient coordinate length differs");
  Vector x = zero_vector(field_, ambient_);
  for (std::size_t t = 0; t < reps_.size(); ++t) x[reps_[t]] = coords[t];
  return x;
}

Matrix QuotientFrame::projection_matrix() const {
  Matrix p(reps_.size(), ambient_, field_);
  for (std::size_t r = 0; r < reps_.size(); ++r)
    for (std::size_t c = 0; c < ambient_; ++c) p(r, c) = inverse_(m_dim_ + r, c);
  return p;
}

std::optional<IdealWitness> ideal_witness(const Algebra& a, const Subspace& s) {
  check_ambient(a, s);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Vector& u = s.basis()[i];
    for (std::size_t g = 0; g < a.dim(); ++g) {
      Vector e = a.basis_vector(g);
      if (!s.contains(a.bracket(e, u))) return IdealWitness{i, g, true};
      if (!s.contains(a.bracket(u, e))) return IdealWitness{i, g, false};
    }
  }
  return std::nullopt;
}

bool is_ideal(const Algebra& a, const Subspace& s) { return !ideal_witness(a, s).has_value(); }

void require_ideal(const Algebra& a, const Subspace& s) {
  if (auto w = ideal_witness(a, s)) throw NotAnIdeal(w->subspace_index, w->generator, w->left_product);
}

bool is_subalgebra(const Algebra& a, const Subspace& s) {
  check_ambient(a, s);
  for (const auto& u : s.basis())
    for (const auto& v : s.basis())
      if (!s.contains(a.bracket(u, v))) return false;
  return true;
}

Subspace ideal_closure(const Algebra& a, const Subspace& s) {
  check_ambient(a, s);
  RowReducer rr(a.dim(), a.field());
  std::deque<Vector> pending;
  for (const auto& b : s.basis())
    if (rr.add(b)) pending.push_back(b);
  while (!pending.empty()) {
    Vector u = std::move(pending.front());
    pending.pop_front();
    for (std::size_t g = 0; g < a.dim(); ++g) {
      Vector e = a.basis_vector(g);
      for (Vector w : {a.bracket(e, u), a.bracket(u, e)})
        if (rr.add(w)) pending.push_back(std::move(w));
    }
  }
  auto rows = rr.rows();
  return Subspace::span(a.field(), a.dim(), rows);
}

Subspace lie_commutator_ideal(const Algebra& a, const Subspace& m, const Subspace& n) {
  require_ideal(a, m);
  require_ideal(a, n);
  std::vector<Vector> gens;
  for (const auto& u : m.basis())
    for (const auto& v : n.basis()) gens.push_back(a.lie_bracket(u, v));
  return ideal_closure(a, Subspace::span(a.field(), a.dim(), gens));
}

Subspace derived_ideal(const Algebra& a) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) gens.push_back(a.basis_bracket(i, j));
  return Subspace::span(a.field(), a.dim(), gens);
}

Subspace lie_center(const Algebra& a) { return lie_centralizer(a, a.whole(), a.zero_subspace()); }

Subspace lie_centralizer(const Algebra& a, const Subspace& m, const Subspace& n) {
  check_ambient(a, m);
  check_ambient(a, n);
  const auto ann = n.annihilator();
  std::vector<Vector> rows;
  for (const auto& u : m.basis()) {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < a.dim(); ++j) cols.push_back(a.lie_bracket(a.basis_vector(j), u));
    push_escape_rows(rows, ann, cols, a.field());
  }
  return kernel_of_rows(a.field(), a.dim(), rows);
}

Subspace lie_normalizer(const Algebra& a, const Subspace& m) {
  check_ambient(a, m);
  const auto ann = m.annihilator();
  std::vector<Vector> rows;
  for (const auto& u : m.basis()) {
    std::vector<Vector> left, right;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      left.push_back(a.bracket(a.basis_vector(j), u));
      right.push_back(a.bracket(u, a.basis_vector(j)));
    }
    push_escape_rows(rows, ann, left, a.field());
    push_escape_rows(rows, ann, right, a.field());
  }
  return kernel_of_rows(a.field(), a.dim(), rows);
}

ClassicalCenters classical_centers(const Algebra& a) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  std::vector<Vector> right_rows, left_rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Vector r = zero_vector(f, n), l = zero_vector(f, n);
      for (std::size_t j = 0; j < n; ++j) {
        r[j] = a.structure(i, j, k);  // [e_i, x]
        l[j] = a.structure(j, i, k);  // [x, e_i]
      }
      right_rows.push_back(std::move(r));
      left_rows.push_back(std::move(l));
    }
  Subspace right = kernel_of_rows(f, n, right_rows);
  Subspace left = kernel_of_rows(f, n, left_rows);
  Subspace center = subspace_intersect(left, right);
  bool sub = is_subalgebra(a, left);
  return ClassicalCenters{std::move(left), std::move(right), std::move(center), sub};
}

}  // namespace leiblab
