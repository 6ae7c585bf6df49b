#include "leiblab/algebra.hpp"

#include <set>

#include "leiblab/errors.hpp"

namespace leiblab {

namespace {

std::vector<std::string> default_labels(std::size_t n, std::vector<std::string> labels) {
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  }
  if (labels.size() != n) throw DimensionMismatch("label count differs from dimension");
  return labels;
}

}  // namespace

Algebra::Algebra(std::size_t n, const Field& f, std::vector<Scalar> c, std::vector<std::string> labels)
    : n_(n), field_(f), c_(std::move(c)), labels_(default_labels(n, std::move(labels))) {}

Algebra Algebra::build(std::size_t n, const Field& field, std::span<const BracketEntry> brackets,
                       std::vector<std::string> labels) {
  std::vector<Scalar> c(n * n * n, field.zero());
  for (const auto& b : brackets) {
    if (b.i >= n || b.j >= n || b.k >= n)
      throw IndexOutOfRange("bracket index out of range for dimension " + std::to_string(n));
    c[(b.i * n + b.j) * n + b.k] += field.coerce(b.coeff);
  }
  return from_tensor(n, field, std::move(c), std::move(labels));
}

Algebra Algebra::from_tensor(std::size_t n, const Field& field, std::vector<Scalar> tensor,
                             std::vector<std::string> labels) {
  if (tensor.size() != n * n * n) throw DimensionMismatch("structure tensor must have n^3 entries");
  for (auto& s : tensor) s = field.coerce(s);
  Algebra a(n, field, std::move(tensor), std::move(labels));
  a.validate();
  return a;
}

Algebra Algebra::abelian(std::size_t n, const Field& field) {
  return Algebra(n, field, std::vector<Scalar>(n * n * n, field.zero()), {});
}

void Algebra::validate() const {
  // products[i][j] = [e_i, e_j]
  std::vector<Vector> prod(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) prod[i * n_ + j] = basis_bracket(i, j);

  // [e_i, v] and [v, e_k] via the stored products
  auto left = [&](std::size_t i, const Vector& v) {
    Vector out = zero_vector(field_, n_);
    for (std::size_t m = 0; m < n_; ++m)
      if (!v[m].is_zero()) axpy(out, v[m], prod[i * n_ + m]);
    return out;
  };
  auto right = [&](const Vector& v, std::size_t k) {
    Vector out = zero_vector(field_, n_);
    for (std::size_t m = 0; m < n_; ++m)
      if (!v[m].is_zero()) axpy(out, v[m], prod[m * n_ + k]);
    return out;
  };

  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) {
        Vector lhs = left(i, prod[j * n_ + k]);
        Vector rhs = sub(right(prod[i * n_ + j], k), right(prod[i * n_ + k], j));
        if (lhs != rhs) throw LeibnizViolation(i, j, k, to_string(lhs), to_string(rhs));
      }
}

std::vector<BracketEntry> Algebra::sparse() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (!structure(i, j, k).is_zero()) out.push_back({i, j, k, structure(i, j, k)});
  return out;
}

Vector Algebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw IndexOutOfRange("basis index out of range");
  auto first = c_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j) * n_);
  return Vector(first, first + static_cast<std::ptrdiff_t>(n_));
}

Vector Algebra::basis_lie_bracket(std::size_t i, std::size_t j) const {
  return add(basis_bracket(i, j), basis_bracket(j, i));
}

Vector Algebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != n_ || y.size() != n_) throw DimensionMismatch("bracket operand has wrong dimension");
  Vector out = zero_vector(field_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n_; ++k) {
        const Scalar& c = structure(i, j, k);
        if (!c.is_zero()) out[k] += xy * c;
      }
    }
  }
  return out;
}

Vector Algebra::lie_bracket(const Vector& x, const Vector& y) const {
  return add(bracket(x, y), bracket(y, x));
}

bool Algebra::is_lie() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      if (!leiblab::is_zero(basis_lie_bracket(i, j))) return false;
  return true;
}

bool Algebra::is_abelian() const { return leiblab::is_zero(c_); }

Algebra Algebra::reduce_to(const Field& target) const {
  std::vector<Scalar> c;
  c.reserve(c_.size());
  for (const auto& s : c_) c.push_back(target.coerce(s));
  return from_tensor(n_, target, std::move(c), labels_);
}

Subspace ann_ideal(const Algebra& a) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) gens.push_back(a.basis_lie_bracket(i, j));
  return ideal_closure(a, Subspace::span(a.field(), a.dim(), gens));
}

Quotient quotient_algebra(const Algebra& a, const Subspace& m) {
  if (m.ambient_dim() != a.dim()) throw DimensionMismatch("ideal lives in a different ambient space");
  require_ideal(a, m);
  QuotientFrame frame(m);
  const auto& reps = frame.representatives();
  const std::size_t q = reps.size();
  std::vector<Scalar> c(q * q * q, a.field().zero());
  for (std::size_t s = 0; s < q; ++s)
    for (std::size_t t = 0; t < q; ++t) {
      Vector v = frame.project(a.basis_bracket(reps[s], reps[t]));
      for (std::size_t k = 0; k < q; ++k) c[(s * q + t) * q + k] = v[k];
    }
  std::vector<std::string> labels;
  for (auto r : reps) labels.push_back(a.labels()[r]);
  return Quotient{Algebra::from_tensor(q, a.field(), std::move(c), std::move(labels)),
                  frame.projection_matrix(), reps};
}

Quotient liezation(const Algebra& a) { return quotient_algebra(a, ann_ideal(a)); }

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("direct sum of algebras over different fields");
  const std::size_t n = a.dim() + b.dim();
  std::vector<BracketEntry> entries = a.sparse();
  for (auto e : b.sparse()) entries.push_back({e.i + a.dim(), e.j + a.dim(), e.k + a.dim(), e.coeff});

  std::vector<std::string> labels = a.labels();
  std::set<std::string> seen(labels.begin(), labels.end());
  for (auto l : b.labels()) {
    while (seen.count(l)) l += "'";
    seen.insert(l);
    labels.push_back(l);
  }
  return Algebra::build(n, a.field(), entries, std::move(labels));
}

}  // namespace leiblab
