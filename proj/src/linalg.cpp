#include "leiblab/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "leiblab/errors.hpp"

namespace leiblab {

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, f.zero()); }

Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = f.one();
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const Scalar& s, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vector& v, const Scalar& s, const Vector& w) {
  if (v.size() != w.size()) throw DimensionMismatch("vector sizes differ");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!w[i].is_zero()) v[i] += s * w[i];
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].to_string();
  os << ')';
  return os.str();
}

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(std::size_t n, const Field& f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> cols, const Field& f) {
  Matrix m(rows, cols.size(), f);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionMismatch("column length differs from row count");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_flat(std::size_t rows, std::size_t cols, const Vector& flat, const Field& f) {
  if (flat.size() != rows * cols) throw DimensionMismatch("flat length differs from rows*cols");
  Matrix m(rows, cols, f);
  m.data_ = flat;
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix/vector shapes differ");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return leiblab::is_zero(data_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shapes differ");
  Matrix m(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix shapes differ");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix shapes differ");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix r = m;
  for (auto& x : r.data_) x *= s;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) os << leiblab::to_string(row(r)) << '\n';
  return os.str();
}

RowReducer::RowReducer(std::size_t width, const Field& f) : width_(width), field_(f) {}

Vector RowReducer::reduce(Vector v) const {
  if (v.size() != width_) throw DimensionMismatch("row width differs");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar c = v[pivots_[k]];
    if (!c.is_zero()) axpy(v, -c, rows_[k]);
  }
  return v;
}

bool RowReducer::add(Vector v) {
  v = reduce(std::move(v));
  auto it = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (it == v.end()) return false;
  std::size_t piv = static_cast<std::size_t>(it - v.begin());
  Scalar inv = v[piv].inverse();
  for (auto& x : v) x *= inv;
  // keep existing rows reduced with respect to the new pivot
  for (auto& r : rows_) {
    const Scalar c = r[piv];
    if (!c.is_zero()) axpy(r, -c, v);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, piv);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

std::vector<Vector> RowReducer::rows() const { return rows_; }
std::vector<std::size_t> RowReducer::pivots() const { return pivots_; }

std::vector<Vector> RowReducer::nullspace() const {
  std::vector<bool> is_pivot(width_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  RowReducer basis(width_, field_);
  for (std::size_t f = 0; f < width_; ++f) {
    if (is_pivot[f]) continue;
    Vector v = unit_vector(field_, width_, f);
    for (std::size_t k = 0; k < rows_.size(); ++k) v[pivots_[k]] = -rows_[k][f];
    basis.add(std::move(v));
  }
  return basis.rows();
}

std::vector<Vector> row_echelon_basis(std::span<const Vector> rows, std::size_t width, const Field& f) {
  RowReducer rr(width, f);
  for (const auto& r : rows) rr.add(r);
  return rr.rows();
}

std::vector<Vector> nullspace(const Matrix& m) {
  RowReducer rr(m.cols(), m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) rr.add(m.row(r));
  return rr.nullspace();
}

std::size_t rank(const Matrix& m) {
  RowReducer rr(m.cols(), m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) rr.add(m.row(r));
  return rr.rank();
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length differs");
  // augmented system; the last column is b
  RowReducer rr(m.cols() + 1, m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vector row = m.row(r);
    row.push_back(b[r]);
    rr.add(std::move(row));
  }
  Vector x = zero_vector(m.field(), m.cols());
  auto rows = rr.rows();
  auto piv = rr.pivots();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (piv[k] == m.cols()) return std::nullopt;
    x[piv[k]] = rows[k][m.cols()];
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RowReducer rr(2 * n, m.field());
  for (std::size_t r = 0; r < n; ++r) {
    Vector row = m.row(r);
    Vector id = unit_vector(m.field(), n, r);
    row.insert(row.end(), id.begin(), id.end());
    rr.add(std::move(row));
  }
  auto piv = rr.pivots();
  if (rr.rank() != n || (n > 0 && piv.back() != n - 1)) return std::nullopt;
  auto rows = rr.rows();
  Matrix inv(n, n, m.field());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rows[r][n + c];
  return inv;
}

std::vector<Vector> projective_points(const Field& f, std::size_t n) {
  const std::uint32_t p = f.characteristic();
  std::vector<Vector> out;
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::size_t tail = n - lead - 1, count = 1;
    for (std::size_t i = 0; i < tail; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
      Vector v = zero_vector(f, n);
      v[lead] = f.one();
      std::size_t c = code;
      for (std::size_t i = lead + 1; i < n; ++i, c /= p) v[i] = f.from_int(static_cast<std::int64_t>(c % p));
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace leiblab
