#include "leiblab/corpus.hpp"

#include <random>

#include "leiblab/errors.hpp"

namespace leiblab {

namespace {

using Tensor = std::vector<std::int64_t>;

std::int64_t mod(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

std::uint64_t capped_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    v *= base;
    if (v > cap) return cap + 1;
  }
  return v;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2;
  a = mod(a, p);
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// Inverse of the n x n matrix m (row-major) mod p, empty when singular.
std::vector<std::int64_t> invert_mod(std::size_t n, std::vector<std::int64_t> m, std::int64_t p) {
  std::vector<std::int64_t> inv(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv * n + c] == 0) ++piv;
    if (piv == n) return {};
    for (std::size_t k = 0; k < n; ++k) {
      std::swap(m[c * n + k], m[piv * n + k]);
      std::swap(inv[c * n + k], inv[piv * n + k]);
    }
    const std::int64_t s = inverse_mod(m[c * n + c], p);
    for (std::size_t k = 0; k < n; ++k) {
      m[c * n + k] = m[c * n + k] * s % p;
      inv[c * n + k] = inv[c * n + k] * s % p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r * n + c] == 0) continue;
      const std::int64_t t = m[r * n + c];
      for (std::size_t k = 0; k < n; ++k) {
        m[r * n + k] = mod(m[r * n + k] - t * m[c * n + k], p);
        inv[r * n + k] = mod(inv[r * n + k] - t * inv[c * n + k], p);
      }
    }
  }
  return inv;
}

// Structure constants after the change of basis e'_i = g e_i, with g given by columns.
Tensor change_basis(std::size_t n, const Tensor& c, const std::vector<std::int64_t>& g,
                    const std::vector<std::int64_t>& ginv, std::int64_t p) {
  Tensor out(n * n * n, 0);
  std::vector<std::int64_t> prod(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(prod.begin(), prod.end(), 0);
      for (std::size_t a = 0; a < n; ++a) {
        if (g[a * n + i] == 0) continue;
        for (std::size_t b = 0; b < n; ++b) {
          const std::int64_t w = g[a * n + i] * g[b * n + j] % p;
          if (w == 0) continue;
          for (std::size_t k = 0; k < n; ++k) prod[k] = (prod[k] + w * c[(a * n + b) * n + k]) % p;
        }
      }
      for (std::size_t k = 0; k < n; ++k) {
        std::int64_t v = 0;
        for (std::size_t l = 0; l < n; ++l) v = (v + ginv[k * n + l] * prod[l]) % p;
        out[(i * n + j) * n + k] = v;
      }
    }
  return out;
}

Algebra to_algebra(std::size_t n, const Field& f, const Tensor& c) {
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (c[(i * n + j) * n + k] != 0) entries.push_back({i, j, k, f.from_int(c[(i * n + j) * n + k])});
  return Algebra::build(n, f, entries);
}

std::uint32_t require_prime_field(const Field& f) {
  if (!f.is_finite()) throw InvalidField("the corpus needs a prime field");
  return f.characteristic();
}

// Row space mod p, kept in reduced echelon form.
class NativeReducer {
 public:
  NativeReducer(std::size_t width, std::int64_t p) : width_(width), p_(p) {}

  bool add(std::vector<std::int64_t> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::int64_t t = v[pivots_[r]];
      if (t == 0) continue;
      for (std::size_t k = 0; k < width_; ++k) v[k] = mod(v[k] - t * rows_[r][k], p_);
    }
    std::size_t piv = 0;
    while (piv < width_ && v[piv] == 0) ++piv;
    if (piv == width_) return false;
    const std::int64_t s = inverse_mod(v[piv], p_);
    for (auto& x : v) x = x * s % p_;
    for (auto& row : rows_) {
      const std::int64_t t = row[piv];
      if (t == 0) continue;
      for (std::size_t k = 0; k < width_; ++k) row[k] = mod(row[k] - t * v[k], p_);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }

 private:
  std::size_t width_;
  std::int64_t p_;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

bool leibniz_mod_p(std::size_t n, std::uint32_t p, const std::vector<std::int64_t>& c) {
  const std::int64_t q = p;
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) { return c[(i * n + j) * n + k]; };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t m = 0; m < n; ++m) {
          std::int64_t v = 0;
          for (std::size_t k = 0; k < n; ++k) {
            v += at(y, z, k) * at(x, k, m) % q;
            v -= at(x, y, k) * at(k, z, m) % q;
            v += at(x, z, k) * at(k, y, m) % q;
            v %= q;
          }
          if (mod(v, q) != 0) return false;
        }
  return true;
}

CorpusStats generate(const CorpusSpec& spec, const std::function<bool(const Algebra&)>& sink) {
  const std::uint32_t p = require_prime_field(spec.field);
  const std::size_t n = spec.dim;
  const std::size_t cube = n * n * n;
  CorpusStats stats;

  if (spec.mode == CorpusMode::exhaustive) {
    if (capped_power(p, cube, kExhaustiveTensorLimit) > kExhaustiveTensorLimit)
      throw SpecTooLarge("exhaustive enumeration needs p^(n^3) <= 10^7");
    Tensor c(cube, 0);
    while (true) {
      ++stats.attempts;
      if (leibniz_mod_p(n, p, c)) {
        ++stats.accepted;
        if (!sink(to_algebra(n, spec.field, c))) return stats;
        if (spec.count != 0 && stats.accepted == spec.count) return stats;
      }
      std::size_t d = 0;
      while (d < cube && ++c[d] == p) c[d++] = 0;
      if (d == cube) return stats;
    }
  }

  std::mt19937_64 rng(spec.seed);
  const std::size_t max_attempts = 1000 * spec.count + 10000;
  while (stats.accepted < spec.count && stats.attempts < max_attempts) {
    ++stats.attempts;
    Tensor c(cube, 0);
    if (n > 0) {
      const std::size_t k = rng() % (n * n + 1);
      for (std::size_t e = 0; e < k; ++e) {
        const std::size_t pos = rng() % cube;
        c[pos] = 1 + static_cast<std::int64_t>(rng() % (p - 1));
      }
    }
    if (!leibniz_mod_p(n, p, c)) continue;

    std::vector<std::int64_t> g(n * n), ginv;
    do {
      for (auto& x : g) x = static_cast<std::int64_t>(rng() % p);
      ginv = invert_mod(n, g, p);
    } while (ginv.empty() && n > 0);
    if (n > 0) c = change_basis(n, c, g, ginv, p);

    ++stats.accepted;
    if (!sink(to_algebra(n, spec.field, c))) break;
  }
  return stats;
}

std::vector<Algebra> generate(const CorpusSpec& spec, CorpusStats* stats) {
  std::vector<Algebra> out;
  CorpusStats s = generate(spec, [&](const Algebra& a) {
    out.push_back(a);
    return true;
  });
  if (stats) *stats = s;
  return out;
}

MapSpace oracle_der_lie(const Algebra& a) {
  const Field& f = a.field();
  const std::uint32_t p = require_prime_field(f);
  const std::size_t n = a.dim();
  const std::size_t nn = n * n;
  const std::uint64_t total = capped_power(p, nn, kExhaustiveTensorLimit);
  if (total > kExhaustiveTensorLimit) throw SpecTooLarge("the oracle enumerates at most 10^7 matrices");

  // lie structure constants as residues
  const std::int64_t q = p;
  std::vector<std::int64_t> lie(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        mpq_class v = a.structure(i, j, k).to_rational() + a.structure(j, i, k).to_rational();
        lie[(i * n + j) * n + k] = mod(v.get_num().get_si(), q);
      }
  auto L = [&](std::size_t i, std::size_t j, std::size_t k) { return lie[(i * n + j) * n + k]; };

  // d is row-major: d[r * n + c] is the coefficient of e_r in d(e_c)
  NativeReducer rr(nn, q);
  std::vector<std::int64_t> d(nn, 0);
  for (std::uint64_t count = 0; count < total; ++count) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < n; ++i)
      for (std::size_t j = i; ok && j < n; ++j)
        for (std::size_t m = 0; ok && m < n; ++m) {
          std::int64_t v = 0;
          for (std::size_t k = 0; k < n; ++k) {
            v += d[m * n + k] * L(i, j, k);
            v -= d[k * n + i] * L(k, j, m);
            v -= d[k * n + j] * L(i, k, m);
          }
          if (mod(v, q) != 0) ok = false;
        }
    if (ok && rr.rank() < nn) rr.add(d);
    std::size_t pos = 0;
    while (pos < nn && ++d[pos] == q) d[pos++] = 0;
  }

  std::vector<Vector> rows;
  for (const auto& r : rr.rows()) {
    Vector v = zero_vector(f, nn);
    for (std::size_t k = 0; k < nn; ++k) v[k] = f.from_int(r[k]);
    rows.push_back(std::move(v));
  }
  return MapSpace(n, n, Subspace::span(f, nn, rows));
}

}  // namespace leiblab
