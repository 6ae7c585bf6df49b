#pragma once

#include <initializer_list>
#include <vector>

#include "leiblab/algebra.hpp"
#include "leiblab/catalog.hpp"
#include "oracle.hpp"

namespace th {

using namespace leiblab;

inline const Field Q = Field::rationals();

inline Vector vec(const Field& f, std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(f.from_int(x));
  return v;
}

inline Subspace span_of(const Field& f, std::size_t n, std::initializer_list<std::initializer_list<long>> vs) {
  std::vector<Vector> out;
  for (auto v : vs) out.push_back(vec(f, v));
  return Subspace::span(f, n, out);
}

// span of the standard vectors e_i, 1-based
inline Subspace units(const Field& f, std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vector> out;
  for (auto i : idx) out.push_back(unit_vector(f, n, i - 1));
  return Subspace::span(f, n, out);
}

inline Subspace from_oracle(const oracle::Rows& rows, std::size_t n) {
  std::vector<Vector> out;
  for (const auto& r : rows) {
    Vector v;
    for (const auto& q : r) v.push_back(Scalar::rational(q));
    out.push_back(v);
  }
  return Subspace::span(Q, n, out);
}

inline Algebra fx(const char* name, const Field& f = Q) { return fixture(name, f); }

}  // namespace th
