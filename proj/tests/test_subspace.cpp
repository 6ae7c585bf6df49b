#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "leiblab/central_series.hpp"
#include "leiblab/errors.hpp"

using namespace th;

TEST_SUITE("subspace_lattice") {

TEST_CASE("spans") {
  CHECK(span_of(Q, 3, {{1, 0, 0}, {2, 0, 0}}).dim() == 1);
  CHECK(span_of(Q, 3, {}).is_zero());
  CHECK(span_of(Q, 2, {{1, 1}, {1, -1}}).is_full());
  CHECK(span_of(Field::prime(3), 2, {{1, 1}, {1, -1}}).is_full());
}

TEST_CASE("echelon form is canonical") {
  Subspace a = span_of(Q, 3, {{1, 2, 3}, {0, 1, 1}});
  Subspace b = span_of(Q, 3, {{1, 3, 4}, {2, 5, 7}});
  CHECK(a == b);
  CHECK(a.coordinates(vec(Q, {1, 3, 4})).size() == 2);
  CHECK_THROWS_AS(a.coordinates(vec(Q, {0, 0, 1})), DimensionMismatch);
}

TEST_CASE("sum and intersection basics") {
  Subspace u = span_of(Q, 3, {{1, 1, 0}, {0, 0, 1}});
  Subspace zero = Subspace::zero(Q, 3);
  CHECK(subspace_sum(u, zero) == u);
  CHECK(subspace_intersect(u, u) == u);
  CHECK(subspace_intersect(units(Q, 3, {1, 2}), units(Q, 3, {1})) == units(Q, 3, {1}));
}

TEST_CASE("dimension identity on random pairs over GF(5)") {
  const Field f = Field::prime(5);
  std::mt19937_64 rng(2024);
  using IntRows = std::vector<std::vector<std::int64_t>>;
  auto random_rows = [&](std::size_t k) {
    IntRows rows(k, std::vector<std::int64_t>(6));
    for (auto& r : rows)
      for (auto& x : r) x = static_cast<std::int64_t>(rng() % 5);
    return rows;
  };
  auto to_subspace = [&](const IntRows& rows) {
    std::vector<Vector> vs;
    for (const auto& r : rows) {
      Vector v;
      for (auto x : r) v.push_back(f.from_int(x));
      vs.push_back(v);
    }
    return Subspace::span(f, 6, vs);
  };
  for (int trial = 0; trial < 100; ++trial) {
    const IntRows ur = random_rows(rng() % 5), vr = random_rows(rng() % 5);
    IntRows both = ur;
    both.insert(both.end(), vr.begin(), vr.end());
    const std::size_t du = oracle::rank_mod(ur, 5), dv = oracle::rank_mod(vr, 5), ds = oracle::rank_mod(both, 5);
    const Subspace u = to_subspace(ur), v = to_subspace(vr);
    const Subspace meet = subspace_intersect(u, v);
    CHECK(u.dim() == du);
    CHECK(subspace_sum(u, v).dim() == ds);
    CHECK(meet.dim() == du + dv - ds);
    CHECK(u.contains(meet));
    CHECK(v.contains(meet));
  }
}

TEST_CASE("ideal closure") {
  Algebra r2 = fx("R2");
  CHECK(ideal_closure(r2, r2.zero_subspace()).is_zero());
  CHECK(ideal_closure(r2, units(Q, 4, {1})) == units(Q, 4, {1}));
  Algebra lef = fx("LEF");
  CHECK(ideal_closure(lef, units(Q, 2, {2})).is_full());
  CHECK(is_ideal(r2, units(Q, 4, {1, 2})));
  CHECK_FALSE(is_ideal(r2, units(Q, 4, {4})));
  CHECK(is_subalgebra(r2, units(Q, 4, {4})));
}

TEST_CASE("lie commutator ideals") {
  Algebra l2c = fx("L2c");
  CHECK(lie_commutator_ideal(l2c, l2c.whole(), l2c.whole()) == units(Q, 3, {1}));
  CHECK(lie_commutator_ideal(l2c, l2c.whole(), l2c.zero_subspace()).is_zero());
  Algebra r21 = fx("R21");
  CHECK(lie_commutator_ideal(r21, r21.whole(), r21.whole()) == units(Q, 4, {4}));
  CHECK(derived_ideal(r21) == units(Q, 4, {4}));
  CHECK_THROWS_AS(lie_commutator_ideal(fx("R2"), units(Q, 4, {4}), fx("R2").whole()), NotAnIdeal);
}

TEST_CASE("lie centers and centralizers") {
  CHECK(lie_center(fx("LEF")).is_full());
  CHECK(lie_center(fx("L2f")) == units(Q, 3, {1, 2}));
  CHECK(lie_center(fx("R2")) == units(Q, 4, {3}));
  CHECK(lie_center(fx("R21")) == units(Q, 4, {1, 2, 4}));
  for (const auto& name : fixture_names()) {
    Algebra a = fx(name.c_str());
    auto t = oracle::table_of(a);
    CHECK_MESSAGE(lie_center(a) == from_oracle(oracle::lie_center(t), a.dim()), name);
    CHECK_MESSAGE(gamma2(a) == from_oracle(oracle::gamma2(t), a.dim()), name);
    CHECK_MESSAGE(derived_ideal(a) == from_oracle(oracle::derived(t), a.dim()), name);
    CHECK(lie_centralizer(a, a.whole(), a.zero_subspace()) == lie_center(a));
    CHECK(lie_centralizer(a, a.zero_subspace(), a.zero_subspace()).is_full());
  }
  Algebra l2f = fx("L2f");
  CHECK(lie_centralizer(l2f, l2f.whole(), units(Q, 3, {1})).is_full());
}

TEST_CASE("classical centers") {
  auto r21 = classical_centers(fx("R21"));
  CHECK(r21.right == units(Q, 4, {4}));
  auto l2a = classical_centers(fx("L2a"));
  CHECK(l2a.right == units(Q, 3, {1}));
  auto ab = classical_centers(Algebra::abelian(3, Q));
  CHECK(ab.left.is_full());
  CHECK(ab.right.is_full());
  CHECK(ab.center.is_full());
  // L3s: [a3,a3] = a1, so Z^l = Z^r = span{a1, a2}
  auto l3s = classical_centers(fx("L3s"));
  CHECK(l3s.left == units(Q, 3, {1, 2}));
  CHECK(l3s.right == units(Q, 3, {1, 2}));
}

TEST_CASE("lie normalizers") {
  Algebra r2 = fx("R2");
  CHECK(lie_normalizer(r2, r2.whole()).is_full());
  CHECK(lie_normalizer(r2, units(Q, 4, {1, 2})).is_full());
  Algebra lef = fx("LEF");
  CHECK(lie_normalizer(lef, units(Q, 2, {2})) == units(Q, 2, {2}));
}

}
