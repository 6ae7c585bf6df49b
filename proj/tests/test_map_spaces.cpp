#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "leiblab/audit.hpp"
#include "leiblab/central_series.hpp"
#include "leiblab/corpus.hpp"
#include "leiblab/errors.hpp"
#include "leiblab/inner_maps.hpp"
#include "leiblab/map_spaces.hpp"

using namespace th;

namespace {

struct Frozen {
  std::size_t der_lie, der_abs, der_z, centroid, id_lie, id_star;
};

// computed by oracle::space_dims and checked against it below
const std::map<std::string, Frozen> kFrozen{
    {"LEF", {4, 2, 4, 4, 0, 0}}, {"L2c", {4, 4, 2, 3, 2, 2}}, {"L2a", {4, 4, 2, 3, 2, 2}},
    {"L2f", {5, 3, 4, 5, 2, 1}}, {"R21", {10, 7, 9, 10, 3, 1}}, {"R2", {6, 6, 2, 3, 4, 4}},
    {"L3s", {5, 5, 4, 5, 2, 1}},
};

}  // namespace

TEST_SUITE("map_spaces") {

TEST_CASE("frozen dimensions agree with the oracle") {
  for (const auto& name : fixture_names()) {
    const Frozen& f = kFrozen.at(name);
    auto o = oracle::space_dims(oracle::table_of(fx(name.c_str())));
    CHECK_MESSAGE(o.der_lie == f.der_lie, name);
    CHECK_MESSAGE(o.der_abs == f.der_abs, name);
    CHECK_MESSAGE(o.der_z == f.der_z, name);
    CHECK_MESSAGE(o.centroid == f.centroid, name);
    CHECK_MESSAGE(o.id_lie == f.id_lie, name);
    CHECK_MESSAGE(o.id_star == f.id_star, name);
  }
}

TEST_CASE("library dimensions on the fixtures") {
  for (const auto& name : fixture_names()) {
    Algebra a = fx(name.c_str());
    const Frozen& f = kFrozen.at(name);
    CHECK_MESSAGE(der_lie(a).dim() == f.der_lie, name);
    CHECK_MESSAGE(der_abs(a).dim() == f.der_abs, name);
    CHECK_MESSAGE(der_z(a).dim() == f.der_z, name);
    CHECK_MESSAGE(centroid_lie(a).dim() == f.centroid, name);
    CHECK_MESSAGE(id_lie(a).dim() == f.id_lie, name);
    CHECK_MESSAGE(id_star(a).dim() == f.id_star, name);
  }
}

TEST_CASE("library spaces equal the oracle solution spaces") {
  for (const auto& name : fixture_names()) {
    Algebra a = fx(name.c_str());
    auto t = oracle::table_of(a);
    oracle::MapSystem lie{t.n, {}}, cen{t.n, {}};
    lie.lie_derivation(t);
    cen.centroid(t);
    CHECK_MESSAGE(der_lie(a).flat() == from_oracle(lie.solutions(), t.n * t.n), name);
    CHECK_MESSAGE(centroid_lie(a).flat() == from_oracle(cen.solutions(), t.n * t.n), name);
  }
}

TEST_CASE("Lie-derivations over GF(5) match brute force") {
  const Field f5 = Field::prime(5);
  Algebra a = fx("L2c", f5);
  auto c = oracle::residues(a, 5);
  std::size_t count = 0;
  oracle::each_matrix(3, 5, [&](const std::vector<std::int64_t>& d) {
    if (oracle::is_lie_derivation_mod(3, 5, c, d)) ++count;
  });
  std::size_t expected = 1;
  for (std::size_t i = 0; i < der_lie(a).dim(); ++i) expected *= 5;
  CHECK(count == expected);
  CHECK(oracle_der_lie(a) == der_lie(a));
}

TEST_CASE("chain of inclusions and closure") {
  for (const auto& name : fixture_names()) {
    Algebra a = fx(name.c_str());
    MapSpace dl = der_lie(a), da = der_abs(a), dz = der_z(a), il = id_lie(a), is = id_star(a);
    CHECK(dl.contains(da));
    CHECK(dl.contains(dz));
    CHECK(dl.contains(il));
    CHECK(il.contains(is));
    CHECK(dl.closed_under_commutator());
    CHECK(check_commutator_closure(dl).closed_under_commutator());
    CHECK(intersect(dl, da) == da);
    CHECK(sum(dl, da) == dl);
  }
}

TEST_CASE("der_z is abelian exactly for the stem class-2 fixtures") {
  for (const auto& name : fixture_names()) {
    const bool expect = name == "L2c" || name == "L2a";
    CHECK_MESSAGE(is_abelian(der_z(fx(name.c_str()))) == expect, name);
  }
}

TEST_CASE("right multiplication in R21") {
  Algebra r21 = fx("R21");
  LinearMap r = right_mul(r21, vec(Q, {1, 0, 0, 0}));
  // a2 -> [a2, a1] = -a4, every other basis vector to zero
  CHECK(r.column(1) == vec(Q, {0, 0, 0, -1}));
  CHECK(der_z(r21).contains(r));
  CHECK_FALSE(id_star(r21).contains(r));
}

TEST_CASE("maps into and maps killing") {
  Subspace s = units(Q, 3, {1});
  CHECK(maps_into(s).dim() == 3);
  CHECK(maps_killing(s).dim() == 6);
  CHECK(intersect(maps_into(s), maps_killing(s)).dim() == 2);
  CHECK(hom_space(2, 3) == 6);
}

TEST_CASE("centers of map spaces") {
  const MapSpace full = MapSpace::full(2, 2, Q);
  CHECK(center_of(full).dim() == 1);
  CHECK_FALSE(is_abelian(full));
  CHECK(is_abelian(MapSpace::zero(2, 2, Q)));
}

TEST_CASE("V and T on invariant canonical ideals") {
  for (const auto& name : fixture_names()) {
    Algebra a = fx(name.c_str());
    auto t = oracle::table_of(a);
    for (const auto& m : canonical_ideals(a)) {
      if (!is_gamma_invariant(a, m)) {
        CHECK_THROWS_AS(v_of_ideal(a, m), NotInvariant);
        continue;
      }
      oracle::MapSystem sys{t.n, {}};
      sys.centroid(t);
      oracle::Rows ms;
      for (const auto& v : m.basis()) {
        oracle::Vec o;
        for (const auto& x : v) o.push_back(x.to_rational());
        ms.push_back(o);
      }
      sys.kills(ms);
      MapSpace v = v_of_ideal(a, m);
      CHECK_MESSAGE(v.dim() == sys.dim(), name);
      CHECK_MESSAGE(v.dim() == t_of_ideal(a, m).dim, name);
    }
  }
}

TEST_CASE("common kernel of homomorphisms into gamma2") {
  CHECK(k_intersection(fx("L2c")) == units(Q, 3, {1}));
  CHECK(k_intersection(fx("L2a")) == units(Q, 3, {1}));
  CHECK(k_intersection(Algebra::abelian(3, Q)).is_full());
  // [g, g] = span{a1, a2} is strictly larger than gamma2 = span{a1}
  CHECK(k_intersection(fx("L2f")) == units(Q, 3, {1, 2}));
}

TEST_CASE("centroid of a direct sum") {
  Algebra one = Algebra::abelian(1, Q);
  auto d = centroid_decomposition(one, one);
  CHECK(d.sum_dim == 4);
  CHECK(d.verified);
  for (auto [x, y] : {std::pair{"L2c", "L3s"}, std::pair{"LEF", "L2c"}, std::pair{"R2", "L2f"}}) {
    Algebra a = fx(x), b = fx(y);
    auto dec = centroid_decomposition(a, b);
    auto o = oracle::space_dims(oracle::table_of(direct_sum(a, b)));
    CHECK(dec.sum_dim == o.centroid);
    CHECK(dec.sum_dim == dec.gamma1 + dec.gamma2 + dec.c1 + dec.c2);
    CHECK(dec.verified);
  }
  CHECK_THROWS_AS(centroid_decomposition(one, fx("L2c", Field::prime(3))), FieldMismatch);
}

}
