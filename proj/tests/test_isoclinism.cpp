#include <doctest.h>

#include "helpers.hpp"
#include "leiblab/errors.hpp"
#include "leiblab/isoclinism.hpp"

using namespace th;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size(), c = rows.begin()->size();
  Matrix m(r, c, Q);
  std::size_t i = 0;
  for (auto row : rows) {
    std::size_t j = 0;
    for (long x : row) m(i, j++) = Q.from_int(x);
    ++i;
  }
  return m;
}

Status status_of(const std::vector<Check>& checks, const std::string& id) {
  for (const auto& c : checks)
    if (c.id == id) return c.status;
  FAIL("missing check " << id);
  return Status::fail;
}

}  // namespace

TEST_SUITE("isoclinism") {

TEST_CASE("commutator table of L2f") {
  CommutatorTable t = commutator_map(fx("L2f"));
  CHECK(t.quotient_dim == 1);
  CHECK(t.gamma_dim == 1);
  CHECK(t.representatives == std::vector<std::size_t>{2});
  CHECK(t.at(0, 0) == vec(Q, {2, 0, 0}));
  CHECK(t.coord(0, 0) == vec(Q, {2}));
  CHECK(t.well_defined);
}

TEST_CASE("commutator table of L2c") {
  CommutatorTable t = commutator_map(fx("L2c"));
  CHECK(t.quotient_dim == 2);
  CHECK(t.coord(0, 0) == vec(Q, {2}));
  CHECK(t.coord(0, 1) == vec(Q, {0}));
  CHECK(t.coord(1, 1) == vec(Q, {2}));
  CHECK(t.well_defined);
}

TEST_CASE("identity and padding witnesses") {
  for (const auto& name : fixture_names()) {
    Algebra a = fx(name.c_str());
    CHECK_MESSAGE(verify_isoclinism(a, a, identity_witness(a)), name);
    for (std::size_t k = 1; k <= 3; ++k) {
      Algebra padded = direct_sum(a, Algebra::abelian(k, Q));
      CHECK_MESSAGE(verify_isoclinism(a, padded, padding_witness(a, k)), name << " + " << k);
    }
  }
}

TEST_CASE("an explicit witness between L2c and L2a(1/2)") {
  // L2c: C = 2x^2 + 2y^2. L2a(1/2): C = x^2 + 2xy + 2y^2 = (x + y)^2 + y^2.
  // eta = [[1, -1], [0, 1]] pulls the second back to x^2 + y^2, so xi = 1/2.
  Algebra l2c = fx("L2c");
  Algebra l2a = fx("L2a(1/2)");
  Matrix half(1, 1, Q);
  half(0, 0) = Q.parse_scalar("1/2");
  IsoclinismWitness w{mat({{1, -1}, {0, 1}}), half};
  CHECK(verify_isoclinism(l2c, l2a, w));
  CHECK_FALSE(verify_isoclinism(l2c, l2a, {mat({{1, -1}, {0, 1}}), mat({{1}})}));
  CHECK_FALSE(verify_isoclinism(l2c, l2a, {mat({{1, 0}, {0, 1}}), half}));
  // eta must be invertible
  CHECK_FALSE(verify_isoclinism(l2c, l2c, {mat({{1, 1}, {1, 1}}), mat({{1}})}));
}

TEST_CASE("witnesses of the wrong shape are rejected") {
  Algebra l2c = fx("L2c"), l2f = fx("L2f");
  CHECK_THROWS_AS(verify_isoclinism(l2c, l2f, identity_witness(l2c)), ShapeMismatch);
}

TEST_CASE("invariants survive abelian padding") {
  for (const auto& name : fixture_names()) {
    Algebra a = fx(name.c_str());
    auto base = isoclinism_invariants(a);
    CHECK_MESSAGE(base == isoclinism_invariants(direct_sum(a, Algebra::abelian(2, Q))), name);
  }
  auto l2c = isoclinism_invariants(fx("L2c"));
  CHECK(l2c.table_rank == 2);
  CHECK(l2c.value_rank == 1);
  CHECK(l2c.quotient_dim == 2);
  CHECK(l2c.class_c == 2);
}

TEST_CASE("stem and class-two dimension checks") {
  for (const auto& name : fixture_names())
    for (const auto& c : stem_dim_audit(fx(name.c_str())))
      CHECK_MESSAGE(c.status != Status::fail, name << " " << c.id << " " << c.detail);

  auto l2c = stem_dim_audit(fx("L2c"));
  CHECK(status_of(l2c, "stem.der_z_dim") == Status::pass);
  CHECK(status_of(l2c, "stem.der_z_abelian") == Status::pass);
  CHECK(status_of(l2c, "k_equals_gamma2") == Status::pass);
  // K = span{a1, a2} against gamma2 = span{a1}
  CHECK(status_of(stem_dim_audit(fx("L2f")), "k_equals_gamma2") == Status::noted);
  CHECK(status_of(stem_dim_audit(fx("R2")), "stem.der_z_dim") == Status::skipped);
}

}
