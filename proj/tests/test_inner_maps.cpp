#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "leiblab/inner_maps.hpp"
#include "leiblab/map_spaces.hpp"

using namespace th;

namespace {

std::size_t brute_der_c(const char* name, std::int64_t p) {
  Algebra a = fx(name, Field::prime(static_cast<std::uint32_t>(p)));
  return oracle::almost_inner_dim_mod(a.dim(), p, oracle::residues(a, p));
}

}  // namespace

TEST_SUITE("inner_maps") {

TEST_CASE("left and right multiplication") {
  Algebra lef = fx("LEF");
  LinearMap r = right_mul(lef, vec(Q, {1, 0}));
  // R_e(f) = [f, e] = -e
  CHECK(r.column(1) == vec(Q, {-1, 0}));
  CHECK(r.column(0) == vec(Q, {0, 0}));
  Algebra r2 = fx("R2");
  LinearMap l = left_mul(r2, vec(Q, {0, 0, 0, 1}));
  CHECK(l.is_zero());
  LinearMap r4 = right_mul(r2, vec(Q, {0, 0, 0, 1}));
  CHECK(r4.column(0) == vec(Q, {1, 0, 0, 0}));
  CHECK(r4.column(1) == vec(Q, {0, 1, 0, 0}));
}

TEST_CASE("inner family") {
  Algebra l2c = fx("L2c");
  InnerFamily fam = inner_family(l2c);
  CHECK(fam.r_basis.size() == 3);
  CHECK(fam.l_basis.size() == 3);
  CHECK(fam.rl_space.dim() == 2);
  CHECK(right_space(l2c, l2c.whole()).dim() == 2);
  CHECK(right_space(l2c, units(Q, 3, {1})).dim() == 0);
}

TEST_CASE("der_c of an abelian algebra is zero") {
  auto dc = der_c(Algebra::abelian(3, Q));
  CHECK(dc.space.dim() == 0);
  auto exact = der_c(Algebra::abelian(2, Field::prime(3)));
  CHECK(exact.certainty == Certainty::exact);
  CHECK(exact.space.dim() == 0);
}

TEST_CASE("right multiplications are almost inner in L2c") {
  Algebra l2c = fx("L2c");
  auto dc = der_c(l2c);
  CHECK(dc.certainty == Certainty::monte_carlo);
  for (std::size_t i = 0; i < 3; ++i) CHECK(dc.space.contains(right_mul(l2c, unit_vector(Q, 3, i))));
  CHECK(id_star(l2c).contains(dc.space));
}

TEST_CASE("exact der_c over small prime fields matches brute force") {
  for (const char* name : {"LEF", "L2c", "L2a", "L2f", "L3s"}) {
    for (std::int64_t p : {3, 5}) {
      auto dc = der_c(fx(name, Field::prime(static_cast<std::uint32_t>(p))));
      CHECK_MESSAGE(dc.certainty == Certainty::exact, name << " mod " << p);
      CHECK_MESSAGE(dc.space.dim() == brute_der_c(name, p), name << " mod " << p);
    }
  }
}

TEST_CASE("sampled der_c over Q") {
  // the sampled space contains the true one; over Q these agree with the
  // brute-force dimensions mod 5
  const std::map<std::string, std::size_t> expected{{"LEF", 0}, {"L2c", 2}, {"L2a", 2}, {"L2f", 1}, {"L3s", 1}};
  for (const auto& [name, d] : expected) {
    CHECK(brute_der_c(name.c_str(), 5) == d);
    auto dc = der_c(fx(name.c_str()));
    CHECK_MESSAGE(dc.space.dim() == d, name);
    CHECK(dc.samples >= 64);
    CHECK(dc.stabilized_after <= dc.samples);
  }
  CHECK(der_c(fx("R21")).space.dim() == 1);
  CHECK(der_c(fx("R2")).space.dim() == 1);
}

TEST_CASE("der_c is deterministic in the seed") {
  Algebra r2 = fx("R2");
  CHECK(der_c(r2, 16, 7).space == der_c(r2, 16, 7).space);
  CHECK(der_c(r2, 16, 7).stabilized_after == der_c(r2, 16, 7).stabilized_after);
}

TEST_CASE("der_cz") {
  for (const auto& name : fixture_names()) {
    Algebra a = fx(name.c_str());
    auto dc = der_c(a);
    auto dcz = der_cz_from(a, dc);
    CHECK(dc.space.contains(dcz.space));
    CHECK(dcz.space == der_cz(a).space);
  }
}

TEST_CASE("almost inner audit over GF(5)") {
  Algebra l2c = fx("L2c", Field::prime(5));
  auto checks = almost_inner_audit(l2c, {fx("L3s", Field::prime(5))});
  CHECK(all_ok(checks));
  std::size_t passed = 0;
  for (const auto& c : checks) passed += c.status == Status::pass;
  CHECK(passed >= 5);
}

TEST_CASE("almost inner audit passes on every fixture") {
  for (const auto& name : fixture_names()) {
    auto checks = almost_inner_audit(fx(name.c_str()), {fx("LEF")});
    for (const auto& c : checks) CHECK_MESSAGE(c.status != Status::fail, name << " " << c.id << " " << c.detail);
  }
}

}
