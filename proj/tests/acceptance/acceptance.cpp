// Acceptance run: one PASS/FAIL line per criterion, indented detail lines below it.
#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "leiblab/audit.hpp"
#include "leiblab/catalog.hpp"
#include "leiblab/central_series.hpp"
#include "leiblab/cli.hpp"
#include "leiblab/corpus.hpp"
#include "leiblab/errors.hpp"
#include "leiblab/inner_maps.hpp"
#include "leiblab/isoclinism.hpp"
#include "leiblab/map_spaces.hpp"

using namespace leiblab;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int failures = 0;

void criterion(int number, const std::string& title, bool ok, const std::vector<std::string>& details) {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << number << ". " << title << "\n";
  for (const auto& d : details) std::cout << "        " << d << "\n";
  if (!ok) ++failures;
}

// Collects named conditions; a criterion passes when all of them hold.
struct Conditions {
  bool ok = true;
  std::vector<std::string> lines;
  void expect(bool holds, const std::string& what) {
    ok = ok && holds;
    lines.push_back(std::string(holds ? "ok   " : "BAD  ") + what);
  }
  void note(const std::string& what) { lines.push_back("     " + what); }
};

Subspace units(const Field& f, std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vector> vs;
  for (auto i : idx) vs.push_back(unit_vector(f, n, i - 1));
  return Subspace::span(f, n, vs);
}

Status status_of(const std::vector<Check>& checks, const std::string& id) {
  for (const auto& c : checks)
    if (c.id == id) return c.status;
  throw std::runtime_error("missing check " + id);
}

struct Member {
  std::string name;
  Algebra algebra;
};

struct Tally {
  std::size_t pass = 0, fail = 0, skipped = 0, noted = 0;
  std::vector<std::string> failed;
  std::size_t applicable() const { return pass + fail + noted; }
  void add(const Check& c, const std::string& who) {
    switch (c.status) {
      case Status::pass: ++pass; break;
      case Status::fail: ++fail; failed.push_back(who + " " + c.id + " " + c.detail); break;
      case Status::skipped: ++skipped; break;
      case Status::noted: ++noted; break;
    }
  }
  std::string summary() const {
    std::ostringstream s;
    s << pass << " pass, " << fail << " fail, " << skipped << " skipped";
    if (noted) s << ", " << noted << " noted";
    return s.str();
  }
};

std::string family(const std::string& id) {
  return id.rfind("der_c.direct_sum.", 0) == 0 ? "der_c.direct_sum" : id;
}

void fixture_invariants() {
  Conditions c;
  const Field q = Field::rationals();

  const auto t0 = Clock::now();
  Algebra l2c = fixture("L2c");
  const Subspace g2 = gamma2(l2c), z = lie_center(l2c);
  const bool l2c_ok = g2.dim() == 1 && z.dim() == 1 && g2 == z && is_lie_stem(l2c) && is_abelian(der_z(l2c));
  const double l2c_ms = ms_since(t0);
  c.expect(l2c_ok, "L2c: dim gamma2 = dim Z_Lie = 1, equal spans, stem, Der_z abelian");
  c.expect(l2c_ms < 50.0, "L2c runtime " + std::to_string(l2c_ms) + " ms < 50 ms");

  Algebra l2f = fixture("L2f");
  auto l2f_class = lie_nilpotency_class(l2f);
  const std::size_t l2f_ids = id_star(l2f).dim();
  c.expect(lie_center(l2f).dim() == 2 && gamma2(l2f).dim() == 1 && l2f_class.p_generators == 1 && l2f_ids == 1 &&
               l2f_ids <= l2f_class.p_generators * gamma2(l2f).dim(),
           "L2f: dim Z_Lie = 2, dim gamma2 = 1, p = 1, dim ID_* = 1 <= 1*1");

  Algebra r2 = fixture("R2");
  auto r2_class = lie_nilpotency_class(r2);
  const std::size_t r2_ids = id_star(r2).dim();
  c.expect(lie_center(r2).dim() == 1 && gamma2(r2).dim() == 2 && r2_class.p_generators == 3 && r2_ids == 4 &&
               r2_ids <= r2_class.p_generators * gamma2(r2).dim(),
           "R2: dim Z_Lie = 1, dim gamma2 = 2, p = 3, dim ID_* = 4 <= 3*2");
  c.note("R2: p counts dim g/Z_Lie; the minimal algebra-generator count of g/Z_Lie is " +
         std::to_string(r2_class.p_algebra));

  Algebra r21 = fixture("R21");
  const LinearMap ra1 = right_mul(r21, unit_vector(q, 4, 0));
  c.expect(derived_ideal(r21) == units(q, 4, {4}) && gamma2(r21) == units(q, 4, {4}) &&
               lie_center(r21) == units(q, 4, {1, 2, 4}) && classical_centers(r21).right == units(q, 4, {4}),
           "R21: [g,g] = gamma2 = span{a4}, Z_Lie = span{a1,a2,a4}, Z^r = span{a4}");
  c.expect(der_z(r21).contains(ra1) && !id_star(r21).contains(ra1), "R21: R_a1 in Der_z and R_a1 not in ID_*");

  Algebra l2a = fixture("L2a");
  const Subspace a1 = units(q, 3, {1});
  c.expect(derived_ideal(l2a) == a1 && gamma2(l2a) == a1 && lie_center(l2a) == a1 &&
               classical_centers(l2a).right == a1,
           "L2a(1): [g,g] = gamma2 = Z_Lie = Z^r = span{a1}");
  c.expect(status_of(stem_dim_audit(l2a), "id_star.equals_der_z") == Status::pass && id_star(l2a) == der_z(l2a),
           "L2a(1): ID_* = Der_z");

  Algebra l3s = fixture("L3s");
  auto l3s_centers = classical_centers(l3s);
  c.expect(l3s_centers.right == lie_center(l3s) && l3s_centers.left == lie_center(l3s),
           "L3s: Z^r = Z_Lie = Z^l");
  c.expect(is_lie_filiform(l3s) && l3s.dim() == 3 &&
               status_of(stem_dim_audit(l3s), "filiform.bound_dim3") == Status::pass,
           "L3s: filiform, bound attained, n = 3");

  criterion(1, "fixture invariants", c.ok, c.lines);
}

std::vector<Member> build_corpus() {
  std::vector<Member> corpus;
  for (const auto& name : fixture_names()) corpus.push_back({name, fixture(name)});
  struct Part {
    std::size_t dim;
    std::uint32_t p;
    std::uint64_t seed;
  };
  for (Part part : {Part{2, 3, 101}, Part{2, 5, 102}, Part{3, 3, 103}, Part{3, 5, 104}}) {
    const Field f = Field::prime(part.p);
    std::size_t i = 0;
    for (auto& a : generate({part.dim, f, CorpusMode::random, 60, part.seed}))
      corpus.push_back({"gf(" + std::to_string(part.p) + ") n=" + std::to_string(part.dim) + " #" + std::to_string(i++),
                        std::move(a)});
  }
  return corpus;
}

void corpus_audits(const std::vector<Member>& corpus) {
  Conditions c;
  const auto t0 = Clock::now();
  std::map<std::string, Tally> tallies;
  Tally all;
  std::size_t random_members = 0, exact = 0;
  for (const auto& m : corpus) {
    AuditOptions opts;
    opts.isoclinism = false;
    opts.partners = {fixture("LEF", m.algebra.field())};
    for (const auto& ch : full_audit(m.algebra, opts)) {
      tallies[family(ch.id)].add(ch, m.name);
      all.add(ch, m.name);
    }
    if (m.algebra.field().is_finite()) {
      ++random_members;
      exact += der_c(m.algebra).certainty == Certainty::exact;
    }
  }
  Tally pairs;
  const auto names = fixture_names();
  for (const auto& x : names)
    for (const auto& y : names) pairs.add(direct_sum_centroid_check(fixture(x), fixture(y)), x + "+" + y);
  const double secs = ms_since(t0) / 1000.0;

  const std::size_t n = corpus.size();
  c.note(std::to_string(n) + " algebras: " + std::to_string(names.size()) + " fixtures over Q, " +
         std::to_string(random_members) + " random over GF(3) and GF(5), dim 2 and 3");
  c.expect(random_members >= 200, "at least 200 random members");

  auto line = [&](const std::string& id, const std::string& what, std::size_t need) {
    const Tally& t = tallies[id];
    c.expect(t.fail == 0 && t.applicable() >= need, what + " [" + id + "]: " + t.summary());
    for (const auto& f : t.failed) c.note("  " + f);
  };
  line("centroid.der_z_intersection", "Der_z = Der^Lie ∩ Gamma^Lie on every member", n);
  line("nilpotent.abelian_iff_stem", "stem iff Der_z abelian (Lie-nilpotent, gamma2 != 0)", 1);
  line("class2.der_z_abelian", "class 2: Der_z abelian iff gamma2 = Z_Lie", 1);
  line("class2.der_z_center_dim", "class 2: dim Z(Der_z) = dim T(g/Z_Lie, gamma2)", 1);
  line("stem.der_z_dim", "stem: dim Der_z = dim T(g/gamma2, Z_Lie)", 1);
  line("centroid.der_z_v_t", "Der_z = V(gamma2) = T(gamma2) over Q", names.size());
  c.expect(pairs.fail == 0 && pairs.applicable() >= 20,
           "Gamma^Lie additivity on " + std::to_string(pairs.applicable()) + " fixture pairs: " + pairs.summary());
  for (const auto& f : pairs.failed) c.note("  " + f);
  c.expect(exact == random_members, "Der_c exact on " + std::to_string(exact) + "/" + std::to_string(random_members) +
                                        " finite-field members");
  line("chain.der_c_in_id_star", "Der_c ⊆ ID_*", n);
  line("chain.id_star_in_id", "ID_* ⊆ ID", n);
  line("der_c.image", "almost inner: image in gamma2", n);
  line("der_c.kills_center", "almost inner: kills Z_Lie", n);
  line("der_c.preserves_ideals", "almost inner: preserves ideals", n);
  line("der_c.two_step_central", "almost inner: 2-step nilpotent gives Der_cz = Der_c", 1);
  line("der_c.nilpotent_powers", "almost inner: d^c = 0 when Lie-nilpotent of class c", 1);
  line("der_c.nilpotent_algebra", "almost inner: nilpotent Lie algebra of maps", 1);
  line("der_c.direct_sum", "almost inner: additive over direct sums", n);
  {
    const Tally& t = tallies["der_cz.centerless"];
    c.expect(t.fail == 0, "almost inner: Z_Lie = 0 gives Der_cz in R(g) [der_cz.centerless]: " + t.summary() +
                              (t.applicable() == 0 ? " (no member has Z_Lie = 0)" : ""));
  }
  c.note("Lie-perfect ideals invariant [centroid.perfect_invariant]: " + tallies["centroid.perfect_invariant"].summary() +
         " (a nonzero ideal m with [m, m]_Lie = m would lie in g^ann, where the Lie bracket vanishes)");
  c.expect(all.fail == 0, "every audit check over the corpus: " + all.summary());
  for (std::size_t i = 0; i < all.failed.size() && i < 10; ++i) c.note("  " + all.failed[i]);
  c.expect(secs < 60.0, "runtime " + std::to_string(secs) + " s < 60 s");
  criterion(2, "theorem audits on the corpus", c.ok, c.lines);
}

void oracle_equivalence() {
  Conditions c;
  std::size_t checked = 0, mismatches = 0;
  auto compare = [&](const Algebra& a) {
    ++checked;
    if (!(der_lie(a) == oracle_der_lie(a))) ++mismatches;
  };
  const Field f3 = Field::prime(3);
  std::size_t small = 0;
  for (std::size_t n : {1, 2})
    generate({n, f3, CorpusMode::exhaustive, 0, 1}, [&](const Algebra& a) {
      compare(a);
      ++small;
      return true;
    });
  for (const auto& a : generate({3, f3, CorpusMode::random, 50, 303})) compare(a);
  c.expect(small == 42, "every algebra of dim 1 and 2 over GF(3): " + std::to_string(small));
  c.expect(checked == small + 50, "plus 50 random of dim 3 over GF(3)");
  c.expect(mismatches == 0, std::to_string(mismatches) + " mismatches in " + std::to_string(checked));
  criterion(3, "Der^Lie against exhaustive enumeration", c.ok, c.lines);
}

void isoclinism() {
  Conditions c;
  std::size_t witnesses = 0, witness_ok = 0, invariants = 0, invariants_ok = 0;
  for (const auto& name : fixture_names()) {
    Algebra a = fixture(name);
    ++witnesses;
    witness_ok += verify_isoclinism(a, a, identity_witness(a));
    const auto base = isoclinism_invariants(a);
    for (std::size_t k = 1; k <= 3; ++k) {
      Algebra padded = direct_sum(a, Algebra::abelian(k, a.field()));
      ++witnesses;
      witness_ok += verify_isoclinism(a, padded, padding_witness(a, k));
      ++invariants;
      const bool same = isoclinism_invariants(padded) == base;
      invariants_ok += same;
      if (!same) c.note(name + " + abelian(" + std::to_string(k) + "): invariants differ");
    }
  }
  c.expect(witness_ok == witnesses, "identity and padding witnesses accepted: " + std::to_string(witness_ok) + "/" +
                                        std::to_string(witnesses));
  c.expect(invariants_ok == invariants, "invariants (incl. dim ID_*) agree with A + abelian(k), k = 1..3: " +
                                            std::to_string(invariants_ok) + "/" + std::to_string(invariants));
  criterion(4, "isoclinism witnesses and invariants", c.ok, c.lines);
}

void k_lemma(const std::vector<Member>& corpus) {
  Conditions c;
  std::size_t eligible = 0, equal = 0;
  std::vector<std::string> discrepancies;
  for (const auto& m : corpus) {
    if (lie_nilpotency_class(m.algebra).class_c != 2) continue;
    Subspace k(m.algebra.field(), 0);
    try {
      k = k_intersection(m.algebra);
    } catch (const TargetNotAbelian&) {
      continue;
    }
    ++eligible;
    const Subspace g2 = gamma2(m.algebra);
    if (k == g2) ++equal;
    else
      discrepancies.push_back(m.name + ": dim K = " + std::to_string(k.dim()) + ", dim gamma2 = " +
                              std::to_string(g2.dim()) + ", dim [g,g] = " + std::to_string(derived_ideal(m.algebra).dim()));
  }
  c.expect(eligible > 0, "class-2 members with abelian gamma2: " + std::to_string(eligible));
  c.note("K = gamma2 on " + std::to_string(equal) + ", K != gamma2 on " + std::to_string(discrepancies.size()) +
         " (logged, not failed)");
  for (std::size_t i = 0; i < discrepancies.size(); ++i) {
    if (i == 8) {
      c.note("  ... " + std::to_string(discrepancies.size() - i) + " more");
      break;
    }
    c.note("  " + discrepancies[i]);
  }
  criterion(5, "common kernel K of homomorphisms into gamma2", c.ok, c.lines);
}

void determinism() {
  Conditions c;
  auto run = [] {
    const char* argv[] = {"leiblab", "report", "--fixture", "R2", "--json", "--seed", "7"};
    std::ostringstream out, err;
    const int code = cli_main(7, argv, out, err);
    return std::make_pair(code, out.str());
  };
  const auto a = run(), b = run();
  c.expect(a.first == 0 && b.first == 0, "both runs exit 0");
  c.expect(!a.second.empty() && a.second == b.second,
           "byte-identical output (" + std::to_string(a.second.size()) + " bytes)");
  criterion(6, "report --fixture R2 --json --seed 7 is deterministic", c.ok, c.lines);
}

}  // namespace

int main() {
  try {
    fixture_invariants();
    const auto corpus = build_corpus();
    corpus_audits(corpus);
    oracle_equivalence();
    isoclinism();
    k_lemma(corpus);
    determinism();
  } catch (const std::exception& e) {
    std::cout << "FAIL  acceptance aborted: " << e.what() << "\n";
    return 1;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
  return failures == 0 ? 0 : 1;
}
