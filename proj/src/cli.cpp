#include "leiblab/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "leiblab/audit.hpp"
#include "leiblab/catalog.hpp"
#include "leiblab/corpus.hpp"
#include "leiblab/errors.hpp"
#include "leiblab/isoclinism.hpp"
#include "leiblab/map_spaces.hpp"

namespace leiblab {

namespace {

using nlohmann::json;

constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kInvalid = 3;

struct Source {
  std::string file;
  std::string fixture;
  std::string field = "rational";
  std::string gamma;

  void add_to(CLI::App* app) {
    app->add_option("file", file, "algebra file (JSON)");
    app->add_option("--fixture", fixture, "built-in fixture: LEF, L2c, L2a, L2f, R21, R2, L3s");
    app->add_option("--field", field, "field for fixtures: rational or gf(p)");
    app->add_option("--gamma", gamma, "parameter of L2a");
  }

  bool given() const { return !file.empty() || !fixture.empty(); }

  Algebra load() const {
    if (!file.empty() && !fixture.empty()) throw CLI::ValidationError("give either a file or --fixture, not both");
    if (!file.empty()) return parse_algebra_file(file);
    if (fixture.empty()) throw CLI::RequiredError("a file or --fixture");
    const Field f = Field::parse(field);
    std::optional<Scalar> g;
    if (!gamma.empty()) g = Field::rationals().parse_scalar(gamma);
    return leiblab::fixture(fixture, f, g);
  }
};

struct Sampling {
  std::optional<std::uint64_t> seed;
  std::size_t samples = kDefaultSamples;

  void add_to(CLI::App* app) {
    app->add_option("--seed", seed, "random seed (falls back to LEIBLAB_SEED, then 1)");
    app->add_option("--samples", samples, "random points for almost inner derivations when the exact method does not apply");
  }

  std::uint64_t resolved_seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("LEIBLAB_SEED")) {
      try {
        return std::stoull(env);
      } catch (const std::exception&) {
        throw CLI::ValidationError("LEIBLAB_SEED must be a non-negative integer");
      }
    }
    return kDefaultSeed;
  }
};

Matrix matrix_from_json(const json& m, const Field& f, const std::string& what) {
  if (!m.is_array()) throw ParseError(what + ": expected an array of rows");
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  Matrix out(rows, cols, f);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!m[r].is_array() || m[r].size() != cols) throw ParseError(what + ": rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      const json& v = m[r][c];
      std::string text = v.is_string() ? v.get<std::string>() : v.is_number_integer() ? v.dump() : "";
      if (text.empty()) throw ParseError(what + ": entries must be strings or integers");
      out(r, c) = f.parse_scalar(text);
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Tally {
  std::size_t pass = 0, fail = 0, skipped = 0, noted = 0;
  void add(const std::vector<Check>& cs) {
    for (const auto& c : cs) {
      switch (c.status) {
        case Status::pass: ++pass; break;
        case Status::fail: ++fail; break;
        case Status::skipped: ++skipped; break;
        case Status::noted: ++noted; break;
      }
    }
  }
  std::string text() const {
    return "pass " + std::to_string(pass) + ", fail " + std::to_string(fail) + ", skipped " +
           std::to_string(skipped) + ", noted " + std::to_string(noted);
  }
};

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structure computations for finite-dimensional Leibniz algebras", "leiblab"};
  app.require_subcommand(1);

  Source src;
  Sampling smp;
  bool as_json = false, no_audit = false;
  auto* report_cmd = app.add_subcommand("report", "structural report of one algebra");
  src.add_to(report_cmd);
  smp.add_to(report_cmd);
  report_cmd->add_flag("--json", as_json, "machine-readable output");
  report_cmd->add_flag("--no-audit", no_audit, "skip the theorem audit");

  Source audit_src;
  Sampling audit_smp;
  bool all_fixtures = false, audit_json = false;
  auto* audit_cmd = app.add_subcommand("audit", "run every structural check; exit 1 on any failure");
  audit_src.add_to(audit_cmd);
  audit_smp.add_to(audit_cmd);
  audit_cmd->add_flag("--all-fixtures", all_fixtures, "audit every built-in fixture");
  audit_cmd->add_flag("--json", audit_json, "machine-readable output");

  std::size_t c_dim = 2, c_count = 0;
  std::string c_field = "gf(3)", c_mode = "random", c_check = "none";
  std::uint64_t c_seed = kDefaultSeed;
  bool c_emit = false;
  auto* corpus_cmd = app.add_subcommand("corpus", "generate small algebras over a prime field and check them");
  corpus_cmd->add_option("--dim", c_dim, "dimension")->required();
  corpus_cmd->add_option("--field", c_field, "gf(p) with p odd");
  corpus_cmd->add_option("--mode", c_mode, "exhaustive or random")->check(CLI::IsMember({"exhaustive", "random"}));
  corpus_cmd->add_option("--count", c_count, "algebras to produce (exhaustive: cap, 0 for all)");
  corpus_cmd->add_option("--seed", c_seed, "random seed");
  corpus_cmd->add_option("--check", c_check, "der-oracle, theorems or none")
      ->check(CLI::IsMember({"der-oracle", "theorems", "none"}));
  corpus_cmd->add_flag("--emit", c_emit, "print each algebra as one line of JSON");

  std::vector<std::string> iso_files;
  auto* iso_cmd = app.add_subcommand("isoclinic", "check a Lie-isoclinism witness");
  iso_cmd->add_option("--verify", iso_files, "A.json B.json witness.json")->expected(3)->required();

  Source lie_src;
  auto* lie_cmd = app.add_subcommand("liezation", "print the quotient by g^ann");
  lie_src.add_to(lie_cmd);

  Source fix_src;
  auto* fix_cmd = app.add_subcommand("fixture", "print a fixture in the algebra file format");
  fix_cmd->add_option("name", fix_src.fixture, "fixture name")->required();
  fix_cmd->add_option("--field", fix_src.field, "rational or gf(p)");
  fix_cmd->add_option("--gamma", fix_src.gamma, "parameter of L2a");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return 0;
    return kUsage;
  }

  try {
    if (report_cmd->parsed()) {
      ReportOptions opts;
      opts.samples = smp.samples;
      opts.seed = smp.resolved_seed();
      opts.audit = !no_audit;
      const Algebra a = src.load();
      opts.partners = {fixture("L3s", a.field())};
      const json r = report(a, opts);
      if (as_json) out << r.dump(2) << "\n";
      else out << report_text(r);
      return r.value("audit_ok", true) ? 0 : kCheckFailed;
    }

    if (audit_cmd->parsed()) {
      AuditOptions opts;
      opts.samples = audit_smp.samples;
      opts.seed = audit_smp.resolved_seed();
      std::vector<std::pair<std::string, Algebra>> targets;
      if (all_fixtures) {
        if (audit_src.given()) throw CLI::ValidationError("--all-fixtures takes no other algebra");
        const Field f = Field::parse(audit_src.field);
        for (const auto& name : fixture_names()) targets.emplace_back(name, fixture(name, f));
      } else {
        Algebra a = audit_src.load();
        targets.emplace_back(audit_src.file.empty() ? audit_src.fixture : audit_src.file, std::move(a));
      }
      bool ok = true;
      json doc = json::object();
      Tally total;
      for (const auto& [name, a] : targets) {
        opts.partners = {fixture("L3s", a.field())};
        auto checks = full_audit(a, opts);
        if (all_fixtures)
          for (const auto& [other, b] : targets) checks.push_back(direct_sum_centroid_check(a, b));
        ok = ok && all_ok(checks);
        total.add(checks);
        if (audit_json) {
          doc[name] = checks_to_json(checks);
        } else {
          out << "== " << name << "\n" << checks_text(checks) << "\n";
        }
      }
      if (audit_json) out << json{{"schema", 1}, {"audits", doc}, {"ok", ok}}.dump(2) << "\n";
      else out << "summary: " << total.text() << "\n";
      return ok ? 0 : kCheckFailed;
    }

    if (corpus_cmd->parsed()) {
      const Field f = Field::parse(c_field);
      if (!f.is_finite()) throw CLI::ValidationError("--field must be gf(p)");
      if (c_mode == "random" && c_count == 0) c_count = 100;
      CorpusSpec spec{c_dim, f, c_mode == "exhaustive" ? CorpusMode::exhaustive : CorpusMode::random, c_count,
                      c_seed};
      std::size_t produced = 0, mismatches = 0, failing = 0;
      Tally tally;
      AuditOptions opts;
      opts.isoclinism = false;
      opts.partners = {fixture("LEF", f)};
      const CorpusStats stats = generate(spec, [&](const Algebra& a) {
        ++produced;
        if (c_emit) out << to_json(a).dump() << "\n";
        if (c_check == "der-oracle") {
          if (!(oracle_der_lie(a) == der_lie(a))) {
            ++mismatches;
            out << "mismatch: " << to_json(a).dump() << "\n";
          }
        } else if (c_check == "theorems") {
          const auto checks = full_audit(a, opts);
          tally.add(checks);
          if (!all_ok(checks)) {
            ++failing;
            out << "failing algebra: " << to_json(a).dump() << "\n";
            for (const auto& c : checks)
              if (c.status == Status::fail) out << "  " << c.id << ": " << c.claim << " [" << c.detail << "]\n";
          }
        }
        return true;
      });
      out << "algebras: " << produced << ", attempts: " << stats.attempts << ", acceptance rate: "
          << stats.acceptance_rate() << "\n";
      if (c_check == "der-oracle") out << "der-oracle mismatches: " << mismatches << "\n";
      if (c_check == "theorems") out << "checks: " << tally.text() << ", failing algebras: " << failing << "\n";
      return mismatches == 0 && failing == 0 ? 0 : kCheckFailed;
    }

    if (iso_cmd->parsed()) {
      const Algebra a = parse_algebra_file(iso_files[0]);
      const Algebra b = parse_algebra_file(iso_files[1]);
      if (!(a.field() == b.field())) throw FieldMismatch("the two algebras are over different fields");
      json w;
      try {
        w = json::parse(read_file(iso_files[2]));
      } catch (const json::parse_error& e) {
        throw ParseError(iso_files[2] + ": " + e.what());
      }
      if (!w.is_object() || !w.contains("eta") || !w.contains("xi"))
        throw ParseError(iso_files[2] + ": expected {\"eta\": [[...]], \"xi\": [[...]]}");
      const IsoclinismWitness wit{matrix_from_json(w["eta"], a.field(), "eta"),
                                  matrix_from_json(w["xi"], a.field(), "xi")};
      const bool ok = verify_isoclinism(a, b, wit);
      out << (ok ? "isoclinic" : "not a Lie-isoclinism") << "\n";
      return ok ? 0 : kCheckFailed;
    }

    if (lie_cmd->parsed()) {
      out << serialize_algebra(liezation(lie_src.load()).algebra);
      return 0;
    }

    if (fix_cmd->parsed()) {
      out << serialize_algebra(fix_src.load());
      return 0;
    }
  } catch (const CLI::Error& e) {
    err << "leiblab: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownFixture& e) {
    err << "leiblab: " << e.what() << "\n";
    return kUsage;
  } catch (const SpecTooLarge& e) {
    err << "leiblab: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "leiblab: " << e.what() << "\n";
    return kInvalid;
  }
  return kUsage;
}

}  // namespace leiblab
