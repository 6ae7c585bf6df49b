#include "leiblab/catalog.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "leiblab/audit.hpp"
#include "leiblab/central_series.hpp"
#include "leiblab/errors.hpp"
#include "leiblab/map_spaces.hpp"

namespace leiblab {

using nlohmann::json;

namespace {

struct Entry {
  std::size_t i, j, k;
  std::int64_t c;
};

Algebra make(std::size_t n, const Field& f, std::initializer_list<Entry> es, std::vector<std::string> labels = {}) {
  std::vector<BracketEntry> out;
  for (const auto& e : es) out.push_back({e.i - 1, e.j - 1, e.k - 1, f.from_int(e.c)});
  return Algebra::build(n, f, out, std::move(labels));
}

std::vector<std::string> a_labels(std::size_t n) {
  std::vector<std::string> l;
  for (std::size_t i = 1; i <= n; ++i) l.push_back("a" + std::to_string(i));
  return l;
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

json basis_json(const Subspace& s) {
  json out = json::array();
  for (const auto& v : s.basis()) out.push_back(vector_json(v));
  return out;
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

std::size_t index_of(const json& v, std::size_t dim, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected an integer index");
  const auto i = v.get<std::int64_t>();
  if (i < 1 || static_cast<std::size_t>(i) > dim)
    fail(where, "index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
  return static_cast<std::size_t>(i - 1);
}

Scalar coefficient(const Field& f, const json& v, const std::string& where) {
  std::string text;
  if (v.is_string()) text = v.get<std::string>();
  else if (v.is_number_integer()) text = std::to_string(v.get<std::int64_t>());
  else fail(where, "coefficient must be a string or an integer");
  try {
    return f.parse_scalar(text);
  } catch (const ParseError& e) {
    fail(where, e.what());
  } catch (const DivisionByZero& e) {
    fail(where, e.what());
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"LEF", "L2c", "L2a", "L2f", "R21", "R2", "L3s"};
  return names;
}

Algebra fixture(std::string_view name, const Field& f, std::optional<Scalar> gamma) {
  std::string key(name);
  if (key.rfind("L2a(", 0) == 0 && key.back() == ')') {
    if (!gamma) gamma = Field::rationals().parse_scalar(key.substr(4, key.size() - 5));
    key = "L2a";
  }
  if (key == "LEF") return make(2, f, {{1, 2, 1, 1}, {2, 1, 1, -1}}, {"e", "f"});
  if (key == "L2c") return make(3, f, {{2, 2, 1, 1}, {3, 3, 1, 1}}, a_labels(3));
  if (key == "L2a") {
    Scalar g = f.coerce(gamma.value_or(f.one()));
    std::vector<BracketEntry> es{{1, 1, 0, g}, {2, 1, 0, f.one()}, {2, 2, 0, f.one()}};
    return Algebra::build(3, f, es, a_labels(3));
  }
  if (key == "L2f") return make(3, f, {{2, 3, 2, 1}, {3, 2, 2, -1}, {3, 3, 1, 1}}, a_labels(3));
  if (key == "R21") return make(4, f, {{1, 2, 4, 1}, {2, 1, 4, -1}, {3, 3, 4, 1}}, a_labels(4));
  if (key == "R2") return make(4, f, {{1, 4, 1, 1}, {2, 4, 2, 1}}, a_labels(4));
  if (key == "L3s") return make(3, f, {{3, 3, 1, 1}}, a_labels(3));
  throw UnknownFixture(std::string(name));
}

Algebra parse_algebra(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) fail("document", "expected a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<std::int64_t>() < 0)
    fail("dim", "expected a non-negative integer");
  const auto n = static_cast<std::size_t>(doc["dim"].get<std::int64_t>());
  if (!doc.contains("field") || !doc["field"].is_string()) fail("field", "expected \"rational\" or \"gf(p)\"");
  const Field f = Field::parse(doc["field"].get<std::string>());

  std::vector<std::string> labels;
  if (doc.contains("basis")) {
    const json& b = doc["basis"];
    if (!b.is_array() || b.size() != n) fail("basis", "expected " + std::to_string(n) + " names");
    for (const auto& name : b) {
      if (!name.is_string()) fail("basis", "names must be strings");
      labels.push_back(name.get<std::string>());
    }
  }

  std::vector<BracketEntry> entries;
  if (doc.contains("brackets")) {
    const json& br = doc["brackets"];
    if (!br.is_array()) fail("brackets", "expected an array");
    for (std::size_t r = 0; r < br.size(); ++r) {
      const std::string where = "brackets[" + std::to_string(r) + "]";
      const json& row = br[r];
      if (!row.is_array() || row.size() != 3 || !row[2].is_array()) fail(where, "expected [i, j, [[k, coeff], ...]]");
      const std::size_t i = index_of(row[0], n, where);
      const std::size_t j = index_of(row[1], n, where);
      for (std::size_t t = 0; t < row[2].size(); ++t) {
        const std::string w = where + "[" + std::to_string(t) + "]";
        const json& term = row[2][t];
        if (!term.is_array() || term.size() != 2) fail(w, "expected [k, coeff]");
        entries.push_back({i, j, index_of(term[0], n, w), coefficient(f, term[1], w)});
      }
    }
  }
  return Algebra::build(n, f, entries, labels);
}

Algebra parse_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_algebra(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json to_json(const Algebra& a) {
  std::map<std::pair<std::size_t, std::size_t>, json> rows;
  for (const auto& e : a.sparse()) {
    auto& terms = rows[{e.i, e.j}];
    if (terms.is_null()) terms = json::array();
    terms.push_back(json::array({e.k + 1, e.coeff.to_string()}));
  }
  json brackets = json::array();
  for (auto& [ij, terms] : rows) brackets.push_back(json::array({ij.first + 1, ij.second + 1, terms}));
  return json{{"dim", a.dim()}, {"field", a.field().name()}, {"basis", a.labels()}, {"brackets", brackets}};
}

std::string serialize_algebra(const Algebra& a) { return to_json(a).dump(2) + "\n"; }

json checks_to_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks)
    out.push_back({{"id", c.id}, {"claim", c.claim}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return out;
}

std::string checks_text(const std::vector<Check>& checks) {
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.id.size());
  std::ostringstream os;
  for (const auto& c : checks) {
    os << std::left << std::setw(8) << to_string(c.status) << std::setw(static_cast<int>(width) + 2) << c.id
       << c.claim;
    if (!c.detail.empty()) os << " [" << c.detail << "]";
    os << "\n";
  }
  return os.str();
}

json report(const Algebra& a, const ReportOptions& opts) {
  const Subspace ann = ann_ideal(a), z = lie_center(a), g2 = gamma2(a), derived = derived_ideal(a);
  const auto centers = classical_centers(a);
  const auto lower = lower_lie_series(a), upper = upper_lie_series(a);
  const auto cls = lie_nilpotency_class(a);
  const MapSpace dabs = der_abs(a), dlie = der_lie(a), dz = der_z(a), cen = centroid_lie(a), id = id_lie(a),
                 ids = id_star(a);
  const SampledSpace dc = der_c(a, opts.samples, opts.seed);
  const SampledSpace dcz = der_cz_from(a, dc);

  json r;
  r["schema"] = 1;
  r["algebra"] = to_json(a);
  r["dim"] = a.dim();
  r["field"] = a.field().name();
  r["seed"] = opts.seed;
  r["samples"] = opts.samples;
  r["is_lie"] = a.is_lie();

  r["ann_dim"] = ann.dim();
  r["z_lie_dim"] = z.dim();
  r["z_left_dim"] = centers.left.dim();
  r["z_right_dim"] = centers.right.dim();
  r["z_dim"] = centers.center.dim();
  r["z_left_is_subalgebra"] = centers.left_is_subalgebra;
  r["derived_dim"] = derived.dim();
  r["gamma2_dim"] = g2.dim();
  r["lower_series_dims"] = lower.dims();
  r["upper_series_dims"] = upper.dims();

  r["nilpotent"] = cls.nilpotent;
  r["class"] = cls.class_c ? json(*cls.class_c) : json(nullptr);
  r["stem"] = cls.stem;
  r["filiform"] = cls.filiform;
  r["series_agree"] = cls.series_agree;
  r["p"] = cls.p_generators;
  r["p_algebra"] = cls.p_algebra;
  r["p_algebra_method"] = to_string(cls.method);
  r["p_times_gamma2_dim"] = cls.p_generators * g2.dim();

  r["der_abs_dim"] = dabs.dim();
  r["der_lie_dim"] = dlie.dim();
  r["der_z_dim"] = dz.dim();
  r["der_z_abelian"] = is_abelian(dz);
  r["centroid_dim"] = cen.dim();
  r["id_lie_dim"] = id.dim();
  r["id_star_dim"] = ids.dim();
  r["der_c"] = {{"dim", dc.space.dim()},
                {"certainty", to_string(dc.certainty)},
                {"samples", dc.samples},
                {"stabilized_after", dc.stabilized_after},
                {"closed", dc.space.closed_under_commutator()}};
  r["der_cz"] = {{"dim", dcz.space.dim()},
                 {"certainty", to_string(dcz.certainty)},
                 {"closed", dcz.space.closed_under_commutator()}};

  r["subspaces"] = {{"ann", basis_json(ann)},           {"z_lie", basis_json(z)},
                    {"z_left", basis_json(centers.left)}, {"z_right", basis_json(centers.right)},
                    {"z", basis_json(centers.center)},    {"derived", basis_json(derived)},
                    {"gamma2", basis_json(g2)}};

  if (opts.audit) {
    AuditOptions ao;
    ao.samples = opts.samples;
    ao.seed = opts.seed;
    ao.partners = opts.partners;
    const auto checks = full_audit(a, ao);
    r["audit"] = checks_to_json(checks);
    r["audit_ok"] = all_ok(checks);
  }
  return r;
}

std::string report_text(const json& r) {
  std::ostringstream os;
  auto line = [&](const std::string& k, const std::string& v) { os << std::left << std::setw(22) << k << v << "\n"; };
  auto dims = [](const json& a) {
    std::string s;
    for (const auto& d : a) s += (s.empty() ? "" : " > ") + std::to_string(d.get<std::size_t>());
    return s;
  };
  line("dimension", std::to_string(r["dim"].get<std::size_t>()) + " over " + r["field"].get<std::string>());
  line("Lie algebra", yes_no(r["is_lie"].get<bool>()));
  line("dim g^ann", std::to_string(r["ann_dim"].get<std::size_t>()));
  line("dim [g,g]", std::to_string(r["derived_dim"].get<std::size_t>()));
  line("dim gamma2^Lie", std::to_string(r["gamma2_dim"].get<std::size_t>()));
  line("dim Z_Lie", std::to_string(r["z_lie_dim"].get<std::size_t>()));
  line("dim Z^l / Z^r / Z", std::to_string(r["z_left_dim"].get<std::size_t>()) + " / " +
                                std::to_string(r["z_right_dim"].get<std::size_t>()) + " / " +
                                std::to_string(r["z_dim"].get<std::size_t>()));
  line("lower series", dims(r["lower_series_dims"]));
  line("upper series", dims(r["upper_series_dims"]));
  line("Lie-nilpotent", r["nilpotent"].get<bool>() ? "yes, class " + std::to_string(r["class"].get<std::size_t>())
                                                   : "no");
  line("Lie-stem", yes_no(r["stem"].get<bool>()));
  line("Lie-filiform", yes_no(r["filiform"].get<bool>()));
  line("p = dim g/Z_Lie", std::to_string(r["p"].get<std::size_t>()));
  line("algebra generators", std::to_string(r["p_algebra"].get<std::size_t>()) + " (" +
                                 r["p_algebra_method"].get<std::string>() + ")");
  line("dim Der", std::to_string(r["der_abs_dim"].get<std::size_t>()));
  line("dim Der^Lie", std::to_string(r["der_lie_dim"].get<std::size_t>()));
  line("dim Der_z", std::to_string(r["der_z_dim"].get<std::size_t>()) +
                        (r["der_z_abelian"].get<bool>() ? " (abelian)" : " (not abelian)"));
  line("dim Gamma^Lie", std::to_string(r["centroid_dim"].get<std::size_t>()));
  line("dim ID", std::to_string(r["id_lie_dim"].get<std::size_t>()));
  line("dim ID_*", std::to_string(r["id_star_dim"].get<std::size_t>()));
  line("dim Der_c", std::to_string(r["der_c"]["dim"].get<std::size_t>()) + " (" +
                        r["der_c"]["certainty"].get<std::string>() + ")");
  line("dim Der_cz", std::to_string(r["der_cz"]["dim"].get<std::size_t>()));
  if (r.contains("audit")) {
    os << "\naudit\n";
    std::vector<Check> checks;
    for (const auto& c : r["audit"]) {
      const std::string s = c["status"].get<std::string>();
      Status st = s == "pass" ? Status::pass : s == "fail" ? Status::fail : s == "noted" ? Status::noted
                                                                                         : Status::skipped;
      checks.push_back({c["id"], c["claim"], st, c["detail"]});
    }
    os << checks_text(checks);
  }
  return os.str();
}

}  // namespace leiblab
