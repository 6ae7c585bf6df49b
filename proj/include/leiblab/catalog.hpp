#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "leiblab/algebra.hpp"
#include "leiblab/checks.hpp"
#include "leiblab/inner_maps.hpp"

namespace leiblab {

/// Names accepted by fixture(): LEF, L2c, L2a, L2f, R21, R2, L3s.
const std::vector<std::string>& fixture_names();

/// Built directly over `field`.
/// "L2a(g)" with a rational g is accepted as well; `gamma` overrides it.
/// Throws UnknownFixture.
Algebra fixture(std::string_view name, const Field& field = Field::rationals(),
                std::optional<Scalar> gamma = std::nullopt);

/// {"dim", "field", "basis", "brackets": [[i, j, [[k, "coeff"], ...]], ...]}, 1-based.
/// Throws ParseError, LeibnizViolation, Char2Field, InvalidField.
Algebra parse_algebra(std::string_view text);
Algebra parse_algebra_file(const std::string& path);
nlohmann::json to_json(const Algebra& a);
std::string serialize_algebra(const Algebra& a);

struct ReportOptions {
  std::size_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  bool audit = true;
  std::vector<Algebra> partners;
};

/// Full structural record; the JSON form has sorted keys and "schema": 1.
nlohmann::json report(const Algebra& a, const ReportOptions& opts = {});
std::string report_text(const nlohmann::json& r);

nlohmann::json checks_to_json(const std::vector<Check>& checks);
/// One aligned line per check.
std::string checks_text(const std::vector<Check>& checks);

}  // namespace leiblab
