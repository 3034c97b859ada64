#pragma once

// JSON reports behind the command-line tool. Every report carries
// schema, command, params, result, audit, checks and status keys.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "hilbk3/cohomology.hpp"
#include "hilbk3/linalg.hpp"

namespace hilbk3::report {

using json = nlohmann::json;

inline constexpr const char* kSchema = "hilbk3.report/1";

json betti(int n, const SurfaceBetti& surface, std::optional<int> max_degree = std::nullopt);
json certify(int n, const std::optional<Matrix>& gram = std::nullopt,
             std::optional<std::uint64_t> seed = std::nullopt);
json ideals(int N);
json punctual(int i);
json strata(int n);
json frobenius(std::optional<std::size_t> dim_v, int n, const std::optional<Matrix>& gram = std::nullopt,
               std::optional<std::uint64_t> seed = std::nullopt);

/// Structured payload for a failed command; status "error".
json error(const std::string& command, const json& params, const std::string& message);

/// True when status is "ok".
bool succeeded(const json& report);

/// {"dim": d, "rows": [["p/q", ...], ...]}; validates shape and symmetry.
Matrix parse_gram(const json& j);
Matrix load_gram_file(const std::string& path);

/// "b0,b2,b4", e.g. "1,22,1".
SurfaceBetti parse_surface(const std::string& text);

/// U + ... + U (+ <1> in odd dimension): split, so rational isotropic vectors exist.
Matrix split_form(std::size_t dim);

/// Plain-text rendering of a report.
std::string render_table(const json& report);

}  // namespace hilbk3::report
