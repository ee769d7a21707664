#pragma once

// JSON instance files and reports.
//
// Instance document:
//   {
//     "name": "...", "description": "...",          (optional)
//     "geometry": "euclidean" | "hyperbolic",
//     "faces": [{"id": "f0", "n": 4}, ...],         ("n" optional)
//     "vertices": ["v0", ...],                      (optional)
//     "edges": [{"id": "e0", "sides": ["f0", "f1"], "D": 1.5707963267948966,
//                "endpoints": ["v0", "v1"]}, ...],  ("endpoints" optional)
//     "cone_angles": {"f0": 6.283185307179586, ...}
//   }
// Angles are radians when given as numbers. Strings hold a number with an
// optional unit suffix, "deg" or "rad" ("90deg", "1.5rad").

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "json.hpp"

#include "circlepat/complex.hpp"
#include "circlepat/feasibility.hpp"
#include "circlepat/solver.hpp"

namespace circlepat::io {

struct SourceLocation {
  int line = 0;
  int column = 0;
};

/// Parsed JSON plus the position of every value, keyed by JSON pointer.
struct LocatedJson {
  nlohmann::json value;
  std::map<std::string, SourceLocation> locations;
  std::vector<std::string> duplicate_keys;  // "pointer" of each repeated key
};

/// Throws InputError with "source:line:col: ..." on malformed text.
LocatedJson parse_located(std::string_view text, std::string_view source = "<input>");

/// Radians from a number, or from a string such as "90deg" or "0.5rad".
/// Throws InputError on anything else.
double parse_angle(const nlohmann::json& value);

PatternProblem parse_problem(std::string_view text, std::string_view source = "<input>");
PatternProblem load_problem(const std::filesystem::path& path);

nlohmann::ordered_json problem_to_json(const PatternProblem& problem);
/// Pretty-printed instance document; parse_problem(emit_problem(p)) reproduces p.
std::string emit_problem(const PatternProblem& problem);

/// Field-by-field equality, with exact comparison of all angles.
bool same_problem(const PatternProblem& a, const PatternProblem& b);

nlohmann::ordered_json feasibility_to_json(const PatternProblem& problem, const FeasibilityReport& report);
nlohmann::ordered_json report_to_json(const PatternProblem& problem, const SolveReport& report,
                                      const FeasibilityReport* feasibility = nullptr);

/// Rebuilds a report from its JSON form. Angles and lengths are recomputed from
/// the stored radii so that they match the problem exactly.
SolveReport report_from_json(const PatternProblem& problem, const nlohmann::json& doc);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace circlepat::io
