#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bier/bier_sphere.hpp"
#include "bier/building.hpp"
#include "bier/char_matrix.hpp"
#include "bier/classify.hpp"
#include "bier/toric.hpp"

namespace bier::io {

using nlohmann::json;

/// Reads and parses a JSON file; ParseError on I/O or syntax failure.
json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// {"m": int, "facets": [[int, ...], ...]}
json to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const json& j);

/// Complex JSON plus {"source_m": int, "side_labels": true}.
json to_json(const BierSphere& s);
BierSphere sphere_from_json(const json& j);

/// {"n_plus_1": int, "elements": [[int, ...], ...]}; axioms validated on load.
json to_json(const BuildingSet& b);
BuildingSet building_set_from_json(const json& j);

/// {"rows": n, "cols": m, "entries": [[int, ...], ...], "labels": [string, ...]}
json to_json(const CharMatrix& c);
CharMatrix char_matrix_from_json(const json& j);

std::string to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

/// Exact realization: coordinates and right-hand sides as reduced fractions.
json to_json(const Realization& r);
Realization realization_from_json(const json& j);

/// OFF export of a 3-dimensional realization in the chart dropping the last
/// coordinate. Exact coordinates go into "# vertex i: p/q ..." comment lines,
/// decimal approximations into the body. Faces are oriented outward.
std::string to_off(const Realization& r);

struct OffMesh {
  std::vector<std::vector<Rational>> vertices;  ///< exact, from the comment lines
  std::vector<std::vector<int>> faces;          ///< 0-based vertex indices
};
OffMesh parse_off(std::istream& in);

/// Generators "v1".."vm", monomials as generator-name lists, linear forms
/// "t_i" as coefficient rows, Betti numbers.
json to_json(const CohomologyPresentation& p);

/// classes.json contents.
json to_json(const ClassificationReport& r);
/// Markdown tables of classes, f/h-vectors and minimal non-faces.
std::string report_markdown(const ClassificationReport& r);
/// Writes classes.json, report.md and class_NN.json per representative.
void write_classification(const ClassificationReport& r, const std::filesystem::path& dir);

}  // namespace bier::io
