#include "bier/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>

#include "bier/error.hpp"

namespace bier::catalog {

namespace {

void check_index(int i) {
  if (i < 1 || i > kCensusSize) throw DomainError("census index must be in 1..13, got " + std::to_string(i));
}

void check_nestohedral(int i) {
  check_index(i);
  if (i == kNonNestohedral) throw DomainError("P_6 has no building set");
}

const std::array<std::vector<std::string>, kCensusSize> kMf{{
    {"x1x2", "x1x3", "x1x4", "x2x3", "x2x4", "x3x4", "y2y3y4", "y1y3y4", "y1y2y4", "y1y2y3", "x1y1", "x2y2", "x3y3", "x4y4"},
    {"x3x4", "x1x3", "x1x4", "x2x4", "x2x3", "y3y4", "y1y2y4", "y1y2y3", "x1y1", "x2y2", "x3y3", "x4y4"},
    {"x3x4", "x1x3", "x1x4", "x2x4", "y3y4", "y1y4", "y1y2y3", "x1y1", "x2y2", "x3y3", "x4y4"},
    {"x2x3", "x1x3", "x1x4", "x2x4", "y3y4", "y1y2", "x1y1", "x2y2", "x3y3", "x4y4"},
    {"x3x4", "x2x3", "x2x4", "y3y4", "y2y4", "y2y3", "x1y1", "x2y2", "x3y3", "x4y4"},
    {"x1x2x3", "x2x4", "x3x4", "x1x4", "y3y4", "y2y4", "y1y4", "y1y2y3", "x1y1", "x2y2", "x3y3", "x4y4"},
    {"x1x4", "x2x4", "x3x4", "y4", "y1y2y3", "x1y1", "x2y2", "x3y3"},
    {"x2x4", "x3x4", "y4", "y2y3", "x1y1", "x2y2", "x3y3"},
    {"x1x2x4", "x2x3x4", "x1x3x4", "y4", "y2y3", "y1y3", "y1y2", "x1y1", "x2y2", "x3y3"},
    {"x3x4", "y4", "y3", "x1y1", "x2y2"},
    {"x1x3x4", "x2x3x4", "y4", "y3", "y1y2", "x1y1", "x2y2"},
    {"x1x3x4", "y4", "y3", "y1", "x2y2"},
    {"x1x2x3x4", "y4", "y3", "y1", "y2"},
}};

FVector f_of(int i) {
  if (i <= 6) return {8, 18, 12};
  if (i <= 9) return {7, 15, 10};
  if (i <= 11) return {6, 12, 8};
  if (i == 12) return {5, 9, 6};
  return {4, 6, 4};
}

// Building sets as listed, [4] included at its listed position.
const std::array<std::vector<std::vector<int>>, kCensusSize> kBuilding{{
    {{1}, {2}, {3}, {4}, {1, 2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}, {2, 3, 4}},
    {{1}, {2}, {3}, {4}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4}, {1, 3, 4}, {2, 3, 4}},
    {{1}, {2}, {3}, {4}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4}, {2, 3}, {1, 3, 4}},
    {{1}, {2}, {3}, {4}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4}, {3, 4}, {1, 3, 4}},
    {{1}, {2}, {3}, {4}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4}, {3, 4}, {1, 2, 4}},
    {},
    {{1}, {2}, {3}, {4}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4}, {1, 3, 4}},
    {{1}, {2}, {3}, {4}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4}, {1, 3}},
    {{1}, {2}, {3}, {4}, {1, 2, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}},
    {{1}, {2}, {3}, {4}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4}},
    {{1}, {2}, {3}, {4}, {1, 2, 3}, {2, 3, 4}, {1, 2, 3, 4}},
    {{1}, {2}, {3}, {4}, {1, 2, 3, 4}, {1, 2, 3}},
    {{1}, {2}, {3}, {4}, {1, 2, 3, 4}},
}};

using Rows = std::vector<std::vector<std::int64_t>>;
const std::array<Rows, kCensusSize> kLambda{{
    {{1, 0, 0, -1, 0, 0, 1, -1}, {0, 1, 0, -1, -1, 0, 1, 0}, {0, 0, 1, -1, 0, -1, 1, 0}},
    {{1, 0, 0, -1, 1, 1, 0, -1}, {0, 1, 0, -1, 1, 1, -1, 0}, {0, 0, 1, -1, 0, 1, 0, 0}},
    {{1, 0, 0, -1, 1, 1, 0, 0}, {0, 1, 0, -1, 1, 1, 1, -1}, {0, 0, 1, -1, 0, 1, 1, 0}},
    {{1, 0, 0, -1, 1, 1, -1, 0}, {0, 1, 0, -1, 1, 1, -1, -1}, {0, 0, 1, -1, 0, 1, 0, 0}},
    {{1, 0, 0, -1, 1, 1, -1, 0}, {0, 1, 0, -1, 1, 1, -1, 0}, {0, 0, 1, -1, 0, 1, 0, -1}},
    {{1, 0, 0, -1, 0, 0, 1, -1}, {0, 1, 0, 0, -1, 0, 1, -1}, {0, 0, 1, 0, 0, -1, 1, -1}},
    {{1, 0, 0, -1, 1, 1, 0}, {0, 1, 0, -1, 1, 1, -1}, {0, 0, 1, -1, 0, 1, 0}},
    {{1, 0, 0, -1, 1, 1, 1}, {0, 1, 0, -1, 1, 1, 0}, {0, 0, 1, -1, 0, 1, 1}},
    {{1, 0, 0, -1, 1, 0, 0}, {0, 1, 0, -1, 1, 0, -1}, {0, 0, 1, -1, 1, -1, 0}},
    {{1, 0, 0, -1, 1, 1}, {0, 1, 0, -1, 1, 1}, {0, 0, 1, -1, 0, 1}},
    {{1, 0, 0, -1, 1, -1}, {0, 1, 0, -1, 1, 0}, {0, 0, 1, -1, 1, 0}},
    {{1, 0, 0, -1, 1}, {0, 1, 0, -1, 1}, {0, 0, 1, -1, 1}},
    {{1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}},
}};

// Facet subsets of the P_6 polytope, in the column order of its matrix.
const std::vector<std::vector<int>> kP6Columns{{1}, {2}, {3}, {2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}, {4}};

}  // namespace

const std::vector<std::string>& mf_table(int i) {
  check_index(i);
  return kMf[static_cast<std::size_t>(i - 1)];
}

BierSphere sphere(int i) {
  std::vector<VertexSet> mf;
  for (const auto& s : mf_table(i)) mf.push_back(parse_side_string(s, kCensusM));
  return BierSphere::wrap(SimplicialComplex::from_minimal_non_faces(2 * kCensusM, mf), kCensusM);
}

SimplicialComplex source(int i) {
  std::vector<VertexSet> mf;
  for (const auto& s : mf_table(i)) {
    const VertexSet v = parse_side_string(s, kCensusM);
    if (v.is_subset_of(VertexSet::range(kCensusM))) mf.push_back(v);
  }
  return SimplicialComplex::from_minimal_non_faces(kCensusM, mf);
}

FVector f_vector(int i) {
  check_index(i);
  return f_of(i);
}

std::vector<std::int64_t> betti(int i) {
  check_index(i);
  if (i <= 6) return {1, 5, 5, 1};
  if (i <= 9) return {1, 4, 4, 1};
  if (i <= 11) return {1, 3, 3, 1};
  if (i == 12) return {1, 2, 2, 1};
  return {1, 1, 1, 1};
}

bool is_flag(int i) {
  check_index(i);
  return i == 4 || i == 5 || i == 8 || i == 10;
}

bool is_orientable(int i) {
  check_index(i);
  return i == 1 || i == 6 || i == 9 || i == 11 || i == 12 || i == 13;
}

std::optional<int> index_of(const CanonicalForm& form) {
  static std::once_flag once;
  static std::map<CanonicalForm, int> table;
  std::call_once(once, [] {
    for (int i = 1; i <= kCensusSize; ++i) table.emplace(canonical_form(sphere(i).complex()), i);
  });
  const auto it = table.find(form);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

BuildingSet building_set(int i) {
  check_nestohedral(i);
  std::vector<VertexSet> elements;
  for (const auto& e : kBuilding[static_cast<std::size_t>(i - 1)]) elements.push_back(VertexSet::of(e));
  return BuildingSet::validate(kCensusM, std::move(elements));
}

std::vector<VertexSet> column_subsets(int i) {
  check_nestohedral(i);
  std::vector<VertexSet> out;
  for (const auto& e : kBuilding[static_cast<std::size_t>(i - 1)])
    if (e.size() != static_cast<std::size_t>(kCensusM)) out.push_back(VertexSet::of(e));
  return out;
}

CharMatrix reference_matrix(int i) {
  check_index(i);
  std::vector<std::string> labels;
  if (i == kNonNestohedral) {
    for (const auto& e : kP6Columns) labels.push_back(subset_label(VertexSet::of(e)));
  } else {
    for (VertexSet s : column_subsets(i)) labels.push_back(subset_label(s));
  }
  return CharMatrix::from_rows(kLambda[static_cast<std::size_t>(i - 1)], std::move(labels));
}

const std::vector<KnownIsomorphism>& known_isomorphisms() {
  static const std::vector<KnownIsomorphism> maps = [] {
    std::vector<KnownIsomorphism> out;
    out.push_back({"K_4 -> K_6", source(4), SimplicialComplex::from_facets(4, {{1, 2}, {1, 3}, {2, 4}}),
                   {{"x1", "y4"}, {"x2", "x3"}, {"x3", "x4"}, {"x4", "y3"},
                    {"y1", "y2"}, {"y2", "x2"}, {"y3", "x1"}, {"y4", "y1"}}});
    out.push_back({"K_9 -> K_13", SimplicialComplex::from_facets(4, {{1, 2, 3}}), source(10),
                   {{"x1", "x2"}, {"x2", "x3"}, {"x3", "y1"}, {"y1", "y2"}, {"y2", "x4"}, {"y3", "x1"}}});
    return out;
  }();
  return maps;
}

}  // namespace bier::catalog
