#pragma once

// Reference data for the thirteen two-dimensional Bier spheres S_1 … S_13
// (Bier spheres of complexes on four vertices): minimal non-face tables,
// face numbers, building sets and characteristic matrices of the dual
// polytopes P_i. Everything here is transcribed, never computed.

#include <optional>
#include <string>
#include <vector>

#include "bier/bier_sphere.hpp"
#include "bier/building.hpp"
#include "bier/char_matrix.hpp"
#include "bier/iso.hpp"

namespace bier::catalog {

inline constexpr int kCensusSize = 13;
inline constexpr int kCensusM = 4;
/// Census index whose polytope is not a nestohedron.
inline constexpr int kNonNestohedral = 6;

/// Minimal non-faces of S_i in x/y notation, in table order.
const std::vector<std::string>& mf_table(int i);

/// S_i assembled from its minimal non-face table on 8 positions.
BierSphere sphere(int i);
/// The complex K on [4] whose Bier sphere has the MF table of S_i
/// (its minimal non-faces are the x-part of the table).
SimplicialComplex source(int i);

FVector f_vector(int i);
std::vector<std::int64_t> betti(int i);
bool is_flag(int i);
bool is_orientable(int i);

/// S_i whose canonical form equals `form`, if any.
std::optional<int> index_of(const CanonicalForm& form);

/// Building set B_i on [4]; i ≠ 6.
BuildingSet building_set(int i);
/// Members of B_i in their listed order, [4] omitted: the column order of
/// the reference matrix. i ≠ 6.
std::vector<VertexSet> column_subsets(int i);

/// Λ_{P_i}, columns labelled by building-set members (i ≠ 6) or by the
/// facet subsets of realize_p6 (i = 6).
CharMatrix reference_matrix(int i);

/// A printed isomorphism between two Bier spheres on 8 positions.
struct KnownIsomorphism {
  std::string name;
  SimplicialComplex from;  ///< source complex on [4]
  SimplicialComplex to;
  std::vector<std::pair<std::string, std::string>> map;  ///< "x1" -> "y4", …
};

/// The two vertex maps between Bier spheres of different complexes.
const std::vector<KnownIsomorphism>& known_isomorphisms();

}  // namespace bier::catalog
