#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bier/bier_sphere.hpp"
#include "bier/iso.hpp"

namespace bier {

/// One combinatorial type of Bier sphere.
struct BierClass {
  BierSphere representative;
  CanonicalForm form;
  FVector f;
  HVector h;
  std::vector<VertexSet> mf;  ///< minimal non-faces of the representative
  bool flag = false;
  /// Canonical representatives of the complex classes whose Bier sphere lies here.
  std::vector<SimplicialComplex> sources;
  /// Census name S_i (m = 4 only).
  std::optional<int> census_index;
};

struct ClassificationReport {
  int m = 0;
  std::size_t complexes_enumerated = 0;  ///< antichains visited, Δ_[m] excluded
  std::size_t complex_classes = 0;
  std::vector<BierClass> classes;
};

/// Bier spheres of all complexes on [m], grouped by canonical form and
/// ordered by (f-vector descending, |MF| ascending, canonical form).
/// For m = 4 each class carries its census index and the census sphere
/// as representative. Requires 2 <= m <= 5.
ClassificationReport classify_bier(int m, int threads = 0);

}  // namespace bier
