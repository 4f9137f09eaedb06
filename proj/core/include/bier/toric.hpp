#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bier/bier_sphere.hpp"
#include "bier/building.hpp"
#include "bier/char_matrix.hpp"

namespace bier {

/// (m−1)×2m labelling of the deleted join K1 ∗_Δ K2: columns i and m+i are
/// e_i for i < m, columns m and 2m are e_1 + … + e_{m−1}.
CharMatrix bier_charmap(int m);
/// Same matrix; checks that K1 and K2 share the ground size m ≥ 2.
CharMatrix bier_charmap(const SimplicialComplex& k1, const SimplicialComplex& k2);

struct CharmapValidation {
  bool valid = true;
  std::optional<VertexSet> failing_facet;  ///< first failing facet in facet order
  std::int64_t failing_determinant = 0;
};

/// Checks every facet's column minor is ±1. Column j belongs to vertex j+1.
/// Throws DomainError if a facet size differs from rows(Λ) or the column
/// count differs from the ground size.
CharmapValidation validate_charmap(const SimplicialComplex& k, const CharMatrix& lambda, int threads = 1);

/// Explicit witness that s(Bier(K)) = s_R(Bier(K)) = m + 1.
struct BuchstaberCertificate {
  BierSphere sphere;
  CharMatrix matrix;
  int claimed_s = 0;
  int upper_bound = 0;  ///< 2m − (m − 1)
};

/// Throws InternalError if the labelling fails to validate.
BuchstaberCertificate buchstaber_certificate(const SimplicialComplex& k);

/// Canonical characteristic matrix of a nestohedron: one chart_normal column
/// per member of fenn_order(B), labelled by the member.
CharMatrix fenn_charmap(const BuildingSet& b);

/// Columns of Λ rearranged so that column j carries the label of
/// labels[j]; Λ must be labelled with subset_label names.
CharMatrix align_columns(const CharMatrix& lambda, const std::vector<VertexSet>& labels);

/// Stanley–Reisner presentation of H*(M) for a quasitoric manifold over K.
struct CohomologyPresentation {
  int generators = 0;                                   ///< v_1 … v_m, degree 2
  std::vector<VertexSet> monomials;                     ///< minimal non-faces
  std::vector<std::vector<std::int64_t>> linear_forms;  ///< t_i = Σ_j λ_ij v_j
  std::vector<std::int64_t> betti;                      ///< β_0, β_2, …, β_2n
};

/// Requires Λ valid for K and K a pure pseudomanifold; throws DomainError otherwise.
CohomologyPresentation cohomology_presentation(const SimplicialComplex& k, const CharMatrix& lambda);

/// 3×3 matrix over F2, row-major rows of 0/1.
using F2Matrix = std::array<std::array<int, 3>, 3>;

struct OrientabilityResult {
  bool orientable = false;
  /// Basis b1, b2, b3 of F2^3 (as the columns of this matrix) in which every
  /// column of Λ mod 2 is one of b1, b2, b3, b1 + b2 + b3.
  std::optional<F2Matrix> basis;
};

/// The 168 invertible 3×3 matrices over F2, in a fixed order.
std::vector<F2Matrix> gl3_f2();

/// Searches GL(3, F2) for a basis witnessing orientability of the small
/// cover. Only n = 3 is supported; other shapes throw DomainError.
OrientabilityResult small_cover_orientable(const CharMatrix& lambda);

}  // namespace bier
