#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bier/vertex_set.hpp"

namespace bier {

/// Face counts f_0, ..., f_{d} of a complex of dimension d (f_{-1} = 1 is implied).
using FVector = std::vector<std::int64_t>;
/// h_0, ..., h_n for a pure (n-1)-dimensional complex.
using HVector = std::vector<std::int64_t>;

/// A finite simplicial complex on the ground set {1, ..., m}.
///
/// Only the facets (maximal faces) are stored; they always form an
/// antichain sorted by mask value. Ground positions that lie in no facet
/// are ghost vertices and are kept as part of the value. The complex
/// {∅} on m positions (every vertex a ghost) is stored with the single
/// facet ∅; the void family without ∅ cannot be represented.
class SimplicialComplex {
 public:
  /// Builds the complex generated by an arbitrary family of faces.
  /// Dominated and duplicate faces are dropped. An empty family yields {∅}.
  static SimplicialComplex from_facets(int m, std::span<const VertexSet> faces);
  static SimplicialComplex from_facets(int m, const std::vector<std::vector<int>>& faces);

  /// The complex whose minimal non-faces are exactly `non_faces`.
  /// Throws DomainError if the family is not an antichain of nonempty sets.
  static SimplicialComplex from_minimal_non_faces(int m, std::span<const VertexSet> non_faces);

  static SimplicialComplex empty(int m);            ///< {∅}: m ghost vertices
  static SimplicialComplex simplex(int m);          ///< Δ_[m]
  static SimplicialComplex simplex_boundary(int m); ///< ∂Δ_[m]

  [[nodiscard]] int ground_size() const { return m_; }
  [[nodiscard]] const std::vector<VertexSet>& facets() const { return facets_; }

  /// Largest face size minus one; -1 for {∅}.
  [[nodiscard]] int dimension() const;
  [[nodiscard]] bool is_pure() const;
  [[nodiscard]] bool is_full_simplex() const { return facets_.size() == 1 && facets_.front() == VertexSet::range(m_); }

  /// Union of the facets.
  [[nodiscard]] VertexSet support() const;
  [[nodiscard]] VertexSet ghosts() const { return VertexSet::range(m_) - support(); }
  [[nodiscard]] int vertex_count() const { return support().size(); }

  [[nodiscard]] bool contains_face(VertexSet s) const;

  /// Same complex on a relabelled ground set of size `new_m`:
  /// label i goes to image[i - 1]. The image must be injective on the support.
  [[nodiscard]] SimplicialComplex relabeled(std::span<const int> image, int new_m) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  SimplicialComplex(int m, std::vector<VertexSet> facets) : m_(m), facets_(std::move(facets)) {}

  int m_ = 1;
  std::vector<VertexSet> facets_;
};

/// Inclusion-maximal members of `family`, sorted and deduplicated.
std::vector<VertexSet> maximal_elements(std::vector<VertexSet> family);
/// Inclusion-minimal members of `family`, sorted and deduplicated.
std::vector<VertexSet> minimal_elements(std::vector<VertexSet> family);

/// Every face including ∅, each once, ordered by size then mask.
std::vector<VertexSet> faces(const SimplicialComplex& k);

/// counts[i] = number of faces with i vertices, for i = 0..dim+1 (counts[0] = 1).
std::vector<std::int64_t> face_size_counts(const SimplicialComplex& k);

/// f-vector (f_0, ..., f_dim). Throws DegenerateInput on {∅}.
FVector f_vector(const SimplicialComplex& k);

/// h-vector of a pure complex. Throws DomainError when k is not pure and
/// DegenerateInput on {∅}.
HVector h_vector(const SimplicialComplex& k);

/// Expands h_0 t^n + ... + h_n = (t-1)^n + f_0 (t-1)^{n-1} + ... + f_{n-1}.
HVector h_from_f(std::span<const std::int64_t> f);
/// Inverse transform of h_from_f.
FVector f_from_h(std::span<const std::int64_t> h);

/// Inclusion-minimal non-faces; ghost vertices appear as singletons.
/// Empty for the full simplex.
std::vector<VertexSet> minimal_non_faces(const SimplicialComplex& k);

/// True iff every minimal non-face has at most two vertices.
bool is_flag(const SimplicialComplex& k);

/// Faces of dimension at most `level`, on the same ground set.
/// Requires -1 <= level <= dim k.
SimplicialComplex skeleton(const SimplicialComplex& k, int level);

/// Alternating sum of the f-vector. Throws DegenerateInput on {∅}.
std::int64_t euler_characteristic(const SimplicialComplex& k);

/// Faces of k that contain `sigma`, with sigma removed.
SimplicialComplex link(const SimplicialComplex& k, VertexSet sigma);

/// Stellar subdivision at the nonempty face `sigma`. The new vertex gets
/// label m + 1; the ground set grows by one.
SimplicialComplex stellar_subdivision(const SimplicialComplex& k, VertexSet sigma);

/// Number of facets containing each codimension-one face, checked to be 2.
/// Requires a pure complex; returns false otherwise.
bool is_pseudomanifold(const SimplicialComplex& k);

}  // namespace bier
