#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bier/char_matrix.hpp"
#include "bier/complex.hpp"

namespace bier {

using Rational = boost::multiprecision::cpp_rational;

/// A family of nonempty subsets of [n+1] containing every singleton and
/// closed under unions of intersecting members.
class BuildingSet {
 public:
  /// Throws DomainError naming the violated axiom.
  static BuildingSet validate(int n_plus_1, std::vector<VertexSet> elements);

  [[nodiscard]] int ground_size() const { return n_plus_1_; }
  /// Sorted by mask, deduplicated.
  [[nodiscard]] const std::vector<VertexSet>& elements() const { return elements_; }
  [[nodiscard]] bool contains(VertexSet s) const;
  [[nodiscard]] bool is_connected() const { return contains(VertexSet::range(n_plus_1_)); }
  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  /// |B|_S|: members of B contained in s.
  [[nodiscard]] int restriction_size(VertexSet s) const;

  friend bool operator==(const BuildingSet&, const BuildingSet&) = default;

 private:
  BuildingSet(int n, std::vector<VertexSet> e) : n_plus_1_(n), elements_(std::move(e)) {}

  int n_plus_1_ = 1;
  std::vector<VertexSet> elements_;
};

/// Members other than [n+1]: singletons in label order, then the rest by
/// descending cardinality with lexicographic tie-break. This is the column
/// order of fenn_charmap and the facet order of realize_nestohedron.
std::vector<VertexSet> fenn_order(const BuildingSet& b);

/// Σ_{i ∈ subset} x_i ≥ rhs.
struct Halfspace {
  VertexSet subset;
  Rational rhs;
};

/// A simple polytope inside the hyperplane Σ x_i = level of Q^ambient.
struct Realization {
  int ambient = 0;
  Rational level;
  std::vector<Halfspace> halfspaces;
  std::vector<std::vector<Rational>> vertices;
  /// Per vertex, the 1-based indices of its tight halfspaces.
  std::vector<VertexSet> incidence;

  [[nodiscard]] int dimension() const { return ambient - 1; }
  /// 1-based halfspace indices that are tight on at least one vertex.
  [[nodiscard]] std::vector<int> facet_indices() const;
};

/// Vertex enumeration by brute force over (ambient-1)-subsets of halfspaces,
/// solved exactly. Throws InternalError if some vertex is tight on more
/// than ambient-1 halfspaces (non-simple) and DegenerateInput if the
/// polytope has no vertices. At most 64 halfspaces.
Realization realize_halfspaces(int ambient, const Rational& level, std::vector<Halfspace> halfspaces);

/// H ∩ ⋂ H_S with H = {Σ x_i = |B|} and H_S = {Σ_{i∈S} x_i ≥ |B|_S|}
/// for the members S ≠ [n+1], in fenn_order. Requires connected B.
Realization realize_nestohedron(const BuildingSet& b);

/// Simplicial complex whose vertex v is labelled labels[v - 1].
struct NerveComplex {
  SimplicialComplex complex;
  std::vector<VertexSet> labels;
};

/// Vertices are the facets of R in halfspace order; one facet per polytope vertex.
NerveComplex nerve_of_realization(const Realization& r);

/// Starts from ∂Δ on the singletons and performs one stellar subdivision
/// per member of B outside {singletons, [n+1]}, taken in fenn_order, at
/// the face spanned by the maximal already-present members inside it.
NerveComplex nerve_by_truncation(const BuildingSet& b);

/// Integer normal of Σ_{i∈S} x_i in the chart that drops the last
/// coordinate: 1_S when n+1 ∉ S, otherwise −1 on the complement of S.
std::vector<std::int64_t> chart_normal(VertexSet s, int ambient);

/// Column names used for halfspace subsets ("{1,3,4}").
std::string subset_label(VertexSet s);

/// True iff at every vertex the columns of the tight facets have
/// determinant ±1. Columns are matched to facets by label when Λ has
/// labels, otherwise they follow facet order.
bool delzant_check(const Realization& r, const CharMatrix& lambda);

/// Polytope realizing the nerve type of the sixth census sphere, together
/// with its characteristic matrix (columns in facet order).
struct P6Realization {
  Realization base;     ///< cube [0,3]^3 with one corner cut, as subset halfspaces
  Realization polytope; ///< base with the opposite corner cut parallel to the triangle
  CharMatrix lambda;
  Rational cut_offset;
};
P6Realization realize_p6();

/// 1-based halfspace indices whose facet has exactly three vertices.
std::vector<int> triangular_facets(const Realization& r);

/// Vertices of r maximizing Σ_{i∈S} x_i for the subset S of halfspace h
/// (1-based), i.e. the vertices farthest from that facet.
std::vector<int> farthest_vertices(const Realization& r, int h);

}  // namespace bier
