#pragma once

#include <string>
#include <vector>

#include "bier/complex.hpp"

namespace bier {

/// Alexander dual: the complex on a fresh copy of [m] whose facets are the
/// complements of the minimal non-faces of k. Throws DomainError for Δ_[m].
SimplicialComplex alexander_dual(const SimplicialComplex& k);

/// Deleted join on 2m positions. Faces are σ ⊔ τ' with σ ∈ k1, τ ∈ k2 and
/// σ ∩ τ = ∅; σ sits on positions 1..m and τ on m+1..2m.
SimplicialComplex deleted_join(const SimplicialComplex& k1, const SimplicialComplex& k2);

/// The deleted join of K with its Alexander dual, checked to be a
/// pseudomanifold of dimension m - 2.
///
/// Position i is the vertex x_i (from K) and position m + i is y_i (from
/// the dual). All tables in this project use that fixed map.
class BierSphere {
 public:
  [[nodiscard]] const SimplicialComplex& complex() const { return complex_; }
  [[nodiscard]] int source_m() const { return source_m_; }

  /// BierSphere around an existing complex on 2m positions; validates the
  /// sphere invariants and throws DomainError if they fail.
  static BierSphere wrap(SimplicialComplex complex, int source_m);

  friend bool operator==(const BierSphere&, const BierSphere&) = default;

 private:
  BierSphere(SimplicialComplex c, int m) : complex_(std::move(c)), source_m_(m) {}

  SimplicialComplex complex_;
  int source_m_;
};

/// Bier(K). Requires K ≠ Δ_[m] and m ≥ 2.
BierSphere bier_sphere(const SimplicialComplex& k);

/// MF(K) ⊔ MF(K̂) ⊔ {x_i y_i : i is a vertex of both K and K̂}, in sphere
/// positions, without constructing the sphere.
std::vector<VertexSet> bier_mf_formula(const SimplicialComplex& k);

/// |V| - f_0(K) + f_{|V|-2}(K): the number of ghost vertices of Bier(K).
int ghost_count(const SimplicialComplex& k);

/// Exchanges the x block (1..m) with the y block (m+1..2m).
SimplicialComplex swap_sides(const SimplicialComplex& c, int m);

/// "x3" or "y4" for a sphere position.
std::string side_label(int position, int m);
/// "x1y1", "y2y3y4"; members in x-then-y, increasing index order.
std::string side_string(VertexSet s, int m);
/// Parses side_string output back into a position set.
VertexSet parse_side_string(const std::string& text, int m);

}  // namespace bier
