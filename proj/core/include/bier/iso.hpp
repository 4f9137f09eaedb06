#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bier/complex.hpp"

namespace bier {

/// Largest number of non-ghost vertices canonical_form accepts.
inline constexpr int kMaxCanonicalVertices = 10;

/// Permutation-minimal encoding of a complex.
///
/// The non-ghost vertices are relabelled 1..vertex_count so that the sorted
/// list of facet masks is lexicographically least among the labellings the
/// search visits. Ghost vertices never take part: `ghost_count` is carried
/// along for reporting but is ignored by comparisons, so complexes on
/// different ground sets compare equal when their supports are isomorphic.
struct CanonicalForm {
  int vertex_count = 0;
  std::vector<std::uint32_t> facets;
  int ghost_count = 0;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.vertex_count == b.vertex_count && a.facets == b.facets;
  }
  friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.vertex_count <=> b.vertex_count; c != 0) return c;
    return a.facets <=> b.facets;
  }

  /// "v8:7,b,...": vertex count and hex facet masks.
  [[nodiscard]] std::string to_string() const;
};

/// A canonical form together with the labelling that produced it:
/// order[p - 1] is the original label placed at canonical position p.
struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<int> order;
};

/// Throws DomainError if k has more than kMaxCanonicalVertices vertices.
CanonicalLabeling canonical_labeling(const SimplicialComplex& k);
CanonicalForm canonical_form(const SimplicialComplex& k);

/// k relabelled to canonical positions 1..v, ghosts after them in label order.
SimplicialComplex canonical_representative(const SimplicialComplex& k);

/// Pairs (label in k1, label in k2) covering the non-ghost vertices.
using VertexMap = std::vector<std::pair<int, int>>;

/// A vertex bijection carrying facets onto facets, if one exists.
std::optional<VertexMap> isomorphic(const SimplicialComplex& k1, const SimplicialComplex& k2);

/// Checks directly that `map` is a bijection between the supports that
/// carries the facets of k1 exactly onto the facets of k2.
bool is_isomorphism(const SimplicialComplex& k1, const SimplicialComplex& k2, const VertexMap& map);

/// Visits every simplicial complex on [m] except Δ_[m], including {∅}:
/// one call per antichain of nonempty subsets. Accepts m <= 6.
void for_each_complex(int m, const std::function<void(const SimplicialComplex&)>& visit);

/// All complexes visited by for_each_complex, in visiting order. m <= 5.
std::vector<SimplicialComplex> all_complexes(int m);

/// One canonical representative per isomorphism class of complexes on [m]
/// (ghosts allowed, {∅} included, Δ_[m] excluded), sorted by canonical form.
/// Requires 1 <= m <= 5. `threads` = 0 uses default_thread_count().
std::vector<SimplicialComplex> enumerate_complexes(int m, int threads = 0);

}  // namespace bier
