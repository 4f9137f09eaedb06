#include "bier/bier_sphere.hpp"

#include <algorithm>
#include <cctype>

namespace bier {

SimplicialComplex alexander_dual(const SimplicialComplex& k) {
  if (k.is_full_simplex()) throw DomainError("Alexander dual undefined for the full simplex");
  const int m = k.ground_size();
  const VertexSet all = VertexSet::range(m);
  std::vector<VertexSet> facets;
  for (VertexSet n : minimal_non_faces(k)) facets.push_back(all - n);
  return SimplicialComplex::from_facets(m, facets);
}

SimplicialComplex deleted_join(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  const int m = k1.ground_size();
  if (k2.ground_size() != m)
    throw DomainError("deleted join needs equal ground sizes, got " + std::to_string(m) + " and " +
                      std::to_string(k2.ground_size()));
  if (2 * m > kMaxGroundSize) throw DomainError("deleted join would exceed the ground size limit");
  std::vector<VertexSet> out;
  for (VertexSet sigma : k1.facets()) {
    for (VertexSet tau : k2.facets()) {
      // Each shared label goes to exactly one side; the maximal disjoint
      // sub-pairs of (σ, τ) are indexed by the subsets of the overlap.
      const VertexSet overlap = sigma & tau;
      const std::uint64_t o = overlap.bits();
      std::uint64_t a = o;
      while (true) {
        const VertexSet left = (sigma - overlap) | VertexSet::from_bits(a);
        const VertexSet right = (tau - overlap) | (overlap - VertexSet::from_bits(a));
        out.push_back(left | right.shifted(m));
        if (a == 0) break;
        a = (a - 1) & o;
      }
    }
  }
  return SimplicialComplex::from_facets(2 * m, out);
}

BierSphere BierSphere::wrap(SimplicialComplex complex, int source_m) {
  const int m = source_m;
  if (complex.ground_size() != 2 * m) throw DomainError("Bier sphere must live on 2m positions");
  if (complex.dimension() != m - 2 || !complex.is_pure())
    throw DomainError("Bier sphere must be pure of dimension m - 2");
  for (VertexSet f : complex.facets()) {
    if (f.slice(0, m).intersects(f.slice(m, m))) throw DomainError("facet " + side_string(f, m) + " contains a pair x_i y_i");
  }
  if (!is_pseudomanifold(complex)) throw DomainError("some codimension-one face does not lie in exactly two facets");
  return BierSphere(std::move(complex), m);
}

BierSphere bier_sphere(const SimplicialComplex& k) {
  const int m = k.ground_size();
  if (m < 2) throw DomainError("Bier sphere needs m >= 2");
  SimplicialComplex joined = deleted_join(k, alexander_dual(k));
  try {
    return BierSphere::wrap(std::move(joined), m);
  } catch (const DomainError& e) {
    throw InternalError(std::string("Bier construction produced a non-sphere: ") + e.what());
  }
}

std::vector<VertexSet> bier_mf_formula(const SimplicialComplex& k) {
  const int m = k.ground_size();
  const SimplicialComplex dual = alexander_dual(k);
  std::vector<VertexSet> out = minimal_non_faces(k);
  for (VertexSet n : minimal_non_faces(dual)) out.push_back(n.shifted(m));
  const VertexSet both = k.support() & dual.support();
  both.for_each([&](int i) { out.push_back(VertexSet::of({i, m + i})); });
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

int ghost_count(const SimplicialComplex& k) {
  const int v = k.ground_size();
  const auto counts = face_size_counts(k);
  const auto count_of_size = [&](int size) -> std::int64_t {
    return size < static_cast<int>(counts.size()) ? counts[static_cast<std::size_t>(size)] : 0;
  };
  return static_cast<int>(v - count_of_size(1) + count_of_size(v - 1));
}

SimplicialComplex swap_sides(const SimplicialComplex& c, int m) {
  if (c.ground_size() != 2 * m) throw DomainError("swap_sides needs a complex on 2m positions");
  std::vector<int> image(static_cast<std::size_t>(2 * m));
  for (int i = 1; i <= m; ++i) {
    image[static_cast<std::size_t>(i - 1)] = m + i;
    image[static_cast<std::size_t>(m + i - 1)] = i;
  }
  return c.relabeled(image, 2 * m);
}

std::string side_label(int position, int m) {
  if (position < 1 || position > 2 * m) throw DomainError("position " + std::to_string(position) + " outside 1..2m");
  return position <= m ? "x" + std::to_string(position) : "y" + std::to_string(position - m);
}

std::string side_string(VertexSet s, int m) {
  std::string out;
  s.for_each([&](int p) { out += side_label(p, m); });
  return out;
}

VertexSet parse_side_string(const std::string& text, int m) {
  VertexSet s;
  std::size_t i = 0;
  while (i < text.size()) {
    const char side = text[i];
    if (side != 'x' && side != 'y') throw ParseError("expected x or y in \"" + text + "\"");
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) != 0) ++j;
    if (j == i + 1) throw ParseError("missing index in \"" + text + "\"");
    const int idx = std::stoi(text.substr(i + 1, j - i - 1));
    if (idx < 1 || idx > m) throw ParseError("index out of range in \"" + text + "\"");
    s = s.with(side == 'x' ? idx : m + idx);
    i = j;
  }
  return s;
}

}  // namespace bier
