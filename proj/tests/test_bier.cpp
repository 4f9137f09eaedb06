#include <doctest.h>

#include "bier/bier_sphere.hpp"
#include "bier/catalog.hpp"
#include "bier/error.hpp"
#include "bier/iso.hpp"
#include "oracles.hpp"

using namespace bier;

namespace {

std::vector<VertexSet> sorted(std::vector<VertexSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<VertexSet> sides(int m, std::initializer_list<const char*> names) {
  std::vector<VertexSet> out;
  for (const char* n : names) out.push_back(parse_side_string(n, m));
  return sorted(out);
}

}  // namespace

TEST_CASE("Alexander dual") {
  CHECK(alexander_dual(SimplicialComplex::empty(4)) == SimplicialComplex::simplex_boundary(4));
  CHECK(alexander_dual(SimplicialComplex::simplex_boundary(4)) == SimplicialComplex::empty(4));
  // Skeleta of the simplex: dual of the l-skeleton is the (m - l - 3)-skeleton.
  const int m = 5;
  for (int l = -1; l <= m - 2; ++l)
    CHECK(alexander_dual(skeleton(SimplicialComplex::simplex(m), l)) == skeleton(SimplicialComplex::simplex(m), m - l - 3));
  try {
    alexander_dual(SimplicialComplex::simplex(3));
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("Alexander dual undefined") != std::string::npos);
  }
}

TEST_CASE("deleted join") {
  const auto s0 = deleted_join(SimplicialComplex::simplex_boundary(2), SimplicialComplex::empty(2));
  CHECK(s0.ground_size() == 4);
  CHECK(s0.facets() == std::vector<VertexSet>{VertexSet::of({1}), VertexSet::of({2})});
  CHECK(s0.ghosts() == VertexSet::of({3, 4}));

  // One vertex on [1] joined with itself: x1 and y1 stay, the pair x1y1 does not.
  const auto point = SimplicialComplex::simplex(1);
  const auto pp = deleted_join(point, point);
  CHECK(pp.facets() == std::vector<VertexSet>{VertexSet::of({1}), VertexSet::of({2})});

  const auto y_side = deleted_join(SimplicialComplex::empty(4), SimplicialComplex::simplex_boundary(4));
  std::vector<int> shift{5, 6, 7, 8};
  CHECK(y_side == SimplicialComplex::simplex_boundary(4).relabeled(shift, 8));

  CHECK_THROWS_AS(deleted_join(SimplicialComplex::empty(2), SimplicialComplex::empty(3)), DomainError);
}

TEST_CASE("deleted join agrees with the face-pair definition") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const int m = 1 + trial % 5;
    const auto a = oracle::random_complex(rng, m, 1 + trial % 4);
    const auto b = oracle::random_complex(rng, m, 1 + (trial / 3) % 4);
    CHECK(deleted_join(a, b) == oracle::deleted_join(a, b));
  }
}

TEST_CASE("Bier spheres from the census") {
  const auto empty = bier_sphere(SimplicialComplex::empty(4));
  CHECK(f_vector(empty.complex()) == FVector{4, 6, 4});
  CHECK(empty.complex().ghosts() == VertexSet::of({1, 2, 3, 4}));

  const auto s10 = bier_sphere(catalog::source(10));
  CHECK(sorted(minimal_non_faces(s10.complex())) == sides(4, {"x3x4", "y4", "y3", "x1y1", "x2y2"}));

  const auto s1 = bier_sphere(catalog::source(1));
  CHECK(f_vector(s1.complex()) == FVector{8, 18, 12});
  CHECK(s1.complex().vertex_count() == 8);

  CHECK_THROWS_AS(bier_sphere(SimplicialComplex::simplex(4)), DomainError);
  CHECK_THROWS_AS(bier_sphere(SimplicialComplex::empty(1)), DomainError);
}

TEST_CASE("MF formula") {
  CHECK(sorted(bier_mf_formula(catalog::source(13))) == sides(4, {"x1x2x3x4", "y1", "y2", "y3", "y4"}));
  CHECK(sorted(bier_mf_formula(catalog::source(10))) == sides(4, {"x3x4", "y3", "y4", "x1y1", "x2y2"}));
  const auto mf1 = bier_mf_formula(catalog::source(1));
  CHECK(mf1.size() == 14);
  std::map<int, int> by_size;
  for (VertexSet s : mf1) ++by_size[s.size()];
  CHECK(by_size == std::map<int, int>{{2, 10}, {3, 4}});
}

TEST_CASE("ghost count") {
  CHECK(ghost_count(SimplicialComplex::simplex_boundary(4)) == 4);
  CHECK(bier_sphere(SimplicialComplex::simplex_boundary(4)).complex().ghosts().size() == 4);
  CHECK(ghost_count(SimplicialComplex::empty(4)) == 4);
  CHECK(ghost_count(catalog::source(10)) == 2);
}

TEST_CASE("side strings") {
  CHECK(side_label(3, 4) == "x3");
  CHECK(side_label(8, 4) == "y4");
  CHECK(side_string(VertexSet::of({1, 5}), 4) == "x1y1");
  CHECK(parse_side_string("y2y3y4", 4) == VertexSet::of({6, 7, 8}));
  CHECK_THROWS_AS(parse_side_string("z1", 4), ParseError);
  CHECK_THROWS_AS(parse_side_string("x5", 4), ParseError);
}

TEST_CASE("property: exhaustive sphere and formula checks for m <= 4") {
  for (int m = 2; m <= 4; ++m) {
    for (const auto& k : all_complexes(m)) {
      const auto dual = alexander_dual(k);
      CHECK(dual == oracle::alexander_dual(k));
      CHECK(alexander_dual(dual) == k);
      const auto s = bier_sphere(k).complex();
      CHECK(s == oracle::deleted_join(k, dual));
      CHECK(s.is_pure());
      CHECK(s.dimension() == m - 2);
      CHECK(is_pseudomanifold(s));
      CHECK(euler_characteristic(s) == 1 + (m % 2 == 0 ? 1 : -1));
      const auto h = h_vector(s);
      CHECK(std::equal(h.begin(), h.end(), h.rbegin()));
      CHECK(sorted(bier_mf_formula(k)) == oracle::minimal_non_faces(s));
      CHECK(ghost_count(k) == s.ghosts().size());
      CHECK(s.vertex_count() >= m);
      CHECK(s.vertex_count() <= 2 * m);
      CHECK(swap_sides(s, m) == bier_sphere(dual).complex());
    }
  }
}

TEST_CASE("property: duality involution on random larger complexes") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 6 + trial % 5;
    const auto k = oracle::random_complex(rng, m, 1 + trial % 7);
    if (k.is_full_simplex()) continue;
    CHECK(alexander_dual(alexander_dual(k)) == k);
    if (m <= 8) {
      const auto s = bier_sphere(k).complex();
      CHECK(is_pseudomanifold(s));
      CHECK(sorted(bier_mf_formula(k)) == sorted(minimal_non_faces(s)));
    }
  }
}
