#include <doctest.h>

#include "bier/complex.hpp"
#include "bier/error.hpp"
#include "bier/iso.hpp"
#include "oracles.hpp"

using namespace bier;

namespace {

SimplicialComplex path3() { return SimplicialComplex::from_facets(3, {{1, 2}, {2, 3}}); }

}  // namespace

TEST_CASE("from_facets reduces to the antichain of maximal faces") {
  const auto boundary = SimplicialComplex::from_facets(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  CHECK(boundary == SimplicialComplex::simplex_boundary(4));

  const auto absorbed = SimplicialComplex::from_facets(4, {{1, 2}, {1, 2, 3}});
  REQUIRE(absorbed.facets().size() == 1);
  CHECK(absorbed.facets().front() == VertexSet::of({1, 2, 3}));
  CHECK(absorbed.ghosts() == VertexSet::of({4}));

  const auto empty = SimplicialComplex::from_facets(4, std::vector<std::vector<int>>{});
  CHECK(empty == SimplicialComplex::empty(4));
  CHECK(empty.ghosts().size() == 4);
  CHECK(empty.dimension() == -1);

  CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {{1, 4}}), DomainError);
}

TEST_CASE("faces") {
  CHECK(faces(SimplicialComplex::simplex_boundary(4)).size() == 15);
  CHECK(faces(SimplicialComplex::empty(4)) == std::vector<VertexSet>{VertexSet{}});
  const auto f = faces(path3());
  CHECK(f == std::vector<VertexSet>{VertexSet{}, VertexSet::of({1}), VertexSet::of({2}), VertexSet::of({3}),
                                    VertexSet::of({1, 2}), VertexSet::of({2, 3})});
}

TEST_CASE("f- and h-vectors") {
  CHECK(f_vector(SimplicialComplex::simplex_boundary(4)) == FVector{4, 6, 4});
  CHECK_THROWS_AS(f_vector(SimplicialComplex::empty(3)), DegenerateInput);

  CHECK(h_from_f(FVector{4, 6, 4}) == HVector{1, 1, 1, 1});
  CHECK(h_from_f(FVector{8, 18, 12}) == HVector{1, 5, 5, 1});
  CHECK(h_from_f(FVector{7, 15, 10}) == HVector{1, 4, 4, 1});
  CHECK(h_vector(SimplicialComplex::simplex_boundary(4)) == HVector{1, 1, 1, 1});
  CHECK_THROWS_AS(h_vector(SimplicialComplex::from_facets(3, {{1, 2}, {3}})), DomainError);
}

TEST_CASE("minimal non-faces") {
  CHECK(minimal_non_faces(SimplicialComplex::simplex_boundary(4)) == std::vector<VertexSet>{VertexSet::range(4)});
  auto ghosts = minimal_non_faces(SimplicialComplex::empty(4));
  std::sort(ghosts.begin(), ghosts.end());
  CHECK(ghosts == std::vector<VertexSet>{VertexSet::of({1}), VertexSet::of({2}), VertexSet::of({3}), VertexSet::of({4})});
  CHECK(minimal_non_faces(path3()) == std::vector<VertexSet>{VertexSet::of({1, 3})});
  CHECK(minimal_non_faces(SimplicialComplex::simplex(4)).empty());
}

TEST_CASE("flagness") {
  CHECK_FALSE(is_flag(SimplicialComplex::simplex_boundary(4)));
  CHECK(is_flag(path3()));
  // The 4-cycle is flag; the octahedron too.
  CHECK(is_flag(SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})));
}

TEST_CASE("skeleta") {
  const auto simplex = SimplicialComplex::simplex(4);
  CHECK(skeleton(simplex, 0).facets().size() == 4);
  CHECK(skeleton(simplex, 2) == SimplicialComplex::simplex_boundary(4));
  const auto graph = skeleton(simplex, 1);
  CHECK(graph.facets().size() == 6);
  CHECK(f_vector(graph) == FVector{4, 6});
  CHECK(skeleton(simplex, -1) == SimplicialComplex::empty(4));
  CHECK_THROWS_AS(skeleton(simplex, 4), DomainError);
  CHECK_THROWS_AS(skeleton(simplex, -2), DomainError);
}

TEST_CASE("Euler characteristic") {
  CHECK(euler_characteristic(SimplicialComplex::simplex_boundary(4)) == 2);
  CHECK(euler_characteristic(SimplicialComplex::simplex_boundary(2)) == 2);
  const FVector f{8, 18, 12};
  CHECK(f[0] - f[1] + f[2] == 2);
}

TEST_CASE("stellar subdivision") {
  const auto boundary = SimplicialComplex::simplex_boundary(4);
  const auto at_triangle = stellar_subdivision(boundary, VertexSet::of({1, 2, 3}));
  CHECK(at_triangle.ground_size() == 5);
  CHECK(f_vector(at_triangle) == FVector{5, 9, 6});
  CHECK(is_pseudomanifold(at_triangle));

  const auto at_edge = stellar_subdivision(boundary, VertexSet::of({1, 2}));
  CHECK(f_vector(at_edge) == FVector{5, 9, 6});
  // Degree of the new vertex: 3 after a triangle, 4 after an edge.
  CHECK(link(at_triangle, VertexSet::of({5})).vertex_count() == 3);
  CHECK(link(at_edge, VertexSet::of({5})).vertex_count() == 4);
  // Both are the triangular bipyramid, the only 2-sphere on five vertices.
  CHECK(canonical_form(at_edge) == canonical_form(at_triangle));

  const auto at_vertex = stellar_subdivision(boundary, VertexSet::of({2}));
  CHECK(canonical_form(at_vertex) == canonical_form(boundary));
  CHECK(at_vertex.ghosts() == VertexSet::of({2}));

  CHECK_THROWS_AS(stellar_subdivision(path3(), VertexSet::of({1, 3})), DomainError);
}

TEST_CASE("property: closure, antichain and brute-force agreement on random complexes") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const int m = 1 + trial % 8;
    const auto k = oracle::random_complex(rng, m, 1 + trial % 6);
    const auto listed = faces(k);
    CHECK(listed == [&] {
      auto brute = oracle::all_faces(k);
      std::sort(brute.begin(), brute.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
      return brute;
    }());
    for (VertexSet a : k.facets())
      for (VertexSet b : k.facets()) CHECK((a == b || !a.is_subset_of(b)));
    auto mf = minimal_non_faces(k);
    std::sort(mf.begin(), mf.end());
    if (m <= 6) CHECK(mf == oracle::minimal_non_faces(k));
    CHECK(face_size_counts(k) == oracle::size_counts(k));
    const auto f = f_vector(k);
    CHECK(f_from_h(h_from_f(f)) == f);
  }
}

TEST_CASE("property: minimal non-faces match brute force for every complex on m <= 4") {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& k : all_complexes(m)) {
      auto mf = minimal_non_faces(k);
      std::sort(mf.begin(), mf.end());
      CHECK(mf == oracle::minimal_non_faces(k));
    }
  }
}

TEST_CASE("property: stellar subdivision keeps purity and the pseudomanifold property") {
  auto k = SimplicialComplex::simplex_boundary(5);
  std::mt19937_64 rng(3);
  for (int step = 0; step < 12; ++step) {
    const auto& facets = k.facets();
    const VertexSet facet = facets[rng() % facets.size()];
    // A random nonempty subface of a random facet.
    VertexSet face;
    facet.for_each([&](int v) {
      if (rng() % 2 == 0) face = face.with(v);
    });
    if (face.empty()) face = VertexSet::of({facet.min_label()});
    k = stellar_subdivision(k, face);
    CHECK(k.is_pure());
    CHECK(is_pseudomanifold(k));
    CHECK(euler_characteristic(k) == 0);
  }
}
