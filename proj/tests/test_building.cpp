#include <doctest.h>

#include <functional>
#include <set>

#include "bier/building.hpp"
#include "bier/catalog.hpp"
#include "bier/error.hpp"
#include "bier/iso.hpp"
#include "bier/toric.hpp"

using namespace bier;

namespace {

using Point = std::vector<long long>;

int rank_of(std::vector<std::vector<long long>> rows) {
  // Integer row reduction; entries stay tiny for these polytopes.
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t p = static_cast<std::size_t>(rank);
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[static_cast<std::size_t>(rank)]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      const long long a = rows[static_cast<std::size_t>(rank)][c];
      const long long b = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = rows[r][k] * a - rows[static_cast<std::size_t>(rank)][k] * b;
    }
    ++rank;
  }
  return rank;
}

/// Vertices of an integral nestohedron: lattice points of the hyperplane
/// that satisfy every inequality and whose tight constraints (with the
/// hyperplane) have full rank.
std::set<Point> lattice_vertices(const BuildingSet& b) {
  const int d = b.ground_size();
  const long long level = static_cast<long long>(b.size());
  std::vector<std::pair<VertexSet, long long>> hs;
  for (VertexSet s : b.elements())
    if (s != VertexSet::range(d)) hs.emplace_back(s, b.restriction_size(s));
  std::set<Point> out;
  Point x(static_cast<std::size_t>(d), 0);
  std::function<void(int, long long)> fill = [&](int i, long long left) {
    if (i == d - 1) {
      x[static_cast<std::size_t>(i)] = left;
      std::vector<std::vector<long long>> tight{std::vector<long long>(static_cast<std::size_t>(d), 1)};
      for (const auto& [s, rhs] : hs) {
        long long v = 0;
        s.for_each([&](int j) { v += x[static_cast<std::size_t>(j - 1)]; });
        if (v < rhs) return;
        if (v == rhs) {
          std::vector<long long> row(static_cast<std::size_t>(d), 0);
          s.for_each([&](int j) { row[static_cast<std::size_t>(j - 1)] = 1; });
          tight.push_back(row);
        }
      }
      if (rank_of(tight) == d) out.insert(x);
      return;
    }
    for (long long v = 0; v <= left; ++v) {
      x[static_cast<std::size_t>(i)] = v;
      fill(i + 1, left - v);
    }
  };
  fill(0, level);
  return out;
}

std::set<Point> as_points(const Realization& r) {
  std::set<Point> out;
  for (const auto& v : r.vertices) {
    Point p;
    for (const auto& q : v) {
      REQUIRE(denominator(q) == 1);
      p.push_back(static_cast<long long>(numerator(q)));
    }
    out.insert(p);
  }
  return out;
}

BuildingSet make(int n, std::vector<std::vector<int>> elements) {
  std::vector<VertexSet> sets;
  for (const auto& e : elements) sets.push_back(VertexSet::of(e));
  return BuildingSet::validate(n, sets);
}

}  // namespace

TEST_CASE("building set axioms") {
  const auto b13 = catalog::building_set(13);
  CHECK(b13.is_connected());
  CHECK(b13.size() == 5);
  CHECK(b13.restriction_size(VertexSet::of({1, 2, 3})) == 3);

  try {
    make(3, {{1}, {2}, {1, 2}, {2, 3}});
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("singleton") != std::string::npos);
  }
  try {
    make(3, {{1}, {2}, {3}, {1, 2}, {2, 3}});
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("union") != std::string::npos);
  }
  CHECK_FALSE(make(3, {{1}, {2}, {3}}).is_connected());
  CHECK_THROWS_AS(realize_nestohedron(make(3, {{1}, {2}, {3}})), DomainError);
}

TEST_CASE("fenn order") {
  const auto order = fenn_order(catalog::building_set(1));
  CHECK(order == std::vector<VertexSet>{VertexSet::of({1}), VertexSet::of({2}), VertexSet::of({3}), VertexSet::of({4}),
                                        VertexSet::of({1, 2, 3}), VertexSet::of({1, 2, 4}), VertexSet::of({1, 3, 4}),
                                        VertexSet::of({2, 3, 4})});
}

TEST_CASE("realization of small nestohedra") {
  const auto r13 = realize_nestohedron(catalog::building_set(13));
  CHECK(r13.level == 5);
  CHECK(as_points(r13) == std::set<Point>{{2, 1, 1, 1}, {1, 2, 1, 1}, {1, 1, 2, 1}, {1, 1, 1, 2}});
  CHECK(f_vector(nerve_of_realization(r13).complex) == FVector{4, 6, 4});
  CHECK(nerve_of_realization(r13).complex == SimplicialComplex::simplex_boundary(4));

  CHECK(realize_nestohedron(catalog::building_set(10)).vertices.size() == 8);
  const auto r12 = realize_nestohedron(catalog::building_set(12));
  CHECK(r12.vertices.size() == 6);
  CHECK(r12.facet_indices().size() == 5);
}

TEST_CASE("realizations match the lattice-point oracle and are exact") {
  for (int i = 1; i <= catalog::kCensusSize; ++i) {
    if (i == catalog::kNonNestohedral) continue;
    CAPTURE(i);
    const auto b = catalog::building_set(i);
    const auto r = realize_nestohedron(b);
    CHECK(as_points(r) == lattice_vertices(b));
    // Simplicity and the facet count |B| - 1.
    for (VertexSet t : r.incidence) CHECK(t.size() == 3);
    CHECK(r.facet_indices().size() == b.size() - 1);
    // Exact re-substitution.
    for (const auto& x : r.vertices) {
      Rational sum = 0;
      for (const auto& q : x) sum += q;
      CHECK(sum == r.level);
      for (const auto& h : r.halfspaces) {
        Rational v = 0;
        h.subset.for_each([&](int j) { v += x[static_cast<std::size_t>(j - 1)]; });
        CHECK(v >= h.rhs);
      }
    }
  }
}

TEST_CASE("nerve by truncation") {
  const auto n13 = nerve_by_truncation(catalog::building_set(13));
  CHECK(n13.complex == SimplicialComplex::simplex_boundary(4));

  const auto n12 = nerve_by_truncation(catalog::building_set(12));
  CHECK(f_vector(n12.complex) == FVector{5, 9, 6});
  CHECK(n12.labels.back() == VertexSet::of({1, 2, 3}));
  CHECK(n12.complex == stellar_subdivision(SimplicialComplex::simplex_boundary(4), VertexSet::of({1, 2, 3})));

  const auto n7 = nerve_by_truncation(catalog::building_set(7));
  CHECK(n7.labels.size() == 7);
  CHECK(canonical_form(n7.complex) == canonical_form(catalog::sphere(7).complex()));
}

TEST_CASE("two-path agreement for the twelve building sets") {
  for (int i = 1; i <= catalog::kCensusSize; ++i) {
    if (i == catalog::kNonNestohedral) continue;
    CAPTURE(i);
    const auto b = catalog::building_set(i);
    const auto geometric = nerve_of_realization(realize_nestohedron(b));
    const auto truncated = nerve_by_truncation(b);
    CHECK(canonical_form(geometric.complex) == canonical_form(truncated.complex));
    CHECK(canonical_form(geometric.complex) == canonical_form(catalog::sphere(i).complex()));
    // Both nerves carry the same labelled facet structure.
    std::set<std::set<VertexSet>> a;
    std::set<std::set<VertexSet>> c;
    for (VertexSet f : geometric.complex.facets()) {
      std::set<VertexSet> named;
      f.for_each([&](int v) { named.insert(geometric.labels[static_cast<std::size_t>(v - 1)]); });
      a.insert(named);
    }
    for (VertexSet f : truncated.complex.facets()) {
      std::set<VertexSet> named;
      f.for_each([&](int v) { named.insert(truncated.labels[static_cast<std::size_t>(v - 1)]); });
      c.insert(named);
    }
    CHECK(a == c);
  }
}

TEST_CASE("no shipped building set realizes the sixth census sphere") {
  const auto target = canonical_form(catalog::sphere(catalog::kNonNestohedral).complex());
  for (int i = 1; i <= catalog::kCensusSize; ++i) {
    if (i == catalog::kNonNestohedral) continue;
    CHECK(canonical_form(nerve_of_realization(realize_nestohedron(catalog::building_set(i))).complex) != target);
  }
  CHECK_THROWS_AS(catalog::building_set(catalog::kNonNestohedral), DomainError);
}

TEST_CASE("chart normals") {
  CHECK(chart_normal(VertexSet::of({1, 2}), 4) == std::vector<std::int64_t>{1, 1, 0});
  CHECK(chart_normal(VertexSet::of({1, 3, 4}), 4) == std::vector<std::int64_t>{0, -1, 0});
  CHECK(chart_normal(VertexSet::of({4}), 4) == std::vector<std::int64_t>{-1, -1, -1});
}

TEST_CASE("Delzant check") {
  for (int i : {10, 13}) {
    const auto b = catalog::building_set(i);
    CHECK(delzant_check(realize_nestohedron(b), fenn_charmap(b)));
  }
  // A vertex whose columns are e1, e2, e1 + e2 + 2 e3 fails.
  const auto r = realize_nestohedron(catalog::building_set(13));
  const auto bad = CharMatrix::from_rows({{1, 0, 1, -1}, {0, 1, 1, -1}, {0, 0, 2, -1}});
  CHECK(determinant({1, 0, 1, 0, 1, 1, 0, 0, 2}, 3) == 2);
  CHECK_FALSE(delzant_check(r, bad));
  CHECK_THROWS_AS(delzant_check(r, CharMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), DomainError);
}

TEST_CASE("the canonical realization of B_7 has no unique vertex opposite its triangle") {
  const auto r = realize_nestohedron(catalog::building_set(7));
  const auto triangles = triangular_facets(r);
  REQUIRE(triangles.size() == 1);
  CHECK(r.halfspaces[static_cast<std::size_t>(triangles.front() - 1)].subset == VertexSet::of({1, 3, 4}));
  CHECK(farthest_vertices(r, triangles.front()).size() > 1);
}

TEST_CASE("P_6 by cutting the corner opposite the triangle") {
  const auto p6 = realize_p6();
  const auto base = nerve_of_realization(p6.base);
  CHECK(canonical_form(base.complex) == canonical_form(catalog::sphere(7).complex()));
  CHECK(p6.cut_offset == 1);
  CHECK(p6.base.vertices.size() == 10);
  CHECK(p6.polytope.vertices.size() == 12);
  const auto nerve = nerve_of_realization(p6.polytope);
  CHECK(f_vector(nerve.complex) == FVector{8, 18, 12});
  CHECK(canonical_form(nerve.complex) == canonical_form(catalog::sphere(6).complex()));
  CHECK(delzant_check(p6.polytope, p6.lambda));
  CHECK(p6.lambda == catalog::reference_matrix(6));
  CHECK(p6.lambda.labels() == catalog::reference_matrix(6).labels());
}
