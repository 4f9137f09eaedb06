#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>

#include "bier/catalog.hpp"
#include "bier/error.hpp"
#include "bier/iso.hpp"
#include "bier/toric.hpp"

using namespace bier;

namespace {

/// Laplace expansion, for cross-checking the elimination.
std::int64_t laplace(const std::vector<std::int64_t>& a, int n) {
  if (n == 1) return a[0];
  std::int64_t sum = 0;
  for (int c = 0; c < n; ++c) {
    std::vector<std::int64_t> minor;
    for (int r = 1; r < n; ++r)
      for (int k = 0; k < n; ++k)
        if (k != c) minor.push_back(a[static_cast<std::size_t>(r * n + k)]);
    const std::int64_t term = a[static_cast<std::size_t>(c)] * laplace(minor, n - 1);
    sum += c % 2 == 0 ? term : -term;
  }
  return sum;
}

int f2_det(const F2Matrix& a) {
  const int d = a[0][0] * (a[1][1] * a[2][2] + a[1][2] * a[2][1]) + a[0][1] * (a[1][0] * a[2][2] + a[1][2] * a[2][0]) +
                a[0][2] * (a[1][0] * a[2][1] + a[1][1] * a[2][0]);
  return d % 2;
}

}  // namespace

TEST_CASE("determinants agree with cofactor expansion") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 6;
    std::vector<std::int64_t> a(static_cast<std::size_t>(n * n));
    for (auto& e : a) e = entry(rng);
    CHECK(determinant(a, n) == laplace(a, n));
  }
  CHECK(determinant({}, 0) == 1);
}

TEST_CASE("Bier labelling") {
  CHECK(bier_charmap(2) == CharMatrix::from_rows({{1, 1, 1, 1}}));
  const auto m4 = bier_charmap(4);
  CHECK(m4 == CharMatrix::from_rows({{1, 0, 0, 1, 1, 0, 0, 1}, {0, 1, 0, 1, 0, 1, 0, 1}, {0, 0, 1, 1, 0, 0, 1, 1}}));
  CHECK(m4.labels() == std::vector<std::string>{"x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"});
  for (int m = 2; m <= 7; ++m) {
    const auto lambda = bier_charmap(m);
    for (int r = 0; r < m - 1; ++r) CHECK(lambda.at(r, m - 1) == 1);
  }
  CHECK_THROWS_AS(bier_charmap(SimplicialComplex::empty(2), SimplicialComplex::empty(3)), DomainError);
}

TEST_CASE("validate_charmap") {
  // Every 3-subset of {e1, e2, e3, e1+e2+e3} is unimodular.
  const auto lambda = bier_charmap(4);
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b)
      for (int c = b + 1; c <= 4; ++c) CHECK(std::abs(lambda.minor(VertexSet::of({a, b, c}))) == 1);
  for (const auto& k : all_complexes(4)) CHECK(validate_charmap(bier_sphere(k).complex(), lambda).valid);

  const auto s13 = catalog::sphere(13).complex();
  // The census sphere S_13 lives on x1..x4 with the y side ghost.
  std::vector<std::vector<std::int64_t>> rows{{1, 0, 0, -1, 0, 0, 0, 0}, {0, 1, 0, -1, 0, 0, 0, 0}, {0, 0, 1, -1, 0, 0, 0, 0}};
  CHECK(validate_charmap(s13, CharMatrix::from_rows(rows)).valid);
  rows[0][1] = 1;
  rows[1][1] = 0;  // column 2 now doubles column 1
  rows[0][0] = 1;
  const auto broken = validate_charmap(s13, CharMatrix::from_rows(rows));
  CHECK_FALSE(broken.valid);
  REQUIRE(broken.failing_facet.has_value());
  CHECK(broken.failing_facet->contains(1));
  CHECK(broken.failing_facet->contains(2));

  CHECK_THROWS_AS(validate_charmap(s13, CharMatrix::from_rows({{1, 0, 0, 0, 0, 0, 0, 0}})), DomainError);
}

TEST_CASE("Buchstaber certificates") {
  const auto sk0 = skeleton(SimplicialComplex::simplex(4), 0);
  CHECK(buchstaber_certificate(sk0).claimed_s == 5);
  CHECK(bier_sphere(sk0).complex().vertex_count() == 8);
  const auto empty = buchstaber_certificate(SimplicialComplex::empty(4));
  CHECK(empty.claimed_s == 5);
  CHECK(empty.upper_bound == 5);
  CHECK(buchstaber_certificate(SimplicialComplex::simplex_boundary(2)).claimed_s == 3);
  for (int m = 2; m <= 5; ++m)
    for (const auto& k : enumerate_complexes(m, 1)) {
      const auto cert = buchstaber_certificate(k);
      CHECK(cert.claimed_s == m + 1);
      CHECK(cert.upper_bound == cert.claimed_s);
    }
}

TEST_CASE("Fenn matrices") {
  CHECK(fenn_charmap(catalog::building_set(13)) == CharMatrix::from_rows({{1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}}));
  const auto f10 = fenn_charmap(catalog::building_set(10));
  CHECK(f10.labels() == std::vector<std::string>{"{1}", "{2}", "{3}", "{4}", "{1,2,3}", "{1,2}"});
  CHECK(f10.column(4) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(f10.column(5) == std::vector<std::int64_t>{1, 1, 0});
  CHECK(align_columns(f10, catalog::column_subsets(10)) ==
        CharMatrix::from_rows({{1, 0, 0, -1, 1, 1}, {0, 1, 0, -1, 1, 1}, {0, 0, 1, -1, 0, 1}}));
  CHECK(fenn_charmap(catalog::building_set(12)).column(4) == std::vector<std::int64_t>{1, 1, 1});

  for (int i = 1; i <= catalog::kCensusSize; ++i) {
    if (i == catalog::kNonNestohedral) continue;
    CAPTURE(i);
    const auto b = catalog::building_set(i);
    const auto fenn = fenn_charmap(b);
    CHECK(align_columns(fenn, catalog::column_subsets(i)) == catalog::reference_matrix(i));
    const auto r = realize_nestohedron(b);
    const auto nerve = nerve_of_realization(r);
    CHECK(validate_charmap(nerve.complex, align_columns(fenn, nerve.labels)).valid);
    CHECK(delzant_check(r, fenn));
  }
}

TEST_CASE("cohomology presentation") {
  for (int i = 1; i <= catalog::kCensusSize; ++i) {
    CAPTURE(i);
    SimplicialComplex k = SimplicialComplex::empty(1);
    CharMatrix lambda;
    if (i == catalog::kNonNestohedral) {
      const auto p6 = realize_p6();
      const auto nerve = nerve_of_realization(p6.polytope);
      k = nerve.complex;
      lambda = align_columns(p6.lambda, nerve.labels);
    } else {
      const auto b = catalog::building_set(i);
      const auto nerve = nerve_of_realization(realize_nestohedron(b));
      k = nerve.complex;
      lambda = align_columns(fenn_charmap(b), nerve.labels);
    }
    const auto p = cohomology_presentation(k, lambda);
    CHECK(p.betti == catalog::betti(i));
    CHECK(p.betti.front() == 1);
    CHECK(p.betti.back() == 1);
    std::int64_t total = 0;
    for (auto b : p.betti) total += b;
    CHECK(total == static_cast<std::int64_t>(k.facets().size()));
    CHECK(p.betti[1] == k.vertex_count() - 3);
    auto mf = minimal_non_faces(k);
    std::sort(mf.begin(), mf.end());
    auto mono = p.monomials;
    std::sort(mono.begin(), mono.end());
    CHECK(mono == mf);
    CHECK(p.linear_forms.size() == 3);
    // Integer validity implies every facet minor is odd.
    for (VertexSet f : k.facets()) CHECK(lambda.mod2().minor(f) % 2 != 0);
  }
  const auto s13 = catalog::sphere(13).complex();
  CHECK_THROWS_AS(cohomology_presentation(s13, CharMatrix::from_rows({{1, 1, 0, 0, 0, 0, 0, 0},
                                                                      {0, 0, 1, 0, 0, 0, 0, 0},
                                                                      {0, 0, 0, 1, 0, 0, 0, 0}})),
                  DomainError);
}

TEST_CASE("GL(3, F2)") {
  const auto group = gl3_f2();
  CHECK(group.size() == 168);
  for (const auto& a : group) CHECK(f2_det(a) == 1);
}

TEST_CASE("small-cover orientability") {
  const auto r13 = small_cover_orientable(catalog::reference_matrix(13));
  CHECK(r13.orientable);
  REQUIRE(r13.basis.has_value());
  CHECK_FALSE(small_cover_orientable(catalog::reference_matrix(10)).orientable);
  CHECK(small_cover_orientable(catalog::reference_matrix(6)).orientable);
  for (int i = 1; i <= catalog::kCensusSize; ++i) {
    CAPTURE(i);
    const auto lambda = catalog::reference_matrix(i);
    const auto result = small_cover_orientable(lambda);
    CHECK(result.orientable == catalog::is_orientable(i));
    if (!result.orientable) continue;
    // Independently re-express every column in the witness basis.
    const F2Matrix& b = *result.basis;
    const auto mod2 = lambda.mod2();
    for (int c = 0; c < mod2.cols(); ++c) {
      const auto col = mod2.column(c);
      bool found = false;
      for (int mask : {1, 2, 4, 7}) {
        std::array<int, 3> combo{};
        for (int k = 0; k < 3; ++k)
          if ((mask >> k) & 1)
            for (int r = 0; r < 3; ++r) combo[static_cast<std::size_t>(r)] ^= b[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
        found = found || (combo[0] == col[0] && combo[1] == col[1] && combo[2] == col[2]);
      }
      CHECK(found);
    }
  }
  CHECK_THROWS_AS(small_cover_orientable(bier_charmap(5)), DomainError);
}
