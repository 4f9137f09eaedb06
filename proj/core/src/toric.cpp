#include "bier/toric.hpp"

#include <algorithm>

#include "bier/error.hpp"
#include "bier/parallel.hpp"

namespace bier {

namespace {

std::array<int, 3> apply(const F2Matrix& a, const std::array<int, 3>& v) {
  std::array<int, 3> out{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out[static_cast<std::size_t>(r)] ^= a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] & v[static_cast<std::size_t>(c)];
  return out;
}

F2Matrix multiply(const F2Matrix& a, const F2Matrix& b) {
  F2Matrix out{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      for (int k = 0; k < 3; ++k) out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] ^= a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] & b[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
  return out;
}

constexpr F2Matrix kIdentity{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

}  // namespace

CharMatrix bier_charmap(int m) {
  if (m < 2) throw DomainError("Bier labelling needs m >= 2");
  const int n = m - 1;
  std::vector<std::vector<std::int64_t>> cols;
  std::vector<std::string> names;
  for (int side = 0; side < 2; ++side) {
    for (int i = 1; i <= m; ++i) {
      std::vector<std::int64_t> col(static_cast<std::size_t>(n), i == m ? 1 : 0);
      if (i < m) col[static_cast<std::size_t>(i - 1)] = 1;
      cols.push_back(std::move(col));
      names.push_back(side_label(side * m + i, m));
    }
  }
  return CharMatrix::from_columns(n, cols, std::move(names));
}

CharMatrix bier_charmap(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  if (k1.ground_size() != k2.ground_size()) throw DomainError("Bier labelling needs complexes on the same ground set");
  return bier_charmap(k1.ground_size());
}

CharmapValidation validate_charmap(const SimplicialComplex& k, const CharMatrix& lambda, int threads) {
  if (lambda.cols() != k.ground_size())
    throw DomainError("matrix has " + std::to_string(lambda.cols()) + " columns for " + std::to_string(k.ground_size()) + " vertices");
  const auto& facets = k.facets();
  for (VertexSet f : facets)
    if (f.size() != lambda.rows())
      throw DomainError("facet " + f.to_string() + " has " + std::to_string(f.size()) + " vertices, matrix has " +
                        std::to_string(lambda.rows()) + " rows");
  std::vector<std::int64_t> dets(facets.size());
  parallel_for(facets.size(), threads, [&](std::size_t i) { dets[i] = lambda.minor(facets[i]); });
  for (std::size_t i = 0; i < facets.size(); ++i)
    if (dets[i] != 1 && dets[i] != -1) return {false, facets[i], dets[i]};
  return {};
}

BuchstaberCertificate buchstaber_certificate(const SimplicialComplex& k) {
  const int m = k.ground_size();
  BuchstaberCertificate cert{bier_sphere(k), bier_charmap(m), m + 1, 2 * m - (m - 1)};
  const auto check = validate_charmap(cert.sphere.complex(), cert.matrix);
  if (!check.valid) throw InternalError("Bier labelling fails on facet " + check.failing_facet->to_string());
  return cert;
}

CharMatrix fenn_charmap(const BuildingSet& b) {
  if (!b.is_connected()) throw DomainError("characteristic matrix needs a connected building set");
  std::vector<std::vector<std::int64_t>> cols;
  std::vector<std::string> names;
  for (VertexSet s : fenn_order(b)) {
    cols.push_back(chart_normal(s, b.ground_size()));
    names.push_back(subset_label(s));
  }
  return CharMatrix::from_columns(b.ground_size() - 1, cols, std::move(names));
}

CharMatrix align_columns(const CharMatrix& lambda, const std::vector<VertexSet>& labels) {
  std::vector<int> order;
  for (VertexSet s : labels) {
    const auto name = subset_label(s);
    const auto it = std::find(lambda.labels().begin(), lambda.labels().end(), name);
    if (it == lambda.labels().end()) throw DomainError("no matrix column labelled " + name);
    order.push_back(static_cast<int>(it - lambda.labels().begin()));
  }
  return lambda.select_columns(order);
}

CohomologyPresentation cohomology_presentation(const SimplicialComplex& k, const CharMatrix& lambda) {
  if (!k.is_pure() || !is_pseudomanifold(k)) throw DomainError("cohomology presentation needs a pure pseudomanifold");
  const auto check = validate_charmap(k, lambda);
  if (!check.valid) throw DomainError("matrix is not characteristic: facet " + check.failing_facet->to_string());
  CohomologyPresentation p;
  p.generators = k.ground_size();
  p.monomials = minimal_non_faces(k);
  for (int r = 0; r < lambda.rows(); ++r) {
    std::vector<std::int64_t> row;
    for (int c = 0; c < lambda.cols(); ++c) row.push_back(lambda.at(r, c));
    p.linear_forms.push_back(std::move(row));
  }
  p.betti = h_vector(k);
  return p;
}

std::vector<F2Matrix> gl3_f2() {
  std::vector<F2Matrix> out;
  for (int bits = 0; bits < 512; ++bits) {
    F2Matrix a{};
    for (int i = 0; i < 9; ++i) a[static_cast<std::size_t>(i / 3)][static_cast<std::size_t>(i % 3)] = (bits >> i) & 1;
    // Invertible iff the columns are independent: no nonzero combination vanishes.
    bool invertible = true;
    for (int c = 1; c < 8 && invertible; ++c) {
      const auto image = apply(a, {c & 1, (c >> 1) & 1, (c >> 2) & 1});
      if (image == std::array<int, 3>{0, 0, 0}) invertible = false;
    }
    if (invertible) out.push_back(a);
  }
  return out;
}

OrientabilityResult small_cover_orientable(const CharMatrix& lambda) {
  if (lambda.rows() != 3) throw DomainError("orientability criterion is implemented for n = 3 only (got n = " + std::to_string(lambda.rows()) + ")");
  const CharMatrix reduced = lambda.mod2();
  std::vector<std::array<int, 3>> cols;
  for (int c = 0; c < reduced.cols(); ++c) {
    const auto col = reduced.column(c);
    cols.push_back({static_cast<int>(col[0]), static_cast<int>(col[1]), static_cast<int>(col[2])});
  }
  const std::array<std::array<int, 3>, 4> allowed{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}};
  const auto group = gl3_f2();
  for (const F2Matrix& a : group) {
    // a maps coordinates in the standard basis to coordinates in the new one.
    bool ok = true;
    for (const auto& c : cols) {
      const auto image = apply(a, c);
      if (std::find(allowed.begin(), allowed.end(), image) == allowed.end()) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (const F2Matrix& b : group)
      if (multiply(a, b) == kIdentity) return {true, b};
  }
  return {false, std::nullopt};
}

}  // namespace bier
