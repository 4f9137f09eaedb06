#include "bier/classify.hpp"

#include <algorithm>
#include <map>

#include "bier/catalog.hpp"
#include "bier/error.hpp"
#include "bier/parallel.hpp"

namespace bier {

ClassificationReport classify_bier(int m, int threads) {
  if (m < 2 || m > 5) throw DomainError("classification supports 2 <= m <= 5, got " + std::to_string(m));
  ClassificationReport report;
  report.m = m;
  for_each_complex(m, [&](const SimplicialComplex&) { ++report.complexes_enumerated; });
  const auto complexes = enumerate_complexes(m, threads);
  report.complex_classes = complexes.size();

  std::vector<std::optional<SimplicialComplex>> spheres(complexes.size());
  std::vector<CanonicalForm> forms(complexes.size());
  parallel_for(complexes.size(), threads, [&](std::size_t i) {
    spheres[i] = bier_sphere(complexes[i]).complex();
    forms[i] = canonical_form(*spheres[i]);
  });

  std::map<CanonicalForm, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < complexes.size(); ++i) groups[forms[i]].push_back(i);

  for (const auto& [form, members] : groups) {
    BierClass c{BierSphere::wrap(*spheres[members.front()], m), form, {}, {}, {}, false, {}, std::nullopt};
    for (std::size_t i : members) c.sources.push_back(complexes[i]);
    if (m == catalog::kCensusM) {
      c.census_index = catalog::index_of(form);
      if (c.census_index) c.representative = catalog::sphere(*c.census_index);
    }
    c.form.ghost_count = 2 * m - form.vertex_count;
    c.f = f_vector(c.representative.complex());
    c.h = h_vector(c.representative.complex());
    c.mf = minimal_non_faces(c.representative.complex());
    c.flag = is_flag(c.representative.complex());
    report.classes.push_back(std::move(c));
  }

  std::sort(report.classes.begin(), report.classes.end(), [](const BierClass& a, const BierClass& b) {
    if (a.f != b.f) return a.f > b.f;
    if (a.mf.size() != b.mf.size()) return a.mf.size() < b.mf.size();
    return a.form < b.form;
  });
  return report;
}

}  // namespace bier
