#include "bier/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bier/building.hpp"
#include "bier/catalog.hpp"
#include "bier/classify.hpp"
#include "bier/io.hpp"
#include "bier/parallel.hpp"
#include "bier/toric.hpp"

namespace bier {

namespace {

template <typename V>
std::string tuple_string(const V& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

template <typename K>
std::string multiset_string(const std::map<K, int>& counts) {
  std::string s = "{";
  bool first = true;
  for (const auto& [k, n] : counts) {
    s += (first ? "" : ", ") + std::to_string(n) + "x" + tuple_string(k);
    first = false;
  }
  return s + "}";
}

const ClassificationReport& census(int threads) {
  static std::mutex mutex;
  static std::optional<ClassificationReport> report;
  std::lock_guard lock(mutex);
  if (!report) report = classify_bier(catalog::kCensusM, threads);
  return *report;
}

/// Every complex on [m] for m in [lo, hi], in enumeration order.
std::vector<SimplicialComplex> complexes_up_to(int lo, int hi) {
  std::vector<SimplicialComplex> out;
  for (int m = lo; m <= hi; ++m) {
    auto all = all_complexes(m);
    out.insert(out.end(), std::make_move_iterator(all.begin()), std::make_move_iterator(all.end()));
  }
  return out;
}

/// Counts the indices for which pred fails; returns the first failing index.
std::pair<std::size_t, std::optional<std::size_t>> count_failures(std::size_t n, int threads,
                                                                  const std::function<bool(std::size_t)>& pred) {
  std::vector<char> ok(n, 0);
  parallel_for(n, threads, [&](std::size_t i) { ok[i] = pred(i) ? 1 : 0; });
  std::size_t bad = 0;
  std::optional<std::size_t> first;
  for (std::size_t i = 0; i < n; ++i) {
    if (ok[i]) continue;
    ++bad;
    if (!first) first = i;
  }
  return {bad, first};
}

CheckResult enumeration_count(int threads) {
  const auto n = enumerate_complexes(4, threads).size();
  return {1, "complex classes on 4 vertices", "classification section", "28", std::to_string(n), n == 28};
}

CheckResult classification_count(int threads) {
  const auto& r = census(threads);
  std::map<FVector, int> flags;
  int flag_count = 0;
  for (const auto& c : r.classes)
    if (c.flag) {
      ++flags[c.f];
      ++flag_count;
    }
  const std::map<FVector, int> want{{{8, 18, 12}, 2}, {{7, 15, 10}, 1}, {{6, 12, 8}, 1}};
  std::ostringstream expected;
  expected << "13 types; 4 flag with f " << multiset_string(want);
  std::ostringstream computed;
  computed << r.classes.size() << " types; " << flag_count << " flag with f " << multiset_string(flags);
  return {2, "Bier sphere types for m = 4", "sphere type census, flag list", expected.str(), computed.str(),
          r.classes.size() == 13 && flag_count == 4 && flags == want};
}

CheckResult f_vector_census(int threads) {
  const auto& r = census(threads);
  std::map<FVector, int> got;
  for (const auto& c : r.classes) ++got[c.f];
  std::map<FVector, int> want;
  for (int i = 1; i <= catalog::kCensusSize; ++i) ++want[catalog::f_vector(i)];
  return {3, "f-vector census", "f-vector table", multiset_string(want), multiset_string(got), got == want};
}

CheckResult mf_tables(int threads) {
  const auto& r = census(threads);
  std::set<int> named;
  int agree = 0;
  std::string detail;
  for (const auto& c : r.classes) {
    if (!c.census_index) {
      detail += " unnamed class " + c.form.to_string() + ";";
      continue;
    }
    const int i = *c.census_index;
    named.insert(i);
    const int m = catalog::kCensusM;
    // Rendered table of the census sphere equals the reference rows as a set.
    std::set<std::string> rendered;
    for (VertexSet s : minimal_non_faces(catalog::sphere(i).complex())) rendered.insert(side_string(s, m));
    const auto& table = catalog::mf_table(i);
    const std::set<std::string> reference(table.begin(), table.end());
    // The enumerated sphere has the same MF cardinality profile.
    std::multiset<int> sizes_enum;
    for (VertexSet s : minimal_non_faces(bier_sphere(c.sources.front()).complex())) sizes_enum.insert(s.size());
    std::multiset<int> sizes_ref;
    for (const auto& s : table) sizes_ref.insert(parse_side_string(s, m).size());
    const bool labelled = bier_sphere(catalog::source(i)).complex() == catalog::sphere(i).complex();
    const bool ok = rendered == reference && sizes_enum == sizes_ref && labelled && table.size() == reference.size();
    if (ok) ++agree;
    else detail += " S_" + std::to_string(i) + " disagrees;";
  }
  const bool pass = agree == catalog::kCensusSize && named.size() == static_cast<std::size_t>(catalog::kCensusSize);
  return {4, "minimal non-face tables", "minimal non-face table", "13/13 rows agree",
          std::to_string(agree) + "/13 rows agree" + detail, pass};
}

CheckResult mf_formula(int threads) {
  const auto reps = enumerate_complexes(4, threads);
  auto all = complexes_up_to(2, 5);
  const auto check = [](const SimplicialComplex& k) {
    auto formula = bier_mf_formula(k);
    auto direct = minimal_non_faces(bier_sphere(k).complex());
    std::sort(formula.begin(), formula.end());
    std::sort(direct.begin(), direct.end());
    return formula == direct;
  };
  const auto [bad_reps, first_rep] = count_failures(reps.size(), threads, [&](std::size_t i) { return check(reps[i]); });
  const auto [bad_all, first_all] = count_failures(all.size(), threads, [&](std::size_t i) { return check(all[i]); });
  std::ostringstream computed;
  computed << reps.size() - bad_reps << "/" << reps.size() << " representatives, " << all.size() - bad_all << "/" << all.size()
           << " complexes on m <= 5";
  return {5, "MF formula agrees with direct computation", "minimal non-face proposition",
          "all representatives and all complexes agree", computed.str(), bad_reps == 0 && bad_all == 0};
}

CheckResult sphere_certificates(int threads) {
  const auto all = complexes_up_to(2, 5);
  const auto [bad, first] = count_failures(all.size(), threads, [&](std::size_t i) {
    const int m = all[i].ground_size();
    const auto sphere = bier_sphere(all[i]);
    const auto& s = sphere.complex();
    if (!s.is_pure() || s.dimension() != m - 2 || !is_pseudomanifold(s)) return false;
    if (euler_characteristic(s) != 1 + ((m - 2) % 2 == 0 ? 1 : -1)) return false;
    const auto h = h_vector(s);
    return std::equal(h.begin(), h.end(), h.rbegin());
  });
  std::ostringstream computed;
  computed << all.size() - bad << "/" << all.size() << " spheres certified";
  if (first) computed << "; first failure " << io::to_json(all[*first]).dump();
  return {6, "sphere certificates on m <= 5", "sphere property", "all pure, pseudomanifold, Euler and h-symmetric",
          computed.str(), bad == 0};
}

CheckResult buchstaber(int threads) {
  std::ostringstream computed;
  bool pass = true;
  for (int m = 2; m <= 5; ++m) {
    const auto reps = enumerate_complexes(m, threads);
    const auto [bad, first] = count_failures(reps.size(), threads, [&](std::size_t i) {
      const auto cert = buchstaber_certificate(reps[i]);
      return cert.claimed_s == m + 1 && cert.upper_bound == m + 1;
    });
    computed << (m > 2 ? ", " : "") << "m=" << m << ": " << reps.size() - bad << "/" << reps.size();
    pass = pass && bad == 0;
  }
  return {7, "Buchstaber certificates", "Buchstaber number claim", "every class certified with s = m + 1", computed.str(), pass};
}

/// Nerve of the polytope for census index i with its matrix aligned to the nerve vertices.
std::pair<SimplicialComplex, CharMatrix> polytope_data(int i) {
  if (i == catalog::kNonNestohedral) {
    const auto p6 = realize_p6();
    const auto nerve = nerve_of_realization(p6.polytope);
    return {nerve.complex, align_columns(p6.lambda, nerve.labels)};
  }
  const auto b = catalog::building_set(i);
  const auto nerve = nerve_of_realization(realize_nestohedron(b));
  return {nerve.complex, align_columns(fenn_charmap(b), nerve.labels)};
}

CheckResult betti(int) {
  std::ostringstream expected;
  std::ostringstream computed;
  bool pass = true;
  for (int i = 1; i <= catalog::kCensusSize; ++i) {
    const auto [k, lambda] = polytope_data(i);
    const auto p = cohomology_presentation(k, lambda);
    const auto want = catalog::betti(i);
    expected << (i > 1 ? " " : "") << tuple_string(want);
    computed << (i > 1 ? " " : "") << tuple_string(p.betti);
    pass = pass && p.betti == want;
  }
  return {8, "Betti numbers of the quasitoric manifolds", "Betti table", expected.str(), computed.str(), pass};
}

CheckResult reference_matrices(int) {
  int agree = 0;
  std::string detail;
  for (int i = 1; i <= catalog::kCensusSize; ++i) {
    const auto reference = catalog::reference_matrix(i);
    bool ok = false;
    if (i == catalog::kNonNestohedral) {
      const auto p6 = realize_p6();
      const auto nerve = nerve_of_realization(p6.polytope);
      ok = p6.lambda == reference && p6.lambda.labels() == reference.labels() &&
           canonical_form(nerve.complex) == canonical_form(catalog::sphere(i).complex()) && delzant_check(p6.polytope, p6.lambda);
    } else {
      const auto fenn = fenn_charmap(catalog::building_set(i));
      ok = align_columns(fenn, catalog::column_subsets(i)) == reference;
    }
    if (ok) ++agree;
    else detail += " P_" + std::to_string(i) + " differs;";
  }
  return {9, "characteristic matrices", "reference matrix list", "13/13 matrices equal",
          std::to_string(agree) + "/13 matrices equal" + detail, agree == catalog::kCensusSize};
}

CheckResult two_paths(int) {
  int agree = 0;
  std::string detail;
  for (int i = 1; i <= catalog::kCensusSize; ++i) {
    if (i == catalog::kNonNestohedral) continue;
    const auto b = catalog::building_set(i);
    const auto r = realize_nestohedron(b);
    const auto geometric = canonical_form(nerve_of_realization(r).complex);
    const auto truncated = canonical_form(nerve_by_truncation(b).complex);
    const auto target = canonical_form(catalog::sphere(i).complex());
    const bool ok = geometric == truncated && geometric == target && delzant_check(r, fenn_charmap(b));
    if (ok) ++agree;
    else detail += " B_" + std::to_string(i) + " differs;";
  }
  return {10, "nestohedra: truncation nerve = realization nerve = census sphere", "building set list",
          "12/12 building sets agree and are Delzant", std::to_string(agree) + "/12 agree" + detail, agree == 12};
}

CheckResult orientability(int) {
  std::string want;
  std::string got;
  for (int i = 1; i <= catalog::kCensusSize; ++i) {
    if (catalog::is_orientable(i)) want += (want.empty() ? "" : ",") + std::to_string(i);
    if (small_cover_orientable(catalog::reference_matrix(i)).orientable) got += (got.empty() ? "" : ",") + std::to_string(i);
  }
  return {11, "orientable small covers", "small cover example", "{" + want + "}", "{" + got + "}", want == got};
}

CheckResult duality(int threads) {
  const auto all = complexes_up_to(1, 5);
  const auto [bad_inv, first_inv] = count_failures(all.size(), threads, [&](std::size_t i) {
    return alexander_dual(alexander_dual(all[i])) == all[i];
  });
  const auto spheres = complexes_up_to(2, 5);
  const auto [bad_swap, first_swap] = count_failures(spheres.size(), threads, [&](std::size_t i) {
    const auto& k = spheres[i];
    const auto dual = alexander_dual(k);
    return swap_sides(bier_sphere(k).complex(), k.ground_size()) == bier_sphere(dual).complex();
  });
  std::size_t classes = 0;
  std::size_t bad_iso = 0;
  for (int m = 2; m <= 5; ++m) {
    const auto reps = enumerate_complexes(m, threads);
    classes += reps.size();
    bad_iso += count_failures(reps.size(), threads, [&](std::size_t i) {
                 return canonical_form(bier_sphere(reps[i]).complex()) == canonical_form(bier_sphere(alexander_dual(reps[i])).complex());
               }).first;
  }
  std::ostringstream computed;
  computed << "involution " << all.size() - bad_inv << "/" << all.size() << ", swap symmetry " << spheres.size() - bad_swap << "/"
           << spheres.size() << ", isomorphic " << classes - bad_iso << "/" << classes << " classes";
  return {12, "Alexander duality", "Bier symmetry", "all hold", computed.str(), bad_inv == 0 && bad_swap == 0 && bad_iso == 0};
}

using CheckFn = CheckResult (*)(int);
constexpr CheckFn kChecks[] = {enumeration_count, classification_count, f_vector_census, mf_tables, mf_formula, sphere_certificates,
                               buchstaber,        betti,                reference_matrices, two_paths, orientability, duality};

const char* const kNames[] = {"complex classes on 4 vertices",
                              "Bier sphere types for m = 4",
                              "f-vector census",
                              "minimal non-face tables",
                              "MF formula agrees with direct computation",
                              "sphere certificates on m <= 5",
                              "Buchstaber certificates",
                              "Betti numbers of the quasitoric manifolds",
                              "characteristic matrices",
                              "nestohedra: truncation nerve = realization nerve = census sphere",
                              "orientable small covers",
                              "Alexander duality"};

}  // namespace

CheckResult run_reproduction_check(int id, int threads) {
  if (id < 1 || id > 12) throw DomainError("check id must be in 1..12");
  try {
    return kChecks[id - 1](threads);
  } catch (const std::exception& e) {
    return {id, kNames[id - 1], "", "no error", std::string("error: ") + e.what(), false};
  }
}

std::vector<CheckResult> run_reproduction_checks(int threads) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= 12; ++id) out.push_back(run_reproduction_check(id, threads));
  return out;
}

void write_summary(const std::vector<CheckResult>& results, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  bool all = true;
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream md;
  md << "# Reproduction summary\n\n| # | check | source | expected | computed | result |\n|---|---|---|---|---|---|\n";
  for (const auto& r : results) {
    all = all && r.pass;
    rows.push_back({{"id", r.id}, {"name", r.name}, {"source", r.source}, {"expected", r.expected}, {"computed", r.computed}, {"pass", r.pass}});
    md << "| " << r.id << " | " << r.name << " | " << r.source << " | " << r.expected << " | " << r.computed << " | "
       << (r.pass ? "PASS" : "FAIL") << " |\n";
  }
  md << "\nOverall: " << (all ? "PASS" : "FAIL") << "\n";
  io::write_text_file(dir / "summary.json", nlohmann::json{{"pass", all}, {"checks", rows}}.dump(2) + "\n");
  io::write_text_file(dir / "summary.md", md.str());
}

}  // namespace bier
