#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>

#include "bier/catalog.hpp"
#include "bier/classify.hpp"
#include "bier/error.hpp"
#include "bier/io.hpp"
#include "bier/toric.hpp"
#include "bier/verify.hpp"

namespace bier::cli {

namespace {

using io::json;

int guarded(Streams s, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    s.err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Parse: return kParseOrIo;
      case ErrorKind::Domain:
      case ErrorKind::Degenerate: return kDomain;
      case ErrorKind::Internal: return kVerificationFailed;
    }
    return kVerificationFailed;
  } catch (const json::exception& e) {
    s.err << "error: " << e.what() << "\n";
    return kParseOrIo;
  } catch (const std::filesystem::filesystem_error& e) {
    s.err << "error: " << e.what() << "\n";
    return kParseOrIo;
  }
}

json census_name(const SimplicialComplex& k) {
  if (k.vertex_count() > kMaxCanonicalVertices) return nullptr;
  const auto i = catalog::index_of(canonical_form(k));
  return i ? json("S_" + std::to_string(*i)) : json(nullptr);
}

}  // namespace

int cmd_dual(const std::filesystem::path& input, Streams s) {
  return guarded(s, [&] {
    s.out << io::to_json(alexander_dual(io::complex_from_json(io::read_json_file(input)))).dump() << "\n";
    return kOk;
  });
}

int cmd_sphere(const std::filesystem::path& input, Streams s) {
  return guarded(s, [&] {
    s.out << io::to_json(bier_sphere(io::complex_from_json(io::read_json_file(input)))).dump() << "\n";
    return kOk;
  });
}

int cmd_invariants(const std::filesystem::path& input, Streams s) {
  return guarded(s, [&] {
    const json j = io::read_json_file(input);
    const bool sided = j.contains("source_m");
    const SimplicialComplex k = sided ? io::sphere_from_json(j).complex() : io::complex_from_json(j);
    json mf = json::array();
    for (VertexSet f : minimal_non_faces(k)) {
      if (sided) mf.push_back(side_string(f, j.at("source_m").get<int>()));
      else mf.push_back(f.labels());
    }
    json out{{"f", f_vector(k)},
             {"h", k.is_pure() ? json(h_vector(k)) : json(nullptr)},
             {"mf", mf},
             {"flag", is_flag(k)},
             {"euler", euler_characteristic(k)},
             {"ghosts", k.ghosts().size()}};
    s.out << out.dump() << "\n";
    return kOk;
  });
}

int cmd_classify(int m, const std::filesystem::path& out_dir, int threads, Streams s) {
  return guarded(s, [&] {
    const auto report = classify_bier(m, threads);
    io::write_classification(report, out_dir);
    std::size_t flags = 0;
    for (const auto& c : report.classes) flags += c.flag ? 1 : 0;
    s.out << "m = " << m << ": " << report.complex_classes << " complex classes, " << report.classes.size()
          << " Bier sphere types, " << flags << " flag\n";
    return kOk;
  });
}

int cmd_charmap(const CharmapArgs& args, Streams s) {
  return guarded(s, [&] {
    if (args.bier.has_value() == args.building.has_value()) throw DomainError("give exactly one of --bier or --building");
    if (args.bier) {
      const auto k = io::complex_from_json(io::read_json_file(*args.bier));
      const auto sphere = bier_sphere(k);
      const auto lambda = bier_charmap(k, alexander_dual(k));
      const auto check = validate_charmap(sphere.complex(), lambda);
      s.out << io::to_json(lambda).dump() << "\n";
      if (!check.valid) {
        s.err << "validation FAIL at facet " << side_string(*check.failing_facet, k.ground_size()) << " (det "
              << check.failing_determinant << ")\n";
        return kVerificationFailed;
      }
      s.err << "validation PASS; s = s_R = " << k.ground_size() + 1 << "\n";
      return kOk;
    }
    const auto b = io::building_set_from_json(io::read_json_file(*args.building));
    const auto lambda = fenn_charmap(b);
    const auto nerve = nerve_of_realization(realize_nestohedron(b));
    const auto check = validate_charmap(nerve.complex, align_columns(lambda, nerve.labels));
    s.out << io::to_json(lambda).dump() << "\n";
    if (!check.valid) {
      std::string facet;
      check.failing_facet->for_each([&](int v) { facet += subset_label(nerve.labels[static_cast<std::size_t>(v - 1)]); });
      s.err << "validation FAIL at facet " << facet << " (det " << check.failing_determinant << ")\n";
      return kVerificationFailed;
    }
    s.err << "validation PASS\n";
    return kOk;
  });
}

int cmd_nestohedron(const NestohedronArgs& args, Streams s) {
  return guarded(s, [&] {
    const auto b = io::building_set_from_json(io::read_json_file(args.building));
    const auto r = realize_nestohedron(b);
    const auto nerve = nerve_of_realization(r);
    const auto truncated = nerve_by_truncation(b);
    const bool agree = nerve.complex.vertex_count() > kMaxCanonicalVertices ||
                       canonical_form(nerve.complex) == canonical_form(truncated.complex);
    const bool delzant = delzant_check(r, fenn_charmap(b));
    const json match = b.ground_size() == catalog::kCensusM ? census_name(nerve.complex) : json(nullptr);
    if (args.off) io::write_text_file(*args.off, io::to_off(r));
    if (args.exact) io::write_text_file(*args.exact, io::to_json(r).dump(2) + "\n");
    if (args.nerve) {
      json j = io::to_json(nerve.complex);
      json labels = json::array();
      for (VertexSet l : nerve.labels) labels.push_back(l.labels());
      j["labels"] = labels;
      j["census_match"] = match;
      io::write_text_file(*args.nerve, j.dump(2) + "\n");
    }
    json summary{{"vertices", r.vertices.size()},
                 {"facets", r.facet_indices().size()},
                 {"nerve_f", f_vector(nerve.complex)},
                 {"truncation_agrees", agree},
                 {"delzant", delzant},
                 {"census_match", match}};
    s.out << summary.dump() << "\n";
    return agree && delzant ? kOk : kVerificationFailed;
  });
}

int cmd_orientable(const std::filesystem::path& matrix, Streams s) {
  return guarded(s, [&] {
    const auto result = small_cover_orientable(io::char_matrix_from_json(io::read_json_file(matrix)));
    json out{{"orientable", result.orientable}, {"basis", nullptr}};
    if (result.basis) {
      json cols = json::array();
      for (int c = 0; c < 3; ++c) {
        json col = json::array();
        for (int r = 0; r < 3; ++r) col.push_back((*result.basis)[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        cols.push_back(col);
      }
      out["basis"] = cols;
    }
    s.out << out.dump() << "\n";
    return kOk;
  });
}

int cmd_betti(const std::filesystem::path& complex, const std::optional<std::filesystem::path>& matrix, Streams s) {
  return guarded(s, [&] {
    const json j = io::read_json_file(complex);
    const SimplicialComplex k = j.contains("source_m") ? io::sphere_from_json(j).complex() : io::complex_from_json(j);
    if (!matrix) {
      if (!is_pseudomanifold(k)) throw DomainError("Betti numbers need a pure pseudomanifold");
      s.out << json{{"betti_even", h_vector(k)}}.dump() << "\n";
      return kOk;
    }
    const auto lambda = io::char_matrix_from_json(io::read_json_file(*matrix));
    s.out << io::to_json(cohomology_presentation(k, lambda)).dump() << "\n";
    return kOk;
  });
}

int cmd_verify_paper(const std::filesystem::path& out_dir, int threads, Streams s) {
  return guarded(s, [&] {
    const auto results = run_reproduction_checks(threads);
    write_summary(results, out_dir);
    bool all = true;
    for (const auto& r : results) {
      all = all && r.pass;
      s.out << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.computed << "\n";
    }
    return all ? kOk : kVerificationFailed;
  });
}

int run(int argc, char** argv, Streams s) {
  CLI::App app{"Bier spheres, nestohedra and characteristic matrices"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0: BIER_THREADS or hardware)");

  std::string input;
  std::string out_dir;
  int m = 4;
  CharmapArgs charmap;
  std::string bier_path;
  std::string building_path;
  NestohedronArgs nest;
  std::string off_path;
  std::string nerve_path;
  std::string exact_path;
  std::string matrix_path;

  auto* dual = app.add_subcommand("dual", "Alexander dual of a complex JSON");
  dual->add_option("input", input)->required();
  auto* sphere = app.add_subcommand("sphere", "Bier sphere of a complex JSON");
  sphere->add_option("input", input)->required();
  auto* inv = app.add_subcommand("invariants", "f, h, minimal non-faces, flagness, Euler characteristic, ghosts");
  inv->add_option("input", input)->required();
  auto* cls = app.add_subcommand("classify", "classify Bier spheres of all complexes on [m]");
  cls->add_option("--m", m, "ground size")->required();
  cls->add_option("--out", out_dir, "output directory")->required();
  auto* cm = app.add_subcommand("charmap", "characteristic matrix of a Bier sphere or nestohedron");
  auto* cm_bier = cm->add_option("--bier", bier_path, "complex JSON");
  auto* cm_building = cm->add_option("--building", building_path, "building set JSON");
  auto* nst = app.add_subcommand("nestohedron", "exact realization of a nestohedron");
  nst->add_option("building", nest.building)->required();
  auto* nst_off = nst->add_option("--off", off_path, "OFF output");
  auto* nst_nerve = nst->add_option("--nerve", nerve_path, "nerve complex JSON output");
  auto* nst_exact = nst->add_option("--json", exact_path, "exact realization JSON output");
  auto* ori = app.add_subcommand("orientable", "small-cover orientability of a 3-row matrix");
  ori->add_option("matrix", matrix_path)->required();
  auto* bet = app.add_subcommand("betti", "Betti numbers and cohomology presentation");
  bet->add_option("complex", input)->required();
  auto* bet_matrix = bet->add_option("--matrix", matrix_path, "characteristic matrix JSON");
  auto* ver = app.add_subcommand("verify-paper", "run every reproduction check");
  ver->add_option("--out", out_dir, "summary directory")->default_val("verify-out");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    s.out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    s.err << "error: " << e.what() << "\n";
    return kParseOrIo;
  }

  if (dual->parsed()) return cmd_dual(input, s);
  if (sphere->parsed()) return cmd_sphere(input, s);
  if (inv->parsed()) return cmd_invariants(input, s);
  if (cls->parsed()) return cmd_classify(m, out_dir, threads, s);
  if (cm->parsed()) {
    if (cm_bier->count() > 0) charmap.bier = bier_path;
    if (cm_building->count() > 0) charmap.building = building_path;
    return cmd_charmap(charmap, s);
  }
  if (nst->parsed()) {
    if (nst_off->count() > 0) nest.off = off_path;
    if (nst_nerve->count() > 0) nest.nerve = nerve_path;
    if (nst_exact->count() > 0) nest.exact = exact_path;
    return cmd_nestohedron(nest, s);
  }
  if (ori->parsed()) return cmd_orientable(matrix_path, s);
  if (bet->parsed()) {
    std::optional<std::filesystem::path> mp;
    if (bet_matrix->count() > 0) mp = matrix_path;
    return cmd_betti(input, mp, s);
  }
  if (ver->parsed()) return cmd_verify_paper(out_dir, threads, s);
  return kParseOrIo;
}

}  // namespace bier::cli
