#include "bier/io.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "bier/error.hpp"

namespace bier::io {

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad field \"") + key + "\": " + e.what());
  }
}

json labels_of(VertexSet s) { return s.labels(); }

std::vector<VertexSet> sets_from(const json& j, const char* key) {
  std::vector<VertexSet> out;
  for (const auto& list : field<std::vector<std::vector<int>>>(j, key)) {
    try {
      out.push_back(VertexSet::of(list));
    } catch (const DomainError& e) {
      throw ParseError(std::string("bad label in \"") + key + "\": " + e.what());
    }
  }
  return out;
}

std::string decimal(const Rational& q) {
  std::ostringstream os;
  os << std::setprecision(12) << q.convert_to<double>();
  return os.str();
}

std::array<Rational, 3> chart_point(const std::vector<Rational>& x) { return {x[0], x[1], x[2]}; }

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text;
  if (!out) throw ParseError("write failed for " + path.string());
}

json to_json(const SimplicialComplex& k) {
  json facets = json::array();
  for (VertexSet f : k.facets())
    if (!f.empty()) facets.push_back(labels_of(f));
  return {{"m", k.ground_size()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const json& j) {
  const int m = field<int>(j, "m");
  if (m < 1 || m > kMaxGroundSize) throw ParseError("\"m\" must be in 1..64");
  const auto facets = sets_from(j, "facets");
  for (VertexSet f : facets)
    if (f.max_label() > m) throw ParseError("facet " + f.to_string() + " has a label above m = " + std::to_string(m));
  return SimplicialComplex::from_facets(m, facets);
}

json to_json(const BierSphere& s) {
  json j = to_json(s.complex());
  j["source_m"] = s.source_m();
  j["side_labels"] = true;
  return j;
}

BierSphere sphere_from_json(const json& j) {
  const auto k = complex_from_json(j);
  return BierSphere::wrap(k, field<int>(j, "source_m"));
}

json to_json(const BuildingSet& b) {
  json elements = json::array();
  for (VertexSet s : b.elements()) elements.push_back(labels_of(s));
  return {{"n_plus_1", b.ground_size()}, {"elements", elements}};
}

BuildingSet building_set_from_json(const json& j) {
  return BuildingSet::validate(field<int>(j, "n_plus_1"), sets_from(j, "elements"));
}

json to_json(const CharMatrix& c) {
  json rows = json::array();
  for (int r = 0; r < c.rows(); ++r) {
    json row = json::array();
    for (int col = 0; col < c.cols(); ++col) row.push_back(c.at(r, col));
    rows.push_back(row);
  }
  return {{"rows", c.rows()}, {"cols", c.cols()}, {"entries", rows}, {"labels", c.labels()}};
}

CharMatrix char_matrix_from_json(const json& j) {
  const int rows = field<int>(j, "rows");
  const int cols = field<int>(j, "cols");
  const auto entries = field<std::vector<std::vector<std::int64_t>>>(j, "entries");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = field<std::vector<std::string>>(j, "labels");
  if (static_cast<int>(entries.size()) != rows) throw ParseError("\"entries\" has the wrong number of rows");
  for (const auto& row : entries)
    if (static_cast<int>(row.size()) != cols) throw ParseError("\"entries\" row has the wrong length");
  try {
    return CharMatrix::from_rows(entries, std::move(labels));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string to_string(const Rational& q) { return q.str(); }

Rational rational_from_string(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw ParseError("not a rational number: \"" + s + "\"");
  }
}

json to_json(const Realization& r) {
  json hs = json::array();
  for (const auto& h : r.halfspaces) hs.push_back({{"subset", labels_of(h.subset)}, {"rhs", to_string(h.rhs)}});
  json vertices = json::array();
  for (const auto& x : r.vertices) {
    json row = json::array();
    for (const auto& q : x) row.push_back(to_string(q));
    vertices.push_back(row);
  }
  json incidence = json::array();
  for (VertexSet t : r.incidence) incidence.push_back(labels_of(t));
  return {{"ambient", r.ambient}, {"level", to_string(r.level)}, {"halfspaces", hs}, {"vertices", vertices}, {"incidence", incidence}};
}

Realization realization_from_json(const json& j) {
  Realization r;
  r.ambient = field<int>(j, "ambient");
  r.level = rational_from_string(field<std::string>(j, "level"));
  for (const auto& h : field<json>(j, "halfspaces"))
    r.halfspaces.push_back({VertexSet::of(field<std::vector<int>>(h, "subset")), rational_from_string(field<std::string>(h, "rhs"))});
  for (const auto& row : field<std::vector<std::vector<std::string>>>(j, "vertices")) {
    std::vector<Rational> x;
    for (const auto& s : row) x.push_back(rational_from_string(s));
    if (static_cast<int>(x.size()) != r.ambient) throw ParseError("vertex has the wrong number of coordinates");
    r.vertices.push_back(std::move(x));
  }
  for (const auto& t : field<std::vector<std::vector<int>>>(j, "incidence")) r.incidence.push_back(VertexSet::of(t));
  if (r.incidence.size() != r.vertices.size()) throw ParseError("\"incidence\" must have one entry per vertex");
  return r;
}

std::string to_off(const Realization& r) {
  if (r.ambient != 4) throw DomainError("OFF export needs a 3-dimensional polytope");
  const auto facets = r.facet_indices();
  std::vector<std::vector<int>> faces;
  for (int h : facets) {
    std::vector<int> members;
    for (std::size_t v = 0; v < r.incidence.size(); ++v)
      if (r.incidence[v].contains(h)) members.push_back(static_cast<int>(v));
    // Walk the boundary cycle: neighbours on a facet share exactly two facets.
    std::vector<int> cycle{members.front()};
    std::vector<bool> used(members.size(), false);
    used[0] = true;
    while (cycle.size() < members.size()) {
      const VertexSet here = r.incidence[static_cast<std::size_t>(cycle.back())];
      bool advanced = false;
      for (std::size_t k = 0; k < members.size() && !advanced; ++k) {
        if (used[k] || (here & r.incidence[static_cast<std::size_t>(members[k])]).size() != 2) continue;
        used[k] = true;
        cycle.push_back(members[k]);
        advanced = true;
      }
      if (!advanced) throw InternalError("facet boundary is not a cycle");
    }
    const auto p0 = chart_point(r.vertices[static_cast<std::size_t>(cycle[0])]);
    const auto p1 = chart_point(r.vertices[static_cast<std::size_t>(cycle[1])]);
    const auto p2 = chart_point(r.vertices[static_cast<std::size_t>(cycle[2])]);
    const std::array<Rational, 3> a{p1[0] - p0[0], p1[1] - p0[1], p1[2] - p0[2]};
    const std::array<Rational, 3> b{p2[0] - p0[0], p2[1] - p0[1], p2[2] - p0[2]};
    const std::array<Rational, 3> n{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    const auto inward = chart_normal(r.halfspaces[static_cast<std::size_t>(h - 1)].subset, r.ambient);
    Rational dot = 0;
    for (std::size_t i = 0; i < 3; ++i) dot += n[i] * static_cast<long long>(inward[i]);
    if (dot > 0) std::reverse(cycle.begin() + 1, cycle.end());
    faces.push_back(std::move(cycle));
  }

  std::ostringstream os;
  os << "OFF\n";
  os << "# chart coordinates x1 x2 x3 on the hyperplane sum = " << to_string(r.level) << "\n";
  for (std::size_t v = 0; v < r.vertices.size(); ++v) {
    os << "# vertex " << v << ":";
    for (int i = 0; i < 3; ++i) os << ' ' << to_string(r.vertices[v][static_cast<std::size_t>(i)]);
    os << "\n";
  }
  for (std::size_t f = 0; f < faces.size(); ++f)
    os << "# face " << f << ": " << subset_label(r.halfspaces[static_cast<std::size_t>(facets[f] - 1)].subset) << "\n";
  os << r.vertices.size() << ' ' << faces.size() << " 0\n";
  for (const auto& x : r.vertices) os << decimal(x[0]) << ' ' << decimal(x[1]) << ' ' << decimal(x[2]) << "\n";
  for (const auto& f : faces) {
    os << f.size();
    for (int v : f) os << ' ' << v;
    os << "\n";
  }
  return os.str();
}

OffMesh parse_off(std::istream& in) {
  OffMesh mesh;
  std::string line;
  if (!std::getline(in, line) || line.rfind("OFF", 0) != 0) throw ParseError("missing OFF header");
  std::vector<std::string> body;
  while (std::getline(in, line)) {
    if (line.rfind("# vertex ", 0) == 0) {
      std::istringstream ls(line.substr(line.find(':') + 1));
      std::vector<Rational> x;
      std::string tok;
      while (ls >> tok) x.push_back(rational_from_string(tok));
      mesh.vertices.push_back(std::move(x));
    } else if (!line.empty() && line[0] != '#') {
      body.push_back(line);
    }
  }
  if (body.empty()) throw ParseError("missing OFF counts line");
  std::istringstream counts(body.front());
  std::size_t nv = 0;
  std::size_t nf = 0;
  if (!(counts >> nv >> nf)) throw ParseError("bad OFF counts line");
  if (body.size() != 1 + nv + nf) throw ParseError("OFF body length does not match its counts");
  if (mesh.vertices.size() != nv) throw ParseError("exact vertex comments do not match the vertex count");
  for (std::size_t f = 0; f < nf; ++f) {
    std::istringstream ls(body[1 + nv + f]);
    std::size_t k = 0;
    if (!(ls >> k)) throw ParseError("bad OFF face line");
    std::vector<int> face(k);
    for (auto& v : face)
      if (!(ls >> v) || v < 0 || static_cast<std::size_t>(v) >= nv) throw ParseError("bad OFF face index");
    mesh.faces.push_back(std::move(face));
  }
  return mesh;
}

json to_json(const CohomologyPresentation& p) {
  json gens = json::array();
  for (int i = 1; i <= p.generators; ++i) gens.push_back("v" + std::to_string(i));
  json monomials = json::array();
  for (VertexSet s : p.monomials) {
    json mono = json::array();
    s.for_each([&](int v) { mono.push_back("v" + std::to_string(v)); });
    monomials.push_back(mono);
  }
  json linear = json::array();
  for (std::size_t i = 0; i < p.linear_forms.size(); ++i)
    linear.push_back({{"name", "t" + std::to_string(i + 1)}, {"coefficients", p.linear_forms[i]}});
  return {{"generators", gens}, {"generator_degree", 2}, {"monomial_relations", monomials}, {"linear_relations", linear}, {"betti_even", p.betti}};
}

json to_json(const ClassificationReport& r) {
  json classes = json::array();
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const auto& c = r.classes[i];
    json mf = json::array();
    for (VertexSet s : c.mf) mf.push_back(side_string(s, r.m));
    json sources = json::array();
    for (const auto& k : c.sources) sources.push_back(to_json(k));
    classes.push_back({{"index", i + 1},
                       {"name", c.census_index ? json("S_" + std::to_string(*c.census_index)) : json(nullptr)},
                       {"f", c.f},
                       {"h", c.h},
                       {"mf", mf},
                       {"flag", c.flag},
                       {"vertex_count", c.form.vertex_count},
                       {"ghost_count", c.form.ghost_count},
                       {"canonical_form", c.form.to_string()},
                       {"representative", to_json(c.representative)},
                       {"sources", sources}});
  }
  return {{"m", r.m},
          {"complexes_enumerated", r.complexes_enumerated},
          {"complex_classes", r.complex_classes},
          {"bier_types", r.classes.size()},
          {"classes", classes}};
}

std::string report_markdown(const ClassificationReport& r) {
  const auto join = [](const auto& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  std::size_t flags = 0;
  for (const auto& c : r.classes) flags += c.flag ? 1 : 0;
  std::ostringstream os;
  os << "# Bier spheres for m = " << r.m << "\n\n";
  os << "- complexes enumerated (full simplex excluded): " << r.complexes_enumerated << "\n";
  os << "- isomorphism classes of complexes: " << r.complex_classes << "\n";
  os << "- combinatorial types of Bier spheres: " << r.classes.size() << "\n";
  os << "- flag types: " << flags << "\n\n";
  os << "| # | name | f | h | vertices | |MF| | flag | sources |\n";
  os << "|---|------|---|---|----------|------|------|---------|\n";
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const auto& c = r.classes[i];
    os << "| " << i + 1 << " | " << (c.census_index ? "S_" + std::to_string(*c.census_index) : "-") << " | " << join(c.f)
       << " | " << join(c.h) << " | " << c.form.vertex_count << " | " << c.mf.size() << " | " << (c.flag ? "yes" : "no")
       << " | " << c.sources.size() << " |\n";
  }
  os << "\n## Minimal non-faces\n\n";
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const auto& c = r.classes[i];
    os << "- " << i + 1 << (c.census_index ? " (S_" + std::to_string(*c.census_index) + ")" : "") << ": ";
    for (std::size_t k = 0; k < c.mf.size(); ++k) os << (k ? ", " : "") << side_string(c.mf[k], r.m);
    os << "\n";
  }
  return os.str();
}

void write_classification(const ClassificationReport& r, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_text_file(dir / "classes.json", to_json(r).dump(2) + "\n");
  write_text_file(dir / "report.md", report_markdown(r));
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "class_%02zu.json", i + 1);
    write_text_file(dir / name, to_json(r.classes[i].representative).dump(2) + "\n");
  }
}

}  // namespace bier::io
