// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0

#include "onelap/io.hpp"

#include <algorithm>
#include <sstream>

#include "onelap/error.hpp"

namespace onelap {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

Vertex vertex_from(const Json& j) {
  if (!j.is_number_integer()) parse_error("vertex ids must be integers, got " + j.dump());
  const auto v = j.get<std::int64_t>();
  if (v < 0) parse_error("vertex ids must be non-negative, got " + std::to_string(v));
  return v;
}

Rational rational_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  parse_error("expected a rational string \"p/q\", got " + j.dump());
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\n");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t\n") - a + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

Json count(std::size_t n) { return Json(static_cast<std::uint64_t>(n)); }

}  // namespace

SimplicialComplex complex_from_json(const Json& j) {
  if (!j.is_object()) parse_error("complex file must be a JSON object");
  if (!j.contains("maximal_faces") || !j["maximal_faces"].is_array()) {
    parse_error("complex file needs a \"maximal_faces\" array");
  }
  std::vector<std::vector<Vertex>> faces;
  for (const auto& f : j["maximal_faces"]) {
    if (!f.is_array()) parse_error("each maximal face must be an array of vertex ids");
    std::vector<Vertex> vs;
    for (const auto& v : f) vs.push_back(vertex_from(v));
    faces.push_back(std::move(vs));
  }
  if (j.contains("vertices")) {
    if (!j["vertices"].is_array()) parse_error("\"vertices\" must be an array");
    std::vector<Vertex> listed;
    for (const auto& v : j["vertices"]) listed.push_back(vertex_from(v));
    std::sort(listed.begin(), listed.end());
    for (const auto& f : faces) {
      for (auto v : f) {
        if (!std::binary_search(listed.begin(), listed.end(), v)) {
          parse_error("vertex " + std::to_string(v) + " is not listed in \"vertices\"");
        }
      }
    }
    for (auto v : listed) faces.push_back({v});
  }
  return SimplicialComplex::from_maximal_faces(faces);
}

Json complex_to_json(const SimplicialComplex& k) {
  Json out;
  out["vertices"] = Json::array();
  for (auto v : k.vertices()) out["vertices"].push_back(v);
  out["maximal_faces"] = Json::array();
  for (const auto& f : k.maximal_faces()) out["maximal_faces"].push_back(f.vertices());
  return out;
}

SimplicialComplex builtin_complex(const std::string& name) {
  if (name == "path") return SimplicialComplex::from_maximal_faces({{1, 2}, {2, 3}});
  if (name == "remark5") return SimplicialComplex::from_maximal_faces({{1, 2, 3}, {1, 4}, {2, 5}});
  const std::string prefix = "simplex:";
  if (name.rfind(prefix, 0) == 0) {
    const std::string n = name.substr(prefix.size());
    if (n.empty() || n.size() > 2 || !std::all_of(n.begin(), n.end(), ::isdigit)) {
      parse_error("simplex size must be a small non-negative integer, got '" + n + "'");
    }
    std::vector<Vertex> vs;
    for (int i = 1; i <= std::stoi(n) + 1; ++i) vs.push_back(i);
    return SimplicialComplex::from_maximal_faces({vs});
  }
  parse_error("unknown builtin '" + name + "' (simplex:n, path, remark5)");
}

Face parse_face(const std::string& key) {
  std::vector<Vertex> vs;
  for (const auto& part : split(key, ',')) {
    if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit) || part.size() > 18) {
      parse_error("bad face key '" + key + "'");
    }
    vs.push_back(std::stoll(part));
  }
  if (vs.empty()) parse_error("empty face key");
  return Face(std::move(vs));
}

std::vector<Face> parse_face_list(const std::string& text) {
  std::vector<Face> out;
  for (const auto& part : split(text, ';')) out.push_back(parse_face(part));
  if (out.empty()) parse_error("no faces given");
  return out;
}

ChainVector vector_from_json(const Json& j, const std::vector<Face>& faces) {
  if (!j.is_object()) parse_error("vector file must be a JSON object of face key -> \"p/q\"");
  ChainVector x(faces.size());
  for (const auto& [key, value] : j.items()) {
    const Face f = parse_face(key);
    const auto it = std::lower_bound(faces.begin(), faces.end(), f);
    if (it == faces.end() || *it != f) {
      throw Error(ErrorCode::FaceNotInComplex, "vector key " + key + " is not a face of this dimension");
    }
    x[static_cast<std::size_t>(it - faces.begin())] = rational_from(value);
  }
  return x;
}

ChainVector vector_from_list(const std::string& text, std::size_t size) {
  ChainVector x;
  for (const auto& part : split(text, ',')) x.push_back(parse_rational(part));
  if (x.size() != size) {
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(size) + " values, got " +
                                               std::to_string(x.size()));
  }
  return x;
}

Json vector_to_json(const std::vector<Face>& faces, const ChainVector& x) {
  Json out = Json::object();
  for (std::size_t i = 0; i < faces.size(); ++i) out[faces[i].key()] = to_string(x[i]);
  return out;
}

std::string to_string(Adjacency op) { return op == Adjacency::Up ? "up" : "down"; }

std::string to_string(Normalization n) {
  return n == Normalization::Normalized ? "normalized" : "unnormalized";
}

std::string to_string(VolumeMode v) { return v == VolumeMode::UpDegree ? "updegree" : "constant"; }

Adjacency parse_adjacency(const std::string& text) {
  if (text == "up") return Adjacency::Up;
  if (text == "down") return Adjacency::Down;
  parse_error("operator must be up or down, got '" + text + "'");
}

Normalization parse_normalization(const std::string& text) {
  if (text == "normalized") return Normalization::Normalized;
  if (text == "unnormalized") return Normalization::Unnormalized;
  parse_error("normalization must be normalized or unnormalized, got '" + text + "'");
}

VolumeMode parse_volume(const std::string& text) {
  if (text == "updegree") return VolumeMode::UpDegree;
  if (text == "constant") return VolumeMode::Constant;
  parse_error("volume must be updegree or constant, got '" + text + "'");
}

Json problem_json(const ProblemSpec& spec) {
  Json out;
  out["complex"] = complex_to_json(spec.complex);
  out["dim"] = spec.dim;
  out["op"] = to_string(spec.op);
  out["normalization"] = to_string(spec.normalization);
  out["faces"] = Json::array();
  for (const auto& f : spec.complex.faces_of_dim(spec.dim)) out["faces"].push_back(f.key());
  return out;
}

Json verdict_json(const IncidenceSystem& sys, const Verdict& v) {
  Json out;
  out["accepted"] = v.accepted;
  out["reason"] = to_string(v.reason);
  if (v.accepted) out["certificate"] = vector_to_json(sys.constraint_faces(), v.certificate);
  return out;
}

Json spectrum_json(const SpectrumReport& report) {
  Json out;
  std::vector<Face> rows;
  if (report.spec) {
    out["problem"] = problem_json(*report.spec);
    rows = IncidenceSystem::from_spec(*report.spec).constraint_faces();
  } else {
    out["problem"] = nullptr;
  }
  out["eigenvalues"] = Json::array();
  for (const auto& mu : report.eigenvalues) out["eigenvalues"].push_back(to_string(mu));
  out["witnesses"] = Json::object();
  for (const auto& [mu, list] : report.witnesses) {
    Json entries = Json::array();
    for (const auto& w : list) {
      Json e;
      e["vector"] = vector_to_json(report.columns, w.x);
      if (rows.size() == w.certificate.size()) e["certificate"] = vector_to_json(rows, w.certificate);
      entries.push_back(std::move(e));
    }
    out["witnesses"][to_string(mu)] = std::move(entries);
  }
  out["stats"] = {{"lines", count(report.stats.faces)},
                  {"verifier_calls", count(report.stats.verifier_calls)},
                  {"accepted", count(report.stats.accepted)},
                  {"search_nodes", count(report.stats.search_nodes)}};
  return out;
}

Json bound_report_json(const BoundReport& report) {
  Json out;
  out["dim"] = report.dim;
  out["top_dim"] = report.top_dim;
  out["volume"] = to_string(report.volume);
  out["inputs"] = Json::object();
  for (const auto& [k, v] : report.inputs) out["inputs"][k] = v;
  out["lines"] = Json::array();
  for (const auto& l : report.lines) {
    Json e;
    e["name"] = l.name;
    e["relation"] = l.relation;
    e["left"] = to_string(l.left);
    e["right"] = to_string(l.right);
    e["holds"] = l.holds;
    if (!l.note.empty()) e["note"] = l.note;
    out["lines"].push_back(std::move(e));
  }
  out["all_hold"] = report.all_hold();
  return out;
}

Json invariants_json(const SimplicialComplex& k, const SearchBudget& budget) {
  Json out;
  out["vertices"] = count(k.num_vertices());
  out["dim"] = k.dim();
  out["f_vector"] = Json::array();
  for (int d = 0; d <= k.dim(); ++d) out["f_vector"].push_back(count(k.num_faces(d)));
  out["alpha"] = count(vertex_alpha_facet(k, budget));
  const auto chi = vertex_chi_facet(k, budget);
  out["chi"] = chi ? count(*chi) : Json(nullptr);
  out["alpha_s"] = Json::object();
  out["chi_s"] = Json::object();
  for (int s = 1; s <= k.dim(); ++s) {
    out["alpha_s"][std::to_string(s)] = count(vertex_alpha_s(k, s, FaceFamily::AllFaces, budget));
    out["chi_s"][std::to_string(s)] = count(vertex_chi_s(k, s, FaceFamily::AllFaces, budget));
  }
  out["by_dim"] = Json::array();
  for (int d = 0; d <= k.dim(); ++d) {
    Json e;
    e["dim"] = d;
    const auto up = face_graph(k, d, Adjacency::Up);
    e["face_chi"] = count(face_chromatic_number(k, d, budget));
    e["alpha_up"] = count(independence_number(up, budget));
    e["kappa_up"] = count(clique_cover_number(up, budget));
    if (d >= 1) {
      const auto down = face_graph(k, d, Adjacency::Down);
      e["alpha_down"] = count(independence_number(down, budget));
      e["kappa_down"] = count(clique_cover_number(down, budget));
    }
    if (d < k.dim()) {
      const auto [lo, hi] = k.extremal_containment(d);
      e["min_containment"] = count(lo);
      e["max_containment"] = count(hi);
    }
    out["by_dim"].push_back(std::move(e));
  }
  return out;
}

Json nodal_json(const ProblemSpec& spec, const NodalReport& report) {
  const auto sys = IncidenceSystem::from_spec(spec);
  const auto& faces = spec.complex.faces_of_dim(spec.dim);
  Json out;
  out["mode"] = to_string(report.decomposition.mode);
  out["count"] = count(report.decomposition.count());
  out["input"] = verdict_json(sys, report.input);
  out["domains"] = Json::array();
  for (const auto& c : report.domains) {
    Json e;
    e["faces"] = Json::array();
    for (auto j : c.domain) e["faces"].push_back(faces[j].key());
    e["restriction"] = vector_to_json(faces, c.restriction);
    e["verdict"] = verdict_json(sys, c.verdict);
    out["domains"].push_back(std::move(e));
  }
  out["all_accepted"] = report.all_accepted();
  return out;
}

Json wedge_check_json(const WedgeSpectrumCheck& check) {
  auto list = [](const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
  };
  Json out;
  out["wedge"] = complex_to_json(check.wedge);
  out["first"] = list(check.first);
  out["second"] = list(check.second);
  out["wedge_spectrum"] = list(check.combined);
  out["union"] = list(check.expected);
  out["holds"] = check.holds();
  return out;
}

Json duplication_json(const SimplicialComplex& k, const std::vector<Face>& m,
                      const Duplication& dup) {
  const auto motif = is_i_motif(k, m);
  Json out;
  out["complex"] = complex_to_json(dup.complex);
  out["link_dim"] = motif.link_dim;
  out["is_motif"] = motif.is_motif();
  if (!motif.reason.empty()) out["reason"] = motif.reason;
  out["primed"] = Json::object();
  for (const auto& [v, p] : dup.primed) out["primed"][std::to_string(v)] = p;
  return out;
}

std::string join(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += to_string(values[i]);
  }
  return out;
}

}  // namespace onelap
