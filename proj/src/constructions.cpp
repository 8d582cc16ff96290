// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0

#include "onelap/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "onelap/error.hpp"
#include "onelap/spectrum.hpp"

namespace onelap {

namespace {

struct ByDimThenLex {
  bool operator()(const Face& a, const Face& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using FaceSet = std::set<Face, ByDimThenLex>;

std::vector<Face> to_vector(const FaceSet& s) { return {s.begin(), s.end()}; }

void require_faces(const SimplicialComplex& k, const std::vector<Face>& m) {
  for (const auto& f : m) {
    if (!k.contains(f)) throw Error(ErrorCode::FaceNotInComplex, "face " + f.key() + " not in K");
  }
}

void add_subfaces(const Face& f, FaceSet& out) {
  const auto& v = f.vertices();
  const std::size_t n = v.size();
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    std::vector<Vertex> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) sub.push_back(v[i]);
    out.insert(Face(std::move(sub)));
  }
}

FaceSet closure_set(const std::vector<Face>& m) {
  FaceSet out;
  for (const auto& f : m) add_subfaces(f, out);
  return out;
}

FaceSet star_set(const SimplicialComplex& k, const std::vector<Face>& m) {
  FaceSet out;
  for (const auto& g : k.all_faces()) {
    if (std::any_of(m.begin(), m.end(), [&](const Face& f) { return g.contains(f); })) {
      out.insert(g);
    }
  }
  return out;
}

std::set<Vertex> vertices_of(const std::vector<Face>& m) {
  std::set<Vertex> out;
  for (const auto& f : m) out.insert(f.vertices().begin(), f.vertices().end());
  return out;
}

Vertex max_vertex(const SimplicialComplex& k) {
  return k.vertices().empty() ? 0 : k.vertices().back();
}

Face mapped(const Face& f, const std::map<Vertex, Vertex>& map) {
  std::vector<Vertex> v;
  for (auto x : f.vertices()) {
    auto it = map.find(x);
    v.push_back(it == map.end() ? x : it->second);
  }
  return Face(std::move(v));
}

std::vector<Rational> spectrum_or_empty(const ProblemSpec& spec) {
  if (spec.complex.num_faces(spec.dim) == 0) return {};
  return compute_spectrum(spec).eigenvalues;
}

}  // namespace

std::vector<Face> closure(const SimplicialComplex& k, const std::vector<Face>& m) {
  require_faces(k, m);
  return to_vector(closure_set(m));
}

std::vector<Face> star(const SimplicialComplex& k, const std::vector<Face>& m) {
  require_faces(k, m);
  return to_vector(star_set(k, to_vector(closure_set(m))));
}

std::vector<Face> link(const SimplicialComplex& k, const std::vector<Face>& m) {
  require_faces(k, m);
  const FaceSet st_cl = star_set(k, to_vector(closure_set(m)));
  const FaceSet cl_st = closure_set(to_vector(st_cl));
  FaceSet out;
  std::set_difference(cl_st.begin(), cl_st.end(), st_cl.begin(), st_cl.end(),
                      std::inserter(out, out.end()), ByDimThenLex{});
  return to_vector(out);
}

Wedge wedge(const SimplicialComplex& k1, const Face& f1, const SimplicialComplex& k2,
            const Face& f2) {
  if (!k1.contains(f1)) throw Error(ErrorCode::FaceNotInComplex, "face " + f1.key() + " not in K1");
  if (!k2.contains(f2)) throw Error(ErrorCode::FaceNotInComplex, "face " + f2.key() + " not in K2");
  if (f1.dim() != f2.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "glued faces have dimensions " +
                                                  std::to_string(f1.dim()) + " and " +
                                                  std::to_string(f2.dim()));
  }
  Wedge out;
  Vertex next = max_vertex(k1);
  for (auto v : k2.vertices()) {
    const auto& g = f2.vertices();
    const auto pos = std::find(g.begin(), g.end(), v);
    out.second_vertices[v] = pos != g.end() ? f1[static_cast<std::size_t>(pos - g.begin())] : ++next;
  }
  std::vector<Face> faces = k1.maximal_faces();
  for (const auto& f : k2.maximal_faces()) faces.push_back(mapped(f, out.second_vertices));
  out.complex = SimplicialComplex::closure_of(faces);
  return out;
}

SimplicialComplex wedge_sum(const SimplicialComplex& k1, const Face& f1,
                            const SimplicialComplex& k2, const Face& f2) {
  return wedge(k1, f1, k2, f2).complex;
}

MotifCheck is_i_motif(const SimplicialComplex& k, const std::vector<Face>& m) {
  require_faces(k, m);
  if (m.empty()) throw Error(ErrorCode::EmptyInput, "motif has no faces");
  const FaceSet members(m.begin(), m.end());
  for (const auto& f : members) {
    for (const auto& b : f.boundary()) {
      if (f.size() > 1 && !members.count(b)) {
        throw Error(ErrorCode::NotSubcomplex, "face " + b.key() + " of " + f.key() + " missing");
      }
    }
  }
  MotifCheck out;
  for (const auto& g : k.all_faces()) {
    if (members.count(g)) continue;
    std::size_t inside = 0;
    for (const auto& f : members) inside += g.contains(f) ? 1 : 0;
    if (inside >= 2) {
      out.failure = MotifFailure::SharedCoface;
      out.reason = "face " + g.key() + " contains two faces of M but is not in M";
      return out;
    }
  }
  for (const auto& f : link(k, m)) out.link_dim = std::max(out.link_dim, f.dim());
  if (out.link_dim < 0) {
    out.failure = MotifFailure::EmptyLink;
    out.reason = "link is empty";
  }
  return out;
}

Duplication duplication(const SimplicialComplex& k, const std::vector<Face>& m) {
  const auto check = is_i_motif(k, m);
  if (check.failure == MotifFailure::SharedCoface) throw Error(ErrorCode::NotAMotif, check.reason);
  Duplication out;
  Vertex next = max_vertex(k);
  for (auto v : vertices_of(m)) out.primed[v] = ++next;
  std::vector<Face> faces = k.maximal_faces();
  const std::size_t original = faces.size();
  for (std::size_t i = 0; i < original; ++i) {
    const auto& v = faces[i].vertices();
    if (std::any_of(v.begin(), v.end(), [&](Vertex x) { return out.primed.count(x) > 0; })) {
      faces.push_back(mapped(faces[i], out.primed));
    }
  }
  out.complex = SimplicialComplex::closure_of(faces);
  return out;
}

SimplicialComplex duplicate_motif(const SimplicialComplex& k, const std::vector<Face>& m) {
  return duplication(k, m).complex;
}

WedgeSpectrumCheck check_wedge_spectrum(const SimplicialComplex& k1, const Face& f1,
                                        const SimplicialComplex& k2, const Face& f2, int d,
                                        Adjacency op, Normalization normalization) {
  const int k = f1.dim();
  const bool ok = op == Adjacency::Up ? (k >= 0 && k < d) : (d > k + 1);
  if (!ok) {
    throw Error(ErrorCode::ConditionViolated,
                "wedge along a " + std::to_string(k) + "-face does not separate " +
                    std::to_string(d) + "-faces for this operator");
  }
  WedgeSpectrumCheck out;
  out.wedge = wedge_sum(k1, f1, k2, f2);
  out.first = spectrum_or_empty({k1, d, op, normalization});
  out.second = spectrum_or_empty({k2, d, op, normalization});
  out.combined = spectrum_or_empty({out.wedge, d, op, normalization});
  std::set_union(out.first.begin(), out.first.end(), out.second.begin(), out.second.end(),
                 std::back_inserter(out.expected));
  return out;
}

MatchedWedgeCheck check_matched_wedge(const SimplicialComplex& k1, const Face& f1,
                                      const ChainVector& x1, const SimplicialComplex& k2,
                                      const Face& f2, const ChainVector& x2, const Rational& mu) {
  const int d = f1.dim();
  const auto& faces1 = k1.faces_of_dim(d);
  const auto& faces2 = k2.faces_of_dim(d);
  if (x1.size() != faces1.size() || x2.size() != faces2.size()) {
    throw Error(ErrorCode::LengthMismatch, "eigenvectors do not match the glued dimension");
  }
  const Wedge w = wedge(k1, f1, k2, f2);
  const std::size_t i1 = *k1.index_of(f1);
  const std::size_t i2 = *k2.index_of(f2);
  if (x1[i1] != x2[i2]) {
    throw Error(ErrorCode::ConditionViolated, "eigenvectors differ on the glued faces");
  }
  MatchedWedgeCheck out;
  out.wedge = w.complex;
  out.glued.assign(out.wedge.num_faces(d), Rational(0));
  for (std::size_t j = 0; j < faces2.size(); ++j) {
    out.glued[*out.wedge.index_of(mapped(faces2[j], w.second_vertices))] = x2[j];
  }
  for (std::size_t j = 0; j < faces1.size(); ++j) {
    if (j != i1) out.glued[*out.wedge.index_of(faces1[j])] = x1[j];
  }
  out.verdict = verify_eigenpair(ProblemSpec{out.wedge, d, Adjacency::Up,
                                             Normalization::Normalized},
                                 mu, out.glued);
  return out;
}

StarSystem star_system(const SimplicialComplex& k, const std::vector<Face>& m, int d,
                       Normalization normalization) {
  const auto st = star(k, m);
  StarSystem out;
  out.closed_star = SimplicialComplex::closure_of(st);
  const auto full =
      IncidenceSystem::from_spec(ProblemSpec{out.closed_star, d, Adjacency::Up, normalization});
  const FaceSet in_star(st.begin(), st.end());
  std::vector<std::size_t> keep;
  const auto& faces = out.closed_star.faces_of_dim(d);
  for (std::size_t j = 0; j < faces.size(); ++j) {
    if (in_star.count(faces[j])) {
      keep.push_back(j);
      out.columns.push_back(faces[j]);
    }
  }
  out.system = full.restricted_to(keep);
  return out;
}

DuplicationCheck check_duplication_eigenpair(const SimplicialComplex& k,
                                             const std::vector<Face>& m, int d,
                                             const Rational& mu, const ChainVector& h,
                                             Normalization normalization) {
  const StarSystem ss = star_system(k, m, d, normalization);
  if (h.size() != ss.columns.size()) {
    throw Error(ErrorCode::LengthMismatch, "h has " + std::to_string(h.size()) +
                                               " entries, the star has " +
                                               std::to_string(ss.columns.size()) + " faces");
  }
  const Duplication dup = duplication(k, m);
  DuplicationCheck out;
  out.duplicated = dup.complex;
  out.restricted = verify_eigenpair(ss.system, mu, h);
  out.lifted.assign(dup.complex.num_faces(d), Rational(0));
  for (std::size_t j = 0; j < ss.columns.size(); ++j) {
    out.lifted[*dup.complex.index_of(ss.columns[j])] = h[j];
    out.lifted[*dup.complex.index_of(mapped(ss.columns[j], dup.primed))] = -h[j];
  }
  out.verdict = verify_eigenpair(ProblemSpec{dup.complex, d, Adjacency::Up, normalization}, mu,
                                 out.lifted);
  return out;
}

ChainVector star_part(const SimplicialComplex& k, const std::vector<Face>& m, int d,
                      const ChainVector& on_closed_star) {
  const auto st = star(k, m);
  const auto cst = SimplicialComplex::closure_of(st);
  const auto& faces = cst.faces_of_dim(d);
  if (on_closed_star.size() != faces.size()) {
    throw Error(ErrorCode::LengthMismatch, "vector does not match the closed star");
  }
  const FaceSet in_star(st.begin(), st.end());
  ChainVector out;
  for (std::size_t j = 0; j < faces.size(); ++j) {
    if (in_star.count(faces[j])) {
      out.push_back(on_closed_star[j]);
    } else if (sgn(on_closed_star[j]) != 0) {
      throw Error(ErrorCode::ConditionViolated, "non-zero on link face " + faces[j].key());
    }
  }
  return out;
}

}  // namespace onelap
