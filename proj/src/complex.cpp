// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0

#include "onelap/complex.hpp"

#include <algorithm>
#include <set>

#include "onelap/error.hpp"

namespace onelap {

Face::Face(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorCode::EmptyInput, "face with no vertices");
  std::sort(vertices_.begin(), vertices_.end());
  if (vertices_.front() < 0) {
    throw Error(ErrorCode::ParseError, "negative vertex id " + std::to_string(vertices_.front()));
  }
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw Error(ErrorCode::DuplicateVertexInFace, "repeated vertex in face");
  }
}

bool Face::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Face::contains(const Face& other) const {
  return std::includes(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                       other.vertices_.end());
}

std::vector<Face> Face::boundary() const {
  std::vector<Face> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    Face f;
    f.vertices_.reserve(vertices_.size() - 1);
    for (std::size_t j = 0; j < vertices_.size(); ++j) {
      if (j != i) f.vertices_.push_back(vertices_[j]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::string Face::key() const {
  std::string s;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(vertices_[i]);
  }
  return s;
}

SimplicialComplex SimplicialComplex::closure_of(const std::vector<Face>& faces) {
  if (faces.empty()) throw Error(ErrorCode::EmptyInput, "no faces given");
  std::vector<std::set<Face>> levels;
  for (const auto& top : faces) {
    const auto& vs = top.vertices();
    const std::size_t n = vs.size();
    if (n > 24) throw Error(ErrorCode::BudgetExceeded, "face too large for closure");
    if (levels.size() < n) levels.resize(n);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<Vertex> sub;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) sub.push_back(vs[i]);
      }
      const std::size_t d = sub.size() - 1;
      levels[d].insert(Face(std::move(sub)));
    }
  }
  SimplicialComplex k;
  for (auto& level : levels) k.by_dim_.emplace_back(level.begin(), level.end());
  for (const auto& v : k.by_dim_.front()) k.vertices_.push_back(v[0]);
  return k;
}

SimplicialComplex SimplicialComplex::from_maximal_faces(
    const std::vector<std::vector<Vertex>>& maximal) {
  if (maximal.empty()) throw Error(ErrorCode::EmptyInput, "no maximal faces given");
  std::vector<Face> faces;
  faces.reserve(maximal.size());
  for (const auto& vs : maximal) faces.emplace_back(vs);
  return closure_of(faces);
}

std::size_t SimplicialComplex::total_faces() const {
  std::size_t n = 0;
  for (const auto& level : by_dim_) n += level.size();
  return n;
}

const std::vector<Face>& SimplicialComplex::faces_of_dim(int d) const {
  static const std::vector<Face> kEmpty;
  if (d < 0 || d > dim()) return kEmpty;
  return by_dim_[static_cast<std::size_t>(d)];
}

std::vector<Face> SimplicialComplex::all_faces() const {
  std::vector<Face> out;
  for (const auto& level : by_dim_) out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::vector<Face> SimplicialComplex::maximal_faces() const {
  std::vector<Face> out;
  for (int d = 0; d <= dim(); ++d) {
    const auto cofaces = coface_indices(d);
    const auto& level = faces_of_dim(d);
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (cofaces[i].empty()) out.push_back(level[i]);
    }
  }
  return out;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Face& f) const {
  const auto& level = faces_of_dim(f.dim());
  auto it = std::lower_bound(level.begin(), level.end(), f);
  if (it == level.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

void SimplicialComplex::check_dim(int d, int lo, int hi, const char* what) const {
  if (d < lo || d > hi) {
    throw Error(ErrorCode::DimensionOutOfRange,
                std::string(what) + ": dimension " + std::to_string(d) + " outside [" +
                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

std::vector<std::vector<std::size_t>> SimplicialComplex::boundary_indices(int outer) const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : faces_of_dim(outer)) {
    std::vector<std::size_t> idx;
    for (const auto& b : f.boundary()) idx.push_back(*index_of(b));
    std::sort(idx.begin(), idx.end());
    out.push_back(std::move(idx));
  }
  return out;
}

std::vector<std::vector<std::size_t>> SimplicialComplex::coface_indices(int d) const {
  std::vector<std::vector<std::size_t>> out(faces_of_dim(d).size());
  const auto bnd = boundary_indices(d + 1);
  for (std::size_t r = 0; r < bnd.size(); ++r) {
    for (auto c : bnd[r]) out[c].push_back(r);
  }
  return out;
}

AdjacencyLists SimplicialComplex::adjacency(int d, Adjacency mode) const {
  if (mode == Adjacency::Up) {
    check_dim(d, 0, dim(), "up adjacency");
  } else {
    check_dim(d, 1, dim(), "down adjacency");
  }
  const auto groups =
      mode == Adjacency::Up ? boundary_indices(d + 1) : coface_indices(d - 1);
  std::vector<std::set<std::size_t>> sets(faces_of_dim(d).size());
  for (const auto& g : groups) {
    for (auto a : g) {
      for (auto b : g) {
        if (a != b) sets[a].insert(b);
      }
    }
  }
  AdjacencyLists out;
  out.reserve(sets.size());
  for (auto& s : sets) out.emplace_back(s.begin(), s.end());
  return out;
}

std::size_t SimplicialComplex::degree(const Face& f, Adjacency mode) const {
  const auto idx = index_of(f);
  if (!idx) throw Error(ErrorCode::FaceNotInComplex, "face {" + f.key() + "}");
  if (mode == Adjacency::Down) return f.size();
  std::size_t n = 0;
  for (const auto& g : faces_of_dim(f.dim() + 1)) {
    if (g.contains(f)) ++n;
  }
  return n;
}

std::vector<std::size_t> SimplicialComplex::up_degrees(int d) const {
  std::vector<std::size_t> deg(faces_of_dim(d).size(), 0);
  for (const auto& g : boundary_indices(d + 1)) {
    for (auto c : g) ++deg[c];
  }
  return deg;
}

IncidenceMatrix SimplicialComplex::incidence(int d, Adjacency mode) const {
  IncidenceMatrix m;
  std::vector<std::vector<std::size_t>> groups;
  if (mode == Adjacency::Up) {
    check_dim(d, 0, dim(), "up incidence");
    m.row_faces = faces_of_dim(d + 1);
    groups = boundary_indices(d + 1);
  } else {
    check_dim(d, 1, dim(), "down incidence");
    m.row_faces = faces_of_dim(d - 1);
    groups = coface_indices(d - 1);
  }
  m.col_faces = faces_of_dim(d);
  m.entries.assign(m.row_faces.size(), std::vector<std::uint8_t>(m.col_faces.size(), 0));
  for (std::size_t r = 0; r < groups.size(); ++r) {
    for (auto c : groups[r]) m.entries[r][c] = 1;
  }
  return m;
}

std::pair<std::size_t, std::size_t> SimplicialComplex::extremal_containment(int i) const {
  check_dim(i, 0, dim() - 1, "extremal containment");
  const auto deg = up_degrees(i);
  const auto [lo, hi] = std::minmax_element(deg.begin(), deg.end());
  return {*lo, *hi};
}

SimplicialComplex SimplicialComplex::relabeled(const std::map<Vertex, Vertex>& mapping) const {
  std::vector<Face> faces;
  for (const auto& f : maximal_faces()) {
    std::vector<Vertex> vs;
    for (auto v : f.vertices()) {
      auto it = mapping.find(v);
      vs.push_back(it == mapping.end() ? v : it->second);
    }
    faces.emplace_back(std::move(vs));
  }
  return closure_of(faces);
}

bool SimplicialComplex::contains_complex(const SimplicialComplex& sub) const {
  for (int d = 0; d <= sub.dim(); ++d) {
    for (const auto& f : sub.faces_of_dim(d)) {
      if (!contains(f)) return false;
    }
  }
  return true;
}

}  // namespace onelap
