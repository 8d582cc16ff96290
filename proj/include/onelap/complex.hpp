// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace onelap {

using Vertex = std::int64_t;

/// A face is a non-empty, strictly increasing list of vertex ids.
class Face {
 public:
  Face() = default;
  /// Sorts the input. Throws DuplicateVertexInFace on repeats, EmptyInput when
  /// empty, and ParseError on negative ids.
  explicit Face(std::vector<Vertex> vertices);

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }

  bool contains(Vertex v) const;
  /// True when `other` is a (not necessarily proper) subset of this face.
  bool contains(const Face& other) const;

  /// The codimension-one faces, in the order obtained by dropping vertex i.
  std::vector<Face> boundary() const;

  /// "v1,v2,...,vk"
  std::string key() const;

  friend bool operator==(const Face&, const Face&) = default;
  friend auto operator<=>(const Face& a, const Face& b) { return a.vertices_ <=> b.vertices_; }

 private:
  std::vector<Vertex> vertices_;
};

enum class Adjacency { Up, Down };

struct IncidenceMatrix {
  std::vector<Face> row_faces;
  std::vector<Face> col_faces;
  std::vector<std::vector<std::uint8_t>> entries;  // row-major, 0/1
};

/// Symmetric irreflexive relation on the faces of one dimension, stored as
/// sorted neighbour lists indexed like faces_of_dim.
using AdjacencyLists = std::vector<std::vector<std::size_t>>;

/// A finite abstract simplicial complex. Immutable after construction; the
/// empty face is not stored.
class SimplicialComplex {
 public:
  /// Inclusion-closure of the given vertex sets.
  static SimplicialComplex from_maximal_faces(const std::vector<std::vector<Vertex>>& maximal);
  /// Same as from_maximal_faces, accepting already-built faces.
  static SimplicialComplex closure_of(const std::vector<Face>& faces);

  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_faces(int d) const { return faces_of_dim(d).size(); }
  std::size_t total_faces() const;

  /// Lexicographically sorted; empty when d < 0 or d > dim().
  const std::vector<Face>& faces_of_dim(int d) const;
  std::vector<Face> all_faces() const;
  std::vector<Face> maximal_faces() const;

  bool contains(const Face& f) const { return index_of(f).has_value(); }
  std::optional<std::size_t> index_of(const Face& f) const;

  /// Up: F ~ G iff they lie in a common (d+1)-face. Down: F ~ G iff they share
  /// a (d-1)-face (d >= 1).
  AdjacencyLists adjacency(int d, Adjacency mode) const;

  /// Up: number of (dim F + 1)-faces containing F. Down: dim F + 1.
  std::size_t degree(const Face& f, Adjacency mode) const;
  std::vector<std::size_t> up_degrees(int d) const;

  /// For every face of dimension `outer`, the indices of its codimension-one
  /// faces in faces_of_dim(outer - 1), in increasing order.
  std::vector<std::vector<std::size_t>> boundary_indices(int outer) const;
  /// For every face of dimension d, the indices of the (d+1)-faces containing it.
  std::vector<std::vector<std::size_t>> coface_indices(int d) const;

  IncidenceMatrix incidence(int d, Adjacency mode) const;

  /// Minimum and maximum, over i-faces, of the number of (i+1)-faces containing them.
  std::pair<std::size_t, std::size_t> extremal_containment(int i) const;

  /// Relabels vertices through an injective map; unmapped vertices keep their id.
  SimplicialComplex relabeled(const std::map<Vertex, Vertex>& mapping) const;

  /// True when every face of `sub` is a face of this complex.
  bool contains_complex(const SimplicialComplex& sub) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.by_dim_ == b.by_dim_;
  }

 private:
  void check_dim(int d, int lo, int hi, const char* what) const;

  std::vector<Vertex> vertices_;
  std::vector<std::vector<Face>> by_dim_;
};

}  // namespace onelap
