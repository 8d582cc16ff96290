// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "onelap/complex.hpp"
#include "onelap/rational.hpp"

namespace onelap {

/// d-faces as nodes, adjacency(mode) pairs as edges.
struct FaceGraph {
  std::vector<Face> nodes;
  AdjacencyLists adjacency;
};

FaceGraph face_graph(const SimplicialComplex& k, int d, Adjacency mode);

/// Exact searches count their nodes and throw BudgetExceeded past the limit.
/// Graphs and vertex sets are limited to 64 elements.
struct SearchBudget {
  std::size_t max_nodes = std::size_t{1} << 20;
};

std::size_t independence_number(const FaceGraph& g, const SearchBudget& budget = {});
std::size_t clique_cover_number(const FaceGraph& g, const SearchBudget& budget = {});
std::size_t chromatic_number(const AdjacencyLists& adjacency, const SearchBudget& budget = {});
bool is_colorable(const AdjacencyLists& adjacency, std::size_t colors,
                  const SearchBudget& budget = {});

/// Chromatic number of the up-adjacency graph on d-faces.
std::size_t face_chromatic_number(const SimplicialComplex& k, int d,
                                  const SearchBudget& budget = {});

/// Which faces bound |A ∩ F| in the vertex parameters: every face, or the
/// s-faces only (the primed variants).
enum class FaceFamily { AllFaces, SFaces };

/// max |A| with |A ∩ F| <= s for the chosen faces F.
std::size_t vertex_alpha_s(const SimplicialComplex& k, int s,
                           FaceFamily family = FaceFamily::AllFaces,
                           const SearchBudget& budget = {});
/// min k such that V splits into k parts with |V_i ∩ F| <= s.
std::size_t vertex_chi_s(const SimplicialComplex& k, int s,
                         FaceFamily family = FaceFamily::AllFaces,
                         const SearchBudget& budget = {});

/// max |A| such that A contains no maximal face.
std::size_t vertex_alpha_facet(const SimplicialComplex& k, const SearchBudget& budget = {});
/// min k such that no part contains a maximal face; nullopt when a maximal face
/// is a single vertex (no partition works).
std::optional<std::size_t> vertex_chi_facet(const SimplicialComplex& k,
                                            const SearchBudget& budget = {});

/// Eigenvalues the bound report needs, computed by the spectrum engine.
struct EigenInputs {
  /// Minimum unnormalized up eigenvalue on (dim K - 1)-faces.
  std::optional<Rational> mu_top_minus_one;
  /// c_1 for the face-coloring bound on d-faces, with the chosen volume.
  std::optional<Rational> c1;
};

enum class VolumeMode { UpDegree, Constant };

struct BoundLine {
  std::string name;
  std::string relation;  // "<=", ">=", "=="
  Rational left = 0;
  Rational right = 0;
  bool holds = true;
  std::string note;
};

struct BoundReport {
  int dim = 0;      // face dimension of the coloring and clique bounds
  int top_dim = 0;  // dim K, used by the vertex bounds
  VolumeMode volume = VolumeMode::UpDegree;
  std::vector<std::pair<std::string, std::string>> inputs;  // echoed values
  std::vector<BoundLine> lines;

  bool all_hold() const;
};

/// Evaluates the vertex and face inequalities exactly. Throws MissingInput when
/// an eigenvalue the report needs is absent from `eigen`.
BoundReport bound_report(const SimplicialComplex& k, int d, const EigenInputs& eigen,
                         VolumeMode volume = VolumeMode::UpDegree,
                         const SearchBudget& budget = {});

/// Whether the coloring bound can be evaluated (vol must be positive).
bool coloring_bound_applicable(const SimplicialComplex& k, int d, VolumeMode volume);

}  // namespace onelap
