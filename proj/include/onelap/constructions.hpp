// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "onelap/laplacian.hpp"

namespace onelap {

/// Face sets are returned ordered by dimension, then lexicographically.
/// Every face of M must lie in K (FaceNotInComplex otherwise).
std::vector<Face> closure(const SimplicialComplex& k, const std::vector<Face>& m);
/// Faces of K having a face in Cl M. M is closed first throughout, so a face
/// list and the subcomplex it generates have the same star and link.
std::vector<Face> star(const SimplicialComplex& k, const std::vector<Face>& m);
/// Cl St M minus St Cl M.
std::vector<Face> link(const SimplicialComplex& k, const std::vector<Face>& m);

struct Wedge {
  SimplicialComplex complex;
  /// Where each vertex of the second complex went; the first keeps its ids.
  std::map<Vertex, Vertex> second_vertices;
};

/// Glues K2 onto K1 along equal-dimension faces. K2's vertices outside F2 get
/// fresh ids above every id of K1 (in increasing order); F2's sorted vertices
/// are identified with F1's sorted vertices. Throws DimensionMismatch or
/// FaceNotInComplex.
Wedge wedge(const SimplicialComplex& k1, const Face& f1, const SimplicialComplex& k2,
            const Face& f2);
SimplicialComplex wedge_sum(const SimplicialComplex& k1, const Face& f1,
                            const SimplicialComplex& k2, const Face& f2);

enum class MotifFailure { None, SharedCoface, EmptyLink };

struct MotifCheck {
  MotifFailure failure = MotifFailure::None;
  int link_dim = -1;   // -1 for an empty link
  std::string reason;  // empty when failure is None

  bool is_motif() const { return failure == MotifFailure::None; }
};

/// Any two distinct faces of M lying in a common face F of K force F into M,
/// and the link must be non-empty; link_dim is its dimension. Throws
/// NotSubcomplex when M is not closed.
MotifCheck is_i_motif(const SimplicialComplex& k, const std::vector<Face>& m);

struct Duplication {
  SimplicialComplex complex;
  /// Primed copy of each vertex of M.
  std::map<Vertex, Vertex> primed;
};

/// Adds a primed copy of every face of K meeting M's vertices, with M's
/// vertices replaced by fresh ids above every id of K. Requires the face
/// condition of is_i_motif (NotAMotif otherwise); an empty link is allowed and
/// yields a disjoint copy of M.
Duplication duplication(const SimplicialComplex& k, const std::vector<Face>& m);
SimplicialComplex duplicate_motif(const SimplicialComplex& k, const std::vector<Face>& m);

struct WedgeSpectrumCheck {
  SimplicialComplex wedge;
  std::vector<Rational> first, second, combined;
  std::vector<Rational> expected;  // union of first and second

  bool holds() const { return combined == expected; }
};

/// Compares the spectrum of the k-wedge with the union of the two spectra.
/// Throws ConditionViolated unless 0 <= k < d (Up) or d > k + 1 (Down), where
/// k is the dimension of the glued faces.
WedgeSpectrumCheck check_wedge_spectrum(const SimplicialComplex& k1, const Face& f1,
                                        const SimplicialComplex& k2, const Face& f2, int d,
                                        Adjacency op, Normalization normalization);

struct MatchedWedgeCheck {
  SimplicialComplex wedge;
  ChainVector glued;  // on the wedge's d-faces
  Verdict verdict;
};

/// Glues two eigenvectors of the same normalized up operator along d-faces
/// where they agree, and verifies the glued vector on the d-wedge. Throws
/// ConditionViolated when the values at the glued faces differ.
MatchedWedgeCheck check_matched_wedge(const SimplicialComplex& k1, const Face& f1,
                                      const ChainVector& x1, const SimplicialComplex& k2,
                                      const Face& f2, const ChainVector& x2, const Rational& mu);

/// The up operator of Cl St M on d-faces, restricted to the d-faces of St M
/// (listed in `columns`).
struct StarSystem {
  SimplicialComplex closed_star;
  std::vector<Face> columns;
  IncidenceSystem system;
};

StarSystem star_system(const SimplicialComplex& k, const std::vector<Face>& m, int d,
                       Normalization normalization);

struct DuplicationCheck {
  SimplicialComplex duplicated;
  Verdict restricted;  // (mu, h) on the star system
  ChainVector lifted;  // h on St M, -h on the primed copy, 0 elsewhere
  Verdict verdict;     // (mu, lifted) on the duplicated complex

  bool holds() const { return !restricted.accepted || verdict.accepted; }
};

/// h is indexed like star_system(...).columns.
DuplicationCheck check_duplication_eigenpair(const SimplicialComplex& k,
                                             const std::vector<Face>& m, int d,
                                             const Rational& mu, const ChainVector& h,
                                             Normalization normalization);

/// Takes a vector on the d-faces of Cl St M that vanishes on the link and
/// returns its entries on St M, ready for check_duplication_eigenpair. Throws
/// ConditionViolated when some link face carries a non-zero value.
ChainVector star_part(const SimplicialComplex& k, const std::vector<Face>& m, int d,
                      const ChainVector& on_closed_star);

}  // namespace onelap
