// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "onelap/complex.hpp"
#include "onelap/feasibility.hpp"
#include "onelap/rational.hpp"

namespace onelap {

enum class Normalization { Normalized, Unnormalized };

/// Which signless 1-Laplacian to study: the operator on d-faces of `complex`,
/// coupled through (d+1)-faces (Up) or (d-1)-faces (Down).
struct ProblemSpec {
  SimplicialComplex complex;
  int dim = 0;
  Adjacency op = Adjacency::Up;
  Normalization normalization = Normalization::Normalized;
};

/// One rational per d-face, in faces_of_dim order.
using ChainVector = std::vector<Rational>;
/// One z per constraint face.
using Certificate = std::vector<Rational>;

/// The unsigned incidence structure behind a problem: variables are the
/// columns (d-faces); each constraint face contributes the row sum of the
/// columns it touches. Weights are the diagonal of the norm.
class IncidenceSystem {
 public:
  /// Throws DimensionOutOfRange when d is outside [0, dim K] (or d < 1 for Down).
  static IncidenceSystem from_spec(const ProblemSpec& spec);

  /// Keeps only the listed columns; the other coordinates are pinned to zero
  /// and rows that lose all their columns disappear. Weights are kept as-is.
  IncidenceSystem restricted_to(const std::vector<std::size_t>& columns) const;

  std::size_t size() const { return columns_.size(); }
  const std::vector<Face>& columns() const { return columns_; }
  const std::vector<Face>& constraint_faces() const { return constraint_faces_; }
  const std::vector<std::vector<std::size_t>>& rows() const { return rows_; }
  const std::vector<std::vector<std::size_t>>& column_rows() const { return column_rows_; }
  Normalization normalization() const { return normalization_; }

  /// Norm weights. Throws DegenerateNorm when normalized up-degrees vanish.
  const std::vector<Rational>& weights() const;
  bool degenerate() const { return degenerate_; }

  Rational row_sum(std::size_t row, const ChainVector& x) const;

 private:
  std::vector<Face> columns_;
  std::vector<Face> constraint_faces_;
  std::vector<std::vector<std::size_t>> rows_;
  std::vector<std::vector<std::size_t>> column_rows_;
  std::vector<Rational> weights_;
  Normalization normalization_ = Normalization::Normalized;
  bool degenerate_ = false;
};

/// Sum over constraint faces of |row sum|.
Rational energy(const IncidenceSystem& sys, const ChainVector& x);
Rational energy(const ProblemSpec& spec, const ChainVector& x);

/// Sum of weight * |x_i|. Throws DegenerateNorm for degenerate normalized systems.
Rational norm(const IncidenceSystem& sys, const ChainVector& x);
Rational norm(const ProblemSpec& spec, const ChainVector& x);

/// Linear system over one z per constraint face expressing
/// B^T z in mu * D * Sgn(x) with z in Sgn(Bx).
LinearSystem build_inclusion_system(const IncidenceSystem& sys, const Rational& mu,
                                    const ChainVector& x);
LinearSystem build_inclusion_system(const ProblemSpec& spec, const Rational& mu,
                                    const ChainVector& x);

enum class Rejection { None, WrongValue, Infeasible };

struct Verdict {
  bool accepted = false;
  Rejection reason = Rejection::None;
  Certificate certificate;  // set iff accepted
};

std::string to_string(Rejection r);

/// Decides whether (mu, x) is an eigenpair. Values other than energy/norm are
/// rejected as WrongValue before any linear program is solved.
Verdict verify_eigenpair(const IncidenceSystem& sys, const Rational& mu, const ChainVector& x);
Verdict verify_eigenpair(const ProblemSpec& spec, const Rational& mu, const ChainVector& x);

/// energy(x) / norm(x).
Rational rayleigh_quotient(const IncidenceSystem& sys, const ChainVector& x);

}  // namespace onelap
