// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "onelap/arrangement.hpp"
#include "onelap/combinatorics.hpp"
#include "onelap/laplacian.hpp"

namespace onelap {

struct Eigenpair {
  Rational mu;
  ChainVector x;
  Certificate certificate;
};

struct SpectrumStats {
  std::size_t faces = 0;           // candidate directions examined
  std::size_t verifier_calls = 0;
  std::size_t accepted = 0;
  std::size_t search_nodes = 0;
};

struct SpectrumOptions {
  unsigned threads = 1;
  std::size_t witness_cap = 8;  // per eigenvalue
  bool keep_all_witnesses = false;
};

struct SpectrumReport {
  std::optional<ProblemSpec> spec;  // absent for reports on a bare IncidenceSystem
  std::vector<Face> columns;
  std::vector<Rational> eigenvalues;  // strictly increasing
  std::map<Rational, std::vector<Eigenpair>> witnesses;
  SpectrumStats stats;

  bool contains(const Rational& mu) const;
};

/// The full eigenvalue set. Candidates are the lines of the arrangement: every
/// eigenvector's face has one in its closure, and the eigen-inclusion survives
/// passing to the closure, so verifying the lines loses no eigenvalue.
/// Throws DegenerateNorm, or EmptyDimension when there are no d-faces.
SpectrumReport compute_spectrum(const IncidenceSystem& sys, const SpectrumOptions& options = {});
SpectrumReport compute_spectrum(const ProblemSpec& spec, const SpectrumOptions& options = {});

/// (min, max) of energy/norm over all non-zero vectors; both are eigenvalues.
std::pair<Rational, Rational> extreme_eigenvalues(const IncidenceSystem& sys);
std::pair<Rational, Rational> extreme_eigenvalues(const ProblemSpec& spec);

/// (N-1)! for N d-faces, capped.
std::size_t default_grid_bound(std::size_t num_faces, std::size_t cap = 1000000);
/// The sharper determinant bound ceil(2 (sqrt(N)/2)^N), computed exactly.
std::size_t hadamard_grid_bound(std::size_t num_faces);

/// Brute force: verifies energy/norm at every non-zero point of
/// {-C..C}^N whose first non-zero entry is positive. Throws BudgetExceeded
/// when (2C+1)^N exceeds `budget`.
std::set<Rational> grid_oracle_spectrum(const ProblemSpec& spec, std::size_t bound,
                                        std::size_t budget = 50000000);

struct ZeroConditions {
  bool more_faces = false;      // #S_d > #S_{d+1}
  bool small_degrees = false;   // all up-degrees <= d+2, one < d+2
  bool colorable = false;       // up graph is (d+2)-colorable
  bool implies_zero() const { return more_faces || small_degrees || colorable; }
};

/// Needs 0 <= d < dim K (DimensionOutOfRange otherwise).
ZeroConditions check_zero_eigenvalue_conditions(const SimplicialComplex& k, int d);

/// Eigenvalues the bound report needs: the minimum unnormalized up eigenvalue
/// on (dim K - 1)-faces, and c_1 on d-faces for the chosen volume (normalized
/// up for up-degree volume, unnormalized up for constant volume). Entries the
/// report would not use are left empty.
EigenInputs bound_inputs(const SimplicialComplex& k, int d, VolumeMode volume);

}  // namespace onelap
