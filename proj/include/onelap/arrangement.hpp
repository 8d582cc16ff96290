// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "onelap/laplacian.hpp"

namespace onelap {

/// A linear form with unit coefficients on the listed coordinates.
using LinearForm = std::vector<std::size_t>;

/// One entry in {-1, 0, +1} per arrangement row: constraint rows first, then
/// one row per coordinate.
using SignVector = std::vector<std::int8_t>;

struct ArrangementFace {
  SignVector signs;
  ChainVector representative;  // coprime integers realizing `signs` exactly
};

struct EnumerationStats {
  std::size_t nodes = 0;       // DFS nodes visited
  std::size_t lp_calls = 0;    // feasibility programs solved
  std::size_t faces = 0;       // faces yielded
};

struct EnumerationOptions {
  unsigned threads = 1;
};

/// Row sums of the constraint faces, followed by the coordinate forms.
std::vector<LinearForm> arrangement_rows(const IncidenceSystem& sys);
std::vector<LinearForm> arrangement_rows(const ProblemSpec& spec);

/// Sign of every arrangement row at x.
SignVector sign_vector(const std::vector<LinearForm>& rows, const ChainVector& x);

/// Flips a sign vector (and optionally a point) so that the first non-zero
/// coordinate entry is +1. `num_constraint_rows` locates the coordinate block.
void canonicalize_antipodal(SignVector& signs, std::size_t num_constraint_rows,
                            ChainVector* point = nullptr);

/// Every non-empty open face of the arrangement whose coordinate part is not
/// identically zero, one per antipodal pair, each with its margin-maximal
/// representative in [-1, 1]^q scaled to coprime integers. With one thread
/// the order is the deterministic depth-first order; with more threads the
/// subtrees are merged back in the same order.
std::vector<ArrangementFace> enumerate_faces(const IncidenceSystem& sys,
                                             const EnumerationOptions& options = {},
                                             EnumerationStats* stats = nullptr);
std::vector<ArrangementFace> enumerate_faces(const ProblemSpec& spec,
                                             const EnumerationOptions& options = {},
                                             EnumerationStats* stats = nullptr);

/// Streaming variant; faces are passed to `sink` as they are found (single-threaded).
void for_each_face(const IncidenceSystem& sys,
                   const std::function<void(const ArrangementFace&)>& sink,
                   EnumerationStats* stats = nullptr);

/// The one-dimensional faces (lines through the origin cut out by the rows),
/// one direction per line, each as its coprime integer direction with the
/// first non-zero coordinate positive. Every face's closure contains one, so
/// these carry every sign pattern an eigenvector can be transferred to.
/// Depth-first over row subsets in index order, each line reached once through
/// its lexicographically first basis.
std::vector<ArrangementFace> enumerate_rays(const IncidenceSystem& sys,
                                            EnumerationStats* stats = nullptr);
std::vector<ArrangementFace> enumerate_rays(const ProblemSpec& spec,
                                            EnumerationStats* stats = nullptr);

/// Margin-maximal representative of a consistent sign vector, or an empty
/// vector when the sign vector is not realizable.
ChainVector face_representative(const std::vector<LinearForm>& rows, std::size_t dimension,
                                const SignVector& signs);

}  // namespace onelap
