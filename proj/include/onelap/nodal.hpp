// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "onelap/laplacian.hpp"

namespace onelap {

/// Connected components of the support of x under one adjacency relation.
/// Each domain lists d-face indices ascending; domains are ordered by their
/// smallest index.
struct NodalDecomposition {
  Adjacency mode = Adjacency::Up;
  std::vector<std::vector<std::size_t>> domains;

  std::size_t count() const { return domains.size(); }
};

/// Throws ZeroVector for x = 0 and LengthMismatch when x does not match S_d.
NodalDecomposition nodal_domains(const SimplicialComplex& k, int d, const ChainVector& x,
                                 Adjacency mode);

/// x on the domain divided by the weighted norm of that part, zero elsewhere.
/// Throws DomainMismatch unless `domain` is one of x's nodal domains under the
/// spec's adjacency.
ChainVector restrict_to_domain(const ProblemSpec& spec, const ChainVector& x,
                               const std::vector<std::size_t>& domain);

struct DomainCheck {
  std::vector<std::size_t> domain;
  ChainVector restriction;
  Verdict verdict;
};

struct NodalReport {
  Verdict input;  // verdict on (mu, x) itself
  NodalDecomposition decomposition;
  std::vector<DomainCheck> domains;

  bool all_accepted() const;
};

/// Verifies (mu, restriction) for every nodal domain of x.
NodalReport check_nodal_restriction_property(const ProblemSpec& spec, const Rational& mu,
                                             const ChainVector& x);

}  // namespace onelap
