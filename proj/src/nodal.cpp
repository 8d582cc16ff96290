// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0

#include "onelap/nodal.hpp"

#include <algorithm>
#include <string>

#include "onelap/error.hpp"

namespace onelap {

bool NodalReport::all_accepted() const {
  return std::all_of(domains.begin(), domains.end(),
                     [](const DomainCheck& c) { return c.verdict.accepted; });
}

NodalDecomposition nodal_domains(const SimplicialComplex& k, int d, const ChainVector& x,
                                 Adjacency mode) {
  const auto adj = k.adjacency(d, mode);
  if (x.size() != adj.size()) {
    throw Error(ErrorCode::LengthMismatch, "vector has " + std::to_string(x.size()) +
                                               " entries, dimension " + std::to_string(d) +
                                               " has " + std::to_string(adj.size()) + " faces");
  }
  NodalDecomposition out;
  out.mode = mode;
  std::vector<bool> seen(x.size(), false);
  for (std::size_t start = 0; start < x.size(); ++start) {
    if (seen[start] || sgn(x[start]) == 0) continue;
    std::vector<std::size_t> domain{start};
    seen[start] = true;
    for (std::size_t head = 0; head < domain.size(); ++head) {
      for (std::size_t nb : adj[domain[head]]) {
        if (!seen[nb] && sgn(x[nb]) != 0) {
          seen[nb] = true;
          domain.push_back(nb);
        }
      }
    }
    std::sort(domain.begin(), domain.end());
    out.domains.push_back(std::move(domain));
  }
  if (out.domains.empty()) throw Error(ErrorCode::ZeroVector, "x has empty support");
  return out;
}

namespace {

ChainVector scaled_part(const IncidenceSystem& sys, const ChainVector& x,
                        const std::vector<std::size_t>& domain) {
  const auto& w = sys.weights();
  Rational total = 0;
  for (std::size_t j : domain) total += w[j] * abs(x[j]);
  if (sgn(total) == 0) throw Error(ErrorCode::DegenerateNorm, "domain has zero weighted norm");
  ChainVector out(x.size());
  for (std::size_t j : domain) out[j] = x[j] / total;
  return out;
}

}  // namespace

ChainVector restrict_to_domain(const ProblemSpec& spec, const ChainVector& x,
                               const std::vector<std::size_t>& domain) {
  const auto parts = nodal_domains(spec.complex, spec.dim, x, spec.op);
  std::vector<std::size_t> sorted = domain;
  std::sort(sorted.begin(), sorted.end());
  if (std::find(parts.domains.begin(), parts.domains.end(), sorted) == parts.domains.end()) {
    throw Error(ErrorCode::DomainMismatch, "not a nodal domain of x");
  }
  return scaled_part(IncidenceSystem::from_spec(spec), x, sorted);
}

NodalReport check_nodal_restriction_property(const ProblemSpec& spec, const Rational& mu,
                                             const ChainVector& x) {
  const auto sys = IncidenceSystem::from_spec(spec);
  NodalReport report;
  report.decomposition = nodal_domains(spec.complex, spec.dim, x, spec.op);
  report.input = verify_eigenpair(sys, mu, x);
  for (const auto& domain : report.decomposition.domains) {
    DomainCheck c;
    c.domain = domain;
    c.restriction = scaled_part(sys, x, domain);
    c.verdict = verify_eigenpair(sys, mu, c.restriction);
    report.domains.push_back(std::move(c));
  }
  return report;
}

}  // namespace onelap
