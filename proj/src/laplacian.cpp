// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0

#include "onelap/laplacian.hpp"

#include <algorithm>

#include "onelap/error.hpp"

namespace onelap {

IncidenceSystem IncidenceSystem::from_spec(const ProblemSpec& spec) {
  const auto& k = spec.complex;
  const int d = spec.dim;
  const int lo = spec.op == Adjacency::Down ? 1 : 0;
  if (d < lo || d > k.dim()) {
    throw Error(ErrorCode::DimensionOutOfRange,
                "problem dimension " + std::to_string(d) + " outside [" + std::to_string(lo) +
                    ", " + std::to_string(k.dim()) + "]");
  }
  IncidenceSystem sys;
  sys.normalization_ = spec.normalization;
  sys.columns_ = k.faces_of_dim(d);
  if (spec.op == Adjacency::Up) {
    sys.constraint_faces_ = k.faces_of_dim(d + 1);
    sys.rows_ = k.boundary_indices(d + 1);
  } else {
    sys.constraint_faces_ = k.faces_of_dim(d - 1);
    sys.rows_ = k.coface_indices(d - 1);
  }
  sys.column_rows_.assign(sys.columns_.size(), {});
  for (std::size_t r = 0; r < sys.rows_.size(); ++r) {
    for (auto c : sys.rows_[r]) sys.column_rows_[c].push_back(r);
  }
  sys.weights_.assign(sys.columns_.size(), Rational(1));
  if (spec.normalization == Normalization::Normalized) {
    for (std::size_t c = 0; c < sys.columns_.size(); ++c) {
      sys.weights_[c] = spec.op == Adjacency::Up
                            ? Rational(static_cast<unsigned long>(sys.column_rows_[c].size()))
                            : Rational(d + 1);
      if (sgn(sys.weights_[c]) == 0) sys.degenerate_ = true;
    }
  }
  return sys;
}

IncidenceSystem IncidenceSystem::restricted_to(const std::vector<std::size_t>& columns) const {
  std::vector<std::size_t> remap(columns_.size(), columns_.size());
  IncidenceSystem out;
  out.normalization_ = normalization_;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] >= columns_.size()) {
      throw Error(ErrorCode::DomainMismatch, "restriction column out of range");
    }
    remap[columns[i]] = i;
    out.columns_.push_back(columns_[columns[i]]);
    out.weights_.push_back(weights_[columns[i]]);
    if (sgn(weights_[columns[i]]) == 0) out.degenerate_ = true;
  }
  out.column_rows_.assign(columns.size(), {});
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::vector<std::size_t> kept;
    for (auto c : rows_[r]) {
      if (remap[c] < columns_.size()) kept.push_back(remap[c]);
    }
    if (kept.empty()) continue;
    std::sort(kept.begin(), kept.end());
    const std::size_t new_row = out.rows_.size();
    for (auto c : kept) out.column_rows_[c].push_back(new_row);
    out.rows_.push_back(std::move(kept));
    out.constraint_faces_.push_back(constraint_faces_[r]);
  }
  return out;
}

const std::vector<Rational>& IncidenceSystem::weights() const {
  if (degenerate_) {
    throw Error(ErrorCode::DegenerateNorm, "normalized up-norm with a zero up-degree face");
  }
  return weights_;
}

Rational IncidenceSystem::row_sum(std::size_t row, const ChainVector& x) const {
  Rational s = 0;
  for (auto c : rows_[row]) s += x[c];
  return s;
}

namespace {

void check_length(const IncidenceSystem& sys, const ChainVector& x) {
  if (x.size() != sys.size()) {
    throw Error(ErrorCode::LengthMismatch, "vector has " + std::to_string(x.size()) +
                                               " entries, expected " +
                                               std::to_string(sys.size()));
  }
}

bool is_zero(const ChainVector& x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& v) { return sgn(v) == 0; });
}

}  // namespace

Rational energy(const IncidenceSystem& sys, const ChainVector& x) {
  check_length(sys, x);
  Rational total = 0;
  for (std::size_t r = 0; r < sys.rows().size(); ++r) total += abs(sys.row_sum(r, x));
  return total;
}

Rational energy(const ProblemSpec& spec, const ChainVector& x) {
  return energy(IncidenceSystem::from_spec(spec), x);
}

Rational norm(const IncidenceSystem& sys, const ChainVector& x) {
  check_length(sys, x);
  const auto& w = sys.weights();
  Rational total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) total += w[i] * abs(x[i]);
  return total;
}

Rational norm(const ProblemSpec& spec, const ChainVector& x) {
  return norm(IncidenceSystem::from_spec(spec), x);
}

Rational rayleigh_quotient(const IncidenceSystem& sys, const ChainVector& x) {
  const Rational n = norm(sys, x);
  if (sgn(n) == 0) throw Error(ErrorCode::ZeroVector, "zero vector has no Rayleigh quotient");
  return energy(sys, x) / n;
}

LinearSystem build_inclusion_system(const IncidenceSystem& sys, const Rational& mu,
                                    const ChainVector& x) {
  check_length(sys, x);
  if (sgn(mu) < 0) throw Error(ErrorCode::NegativeMu, "eigenvalue candidate is negative");
  if (is_zero(x)) throw Error(ErrorCode::ZeroVector, "eigenvector candidate is zero");
  const auto& w = sys.weights();

  LinearSystem out;
  const std::size_t nz = sys.rows().size();
  out.variables.reserve(nz);
  out.box.reserve(nz);
  for (std::size_t r = 0; r < nz; ++r) {
    out.variables.push_back("z[" + sys.constraint_faces()[r].key() + "]");
    const int s = sgn(sys.row_sum(r, x));
    if (s == 0) {
      out.box.emplace_back(Box{-1, 1});
    } else {
      out.box.emplace_back(Box{s, s});
    }
  }
  for (std::size_t c = 0; c < sys.size(); ++c) {
    std::vector<Rational> coeffs(nz);
    for (auto r : sys.column_rows()[c]) coeffs[r] = 1;
    const Rational bound = mu * w[c];
    const int s = sgn(x[c]);
    if (s != 0) {
      out.add_row(std::move(coeffs), Relation::Equal, s * bound);
    } else {
      std::vector<Rational> negated(nz);
      for (auto r : sys.column_rows()[c]) negated[r] = -1;
      out.add_row(std::move(coeffs), Relation::GreaterEqual, -bound);
      out.add_row(std::move(negated), Relation::GreaterEqual, -bound);
    }
  }
  return out;
}

LinearSystem build_inclusion_system(const ProblemSpec& spec, const Rational& mu,
                                    const ChainVector& x) {
  return build_inclusion_system(IncidenceSystem::from_spec(spec), mu, x);
}

std::string to_string(Rejection r) {
  switch (r) {
    case Rejection::None: return "None";
    case Rejection::WrongValue: return "WrongValue";
    case Rejection::Infeasible: return "Infeasible";
  }
  return "Unknown";
}

Verdict verify_eigenpair(const IncidenceSystem& sys, const Rational& mu, const ChainVector& x) {
  check_length(sys, x);
  if (sgn(mu) < 0) throw Error(ErrorCode::NegativeMu, "eigenvalue candidate is negative");
  if (is_zero(x)) throw Error(ErrorCode::ZeroVector, "eigenvector candidate is zero");
  const Rational n = norm(sys, x);
  if (sgn(n) != 0 && energy(sys, x) / n != mu) return Verdict{false, Rejection::WrongValue, {}};

  const LinearSystem system = build_inclusion_system(sys, mu, x);
  FeasibilityResult res = solve(system);
  if (!res.feasible()) return Verdict{false, Rejection::Infeasible, {}};
  return Verdict{true, Rejection::None, std::move(res.witness)};
}

Verdict verify_eigenpair(const ProblemSpec& spec, const Rational& mu, const ChainVector& x) {
  return verify_eigenpair(IncidenceSystem::from_spec(spec), mu, x);
}

}  // namespace onelap
