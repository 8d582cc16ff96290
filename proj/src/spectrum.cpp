// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0

#include "onelap/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "onelap/error.hpp"

namespace onelap {

bool SpectrumReport::contains(const Rational& mu) const {
  return std::binary_search(eigenvalues.begin(), eigenvalues.end(), mu);
}

namespace {

void require_usable(const IncidenceSystem& sys) {
  if (sys.size() == 0) throw Error(ErrorCode::EmptyDimension, "no faces in this dimension");
  (void)sys.weights();  // DegenerateNorm
}

}  // namespace

SpectrumReport compute_spectrum(const IncidenceSystem& sys, const SpectrumOptions& options) {
  require_usable(sys);
  SpectrumReport report;
  report.columns = sys.columns();

  EnumerationStats es;
  const auto rays = enumerate_rays(sys, &es);
  report.stats.faces = rays.size();
  report.stats.search_nodes = es.nodes;

  std::vector<std::optional<Eigenpair>> results(rays.size());
  auto check = [&](std::size_t i) {
    const auto& x = rays[i].representative;
    const Rational mu = rayleigh_quotient(sys, x);
    Verdict v = verify_eigenpair(sys, mu, x);
    if (v.accepted) results[i] = Eigenpair{mu, x, std::move(v.certificate)};
  };
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || rays.size() < 2) {
    for (std::size_t i = 0; i < rays.size(); ++i) check(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < rays.size(); i = next++) check(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  report.stats.verifier_calls = rays.size();

  for (auto& r : results) {
    if (!r) continue;
    ++report.stats.accepted;
    auto& list = report.witnesses[r->mu];
    if (options.keep_all_witnesses || list.size() < options.witness_cap) {
      list.push_back(std::move(*r));
    }
  }
  for (const auto& [mu, list] : report.witnesses) report.eigenvalues.push_back(mu);
  return report;
}

SpectrumReport compute_spectrum(const ProblemSpec& spec, const SpectrumOptions& options) {
  auto report = compute_spectrum(IncidenceSystem::from_spec(spec), options);
  report.spec = spec;
  return report;
}

std::pair<Rational, Rational> extreme_eigenvalues(const IncidenceSystem& sys) {
  require_usable(sys);
  // energy/norm is a ratio of linear forms on each closed face, so both
  // extremes are reached on a line.
  const auto rays = enumerate_rays(sys);
  std::optional<Rational> lo, hi;
  for (const auto& r : rays) {
    const Rational mu = rayleigh_quotient(sys, r.representative);
    if (!lo || mu < *lo) lo = mu;
    if (!hi || mu > *hi) hi = mu;
  }
  return {*lo, *hi};
}

std::pair<Rational, Rational> extreme_eigenvalues(const ProblemSpec& spec) {
  return extreme_eigenvalues(IncidenceSystem::from_spec(spec));
}

std::size_t default_grid_bound(std::size_t num_faces, std::size_t cap) {
  std::size_t f = 1;
  for (std::size_t i = 2; i + 1 <= num_faces; ++i) {
    if (f > cap / i) return cap;
    f *= i;
  }
  return std::min(f, cap);
}

std::size_t hadamard_grid_bound(std::size_t n) {
  if (n == 0) return 1;
  // 2 (sqrt(n)/2)^n = sqrt(n^n / 4^(n-1)); take the ceiling of that root.
  Integer num, den;
  mpz_ui_pow_ui(num.get_mpz_t(), n, n);
  mpz_ui_pow_ui(den.get_mpz_t(), 4, n - 1);
  Integer m;
  Integer q = num / den;
  mpz_sqrt(m.get_mpz_t(), q.get_mpz_t());
  while (m * m * den < num) ++m;
  return m.fits_ulong_p() ? m.get_ui() : static_cast<std::size_t>(-1);
}

std::set<Rational> grid_oracle_spectrum(const ProblemSpec& spec, std::size_t bound,
                                        std::size_t budget) {
  const IncidenceSystem sys = IncidenceSystem::from_spec(spec);
  require_usable(sys);
  if (bound < 1) throw Error(ErrorCode::BudgetExceeded, "grid bound must be at least 1");
  const std::size_t n = sys.size();
  const std::size_t side = 2 * bound + 1;
  std::size_t points = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (points > budget / side) {
      throw Error(ErrorCode::BudgetExceeded, "grid of side " + std::to_string(side) + " in " +
                                                 std::to_string(n) + " dimensions exceeds budget");
    }
    points *= side;
  }

  // The inclusion system only depends on these signs and on mu.
  std::map<std::pair<std::string, Rational>, bool> seen;
  std::set<Rational> out;
  const long c = static_cast<long>(bound);
  std::vector<long> v(n, -c);
  ChainVector x(n);
  while (true) {
    std::size_t first = 0;
    while (first < n && v[first] == 0) ++first;
    if (first < n && v[first] > 0) {
      for (std::size_t j = 0; j < n; ++j) x[j] = v[j];
      const Rational mu = rayleigh_quotient(sys, x);
      std::string key;
      for (std::size_t j = 0; j < n; ++j) key += static_cast<char>('1' + sgn(x[j]));
      for (std::size_t r = 0; r < sys.rows().size(); ++r) {
        key += static_cast<char>('1' + sgn(sys.row_sum(r, x)));
      }
      auto it = seen.find({key, mu});
      if (it == seen.end()) {
        it = seen.emplace(std::make_pair(std::move(key), mu), verify_eigenpair(sys, mu, x).accepted)
                 .first;
      }
      if (it->second) out.insert(mu);
    }
    std::size_t j = 0;
    while (j < n && v[j] == c) v[j++] = -c;
    if (j == n) break;
    ++v[j];
  }
  return out;
}

ZeroConditions check_zero_eigenvalue_conditions(const SimplicialComplex& k, int d) {
  if (d < 0 || d >= k.dim()) {
    throw Error(ErrorCode::DimensionOutOfRange,
                "zero-eigenvalue conditions need 0 <= d < dim K, got d=" + std::to_string(d));
  }
  ZeroConditions out;
  out.more_faces = k.num_faces(d) > k.num_faces(d + 1);
  const auto deg = k.up_degrees(d);
  const auto cap = static_cast<std::size_t>(d + 2);
  out.small_degrees = std::all_of(deg.begin(), deg.end(), [&](auto g) { return g <= cap; }) &&
                      std::any_of(deg.begin(), deg.end(), [&](auto g) { return g < cap; });
  out.colorable = is_colorable(k.adjacency(d, Adjacency::Up), cap);
  return out;
}

EigenInputs bound_inputs(const SimplicialComplex& k, int d, VolumeMode volume) {
  EigenInputs out;
  if (k.dim() >= 1) {
    out.mu_top_minus_one =
        extreme_eigenvalues(ProblemSpec{k, k.dim() - 1, Adjacency::Up, Normalization::Unnormalized})
            .first;
  }
  if (coloring_bound_applicable(k, d, volume)) {
    const auto n =
        volume == VolumeMode::UpDegree ? Normalization::Normalized : Normalization::Unnormalized;
    out.c1 = extreme_eigenvalues(ProblemSpec{k, d, Adjacency::Up, n}).first;
  }
  return out;
}

}  // namespace onelap
