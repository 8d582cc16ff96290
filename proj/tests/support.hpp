// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Shared corpus and brute-force oracles for the test binaries. Nothing here
// calls into the enumeration or the LP; the oracles work from the face lists.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "onelap/complex.hpp"
#include "onelap/feasibility.hpp"
#include "onelap/laplacian.hpp"
#include "onelap/rational.hpp"

namespace testing_support {

using onelap::Face;
using onelap::Rational;
using onelap::SimplicialComplex;
using onelap::Vertex;

inline SimplicialComplex make(const std::vector<std::vector<Vertex>>& maximal) {
  return SimplicialComplex::from_maximal_faces(maximal);
}

inline SimplicialComplex simplex(int n) {
  std::vector<Vertex> v;
  for (int i = 1; i <= n + 1; ++i) v.push_back(i);
  return make({v});
}

struct Named {
  std::string name;
  SimplicialComplex complex;
};

// Small complexes without isolated vertices, each with at most 8 faces in
// any dimension.
inline std::vector<Named> corpus() {
  return {
      {"edge", make({{1, 2}})},
      {"path", make({{1, 2}, {2, 3}})},
      {"star3", make({{1, 2}, {1, 3}, {1, 4}})},
      {"cycle3", make({{1, 2}, {2, 3}, {1, 3}})},
      {"cycle4", make({{1, 2}, {2, 3}, {3, 4}, {1, 4}})},
      {"triangle", simplex(2)},
      {"tetrahedron", simplex(3)},
      {"kite", make({{1, 2, 3}, {2, 3, 4}})},
      {"bowtie", make({{1, 2, 3}, {3, 4, 5}})},
      {"flag", make({{1, 2, 3}, {3, 4}})},
      {"remark", make({{1, 2, 3}, {1, 4}, {2, 5}})},
      {"hollow_tetra", make({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}})},
      {"fan", make({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}})},
  };
}

// Every (complex, d, op) with the constraint count and column count small
// enough for brute force.
struct Problem {
  std::string name;
  onelap::ProblemSpec spec;
};

inline std::string label(const onelap::ProblemSpec& s) {
  return std::string(s.op == onelap::Adjacency::Up ? "up" : "down") + "/d" +
         std::to_string(s.dim) +
         (s.normalization == onelap::Normalization::Normalized ? "/norm" : "/unnorm");
}

inline std::vector<Problem> problems(std::size_t max_columns = 8, std::size_t max_rows = 10) {
  std::vector<Problem> out;
  for (const auto& [name, k] : corpus()) {
    for (int d = 0; d <= k.dim(); ++d) {
      for (auto op : {onelap::Adjacency::Up, onelap::Adjacency::Down}) {
        if (op == onelap::Adjacency::Down && d == 0) continue;
        const int other = op == onelap::Adjacency::Up ? d + 1 : d - 1;
        if (k.num_faces(d) > max_columns || k.num_faces(other) > max_rows) continue;
        for (auto n : {onelap::Normalization::Normalized, onelap::Normalization::Unnormalized}) {
          onelap::ProblemSpec spec{k, d, op, n};
          if (op == onelap::Adjacency::Up && n == onelap::Normalization::Normalized) {
            bool zero = false;
            for (auto deg : k.up_degrees(d)) zero |= deg == 0;
            if (zero) continue;
          }
          out.push_back({name + ":" + label(spec), spec});
        }
      }
    }
  }
  return out;
}

// Random closed complex on up to `n` vertices; every vertex lies in an edge.
inline SimplicialComplex random_complex(std::mt19937& rng, int n, int max_faces, int max_dim) {
  std::uniform_int_distribution<int> count(1, max_faces);
  std::uniform_int_distribution<int> size(2, max_dim + 1);
  std::vector<std::vector<Vertex>> faces;
  const int m = count(rng);
  for (int i = 0; i < m; ++i) {
    std::vector<Vertex> all;
    for (int v = 1; v <= n; ++v) all.push_back(v);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(std::min(size(rng), n)));
    faces.push_back(all);
  }
  return make(faces);
}

// ---- dense incidence computed straight from the face lists ----

struct Dense {
  std::vector<Face> cols;
  std::vector<Face> rows;
  std::vector<std::vector<int>> b;  // rows x cols, 0/1
  std::vector<Rational> w;
};

inline Dense dense(const onelap::ProblemSpec& s) {
  Dense out;
  out.cols = s.complex.faces_of_dim(s.dim);
  const bool up = s.op == onelap::Adjacency::Up;
  out.rows = s.complex.faces_of_dim(up ? s.dim + 1 : s.dim - 1);
  for (const auto& r : out.rows) {
    std::vector<int> line;
    for (const auto& c : out.cols) line.push_back(up ? r.contains(c) : c.contains(r));
    out.b.push_back(line);
  }
  for (std::size_t j = 0; j < out.cols.size(); ++j) {
    if (s.normalization == onelap::Normalization::Unnormalized) {
      out.w.push_back(1);
    } else if (up) {
      int deg = 0;
      for (const auto& line : out.b) deg += line[j];
      out.w.push_back(deg);
    } else {
      out.w.push_back(s.dim + 1);
    }
  }
  return out;
}

inline Rational oracle_energy(const Dense& m, const std::vector<Rational>& x) {
  Rational total = 0;
  for (const auto& line : m.b) {
    Rational s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += line[j] * x[j];
    total += abs(s);
  }
  return total;
}

inline Rational oracle_norm(const Dense& m, const std::vector<Rational>& x) {
  Rational total = 0;
  for (std::size_t j = 0; j < x.size(); ++j) total += m.w[j] * abs(x[j]);
  return total;
}

// ---- linear feasibility by vertex enumeration ----
//
// A non-empty bounded polyhedron has a vertex. Every vertex solves some square
// subsystem of tight constraints, so trying all of them decides feasibility.

inline std::optional<std::vector<Rational>> gauss(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> rhs) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= a[i][i];
  return rhs;
}

// Only Equal and GreaterEqual rows; every variable must be boxed.
inline bool vertex_oracle_feasible(const onelap::LinearSystem& sys) {
  const std::size_t n = sys.num_variables();
  struct Tight {
    std::vector<Rational> coeffs;
    Rational rhs;
  };
  std::vector<Tight> equalities, candidates;
  for (const auto& r : sys.rows) {
    if (r.relation == onelap::Relation::Equal) {
      equalities.push_back({r.coeffs, r.rhs});
    } else {
      candidates.push_back({r.coeffs, r.rhs});
    }
  }
  std::vector<Tight> fixed = equalities;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n);
    e[j] = 1;
    const auto& b = *sys.box[j];
    if (b.lo == b.hi) {
      fixed.push_back({e, b.lo});
    } else {
      candidates.push_back({e, b.lo});
      candidates.push_back({e, b.hi});
    }
  }
  if (n == 0) return onelap::satisfies(sys, {});
  // Pick n linearly independent rows among fixed + candidates, fixed rows
  // always included when independent.
  std::vector<Tight> pool = fixed;
  pool.insert(pool.end(), candidates.begin(), candidates.end());
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
    if (pick.size() == n) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> rhs;
      for (auto i : pick) {
        a.push_back(pool[i].coeffs);
        rhs.push_back(pool[i].rhs);
      }
      auto x = gauss(a, rhs);
      return x && onelap::satisfies(sys, *x);
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      if (pool.size() - i < n - pick.size()) break;
      pick.push_back(i);
      if (rec(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(0);
}

// ---- eigenpair oracle from the face lists ----

// Directly checks the inclusion for a given z: z in Sgn(Bx) and B^T z in
// mu D Sgn(x).
inline bool certificate_ok(const Dense& m, const Rational& mu, const std::vector<Rational>& x,
                           const std::vector<Rational>& z) {
  if (z.size() != m.rows.size()) return false;
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    Rational s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += m.b[r][j] * x[j];
    if (sgn(s) != 0 && z[r] != sgn(s)) return false;
    if (abs(z[r]) > 1) return false;
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    Rational t = 0;
    for (std::size_t r = 0; r < m.rows.size(); ++r) t += m.b[r][j] * z[r];
    if (sgn(x[j]) != 0) {
      if (t != mu * m.w[j] * sgn(x[j])) return false;
    } else if (abs(t) > mu * m.w[j]) {
      return false;
    }
  }
  return true;
}

// Builds the z-polytope from the dense matrix and decides it by vertex
// enumeration.
inline bool oracle_is_eigenpair(const Dense& m, const Rational& mu,
                                const std::vector<Rational>& x) {
  onelap::LinearSystem sys;
  const std::size_t q = m.rows.size();
  sys.variables.assign(q, "z");
  for (std::size_t r = 0; r < q; ++r) {
    Rational s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += m.b[r][j] * x[j];
    if (sgn(s) == 0) {
      sys.box.emplace_back(onelap::Box{-1, 1});
    } else {
      sys.box.emplace_back(onelap::Box{sgn(s), sgn(s)});
    }
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    std::vector<Rational> c(q), neg(q);
    for (std::size_t r = 0; r < q; ++r) {
      c[r] = m.b[r][j];
      neg[r] = -m.b[r][j];
    }
    const Rational bound = mu * m.w[j];
    if (sgn(x[j]) != 0) {
      sys.rows.push_back({c, onelap::Relation::Equal, bound * sgn(x[j])});
    } else {
      sys.rows.push_back({c, onelap::Relation::GreaterEqual, -bound});
      sys.rows.push_back({neg, onelap::Relation::GreaterEqual, -bound});
    }
  }
  return vertex_oracle_feasible(sys);
}

// Range of the last variable over {eq rows = rhs, ge rows >= rhs}, assumed
// bounded. Equalities are solved first; the remaining free variables are
// parameters, and the extremes sit on vertices of the parameter polytope.
struct AffineRow {
  std::vector<Rational> coeffs;
  Rational rhs;
};

inline std::optional<std::pair<Rational, Rational>> oracle_last_range(
    std::size_t n, std::vector<AffineRow> eq, const std::vector<AffineRow>& ge) {
  // reduced row echelon form of the equalities
  std::vector<std::size_t> pivot_of_row;
  std::vector<int> pivot_row(n, -1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < eq.size(); ++col) {
    std::size_t p = r;
    while (p < eq.size() && sgn(eq[p].coeffs[col]) == 0) ++p;
    if (p == eq.size()) continue;
    std::swap(eq[p], eq[r]);
    const Rational inv = 1 / eq[r].coeffs[col];
    for (auto& c : eq[r].coeffs) c *= inv;
    eq[r].rhs *= inv;
    for (std::size_t o = 0; o < eq.size(); ++o) {
      if (o == r || sgn(eq[o].coeffs[col]) == 0) continue;
      const Rational f = eq[o].coeffs[col];
      for (std::size_t c = 0; c < n; ++c) eq[o].coeffs[c] -= f * eq[r].coeffs[c];
      eq[o].rhs -= f * eq[r].rhs;
    }
    pivot_row[col] = static_cast<int>(r);
    pivot_of_row.push_back(col);
    ++r;
  }
  for (std::size_t o = r; o < eq.size(); ++o)
    if (sgn(eq[o].rhs) != 0) return std::nullopt;
  std::vector<std::size_t> free_vars;
  for (std::size_t c = 0; c < n; ++c)
    if (pivot_row[c] < 0) free_vars.push_back(c);
  const std::size_t k = free_vars.size();

  // y = base + sum_t lin[.][t] * param_t
  auto expand = [&](const std::vector<Rational>& param) {
    std::vector<Rational> y(n);
    for (std::size_t t = 0; t < k; ++t) y[free_vars[t]] = param[t];
    for (std::size_t row = 0; row < r; ++row) {
      Rational v = eq[row].rhs;
      for (std::size_t t = 0; t < k; ++t) v -= eq[row].coeffs[free_vars[t]] * param[t];
      y[pivot_of_row[row]] = v;
    }
    return y;
  };
  auto dot = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };
  auto feasible = [&](const std::vector<Rational>& y) {
    return std::all_of(ge.begin(), ge.end(),
                       [&](const AffineRow& g) { return dot(g.coeffs, y) >= g.rhs; });
  };
  // inequality rows in parameter space
  std::vector<AffineRow> reduced;
  const std::vector<Rational> base = expand(std::vector<Rational>(k));
  for (const auto& g : ge) {
    AffineRow a{std::vector<Rational>(k), g.rhs - dot(g.coeffs, base)};
    for (std::size_t t = 0; t < k; ++t) {
      std::vector<Rational> unit(k);
      unit[t] = 1;
      a.coeffs[t] = dot(g.coeffs, expand(unit)) - dot(g.coeffs, base);
    }
    reduced.push_back(std::move(a));
  }

  std::optional<std::pair<Rational, Rational>> range;
  auto consider = [&](const std::vector<Rational>& y) {
    if (!feasible(y)) return;
    const Rational& v = y.back();
    if (!range) {
      range = std::make_pair(v, v);
    } else {
      range->first = std::min(range->first, v);
      range->second = std::max(range->second, v);
    }
  };
  if (k == 0) {
    consider(base);
    return range;
  }
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() == k) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> rhs;
      for (auto i : pick) {
        a.push_back(reduced[i].coeffs);
        rhs.push_back(reduced[i].rhs);
      }
      if (auto t = gauss(a, rhs)) consider(expand(*t));
      return;
    }
    for (std::size_t i = start; i + (k - pick.size()) <= reduced.size(); ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return range;
}

// The mu for which some z certifies (mu, y) for every y with the signs of x:
// an interval, found over the (z, mu) polytope.
inline std::optional<std::pair<Rational, Rational>> oracle_mu_range(
    const Dense& m, const std::vector<Rational>& x) {
  const std::size_t q = m.rows.size();
  const std::size_t n = q + 1;  // z..., mu
  std::vector<AffineRow> eq, ge;
  auto unit = [&](std::size_t i, const Rational& c) {
    std::vector<Rational> v(n);
    v[i] = c;
    return v;
  };
  Rational cap = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    Rational deg = 0;
    for (std::size_t r = 0; r < q; ++r) deg += m.b[r][j];
    cap = std::max<Rational>(cap, deg / m.w[j]);
  }
  ge.push_back({unit(q, 1), 0});
  ge.push_back({unit(q, -1), -cap});
  for (std::size_t r = 0; r < q; ++r) {
    Rational s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += m.b[r][j] * x[j];
    if (sgn(s) != 0) {
      eq.push_back({unit(r, 1), sgn(s)});
    } else {
      ge.push_back({unit(r, 1), -1});
      ge.push_back({unit(r, -1), -1});
    }
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    std::vector<Rational> c(n), neg(n);
    for (std::size_t r = 0; r < q; ++r) {
      c[r] = m.b[r][j];
      neg[r] = -m.b[r][j];
    }
    if (sgn(x[j]) != 0) {
      c[q] = -m.w[j] * sgn(x[j]);
      eq.push_back({c, 0});
    } else {
      c[q] = m.w[j];
      neg[q] = m.w[j];
      ge.push_back({c, 0});    // B^T z + mu w >= 0
      ge.push_back({neg, 0});  // -B^T z + mu w >= 0
    }
  }
  return oracle_last_range(n, std::move(eq), ge);
}

// Grid search over {-c..c}^n with the first non-zero entry positive. The
// admissible mu for a sign pattern of (x, row sums) form an interval, so each
// pattern is solved once.
inline std::set<Rational> oracle_grid_spectrum(const onelap::ProblemSpec& spec, long c) {
  const Dense m = dense(spec);
  const std::size_t n = m.cols.size();
  std::set<Rational> out;
  std::map<std::string, std::optional<std::pair<Rational, Rational>>> memo;
  std::vector<Rational> x(n);
  std::vector<long> v(n, -c);
  while (true) {
    bool nonzero = false, canonical = true;
    for (std::size_t j = 0; j < n && !nonzero; ++j) {
      if (v[j] != 0) {
        nonzero = true;
        canonical = v[j] > 0;
      }
    }
    if (nonzero && canonical) {
      for (std::size_t j = 0; j < n; ++j) x[j] = v[j];
      const Rational mu = oracle_energy(m, x) / oracle_norm(m, x);
      std::string key;
      for (std::size_t j = 0; j < n; ++j) key += static_cast<char>('1' + sgn(x[j]));
      for (const auto& line : m.b) {
        Rational s = 0;
        for (std::size_t j = 0; j < n; ++j) s += line[j] * x[j];
        key += static_cast<char>('1' + sgn(s));
      }
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, oracle_mu_range(m, x)).first;
      if (it->second && it->second->first <= mu && mu <= it->second->second) out.insert(mu);
    }
    std::size_t j = 0;
    while (j < n && v[j] == c) v[j++] = -c;
    if (j == n) break;
    ++v[j];
  }
  return out;
}

inline long factorial(long n) {
  long f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

inline std::vector<Rational> ints(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

}  // namespace testing_support
