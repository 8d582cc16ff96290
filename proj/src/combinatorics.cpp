// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0

#include "onelap/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "onelap/error.hpp"

namespace onelap {

namespace {

using Mask = std::uint64_t;

class Counter {
 public:
  explicit Counter(const SearchBudget& b) : limit_(b.max_nodes) {}
  void tick() {
    if (++count_ > limit_) {
      throw Error(ErrorCode::BudgetExceeded,
                  "exact search exceeded " + std::to_string(limit_) + " nodes");
    }
  }

 private:
  std::size_t limit_;
  std::size_t count_ = 0;
};

void check_size(std::size_t n) {
  if (n > 64) {
    throw Error(ErrorCode::BudgetExceeded,
                "exact search limited to 64 elements, got " + std::to_string(n));
  }
}

Mask bit(std::size_t i) { return Mask{1} << i; }

std::vector<Mask> neighbour_masks(const AdjacencyLists& adj) {
  check_size(adj.size());
  std::vector<Mask> out(adj.size(), 0);
  for (std::size_t i = 0; i < adj.size(); ++i) {
    for (auto j : adj[i]) out[i] |= bit(j);
  }
  return out;
}

AdjacencyLists complement(const AdjacencyLists& adj) {
  const auto nb = neighbour_masks(adj);
  AdjacencyLists out(adj.size());
  for (std::size_t i = 0; i < adj.size(); ++i) {
    for (std::size_t j = 0; j < adj.size(); ++j) {
      if (i != j && !(nb[i] & bit(j))) out[i].push_back(j);
    }
  }
  return out;
}

// Sets of vertices that must respect a per-edge rule. A rule sees the class
// after adding vertex i and decides whether it is still admissible; every rule
// used here is hereditary, so subsets of admissible sets stay admissible.
struct Hypergraph {
  std::size_t n = 0;
  std::vector<Mask> edges;
  std::vector<std::vector<std::size_t>> incident;  // vertex -> edge indices
};

using Rule = std::function<bool(Mask cls, Mask edge)>;

bool admissible(const Hypergraph& h, const Rule& rule, Mask cls, std::size_t i) {
  for (auto e : h.incident[i]) {
    if (!rule(cls, h.edges[e])) return false;
  }
  return true;
}

std::size_t max_admissible_set(const Hypergraph& h, const Rule& rule, Counter& counter) {
  std::size_t best = 0;
  std::function<void(std::size_t, Mask, std::size_t)> go = [&](std::size_t i, Mask a,
                                                                std::size_t size) {
    counter.tick();
    if (size + (h.n - i) <= best) return;
    if (i == h.n) {
      best = size;
      return;
    }
    if (admissible(h, rule, a | bit(i), i)) go(i + 1, a | bit(i), size + 1);
    go(i + 1, a, size);
  };
  go(0, 0, 0);
  return best;
}

bool partition_into(const Hypergraph& h, const Rule& rule, std::size_t k, Counter& counter) {
  std::vector<Mask> classes(k, 0);
  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t used) {
    counter.tick();
    if (i == h.n) return true;
    for (std::size_t c = 0; c < std::min(k, used + 1); ++c) {
      const Mask next = classes[c] | bit(i);
      if (!admissible(h, rule, next, i)) continue;
      classes[c] = next;
      if (go(i + 1, std::max(used, c + 1))) return true;
      classes[c] &= ~bit(i);
    }
    return false;
  };
  return go(0, 0);
}

std::optional<std::size_t> min_partition(const Hypergraph& h, const Rule& rule,
                                         const SearchBudget& budget) {
  Counter counter(budget);
  if (h.n == 0) return 0;
  for (std::size_t k = 1; k <= h.n; ++k) {
    if (partition_into(h, rule, k, counter)) return k;
  }
  return std::nullopt;
}

Hypergraph vertex_hypergraph(const SimplicialComplex& k, const std::vector<Face>& faces) {
  check_size(k.num_vertices());
  Hypergraph h;
  h.n = k.num_vertices();
  h.incident.assign(h.n, {});
  const auto& verts = k.vertices();
  for (const auto& f : faces) {
    Mask m = 0;
    for (auto v : f.vertices()) {
      const auto pos = std::lower_bound(verts.begin(), verts.end(), v) - verts.begin();
      m |= bit(static_cast<std::size_t>(pos));
    }
    for (std::size_t i = 0; i < h.n; ++i) {
      if (m & bit(i)) h.incident[i].push_back(h.edges.size());
    }
    h.edges.push_back(m);
  }
  return h;
}

std::vector<Face> family(const SimplicialComplex& k, int s, FaceFamily fam) {
  if (fam == FaceFamily::SFaces) return k.faces_of_dim(s);
  return k.all_faces();
}

Rule at_most(int s) {
  return [s](Mask cls, Mask edge) { return std::popcount(cls & edge) <= s; };
}

Rule avoids_containing() {
  return [](Mask cls, Mask edge) { return (cls & edge) != edge; };
}

Rational ceil_div(const Rational& a, const Rational& b) {
  const Rational q = a / b;
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(c);
}

Rational count(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

}  // namespace

FaceGraph face_graph(const SimplicialComplex& k, int d, Adjacency mode) {
  return FaceGraph{k.faces_of_dim(d), k.adjacency(d, mode)};
}

std::size_t independence_number(const FaceGraph& g, const SearchBudget& budget) {
  const auto nb = neighbour_masks(g.adjacency);
  const std::size_t n = nb.size();
  Counter counter(budget);
  std::size_t best = 0;
  std::function<void(Mask, std::size_t)> go = [&](Mask p, std::size_t size) {
    counter.tick();
    if (size + static_cast<std::size_t>(std::popcount(p)) <= best) return;
    if (p == 0) {
      best = size;
      return;
    }
    // branch on the candidate with most candidate neighbours
    std::size_t v = n;
    int deg = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(p & bit(i))) continue;
      const int d = std::popcount(nb[i] & p);
      if (d > deg) {
        deg = d;
        v = i;
      }
    }
    if (deg == 0) {
      best = std::max(best, size + static_cast<std::size_t>(std::popcount(p)));
      return;
    }
    go(p & ~nb[v] & ~bit(v), size + 1);
    go(p & ~bit(v), size);
  };
  const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
  go(all, 0);
  return best;
}

bool is_colorable(const AdjacencyLists& adjacency, std::size_t colors,
                  const SearchBudget& budget) {
  const auto nb = neighbour_masks(adjacency);
  const std::size_t n = nb.size();
  if (n == 0) return true;
  if (colors == 0) return false;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return adjacency[a].size() > adjacency[b].size();
  });
  Counter counter(budget);
  std::vector<Mask> classes(colors, 0);
  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t used) {
    counter.tick();
    if (i == n) return true;
    const std::size_t v = order[i];
    for (std::size_t c = 0; c < std::min(colors, used + 1); ++c) {
      if (classes[c] & nb[v]) continue;
      classes[c] |= bit(v);
      if (go(i + 1, std::max(used, c + 1))) return true;
      classes[c] &= ~bit(v);
    }
    return false;
  };
  return go(0, 0);
}

std::size_t chromatic_number(const AdjacencyLists& adjacency, const SearchBudget& budget) {
  for (std::size_t k = 0; k <= adjacency.size(); ++k) {
    if (is_colorable(adjacency, k, budget)) return k;
  }
  return adjacency.size();
}

std::size_t clique_cover_number(const FaceGraph& g, const SearchBudget& budget) {
  return chromatic_number(complement(g.adjacency), budget);
}

std::size_t face_chromatic_number(const SimplicialComplex& k, int d, const SearchBudget& budget) {
  return chromatic_number(k.adjacency(d, Adjacency::Up), budget);
}

std::size_t vertex_alpha_s(const SimplicialComplex& k, int s, FaceFamily fam,
                           const SearchBudget& budget) {
  if (s < 1) throw Error(ErrorCode::DimensionOutOfRange, "s must be at least 1");
  Counter counter(budget);
  return max_admissible_set(vertex_hypergraph(k, family(k, s, fam)), at_most(s), counter);
}

std::size_t vertex_chi_s(const SimplicialComplex& k, int s, FaceFamily fam,
                         const SearchBudget& budget) {
  if (s < 1) throw Error(ErrorCode::DimensionOutOfRange, "s must be at least 1");
  // singletons always satisfy the cap, so a partition exists
  return *min_partition(vertex_hypergraph(k, family(k, s, fam)), at_most(s), budget);
}

std::size_t vertex_alpha_facet(const SimplicialComplex& k, const SearchBudget& budget) {
  Counter counter(budget);
  return max_admissible_set(vertex_hypergraph(k, k.maximal_faces()), avoids_containing(),
                            counter);
}

std::optional<std::size_t> vertex_chi_facet(const SimplicialComplex& k,
                                            const SearchBudget& budget) {
  for (const auto& f : k.maximal_faces()) {
    if (f.size() == 1) return std::nullopt;
  }
  return min_partition(vertex_hypergraph(k, k.maximal_faces()), avoids_containing(), budget);
}

bool coloring_bound_applicable(const SimplicialComplex& k, int d, VolumeMode volume) {
  if (d < 0 || d > k.dim()) return false;
  if (volume == VolumeMode::Constant) return true;
  const auto deg = k.up_degrees(d);
  return std::all_of(deg.begin(), deg.end(), [](auto g) { return g > 0; });
}

bool BoundReport::all_hold() const {
  return std::all_of(lines.begin(), lines.end(), [](const BoundLine& l) { return l.holds; });
}

BoundReport bound_report(const SimplicialComplex& k, int d, const EigenInputs& eigen,
                         VolumeMode volume, const SearchBudget& budget) {
  if (d < 0 || d > k.dim()) {
    throw Error(ErrorCode::DimensionOutOfRange, "bound dimension outside the complex");
  }
  BoundReport r;
  r.dim = d;
  r.top_dim = k.dim();
  r.volume = volume;
  const int top = k.dim();
  const Rational nv = count(k.num_vertices());

  auto echo = [&](const std::string& name, const Rational& v) {
    r.inputs.emplace_back(name, to_string(v));
  };
  auto add = [&](std::string name, const char* rel, Rational left, Rational right,
                 std::string note = {}) {
    bool holds = false;
    const std::string relation = rel;
    if (relation == "<=") holds = left <= right;
    if (relation == ">=") holds = left >= right;
    if (relation == "==") holds = left == right;
    r.lines.push_back(BoundLine{std::move(name), relation, std::move(left), std::move(right),
                                holds, std::move(note)});
  };

  echo("|V|", nv);
  echo("dim K", top);
  echo("d", d);

  // Vertex parameters.
  std::vector<std::size_t> alpha(static_cast<std::size_t>(top) + 1), chi(alpha.size());
  for (int s = 1; s <= top; ++s) {
    alpha[s] = vertex_alpha_s(k, s, FaceFamily::AllFaces, budget);
    chi[s] = vertex_chi_s(k, s, FaceFamily::AllFaces, budget);
    echo("alpha_" + std::to_string(s), count(alpha[s]));
    echo("chi_" + std::to_string(s), count(chi[s]));
  }
  const std::size_t alpha_f = vertex_alpha_facet(k, budget);
  const auto chi_f = vertex_chi_facet(k, budget);
  echo("alpha", count(alpha_f));
  if (chi_f) echo("chi", count(*chi_f));

  for (int s = 1; s <= top; ++s) {
    const std::string ss = std::to_string(s);
    add("chi_" + ss + " * alpha_" + ss + " >= |V|", ">=", count(chi[s] * alpha[s]), nv);
    for (int t = 1; t <= s; ++t) {
      const std::string ts = std::to_string(t);
      add("chi_" + ss + " <= ceil(chi_" + ts + " / floor(" + ss + "/" + ts + "))", "<=",
          count(chi[s]), ceil_div(count(chi[t]), Rational(s / t)));
    }
    add("alpha_" + ss + " == alpha'_" + ss, "==", count(alpha[s]),
        count(vertex_alpha_s(k, s, FaceFamily::SFaces, budget)));
    add("chi_" + ss + " == chi'_" + ss, "==", count(chi[s]),
        count(vertex_chi_s(k, s, FaceFamily::SFaces, budget)));
  }

  if (top >= 1) {
    const Rational at = count(alpha[top]);
    const Rational ct = count(chi[top]);
    const std::string ds = std::to_string(top);
    add("alpha <= alpha_" + ds, "<=", count(alpha_f), at);
    if (chi_f) {
      add("chi >= chi_" + ds, ">=", count(*chi_f), ct);
      add("chi * alpha >= |V|", ">=", count(*chi_f * alpha_f), nv);
    }
    bool pure = true;
    for (const auto& f : k.maximal_faces()) pure &= f.dim() == top;
    if (pure) add("alpha == alpha_" + ds + " (pure)", "==", count(alpha_f), at);

    if (!eigen.mu_top_minus_one) {
      throw Error(ErrorCode::MissingInput, "minimum unnormalized up eigenvalue on (dim K - 1)-faces");
    }
    const Rational mu = *eigen.mu_top_minus_one;
    const Rational m0 = count(k.extremal_containment(0).second);
    const auto [lo, hi] = k.extremal_containment(top - 1);
    (void)hi;
    echo("M_0", m0);
    echo("m_" + std::to_string(top - 1), count(lo));
    echo("mu_" + std::to_string(top - 1), mu);

    add("alpha_" + ds + " <= |V|(1 - mu/(2 M_0))", "<=", at, nv * (1 - mu / (2 * m0)));
    if (sgn(mu) == 0) {
      add("chi_" + ds + " >= 2 M_0/(2 M_0 - mu)", ">=", ct, 1, "mu = 0: trivially true");
    } else {
      add("chi_" + ds + " >= 2 M_0/(2 M_0 - mu)", ">=", ct, 2 * m0 / (2 * m0 - mu));
    }
    add("alpha_" + ds + " <= M_0 |V|/(M_0 + mu)", "<=", at, m0 * nv / (m0 + mu));
    add("alpha_" + ds + " >= |V| d/(M_0 + d)", ">=", at, nv * top / (m0 + top));
    add("alpha_" + ds + " >= |V| d/(2 M_0)", ">=", at, nv * top / (2 * m0));
  }

  // Face parameters at dimension d.
  const std::size_t fchi = face_chromatic_number(k, d, budget);
  const Rational edges = count(k.num_faces(d + 1));
  echo("face chi", count(fchi));
  echo("e_{d+1}", edges);
  if (k.num_faces(d + 1) > 0) add("face chi >= d + 2", ">=", count(fchi), d + 2);

  if (coloring_bound_applicable(k, d, volume)) {
    Rational vol = 0;
    if (volume == VolumeMode::Constant) {
      vol = count(k.num_faces(d));
    } else {
      for (auto g : k.up_degrees(d)) vol += count(g);
    }
    echo("vol", vol);
    if (!eigen.c1) throw Error(ErrorCode::MissingInput, "minimum eigenvalue c_1 on d-faces");
    echo("c_1", *eigen.c1);
    const Rational rhs =
        Rational(d + 2) * edges / vol * (1 - Rational(2 * (d + 1)) / Rational(d + count(fchi)));
    add("c_1 <= (d+2) e/vol (1 - 2(d+1)/(d + chi))", "<=", *eigen.c1, rhs);
  }

  for (auto mode : {Adjacency::Up, Adjacency::Down}) {
    if (mode == Adjacency::Down && d < 1) continue;
    const auto g = face_graph(k, d, mode);
    const auto a = independence_number(g, budget);
    const auto kap = clique_cover_number(g, budget);
    const std::string tag = mode == Adjacency::Up ? "up" : "down";
    echo("alpha(" + tag + ")", count(a));
    echo("kappa(" + tag + ")", count(kap));
    add("alpha <= kappa (" + tag + ")", "<=", count(a), count(kap),
        "alpha <= kappa checked; t, gamma out of scope");
  }
  return r;
}

}  // namespace onelap
