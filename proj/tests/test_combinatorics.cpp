// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0

#include <functional>
#include <random>

#include "doctest.h"
#include "support.hpp"

#include "onelap/combinatorics.hpp"
#include "onelap/error.hpp"
#include "onelap/spectrum.hpp"

using namespace testing_support;
using onelap::Adjacency;
using onelap::AdjacencyLists;
using onelap::ErrorCode;
using onelap::FaceFamily;
using onelap::VolumeMode;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const onelap::Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(-1);
}

onelap::FaceGraph graph(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  onelap::FaceGraph g;
  for (std::size_t i = 0; i < n; ++i) g.nodes.push_back(Face(std::vector<Vertex>{static_cast<Vertex>(i + 1)}));
  g.adjacency.assign(n, {});
  for (auto [a, b] : edges) {
    g.adjacency[a].push_back(b);
    g.adjacency[b].push_back(a);
  }
  for (auto& l : g.adjacency) std::sort(l.begin(), l.end());
  return g;
}

bool linked(const AdjacencyLists& adj, std::size_t a, std::size_t b) {
  return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
}

// --- brute force over subsets and labelings ---

std::size_t brute_alpha(const AdjacencyLists& adj) {
  const std::size_t n = adj.size();
  std::size_t best = 0;
  for (unsigned m = 0; m < (1u << n); ++m) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = a + 1; b < n && ok; ++b)
        if ((m >> a & 1) && (m >> b & 1) && linked(adj, a, b)) ok = false;
    if (ok) best = std::max<std::size_t>(best, std::popcount(m));
  }
  return best;
}

// smallest k admitting a labeling in which every class passes `good`
std::size_t brute_partition(std::size_t n, const std::function<bool(unsigned)>& good) {
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> label(n, 0);
    while (true) {
      bool ok = true;
      for (std::size_t c = 0; c < k && ok; ++c) {
        unsigned cls = 0;
        for (std::size_t i = 0; i < n; ++i)
          if (label[i] == c) cls |= 1u << i;
        ok = good(cls);
      }
      if (ok) return k;
      std::size_t i = 0;
      while (i < n && label[i] == k - 1) label[i++] = 0;
      if (i == n) break;
      ++label[i];
    }
  }
  return n;
}

std::size_t brute_chi(const AdjacencyLists& adj) {
  if (adj.empty()) return 0;
  return brute_partition(adj.size(), [&](unsigned cls) {
    for (std::size_t a = 0; a < adj.size(); ++a)
      for (std::size_t b : adj[a])
        if ((cls >> a & 1) && (cls >> b & 1)) return false;
    return true;
  });
}

std::size_t brute_kappa(const AdjacencyLists& adj) {
  if (adj.empty()) return 0;
  return brute_partition(adj.size(), [&](unsigned cls) {
    for (std::size_t a = 0; a < adj.size(); ++a)
      for (std::size_t b = a + 1; b < adj.size(); ++b)
        if ((cls >> a & 1) && (cls >> b & 1) && !linked(adj, a, b)) return false;
    return true;
  });
}

std::vector<unsigned> vertex_masks(const SimplicialComplex& k, const std::vector<Face>& faces) {
  const auto vs = k.vertices();
  std::vector<unsigned> out;
  for (const auto& f : faces) {
    unsigned m = 0;
    for (auto v : f.vertices()) m |= 1u << (std::find(vs.begin(), vs.end(), v) - vs.begin());
    out.push_back(m);
  }
  return out;
}

std::size_t brute_alpha_s(const SimplicialComplex& k, int s) {
  const auto faces = vertex_masks(k, k.all_faces());
  const std::size_t n = k.vertices().size();
  std::size_t best = 0;
  for (unsigned m = 0; m < (1u << n); ++m) {
    bool ok = std::all_of(faces.begin(), faces.end(),
                          [&](unsigned f) { return std::popcount(m & f) <= s; });
    if (ok) best = std::max<std::size_t>(best, std::popcount(m));
  }
  return best;
}

std::size_t brute_chi_s(const SimplicialComplex& k, int s) {
  const auto faces = vertex_masks(k, k.all_faces());
  return brute_partition(k.vertices().size(), [&](unsigned cls) {
    return std::all_of(faces.begin(), faces.end(),
                       [&](unsigned f) { return std::popcount(cls & f) <= s; });
  });
}

std::size_t brute_alpha_facet(const SimplicialComplex& k) {
  const auto faces = vertex_masks(k, k.maximal_faces());
  const std::size_t n = k.vertices().size();
  std::size_t best = 0;
  for (unsigned m = 0; m < (1u << n); ++m) {
    bool ok = std::all_of(faces.begin(), faces.end(), [&](unsigned f) { return (m & f) != f; });
    if (ok) best = std::max<std::size_t>(best, std::popcount(m));
  }
  return best;
}

std::optional<std::size_t> brute_chi_facet(const SimplicialComplex& k) {
  const auto faces = vertex_masks(k, k.maximal_faces());
  for (unsigned f : faces)
    if (std::popcount(f) == 1) return std::nullopt;
  return brute_partition(k.vertices().size(), [&](unsigned cls) {
    return std::all_of(faces.begin(), faces.end(), [&](unsigned f) { return (cls & f) != f; });
  });
}

}  // namespace

TEST_CASE("graph invariants on small examples") {
  const auto k4 = graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(onelap::independence_number(k4) == 1);
  CHECK(onelap::clique_cover_number(k4) == 1);
  CHECK(onelap::chromatic_number(k4.adjacency) == 4);
  const auto empty2 = graph(2, {});
  CHECK(onelap::independence_number(empty2) == 2);
  CHECK(onelap::clique_cover_number(empty2) == 2);
  CHECK(onelap::chromatic_number(empty2.adjacency) == 1);
  const auto c5 = graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(onelap::independence_number(c5) == 2);
  CHECK(onelap::clique_cover_number(c5) == 3);
  CHECK(onelap::chromatic_number(c5.adjacency) == 3);
  CHECK(onelap::is_colorable(c5.adjacency, 3));
  CHECK_FALSE(onelap::is_colorable(c5.adjacency, 2));
  CHECK(onelap::chromatic_number(AdjacencyLists{}) == 0);

  const auto path = make({{1, 2}, {2, 3}});
  CHECK(onelap::independence_number(onelap::face_graph(path, 0, Adjacency::Up)) == 2);
  CHECK(onelap::independence_number(onelap::face_graph(path, 1, Adjacency::Down)) == 1);
  CHECK(onelap::face_graph(path, 1, Adjacency::Down).nodes.size() == 2);

  CHECK(onelap::face_chromatic_number(simplex(3), 2) == 4);
  CHECK(onelap::face_chromatic_number(simplex(2), 1) == 3);
  CHECK(onelap::face_chromatic_number(path, 1) == 1);
}

TEST_CASE("vertex parameters on small examples") {
  const auto remark = make({{1, 2, 3}, {1, 4}, {2, 5}});
  CHECK(remark.all_faces().size() == 11);
  CHECK(onelap::vertex_alpha_s(remark, 2) == 4);
  CHECK(onelap::vertex_alpha_facet(remark) == 3);

  const auto tet = simplex(3);
  CHECK(onelap::vertex_chi_s(tet, 1) == 4);
  CHECK(onelap::vertex_alpha_facet(tet) == 3);
  CHECK(onelap::vertex_alpha_facet(make({{1, 2}})) == 1);
  CHECK(onelap::vertex_chi_facet(make({{1, 2}})) == std::optional<std::size_t>(2));
  CHECK_FALSE(onelap::vertex_chi_facet(make({{1, 2}, {3}})).has_value());

  for (const auto& [name, k] : corpus()) {
    CAPTURE(name);
    for (int s = k.dim() + 1; s <= k.dim() + 2; ++s) {
      CHECK(onelap::vertex_alpha_s(k, s) == k.vertices().size());
      CHECK(onelap::vertex_chi_s(k, s) == 1);
    }
  }
  CHECK(code_of([&] { onelap::vertex_alpha_s(tet, 0); }) == ErrorCode::DimensionOutOfRange);
}

TEST_CASE("search budget is enforced") {
  onelap::SearchBudget tiny;
  tiny.max_nodes = 3;
  const auto c5 = graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(code_of([&] { onelap::chromatic_number(c5.adjacency, tiny); }) ==
        ErrorCode::BudgetExceeded);
  CHECK(code_of([&] { onelap::independence_number(c5, tiny); }) == ErrorCode::BudgetExceeded);
  CHECK(code_of([] { onelap::independence_number(graph(65, {})); }) ==
        ErrorCode::BudgetExceeded);
}

TEST_CASE("graph invariants agree with subset search") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    std::vector<std::pair<int, int>> edges;
    const unsigned density = rng() % 4;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (rng() % 4 < density) edges.emplace_back(a, b);
    const auto g = graph(n, edges);
    CAPTURE(trial);
    const auto a = onelap::independence_number(g);
    const auto k = onelap::clique_cover_number(g);
    CHECK(a == brute_alpha(g.adjacency));
    CHECK(k == brute_kappa(g.adjacency));
    CHECK(onelap::chromatic_number(g.adjacency) == brute_chi(g.adjacency));
    CHECK(a <= k);
  }
}

TEST_CASE("vertex parameters agree with subset search") {
  std::mt19937 rng(11);
  std::vector<Named> cases = corpus();
  for (int trial = 0; trial < 40; ++trial) {
    cases.push_back({"random" + std::to_string(trial), random_complex(rng, 7, 5, 3)});
  }
  for (const auto& [name, k] : cases) {
    CAPTURE(name);
    CHECK(onelap::vertex_alpha_facet(k) == brute_alpha_facet(k));
    CHECK(onelap::vertex_chi_facet(k) == brute_chi_facet(k));
    for (int s = 1; s <= k.dim(); ++s) {
      CAPTURE(s);
      CHECK(onelap::vertex_alpha_s(k, s) == brute_alpha_s(k, s));
      CHECK(onelap::vertex_chi_s(k, s) == brute_chi_s(k, s));
      CHECK(onelap::vertex_alpha_s(k, s, FaceFamily::SFaces) == brute_alpha_s(k, s));
      CHECK(onelap::vertex_chi_s(k, s, FaceFamily::SFaces) == brute_chi_s(k, s));
    }
    for (int d = 0; d <= k.dim(); ++d) {
      const auto up = onelap::face_graph(k, d, Adjacency::Up);
      if (up.nodes.size() > 10) continue;
      CHECK(onelap::face_chromatic_number(k, d) == brute_chi(up.adjacency));
      CHECK(onelap::independence_number(up) == brute_alpha(up.adjacency));
    }
  }
}

namespace {

const onelap::BoundLine* find_line(const onelap::BoundReport& r, const std::string& prefix) {
  for (const auto& l : r.lines)
    if (l.name.rfind(prefix, 0) == 0) return &l;
  return nullptr;
}

}  // namespace

TEST_CASE("bound report on the remark complex") {
  const auto remark = make({{1, 2, 3}, {1, 4}, {2, 5}});
  const auto in = onelap::bound_inputs(remark, 1, VolumeMode::UpDegree);
  REQUIRE(in.mu_top_minus_one.has_value());
  const auto r = onelap::bound_report(remark, 1, in);
  CHECK(r.top_dim == 2);
  CHECK(r.all_hold());
  bool saw_alpha = false, saw_alpha2 = false;
  for (const auto& [key, value] : r.inputs) {
    if (key == "alpha") saw_alpha = value == "3";
    if (key == "alpha_2") saw_alpha2 = value == "4";
  }
  CHECK(saw_alpha);
  CHECK(saw_alpha2);
  CHECK(code_of([&] { onelap::bound_report(remark, 1, onelap::EigenInputs{}); }) ==
        ErrorCode::MissingInput);
}

TEST_CASE("coloring bound is tight on the full simplex") {
  for (int d : {1, 2}) {
    CAPTURE(d);
    const auto k = simplex(d + 1);
    const auto in = onelap::bound_inputs(k, d, VolumeMode::UpDegree);
    REQUIRE(in.c1.has_value());
    CHECK(*in.c1 == 0);
    const auto r = onelap::bound_report(k, d, in);
    const auto* line = find_line(r, "c_1");
    REQUIRE(line != nullptr);
    CHECK(line->right == 0);
    CHECK(line->left == 0);
    CHECK(line->holds);
  }
}

TEST_CASE("every bound holds on the corpus") {
  for (const auto& [name, k] : corpus()) {
    for (int d = 0; d <= k.dim(); ++d) {
      for (auto vol : {VolumeMode::UpDegree, VolumeMode::Constant}) {
        CAPTURE(name);
        CAPTURE(d);
        const auto r = onelap::bound_report(k, d, onelap::bound_inputs(k, d, vol), vol);
        for (const auto& l : r.lines) {
          CAPTURE(l.name);
          CHECK(l.holds);
          const bool truth = l.relation == "<="   ? l.left <= l.right
                             : l.relation == ">=" ? l.left >= l.right
                                                  : l.left == l.right;
          CHECK(truth == l.holds);
        }
        CHECK(r.all_hold());
      }
    }
  }
}
