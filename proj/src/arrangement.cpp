// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0

#include "onelap/arrangement.hpp"

#include <atomic>
#include <optional>
#include <thread>

#include "onelap/error.hpp"

namespace onelap {

std::vector<LinearForm> arrangement_rows(const IncidenceSystem& sys) {
  std::vector<LinearForm> rows = sys.rows();
  for (std::size_t c = 0; c < sys.size(); ++c) rows.push_back({c});
  return rows;
}

std::vector<LinearForm> arrangement_rows(const ProblemSpec& spec) {
  return arrangement_rows(IncidenceSystem::from_spec(spec));
}

namespace {

Rational evaluate(const LinearForm& form, const ChainVector& x) {
  Rational s = 0;
  for (auto c : form) s += x[c];
  return s;
}

std::vector<Rational> dense(const LinearForm& form, std::size_t dimension, int scale) {
  std::vector<Rational> coeffs(dimension);
  for (auto c : form) coeffs[c] += scale;
  return coeffs;
}

// Solves the margin program for the first `count` rows with the given signs.
// Without a box the point is any relative-interior witness; with the unit box
// it is the canonical margin-maximal one.
std::optional<ChainVector> realize(const std::vector<LinearForm>& rows, std::size_t dimension,
                                   const SignVector& signs, std::size_t count, bool boxed) {
  LinearSystem system;
  system.variables.resize(dimension);
  if (boxed) system.box.assign(dimension, Box{-1, 1});
  for (std::size_t i = 0; i < count; ++i) {
    if (signs[i] == 0) {
      system.rows.push_back(LinearRow{dense(rows[i], dimension, 1), Relation::Equal, 0});
    } else {
      system.rows.push_back(
          LinearRow{dense(rows[i], dimension, signs[i]), Relation::Greater, 0});
    }
  }
  FeasibilityResult res = solve(system);
  if (!res.feasible()) return std::nullopt;
  return std::move(res.witness);
}

struct Node {
  std::size_t depth = 0;
  SignVector signs;     // first `depth` entries assigned
  ChainVector witness;  // relative-interior point of the partial face
  bool any_nonzero = false;
};

class Explorer {
 public:
  Explorer(std::vector<LinearForm> rows, std::size_t dimension, std::size_t constraint_rows)
      : rows_(std::move(rows)), dimension_(dimension), constraint_rows_(constraint_rows) {}

  Node root() const {
    Node n;
    n.signs.assign(rows_.size(), 0);
    n.witness.assign(dimension_, Rational(0));
    return n;
  }

  std::size_t num_rows() const { return rows_.size(); }

  // Children in the fixed order +, 0, -. The first non-zero entry of the
  // whole vector is forced to +1, which picks one face per antipodal pair.
  std::vector<Node> expand(const Node& node, EnumerationStats& stats) const {
    std::vector<Node> out;
    const std::size_t k = node.depth;
    const int current = sgn(evaluate(rows_[k], node.witness));

    std::optional<ChainVector> plus;
    std::optional<ChainVector> minus;
    if (current > 0) {
      plus = node.witness;
    } else {
      ++stats.lp_calls;
      plus = realize_child(node, +1);
    }
    if (node.any_nonzero) {
      if (current < 0) {
        minus = node.witness;
      } else if (current > 0 || plus) {
        ++stats.lp_calls;
        minus = realize_child(node, -1);
      }
    }

    std::optional<ChainVector> zero;
    if (current == 0) {
      zero = node.witness;
    } else if (plus && minus) {
      // The row changes sign on the partial face, so it vanishes on the
      // segment between the two witnesses.
      const Rational a = evaluate(rows_[k], *plus);
      const Rational b = evaluate(rows_[k], *minus);
      ChainVector w(dimension_);
      for (std::size_t j = 0; j < dimension_; ++j) w[j] = (a * (*minus)[j] - b * (*plus)[j]) / (a - b);
      zero = std::move(w);
    }
    // Otherwise the row keeps one strict sign on the whole partial face.

    auto push = [&](int s, ChainVector w) {
      Node child;
      child.depth = k + 1;
      child.signs = node.signs;
      child.signs[k] = static_cast<std::int8_t>(s);
      child.witness = std::move(w);
      child.any_nonzero = node.any_nonzero || s != 0;
      out.push_back(std::move(child));
    };
    if (plus) push(+1, std::move(*plus));
    if (zero) push(0, std::move(*zero));
    if (minus) push(-1, std::move(*minus));
    return out;
  }

  void explore(const Node& node, std::vector<ArrangementFace>& out,
               EnumerationStats& stats) const {
    ++stats.nodes;
    if (node.depth == rows_.size()) {
      if (auto face = finish(node, stats)) out.push_back(std::move(*face));
      return;
    }
    for (const auto& child : expand(node, stats)) explore(child, out, stats);
  }

  void stream(const Node& node, const std::function<void(const ArrangementFace&)>& sink,
              EnumerationStats& stats) const {
    ++stats.nodes;
    if (node.depth == rows_.size()) {
      if (auto face = finish(node, stats)) {
        ++stats.faces;
        sink(*face);
      }
      return;
    }
    for (const auto& child : expand(node, stats)) stream(child, sink, stats);
  }

 private:
  std::optional<ChainVector> realize_child(const Node& node, int s) const {
    SignVector signs = node.signs;
    signs[node.depth] = static_cast<std::int8_t>(s);
    return realize(rows_, dimension_, signs, node.depth + 1, false);
  }

  std::optional<ArrangementFace> finish(const Node& node, EnumerationStats& stats) const {
    bool coordinate_nonzero = false;
    for (std::size_t i = constraint_rows_; i < rows_.size(); ++i) {
      coordinate_nonzero |= node.signs[i] != 0;
    }
    if (!coordinate_nonzero) return std::nullopt;
    ArrangementFace face;
    face.signs = node.signs;
    canonicalize_antipodal(face.signs, constraint_rows_);
    ++stats.lp_calls;
    auto rep = realize(rows_, dimension_, face.signs, rows_.size(), true);
    if (!rep) {
      throw Error(ErrorCode::MalformedSystem, "realizable face lost its representative");
    }
    face.representative = clear_to_coprime_integers(*rep);
    return face;
  }

  std::vector<LinearForm> rows_;
  std::size_t dimension_;
  std::size_t constraint_rows_;
};

// Lines of the arrangement. A node holds a reduced row-echelon basis of the
// rows chosen so far; skipping a row that is independent of the basis commits
// to that row not vanishing on the final line, so every line is produced once.
class LineSearch {
 public:
  LineSearch(const std::vector<LinearForm>& rows, std::size_t dimension)
      : rows_(rows), dimension_(dimension) {}

  void run(const std::function<void(ChainVector)>& sink, EnumerationStats& stats) {
    sink_ = &sink;
    stats_ = &stats;
    Basis empty;
    std::vector<std::size_t> forbidden;
    visit(0, empty, forbidden);
  }

 private:
  struct Basis {
    std::vector<std::size_t> pivots;
    std::vector<std::vector<Rational>> rows;  // pivot entry 1, pivot columns cleared
  };

  std::vector<Rational> reduce(const Basis& b, std::size_t row) const {
    std::vector<Rational> r(dimension_);
    for (auto c : rows_[row]) r[c] += 1;
    for (std::size_t i = 0; i < b.rows.size(); ++i) {
      const Rational f = r[b.pivots[i]];
      if (sgn(f) == 0) continue;
      for (std::size_t c = 0; c < dimension_; ++c) {
        if (sgn(b.rows[i][c]) != 0) r[c] -= f * b.rows[i][c];
      }
    }
    return r;
  }

  static std::optional<std::size_t> pivot_of(const std::vector<Rational>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (sgn(r[c]) != 0) return c;
    }
    return std::nullopt;
  }

  Basis extend(const Basis& b, std::vector<Rational> r, std::size_t piv) const {
    const Rational lead = r[piv];
    for (auto& v : r) v /= lead;
    Basis out = b;
    for (auto& row : out.rows) {
      const Rational f = row[piv];
      if (sgn(f) == 0) continue;
      for (std::size_t c = 0; c < dimension_; ++c) row[c] -= f * r[c];
    }
    out.pivots.push_back(piv);
    out.rows.push_back(std::move(r));
    return out;
  }

  ChainVector null_vector(const Basis& b) const {
    std::vector<bool> is_pivot(dimension_, false);
    for (auto p : b.pivots) is_pivot[p] = true;
    std::size_t free = 0;
    while (is_pivot[free]) ++free;
    ChainVector v(dimension_);
    v[free] = 1;
    for (std::size_t i = 0; i < b.rows.size(); ++i) v[b.pivots[i]] = -b.rows[i][free];
    return v;
  }

  bool any_spanned(const Basis& b, const std::vector<std::size_t>& rows) const {
    for (auto r : rows) {
      if (!pivot_of(reduce(b, r))) return true;
    }
    return false;
  }

  void visit(std::size_t next, const Basis& basis, std::vector<std::size_t>& forbidden) {
    ++stats_->nodes;
    if (basis.rows.size() + 1 == dimension_) {
      (*sink_)(null_vector(basis));
      return;
    }
    const std::size_t need = dimension_ - 1 - basis.rows.size();
    const std::size_t pushed = forbidden.size();
    for (std::size_t i = next; i < rows_.size() && rows_.size() - i >= need; ++i) {
      auto r = reduce(basis, i);
      auto piv = pivot_of(r);
      if (!piv) continue;  // already vanishes on every completion
      Basis child = extend(basis, std::move(r), *piv);
      if (!any_spanned(child, forbidden)) visit(i + 1, child, forbidden);
      // From here on row i is skipped while independent.
      forbidden.push_back(i);
    }
    forbidden.resize(pushed);
  }

  const std::vector<LinearForm>& rows_;
  std::size_t dimension_;
  const std::function<void(ChainVector)>* sink_ = nullptr;
  EnumerationStats* stats_ = nullptr;
};

}  // namespace

SignVector sign_vector(const std::vector<LinearForm>& rows, const ChainVector& x) {
  SignVector s(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    s[i] = static_cast<std::int8_t>(sgn(evaluate(rows[i], x)));
  }
  return s;
}

void canonicalize_antipodal(SignVector& signs, std::size_t num_constraint_rows,
                            ChainVector* point) {
  for (std::size_t i = num_constraint_rows; i < signs.size(); ++i) {
    if (signs[i] == 0) continue;
    if (signs[i] < 0) {
      for (auto& s : signs) s = static_cast<std::int8_t>(-s);
      if (point) {
        for (auto& v : *point) v = -v;
      }
    }
    return;
  }
}

ChainVector face_representative(const std::vector<LinearForm>& rows, std::size_t dimension,
                                const SignVector& signs) {
  auto rep = realize(rows, dimension, signs, rows.size(), true);
  if (!rep) return {};
  return clear_to_coprime_integers(*rep);
}

std::vector<ArrangementFace> enumerate_faces(const IncidenceSystem& sys,
                                             const EnumerationOptions& options,
                                             EnumerationStats* stats) {
  EnumerationStats local;
  Explorer explorer(arrangement_rows(sys), sys.size(), sys.rows().size());
  std::vector<ArrangementFace> out;
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    explorer.explore(explorer.root(), out, local);
  } else {
    // Expand level by level until there is enough independent work; all
    // leaves sit at the same depth, so the frontier keeps depth-first order.
    std::vector<Node> frontier{explorer.root()};
    while (frontier.size() < 4 * threads && frontier.front().depth < explorer.num_rows()) {
      std::vector<Node> next;
      for (const auto& n : frontier) {
        ++local.nodes;
        for (auto& c : explorer.expand(n, local)) next.push_back(std::move(c));
      }
      frontier = std::move(next);
      if (frontier.empty()) break;
    }
    std::vector<std::vector<ArrangementFace>> parts(frontier.size());
    std::vector<EnumerationStats> part_stats(frontier.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < frontier.size(); i = next++) {
        explorer.explore(frontier[i], parts[i], part_stats[i]);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (auto& f : parts[i]) out.push_back(std::move(f));
      local.nodes += part_stats[i].nodes;
      local.lp_calls += part_stats[i].lp_calls;
    }
  }
  local.faces = out.size();
  if (stats) *stats = local;
  return out;
}

std::vector<ArrangementFace> enumerate_faces(const ProblemSpec& spec,
                                             const EnumerationOptions& options,
                                             EnumerationStats* stats) {
  return enumerate_faces(IncidenceSystem::from_spec(spec), options, stats);
}

std::vector<ArrangementFace> enumerate_rays(const IncidenceSystem& sys,
                                            EnumerationStats* stats) {
  EnumerationStats local;
  std::vector<ArrangementFace> out;
  if (sys.size() > 0) {
    const auto rows = arrangement_rows(sys);
    const std::size_t constraint_rows = sys.rows().size();
    LineSearch search(rows, sys.size());
    search.run(
        [&](ChainVector v) {
          ArrangementFace face;
          face.representative = clear_to_coprime_integers(v);
          face.signs = sign_vector(rows, face.representative);
          canonicalize_antipodal(face.signs, constraint_rows, &face.representative);
          out.push_back(std::move(face));
        },
        local);
  }
  local.faces = out.size();
  if (stats) *stats = local;
  return out;
}

std::vector<ArrangementFace> enumerate_rays(const ProblemSpec& spec, EnumerationStats* stats) {
  return enumerate_rays(IncidenceSystem::from_spec(spec), stats);
}

void for_each_face(const IncidenceSystem& sys,
                   const std::function<void(const ArrangementFace&)>& sink,
                   EnumerationStats* stats) {
  EnumerationStats local;
  Explorer explorer(arrangement_rows(sys), sys.size(), sys.rows().size());
  explorer.stream(explorer.root(), sink, local);
  if (stats) *stats = local;
}

}  // namespace onelap
