// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0

#include "onelap/feasibility.hpp"

#include <utility>

#include "onelap/error.hpp"

namespace onelap {

void LinearSystem::add_row(std::vector<Rational> coeffs, Relation relation, Rational rhs) {
  if (coeffs.size() != variables.size()) {
    throw Error(ErrorCode::MalformedSystem, "row length does not match variable count");
  }
  rows.push_back(LinearRow{std::move(coeffs), relation, std::move(rhs)});
}

namespace {

enum class Sense { LessEqual, GreaterEqual, Equal };

struct StandardRow {
  std::vector<Rational> coeffs;  // over structural columns
  Sense sense;
  Rational rhs;
};

// How an original variable maps onto non-negative structural columns.
struct VariableMap {
  enum class Kind { Fixed, Shifted, Free } kind = Kind::Free;
  Rational offset = 0;     // fixed value or lower bound
  std::size_t column = 0;  // Shifted: y; Free: positive part
  std::size_t negative_column = 0;
};

// Dense tableau: `rows` constraint rows followed by the objective row, each with
// `cols` coefficients and a trailing right-hand side.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_((rows + 1) * (cols + 1)), basis_(rows) {}

  Rational& at(std::size_t r, std::size_t c) { return data_[r * (cols_ + 1) + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * (cols_ + 1) + c]; }
  Rational& rhs(std::size_t r) { return at(r, cols_); }
  Rational& obj(std::size_t c) { return at(rows_, c); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t e) {
    const std::size_t width = cols_ + 1;
    Rational inv = 1 / at(r, e);
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < width; ++j) {
      Rational& v = at(r, j);
      if (sgn(v) != 0) {
        v *= inv;
        support.push_back(j);
      }
    }
    Rational factor;
    Rational tmp;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      if (sgn(at(i, e)) == 0) continue;
      factor = at(i, e);
      for (auto j : support) {
        mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), at(r, j).get_mpq_t());
        mpq_sub(at(i, j).get_mpq_t(), at(i, j).get_mpq_t(), tmp.get_mpq_t());
      }
    }
    basis_[r] = e;
  }

  /// Maximizes the objective row with Bland's rule over columns [0, allowed).
  void optimize(std::size_t allowed) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (sgn(obj(j)) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return;
      std::size_t leave = rows_;
      Rational best;
      Rational ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (sgn(at(i, enter)) <= 0) continue;
        ratio = rhs(i) / at(i, enter);
        if (leave == rows_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows_) {
        throw Error(ErrorCode::MalformedSystem, "unbounded margin program");
      }
      pivot(leave, enter);
    }
  }

  void drop_row(std::size_t r) {
    // Swap the row to the end of the constraint block and shrink; the
    // objective row moves up by one.
    const std::size_t width = cols_ + 1;
    const std::size_t last = rows_ - 1;
    if (r != last) {
      for (std::size_t j = 0; j < width; ++j) std::swap(at(r, j), at(last, j));
      std::swap(basis_[r], basis_[last]);
    }
    for (std::size_t j = 0; j < width; ++j) std::swap(at(last, j), at(rows_, j));
    data_.resize(rows_ * width);
    basis_.pop_back();
    --rows_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
  std::vector<std::size_t> basis_;
};

void validate(const LinearSystem& system) {
  const std::size_t n = system.num_variables();
  if (!system.box.empty() && system.box.size() != n) {
    throw Error(ErrorCode::MalformedSystem, "box vector length does not match variables");
  }
  for (const auto& row : system.rows) {
    if (row.coeffs.size() != n) {
      throw Error(ErrorCode::MalformedSystem, "row length does not match variable count");
    }
  }
  for (const auto& b : system.box) {
    if (b && b->lo > b->hi) throw Error(ErrorCode::MalformedSystem, "empty box");
  }
}

}  // namespace

FeasibilityResult solve(const LinearSystem& system) {
  validate(system);
  const std::size_t n = system.num_variables();

  // Map variables to structural columns.
  std::vector<VariableMap> vars(n);
  std::size_t structural = 0;
  std::vector<std::pair<std::size_t, Rational>> upper_rows;  // column, width
  for (std::size_t j = 0; j < n; ++j) {
    const auto* b = system.box.empty() || !system.box[j] ? nullptr : &*system.box[j];
    if (b && b->lo == b->hi) {
      vars[j].kind = VariableMap::Kind::Fixed;
      vars[j].offset = b->lo;
    } else if (b) {
      vars[j].kind = VariableMap::Kind::Shifted;
      vars[j].offset = b->lo;
      vars[j].column = structural++;
      upper_rows.emplace_back(vars[j].column, b->hi - b->lo);
    } else {
      vars[j].kind = VariableMap::Kind::Free;
      vars[j].column = structural++;
      vars[j].negative_column = structural++;
    }
  }
  bool has_strict = false;
  for (const auto& row : system.rows) has_strict |= row.relation == Relation::Greater;
  const std::size_t margin_col = structural;
  if (has_strict) ++structural;

  std::vector<StandardRow> std_rows;
  std_rows.reserve(system.rows.size() + upper_rows.size() + 1);
  for (const auto& row : system.rows) {
    StandardRow sr{std::vector<Rational>(structural), Sense::Equal, row.rhs};
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& a = row.coeffs[j];
      if (sgn(a) == 0) continue;
      switch (vars[j].kind) {
        case VariableMap::Kind::Fixed:
          sr.rhs -= a * vars[j].offset;
          break;
        case VariableMap::Kind::Shifted:
          sr.rhs -= a * vars[j].offset;
          sr.coeffs[vars[j].column] = a;
          break;
        case VariableMap::Kind::Free:
          sr.coeffs[vars[j].column] = a;
          sr.coeffs[vars[j].negative_column] = -a;
          break;
      }
    }
    switch (row.relation) {
      case Relation::Equal: sr.sense = Sense::Equal; break;
      case Relation::GreaterEqual: sr.sense = Sense::GreaterEqual; break;
      case Relation::Greater:
        sr.sense = Sense::GreaterEqual;
        sr.coeffs[margin_col] = -1;
        break;
    }
    std_rows.push_back(std::move(sr));
  }
  for (auto& [col, width] : upper_rows) {
    StandardRow sr{std::vector<Rational>(structural), Sense::LessEqual, width};
    sr.coeffs[col] = 1;
    std_rows.push_back(std::move(sr));
  }
  if (has_strict) {
    StandardRow sr{std::vector<Rational>(structural), Sense::LessEqual, 1};
    sr.coeffs[margin_col] = 1;
    std_rows.push_back(std::move(sr));
  }

  // Rows whose coefficients vanish are decided immediately.
  std::vector<StandardRow> active;
  active.reserve(std_rows.size());
  for (auto& sr : std_rows) {
    bool empty = true;
    for (const auto& c : sr.coeffs) {
      if (sgn(c) != 0) {
        empty = false;
        break;
      }
    }
    if (!empty) {
      active.push_back(std::move(sr));
      continue;
    }
    const int s = sgn(sr.rhs);
    const bool ok = (sr.sense == Sense::Equal && s == 0) ||
                    (sr.sense == Sense::GreaterEqual && s <= 0) ||
                    (sr.sense == Sense::LessEqual && s >= 0);
    if (!ok) return FeasibilityResult{};
  }

  for (auto& sr : active) {
    if (sgn(sr.rhs) < 0) {
      for (auto& c : sr.coeffs) c = -c;
      sr.rhs = -sr.rhs;
      if (sr.sense == Sense::LessEqual) {
        sr.sense = Sense::GreaterEqual;
      } else if (sr.sense == Sense::GreaterEqual) {
        sr.sense = Sense::LessEqual;
      }
    }
  }

  const std::size_t m = active.size();
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const auto& sr : active) {
    if (sr.sense != Sense::Equal) ++slack_count;
    if (sr.sense != Sense::LessEqual) ++artificial_count;
  }
  const std::size_t first_artificial = structural + slack_count;
  Tableau tab(m, first_artificial + artificial_count);
  {
    std::size_t next_slack = structural;
    std::size_t next_art = first_artificial;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& sr = active[i];
      for (std::size_t j = 0; j < structural; ++j) {
        if (sgn(sr.coeffs[j]) != 0) tab.at(i, j) = sr.coeffs[j];
      }
      tab.rhs(i) = sr.rhs;
      if (sr.sense == Sense::LessEqual) {
        tab.at(i, next_slack) = 1;
        tab.basis()[i] = next_slack++;
      } else if (sr.sense == Sense::GreaterEqual) {
        tab.at(i, next_slack++) = -1;
        tab.at(i, next_art) = 1;
        tab.basis()[i] = next_art++;
      } else {
        tab.at(i, next_art) = 1;
        tab.basis()[i] = next_art++;
      }
    }
  }

  // Phase 1: maximize -(sum of artificials).
  if (artificial_count > 0) {
    for (std::size_t j = first_artificial; j < tab.cols(); ++j) tab.obj(j) = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis()[i] < first_artificial) continue;
      for (std::size_t j = 0; j <= tab.cols(); ++j) tab.at(m, j) -= tab.at(i, j);
    }
    tab.optimize(tab.cols());
    if (sgn(tab.obj(tab.cols())) < 0) return FeasibilityResult{};
    // Drive remaining (zero-level) artificials out of the basis.
    for (std::size_t i = 0; i < tab.rows();) {
      if (tab.basis()[i] < first_artificial) {
        ++i;
        continue;
      }
      std::size_t enter = first_artificial;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (sgn(tab.at(i, j)) != 0) {
          enter = j;
          break;
        }
      }
      if (enter == first_artificial) {
        tab.drop_row(i);
      } else {
        tab.pivot(i, enter);
        ++i;
      }
    }
  }

  // Phase 2: maximize the margin.
  if (has_strict) {
    for (std::size_t j = 0; j <= tab.cols(); ++j) tab.obj(j) = 0;
    tab.obj(margin_col) = -1;
    for (std::size_t i = 0; i < tab.rows(); ++i) {
      if (tab.basis()[i] != margin_col) continue;
      for (std::size_t j = 0; j <= tab.cols(); ++j) tab.obj(j) += tab.at(i, j);
    }
    tab.optimize(first_artificial);
  }

  std::vector<Rational> column_values(first_artificial);
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    if (tab.basis()[i] < first_artificial) column_values[tab.basis()[i]] = tab.rhs(i);
  }

  FeasibilityResult result;
  if (has_strict) {
    result.slack = column_values[margin_col];
    if (sgn(result.slack) <= 0) return FeasibilityResult{};
  }
  result.status = Feasibility::Feasible;
  result.witness.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    switch (vars[j].kind) {
      case VariableMap::Kind::Fixed: result.witness[j] = vars[j].offset; break;
      case VariableMap::Kind::Shifted:
        result.witness[j] = vars[j].offset + column_values[vars[j].column];
        break;
      case VariableMap::Kind::Free:
        result.witness[j] =
            column_values[vars[j].column] - column_values[vars[j].negative_column];
        break;
    }
  }
  return result;
}

FeasibilityResult maximize_margin(std::size_t num_variables,
                                  const std::vector<std::vector<Rational>>& equalities,
                                  const std::vector<std::vector<Rational>>& strict_rows,
                                  const std::vector<Box>& box) {
  if (box.size() != num_variables) {
    throw Error(ErrorCode::MalformedSystem, "margin maximization needs a box on every variable");
  }
  LinearSystem system;
  system.variables.resize(num_variables);
  for (std::size_t j = 0; j < num_variables; ++j) system.variables[j] = "x" + std::to_string(j);
  system.box.assign(box.begin(), box.end());
  for (const auto& row : equalities) system.add_row(row, Relation::Equal);
  for (const auto& row : strict_rows) system.add_row(row, Relation::Greater);
  return solve(system);
}

bool satisfies(const LinearSystem& system, const std::vector<Rational>& point,
               const Rational& min_margin) {
  if (point.size() != system.num_variables()) return false;
  for (std::size_t j = 0; j < system.box.size(); ++j) {
    if (!system.box[j]) continue;
    if (point[j] < system.box[j]->lo || point[j] > system.box[j]->hi) return false;
  }
  for (const auto& row : system.rows) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < point.size(); ++j) lhs += row.coeffs[j] * point[j];
    switch (row.relation) {
      case Relation::Equal:
        if (lhs != row.rhs) return false;
        break;
      case Relation::GreaterEqual:
        if (lhs < row.rhs) return false;
        break;
      case Relation::Greater:
        if (lhs <= row.rhs) return false;
        if (sgn(min_margin) > 0 && lhs - row.rhs < min_margin) return false;
        break;
    }
  }
  return true;
}

}  // namespace onelap
