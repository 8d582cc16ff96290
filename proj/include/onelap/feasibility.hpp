// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "onelap/rational.hpp"

namespace onelap {

enum class Relation { Equal, GreaterEqual, Greater };

struct LinearRow {
  std::vector<Rational> coeffs;  // one entry per variable
  Relation relation = Relation::Equal;
  Rational rhs = 0;
};

struct Box {
  Rational lo;
  Rational hi;
};

/// A system of linear rows over named variables with optional per-variable
/// box bounds. Variables without a box are free.
struct LinearSystem {
  std::vector<std::string> variables;
  std::vector<LinearRow> rows;
  std::vector<std::optional<Box>> box;  // empty, or one entry per variable

  std::size_t num_variables() const { return variables.size(); }

  /// Appends a row; `coeffs` must have one entry per variable.
  void add_row(std::vector<Rational> coeffs, Relation relation, Rational rhs = 0);
};

enum class Feasibility { Infeasible, Feasible };

struct FeasibilityResult {
  Feasibility status = Feasibility::Infeasible;
  std::vector<Rational> witness;  // present iff Feasible
  Rational slack = 0;             // optimal margin on strict rows; 0 without strict rows

  bool feasible() const { return status == Feasibility::Feasible; }
};

/// Exact feasibility by a dense rational two-phase simplex with Bland's rule.
/// Strict rows a.x > b become a.x - t >= b with a margin variable t in [0, 1]
/// that is maximized; the system is feasible iff the optimum t* is positive.
/// Throws Error(MalformedSystem) on ragged rows, an inconsistent box vector, or
/// an empty box (lo > hi).
FeasibilityResult solve(const LinearSystem& system);

/// Margin-maximal point of the relatively open cone cut out by homogeneous
/// equalities (a.x = 0) and strict rows (a.x > 0), inside the given box.
/// `box` must bound every variable.
FeasibilityResult maximize_margin(std::size_t num_variables,
                                  const std::vector<std::vector<Rational>>& equalities,
                                  const std::vector<std::vector<Rational>>& strict_rows,
                                  const std::vector<Box>& box);

/// Exact check that `point` satisfies every row of the system and lies in its
/// box. Strict rows must hold with margin at least `min_margin` (> 0 treated as
/// plain strictness when min_margin is 0).
bool satisfies(const LinearSystem& system, const std::vector<Rational>& point,
               const Rational& min_margin = 0);

}  // namespace onelap
