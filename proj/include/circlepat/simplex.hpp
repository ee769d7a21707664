#pragma once

#include <utility>
#include <vector>

namespace circlepat {

/// maximize objective . x  subject to rows, x >= 0.
struct LinearProgram {
  enum class Sense { LessEqual, Equal, GreaterEqual };
  struct Row {
    std::vector<std::pair<int, double>> terms;
    Sense sense;
    double rhs;
  };

  int variables = 0;
  std::vector<double> objective;
  std::vector<Row> rows;

  int add_variable(double cost = 0.0) {
    objective.push_back(cost);
    return variables++;
  }
  void add_row(std::vector<std::pair<int, double>> terms, Sense sense, double rhs) {
    rows.push_back({std::move(terms), sense, rhs});
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  double objective = 0.0;
  std::vector<double> x;
  int pivots = 0;
};

/// Dense two-phase simplex with Bland's rule.
LpResult solve_lp(const LinearProgram& lp, double tolerance = 1e-10);

}  // namespace circlepat
