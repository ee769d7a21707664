#include "circlepat/simplex.hpp"

#include <cmath>
#include <limits>

#include "circlepat/errors.hpp"

namespace circlepat {

namespace {

class Tableau {
 public:
  Tableau(int rows, int cols) : rows_(rows), cols_(cols), data_((rows + 1) * (cols + 1), 0.0), basis_(rows, -1) {}

  double& at(int r, int c) { return data_[r * (cols_ + 1) + c]; }
  double at(int r, int c) const { return data_[r * (cols_ + 1) + c]; }
  double& rhs(int r) { return at(r, cols_); }
  double& cost(int c) { return at(rows_, c); }  // reduced cost row, z_j - c_j
  double value() const { return at(rows_, cols_); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::vector<int>& basis() { return basis_; }

  void pivot(int r, int c) {
    const double p = at(r, c);
    for (int j = 0; j <= cols_; ++j) at(r, j) /= p;
    for (int i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      const double factor = at(i, c);
      if (factor == 0.0) continue;
      for (int j = 0; j <= cols_; ++j) at(i, j) -= factor * at(r, j);
      at(i, c) = 0.0;
    }
    basis_[r] = c;
  }

  /// Sets the objective row for maximizing costs . x given the current basis.
  void load_objective(const std::vector<double>& costs) {
    for (int j = 0; j <= cols_; ++j) at(rows_, j) = 0.0;
    for (int j = 0; j < cols_; ++j) at(rows_, j) = -costs[j];
    for (int i = 0; i < rows_; ++i) {
      const double cb = costs[basis_[i]];
      if (cb == 0.0) continue;
      for (int j = 0; j <= cols_; ++j) at(rows_, j) += cb * at(i, j);
    }
  }

  /// Bland's rule iterations; `allowed` masks columns that may enter.
  LpStatus optimize(const std::vector<char>& allowed, double tol, int& pivots) {
    const int cap = 50000;
    for (int iter = 0; iter < cap; ++iter) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (allowed[j] && at(rows_, j) < -tol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return LpStatus::Optimal;
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < rows_; ++i) {
        const double a = at(i, enter);
        if (a <= tol) continue;
        const double ratio = at(i, cols_) / a;
        if (ratio < best - tol || (std::abs(ratio - best) <= tol && leave >= 0 && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) return LpStatus::Unbounded;
      pivot(leave, enter);
      ++pivots;
    }
    throw NumericalError("simplex: pivot cap exceeded");
  }

 private:
  int rows_;
  int cols_;
  std::vector<double> data_;
  std::vector<int> basis_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp, double tol) {
  const int m = static_cast<int>(lp.rows.size());
  const int n = lp.variables;

  // Normalise to nonnegative right-hand sides.
  struct NormRow {
    const LinearProgram::Row* row;
    double sign;
    LinearProgram::Sense sense;
  };
  std::vector<NormRow> norm;
  int slack_count = 0;
  int artificial_count = 0;
  for (const auto& row : lp.rows) {
    NormRow nr{&row, row.rhs < 0.0 ? -1.0 : 1.0, row.sense};
    if (nr.sign < 0.0) {
      if (row.sense == LinearProgram::Sense::LessEqual) nr.sense = LinearProgram::Sense::GreaterEqual;
      else if (row.sense == LinearProgram::Sense::GreaterEqual) nr.sense = LinearProgram::Sense::LessEqual;
    }
    if (nr.sense != LinearProgram::Sense::Equal) ++slack_count;
    if (nr.sense != LinearProgram::Sense::LessEqual) ++artificial_count;
    norm.push_back(nr);
  }

  const int cols = n + slack_count + artificial_count;
  const int first_artificial = n + slack_count;
  Tableau t(m, cols);
  int next_slack = n;
  int next_artificial = first_artificial;
  for (int i = 0; i < m; ++i) {
    const NormRow& nr = norm[i];
    for (const auto& [var, coef] : nr.row->terms) t.at(i, var) += nr.sign * coef;
    t.rhs(i) = nr.sign * nr.row->rhs;
    switch (nr.sense) {
      case LinearProgram::Sense::LessEqual:
        t.at(i, next_slack) = 1.0;
        t.basis()[i] = next_slack++;
        break;
      case LinearProgram::Sense::GreaterEqual:
        t.at(i, next_slack++) = -1.0;
        t.at(i, next_artificial) = 1.0;
        t.basis()[i] = next_artificial++;
        break;
      case LinearProgram::Sense::Equal:
        t.at(i, next_artificial) = 1.0;
        t.basis()[i] = next_artificial++;
        break;
    }
  }

  LpResult result;
  std::vector<char> allowed(cols, 1);
  if (artificial_count > 0) {
    std::vector<double> phase1(cols, 0.0);
    for (int j = first_artificial; j < cols; ++j) phase1[j] = -1.0;
    t.load_objective(phase1);
    t.optimize(allowed, tol, result.pivots);
    double scale = 1.0;
    for (const auto& row : lp.rows) scale = std::max(scale, std::abs(row.rhs));
    if (t.value() < -1e-9 * scale) {
      result.status = LpStatus::Infeasible;
      return result;
    }
    // Drive zero-valued artificials out of the basis where possible.
    for (int i = 0; i < m; ++i) {
      if (t.basis()[i] < first_artificial) continue;
      for (int j = 0; j < first_artificial; ++j) {
        if (std::abs(t.at(i, j)) > 1e-9) {
          t.pivot(i, j);
          ++result.pivots;
          break;
        }
      }
    }
    for (int j = first_artificial; j < cols; ++j) allowed[j] = 0;
  }

  std::vector<double> costs(cols, 0.0);
  for (int j = 0; j < n; ++j) costs[j] = lp.objective[j];
  t.load_objective(costs);
  result.status = t.optimize(allowed, tol, result.pivots);
  if (result.status != LpStatus::Optimal) return result;

  result.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i) {
    const int b = t.basis()[i];
    if (b < n) result.x[b] = t.rhs(i);
  }
  result.objective = 0.0;
  for (int j = 0; j < n; ++j) result.objective += lp.objective[j] * result.x[j];
  return result;
}

}  // namespace circlepat
