#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace riskroute::cohort {

inline constexpr double kForbidden = std::numeric_limits<double>::infinity();

/// Dense row-major cost matrix; kForbidden marks disallowed pairs.
class CostMatrix {
 public:
  CostMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<double> data_;
};

struct Assignment {
  /// column assigned to each row
  std::vector<std::size_t> row_to_col;
  double total_cost = 0.0;
};

/// Exact minimum-cost assignment of every row to a distinct column
/// (rows <= cols). Equivalent to a square Hungarian solve with the matrix
/// padded by zero-cost dummy rows. Uses the shortest-augmenting-path form with
/// row/column potentials, O(rows^2 * cols). Columns are scanned in index order
/// and only strictly better candidates replace the incumbent, so among equal
/// reduced costs the lowest column index is taken first.
///
/// Throws ComputeError if rows > cols or every complete assignment uses a
/// forbidden pair.
Assignment solve_assignment(const CostMatrix& cost);

}  // namespace riskroute::cohort
