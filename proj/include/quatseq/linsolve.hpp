#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "quatseq/rational.hpp"

namespace quatseq {

// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

// Decides b in L(A) (the lattice generated by the columns of A) and produces
// integer coordinates.  A is reduced once to a column echelon form H = A * U
// with U unimodular; solving is forward substitution with exact-division
// checks, so one solver instance serves many right-hand sides.
class LatticeSolver {
 public:
  explicit LatticeSolver(IntMatrix a);

  // x with A x = b, or nullopt when b is outside the lattice.
  std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;

 private:
  IntMatrix h_;
  IntMatrix u_;
  std::vector<std::pair<std::size_t, std::size_t>> pivots_;  // (row, column)
};

inline std::optional<std::vector<Int>> solve_integer_system(IntMatrix a,
                                                            const std::vector<Int>& b) {
  return LatticeSolver(std::move(a)).solve(b);
}

}  // namespace quatseq
