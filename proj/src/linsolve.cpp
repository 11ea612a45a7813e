#include "quatseq/linsolve.hpp"

#include <stdexcept>

namespace quatseq {

namespace {

void swap_columns(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// column[dst] -= q * column[src]
void submul_column(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) -= q * m.at(i, src);
}

void negate_column(IntMatrix& m, std::size_t j) {
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = -m.at(i, j);
}

}  // namespace

LatticeSolver::LatticeSolver(IntMatrix a)
    : h_(std::move(a)), u_(h_.cols(), h_.cols()) {
  const std::size_t rows = h_.rows(), cols = h_.cols();
  for (std::size_t j = 0; j < cols; ++j) u_.at(j, j) = 1;

  std::size_t col = 0;
  for (std::size_t row = 0; row < rows && col < cols; ++row) {
    // Euclidean column reduction: collect the gcd of row entries at
    // columns >= col into column col, zeroing the others.
    for (;;) {
      std::size_t best = cols;
      for (std::size_t j = col; j < cols; ++j) {
        if (h_.at(row, j) == 0) continue;
        if (best == cols ||
            mpz_cmpabs(h_.at(row, j).get_mpz_t(), h_.at(row, best).get_mpz_t()) < 0)
          best = j;
      }
      if (best == cols) break;  // row is zero on the remaining columns
      swap_columns(h_, best, col);
      swap_columns(u_, best, col);

      bool others = false;
      for (std::size_t j = col + 1; j < cols; ++j) {
        if (h_.at(row, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h_.at(row, j).get_mpz_t(), h_.at(row, col).get_mpz_t());
        submul_column(h_, j, col, q);
        submul_column(u_, j, col, q);
        if (h_.at(row, j) != 0) others = true;
      }
      if (!others) {
        if (h_.at(row, col) < 0) {
          negate_column(h_, col);
          negate_column(u_, col);
        }
        pivots_.emplace_back(row, col);
        ++col;
        break;
      }
    }
  }
}

std::optional<std::vector<Int>> LatticeSolver::solve(const std::vector<Int>& b) const {
  if (b.size() != h_.rows()) throw std::invalid_argument("LatticeSolver::solve: size mismatch");
  std::vector<Int> residual = b;
  std::vector<Int> y(h_.cols());

  std::size_t k = 0;  // next pivot
  for (std::size_t row = 0; row < h_.rows(); ++row) {
    if (k < pivots_.size() && pivots_[k].first == row) {
      std::size_t col = pivots_[k].second;
      const Int& pivot = h_.at(row, col);
      if (!mpz_divisible_p(residual[row].get_mpz_t(), pivot.get_mpz_t()))
        return std::nullopt;
      Int q = residual[row] / pivot;
      if (q != 0)
        for (std::size_t i = row; i < h_.rows(); ++i) residual[i] -= q * h_.at(i, col);
      y[col] = std::move(q);
      ++k;
    } else if (residual[row] != 0) {
      return std::nullopt;
    }
  }

  std::vector<Int> x(h_.cols());
  for (std::size_t j = 0; j < h_.cols(); ++j) {
    if (y[j] == 0) continue;
    for (std::size_t i = 0; i < h_.cols(); ++i) x[i] += u_.at(i, j) * y[j];
  }
  return x;
}

}  // namespace quatseq
