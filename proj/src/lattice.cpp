#include "cosetcover/lattice.hpp"

#include "cosetcover/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace cosetcover {

namespace {

// floor division, exact for negative numerators
int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

LatticeForm::LatticeForm(const std::vector<VecZ>& spanning, int dim) : dim_(dim) {
  std::vector<VecZ> work;
  for (const auto& v : spanning) {
    if (static_cast<int>(v.size()) != dim) {
      throw InfeasibleError("lattice vector dimension mismatch");
    }
    work.push_back(v);
  }
  // Integer Gaussian elimination with gcd steps, column by column.
  size_t row = 0;
  for (int col = 0; col < dim && row < work.size(); ++col) {
    // Reduce all entries in this column below `row` against each other until
    // one nonzero entry remains.
    while (true) {
      size_t best = work.size();
      for (size_t r = row; r < work.size(); ++r) {
        if (work[r][col] != 0 && (best == work.size() ||
                                  std::abs(work[r][col]) < std::abs(work[best][col]))) {
          best = r;
        }
      }
      if (best == work.size()) break;  // column is clear
      std::swap(work[row], work[best]);
      bool others = false;
      for (size_t r = row + 1; r < work.size(); ++r) {
        if (work[r][col] == 0) continue;
        const int64_t q = work[r][col] / work[row][col];
        for (int c = 0; c < dim; ++c) work[r][c] -= q * work[row][c];
        if (work[r][col] != 0) others = true;
      }
      if (!others) {
        if (work[row][col] < 0) {
          for (int c = 0; c < dim; ++c) work[row][c] = -work[row][c];
        }
        pivot_cols_.push_back(col);
        ++row;
        break;
      }
    }
  }
  work.resize(row);
  rows_ = std::move(work);
}

bool LatticeForm::contains(const VecZ& v) const {
  VecZ r = residue(v);
  return std::all_of(r.begin(), r.end(), [](int64_t x) { return x == 0; });
}

VecZ LatticeForm::residue(const VecZ& v) const {
  if (static_cast<int>(v.size()) != dim_) {
    throw InfeasibleError("lattice residue dimension mismatch");
  }
  VecZ r = v;
  for (size_t i = 0; i < rows_.size(); ++i) {
    const int col = pivot_cols_[i];
    const int64_t pivot = rows_[i][col];
    const int64_t q = floor_div(r[col], pivot);
    if (q != 0) {
      for (int c = 0; c < dim_; ++c) r[c] -= q * rows_[i][c];
    }
  }
  return r;
}

std::optional<int64_t> LatticeForm::index() const {
  if (rank() != dim_) return std::nullopt;
  int64_t prod = 1;
  for (size_t i = 0; i < rows_.size(); ++i) prod *= rows_[i][pivot_cols_[i]];
  return prod;
}

}  // namespace cosetcover
