#pragma once

#include "cosetcover/element.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cosetcover {

// Row-style Hermite normal form of an integer lattice given by spanning
// vectors in Z^d. Echelon rows with positive pivots; supports membership,
// canonical residues mod the lattice, and exact index computation.
class LatticeForm {
 public:
  LatticeForm(const std::vector<VecZ>& spanning, int dim);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<VecZ>& rows() const { return rows_; }

  bool contains(const VecZ& v) const;

  // Canonical representative of v + L: pivot coordinates reduced into
  // [0, pivot). Two vectors are congruent mod L iff their residues coincide.
  VecZ residue(const VecZ& v) const;

  // [Z^d : L] when finite (rank == dim), nullopt when infinite.
  std::optional<int64_t> index() const;

 private:
  int dim_;
  std::vector<VecZ> rows_;        // echelon, pivots positive
  std::vector<int> pivot_cols_;   // one per row, strictly increasing
};

}  // namespace cosetcover
