#pragma once

#include "cosetcover/element.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cosetcover {

// Folded Stallings core graph of a finitely generated subgroup of F_k.
// Membership is a deterministic trace from the base vertex; a right coset
// H g gets the canonical key (exit vertex, reduced hanging suffix).
class StallingsGraph {
 public:
  StallingsGraph(const std::vector<FreeWord>& generators, int rank);

  int rank() const { return rank_; }
  size_t vertex_count() const { return edges_.size(); }

  bool accepts(const FreeWord& reduced_word) const;  // membership in H

  // Every directed slot filled at every vertex; equivalent to H having finite
  // index (then the index equals vertex_count()).
  bool complete() const;

  struct Trace {
    int64_t vertex = 0;       // last core vertex reached
    size_t consumed = 0;      // letters consumed before leaving the core
  };
  Trace trace(const FreeWord& reduced_word) const;

  // Canonical key of the right coset H g (g freely reduced).
  std::string coset_key(const FreeWord& g) const;

  // Directed edge slot: letter +i -> 2(i-1), letter -i -> 2(i-1)+1.
  static int slot(int8_t letter);
  int64_t edge(int64_t vertex, int slot_index) const { return edges_[vertex][slot_index]; }

 private:
  int rank_;
  std::vector<std::vector<int64_t>> edges_;  // [vertex][slot] -> vertex or -1
};

}  // namespace cosetcover
