#pragma once

#include "cosetcover/ball.hpp"
#include "cosetcover/budget.hpp"
#include "cosetcover/subgroup.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace cosetcover {

// Ball of radius r in the Schreier graph of H\G: vertices are right cosets
// H g discovered by BFS over right multiplication by generators, vertex 0 is
// H e. Adjacency is complete inside the ball; -1 marks edges leaving it.
struct SchreierBall {
  OraclePtr subgroup;
  int64_t radius = 0;
  std::vector<Element> representatives;       // BFS-discovery order
  std::vector<int64_t> depth;                 // distance from H e
  std::vector<size_t> sphere_offsets;         // like Ball
  std::vector<std::vector<int64_t>> adjacency;  // [vertex][generator] -> vertex or -1
  std::vector<int64_t> parent;                // BFS tree: vertex -> parent (or -1 at root)
  std::vector<int> parent_generator;          // generator index labeling the tree edge
  bool closed = false;                        // BFS exhausted the whole coset space

  size_t size() const { return representatives.size(); }
};

SchreierBall schreier_ball(const MarkedGroup& group, const OraclePtr& subgroup, int64_t radius,
                           const Budget& budget = {});

// min over the roster of |schreier_ball(H, r)|; an upper bound on the
// single-subgroup covering invariant, which infimizes over all infinite-index
// subgroups. Also carries the trivial lower bound r+1.
struct DFunctionResult {
  int64_t value = 0;
  size_t argmin = 0;              // index into the roster
  int64_t trivial_lower = 0;      // r + 1
  std::vector<int64_t> sizes;     // per roster entry
};
DFunctionResult d_function_upper(const MarkedGroup& group, const std::vector<OraclePtr>& roster,
                                 int64_t radius, const Budget& budget = {});

// Exact evidence where the oracle kind decides the index; otherwise Schreier
// BFS up to budget.evidence_vertices cosets: closing yields finite-index(n),
// not closing yields depth-d.
IndexEvidence infinite_index_evidence(const MarkedGroup& group, const OraclePtr& subgroup,
                                      const Budget& budget = {});

// Locates the coset H g inside a Schreier ball; -1 if it is not a vertex.
int64_t locate_coset(const SchreierBall& ball, const Element& g);

}  // namespace cosetcover
