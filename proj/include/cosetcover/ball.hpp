#pragma once

#include "cosetcover/budget.hpp"
#include "cosetcover/element.hpp"
#include "cosetcover/group.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace cosetcover {

// Ball of radius r in the word metric. Elements are stored sphere by sphere;
// inside each sphere the order is lexicographic on canonical forms, so ball
// listings are byte-reproducible.
struct Ball {
  int64_t radius = 0;
  std::vector<Element> elements;
  std::vector<size_t> sphere_offsets;  // offsets[k] = first index of sphere k; size radius+2
  std::unordered_map<Element, size_t, ElementHash> position;

  size_t size() const { return elements.size(); }
  size_t sphere_begin(int64_t k) const { return sphere_offsets[k]; }
  size_t sphere_end(int64_t k) const { return sphere_offsets[k + 1]; }
  bool contains(const Element& g) const { return position.count(g) > 0; }
  // Word length of a ball member (index lookup into sphere offsets).
  int64_t length_of_index(size_t idx) const;
};

Ball make_ball(const MarkedGroup& group, int64_t radius, const Budget& budget = {});

// |B_r| for r = 0..r_max.
std::vector<int64_t> growth_function(const MarkedGroup& group, int64_t r_max,
                                     const Budget& budget = {});

// min{k : g in B_k}; BFS-based, budget-capped. Uses the closed form when the
// marking admits one.
int64_t word_length(const MarkedGroup& group, const Element& g, const Budget& budget = {});

// Incremental ball: spheres are grown on demand. Used as a distance oracle by
// the walk engine for families without a closed-form word length.
class GrowingBall {
 public:
  explicit GrowingBall(const MarkedGroup& group, const Budget& budget = {});

  // Grows until g is found; throws BudgetError if the cap is hit first.
  int64_t distance(const Element& g);
  // Grows until radius r is complete.
  void ensure_radius(int64_t r);
  const Ball& ball() const { return ball_; }
  Ball release() { return std::move(ball_); }
  const MarkedGroup& group() const { return group_; }

 private:
  void grow_one_sphere();

  const MarkedGroup& group_;
  Budget budget_;
  Ball ball_;
  std::vector<Element> frontier_;  // last completed sphere
};

}  // namespace cosetcover
