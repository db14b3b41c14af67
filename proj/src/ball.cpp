#include "cosetcover/ball.hpp"

#include "cosetcover/errors.hpp"

#include <algorithm>

namespace cosetcover {

int64_t Ball::length_of_index(size_t idx) const {
  // spheres are contiguous; linear scan is fine at radius scale
  for (int64_t k = 0; k <= radius; ++k) {
    if (idx < sphere_offsets[k + 1]) return k;
  }
  throw InfeasibleError("ball index out of range");
}

GrowingBall::GrowingBall(const MarkedGroup& group, const Budget& budget)
    : group_(group), budget_(budget) {
  ball_.radius = 0;
  ball_.elements.push_back(group.identity());
  ball_.sphere_offsets = {0, 1};
  ball_.position.emplace(group.identity(), 0);
  frontier_.push_back(group.identity());
}

void GrowingBall::grow_one_sphere() {
  std::vector<Element> next;
  for (const Element& g : frontier_) {
    for (const Element& s : group_.generators()) {
      Element h = group_.mul(g, s);
      if (ball_.position.count(h)) continue;
      if (static_cast<int64_t>(ball_.elements.size() + next.size()) >=
          budget_.ball_max_elements) {
        throw BudgetError("ball budget of " + std::to_string(budget_.ball_max_elements) +
                          " elements exceeded while building sphere " +
                          std::to_string(ball_.radius + 1) + " of " + group_.name());
      }
      // reserve the slot so duplicates within the sphere are dropped
      ball_.position.emplace(h, 0);
      next.push_back(std::move(h));
    }
  }
  std::sort(next.begin(), next.end(), element_less);
  for (Element& h : next) {
    ball_.position[h] = ball_.elements.size();
    ball_.elements.push_back(std::move(h));
  }
  ball_.radius += 1;
  ball_.sphere_offsets.push_back(ball_.elements.size());
  frontier_.assign(ball_.elements.begin() + static_cast<int64_t>(ball_.sphere_begin(ball_.radius)),
                   ball_.elements.end());
}

void GrowingBall::ensure_radius(int64_t r) {
  while (ball_.radius < r) grow_one_sphere();
}

int64_t GrowingBall::distance(const Element& g) {
  if (auto d = group_.closed_form_length(g)) return *d;
  while (true) {
    auto it = ball_.position.find(g);
    if (it != ball_.position.end()) return ball_.length_of_index(it->second);
    if (frontier_.empty()) {
      throw InfeasibleError("element is not in the group generated by the marking");
    }
    grow_one_sphere();
  }
}

Ball make_ball(const MarkedGroup& group, int64_t radius, const Budget& budget) {
  if (radius < 0) throw InfeasibleError("ball radius must be nonnegative");
  GrowingBall gb(group, budget);
  gb.ensure_radius(radius);
  return gb.release();
}

std::vector<int64_t> growth_function(const MarkedGroup& group, int64_t r_max,
                                     const Budget& budget) {
  const Ball b = make_ball(group, r_max, budget);
  std::vector<int64_t> out;
  for (int64_t r = 0; r <= r_max; ++r) out.push_back(static_cast<int64_t>(b.sphere_end(r)));
  return out;
}

int64_t word_length(const MarkedGroup& group, const Element& g, const Budget& budget) {
  if (auto d = group.closed_form_length(g)) return *d;
  GrowingBall gb(group, budget);
  return gb.distance(g);
}

}  // namespace cosetcover
