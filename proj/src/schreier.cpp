#include "cosetcover/schreier.hpp"

#include "cosetcover/errors.hpp"

#include <limits>
#include <unordered_map>

namespace cosetcover {

namespace {

// Coset-identity index: canonical keys when the oracle provides them,
// otherwise pairwise same_coset scans within coarse buckets.
class CosetLocator {
 public:
  explicit CosetLocator(const SubgroupOracle& h)
      : oracle_(h), keyed_(h.coset_key(h.group().identity()).has_value()) {}

  int64_t find(const Element& g, const std::vector<Element>& reps) const {
    if (keyed_) {
      const auto it = by_key_.find(*oracle_.coset_key(g));
      return it == by_key_.end() ? -1 : it->second;
    }
    const auto it = buckets_.find(oracle_.bucket_key(g));
    if (it == buckets_.end()) return -1;
    for (int64_t v : it->second) {
      if (same_coset(oracle_, g, reps[v])) return v;
    }
    return -1;
  }

  void insert(const Element& g, int64_t id) {
    if (keyed_) {
      by_key_.emplace(*oracle_.coset_key(g), id);
    } else {
      buckets_[oracle_.bucket_key(g)].push_back(id);
    }
  }

 private:
  const SubgroupOracle& oracle_;
  bool keyed_;
  std::unordered_map<std::string, int64_t> by_key_;
  std::unordered_map<std::string, std::vector<int64_t>> buckets_;
};

struct BfsOutcome {
  SchreierBall ball;
  bool hit_vertex_cap = false;
};

BfsOutcome schreier_bfs(const MarkedGroup& group, const OraclePtr& subgroup, int64_t max_radius,
                        int64_t max_vertices) {
  BfsOutcome out;
  SchreierBall& ball = out.ball;
  ball.subgroup = subgroup;
  ball.representatives.push_back(group.identity());
  ball.depth.push_back(0);
  ball.parent.push_back(-1);
  ball.parent_generator.push_back(-1);
  ball.sphere_offsets = {0, 1};

  CosetLocator locator(*subgroup);
  locator.insert(group.identity(), 0);

  std::vector<int64_t> frontier{0};
  int64_t d = 0;
  while (d < max_radius && !frontier.empty() && !out.hit_vertex_cap) {
    ++d;
    std::vector<int64_t> next;
    for (int64_t v : frontier) {
      for (size_t gi = 0; gi < group.generators().size(); ++gi) {
        Element target = group.mul(ball.representatives[v], group.generators()[gi]);
        if (locator.find(target, ball.representatives) != -1) continue;
        if (static_cast<int64_t>(ball.size()) >= max_vertices) {
          out.hit_vertex_cap = true;
          break;
        }
        const int64_t id = static_cast<int64_t>(ball.size());
        locator.insert(target, id);
        ball.representatives.push_back(std::move(target));
        ball.depth.push_back(d);
        ball.parent.push_back(v);
        ball.parent_generator.push_back(static_cast<int>(gi));
        next.push_back(id);
      }
      if (out.hit_vertex_cap) break;
    }
    if (!out.hit_vertex_cap) {
      ball.sphere_offsets.push_back(ball.size());
      ball.radius = d;
      if (next.empty()) {
        ball.closed = true;
        break;
      }
    }
    frontier = std::move(next);
  }

  // Full adjacency inside the discovered ball.
  if (!out.hit_vertex_cap) {
    ball.adjacency.assign(ball.size(), std::vector<int64_t>(group.generators().size(), -1));
    for (size_t v = 0; v < ball.size(); ++v) {
      for (size_t gi = 0; gi < group.generators().size(); ++gi) {
        Element target = group.mul(ball.representatives[v], group.generators()[gi]);
        ball.adjacency[v][gi] = locator.find(target, ball.representatives);
      }
    }
  }
  return out;
}

}  // namespace

SchreierBall schreier_ball(const MarkedGroup& group, const OraclePtr& subgroup, int64_t radius,
                           const Budget& budget) {
  if (radius < 0) throw InfeasibleError("Schreier ball radius must be nonnegative");
  if (&subgroup->group() != &group && subgroup->group().name() != group.name()) {
    throw InfeasibleError("subgroup oracle belongs to a different group");
  }
  BfsOutcome out = schreier_bfs(group, subgroup, radius, budget.schreier_max_vertices);
  if (out.hit_vertex_cap) {
    throw BudgetError("Schreier BFS budget of " + std::to_string(budget.schreier_max_vertices) +
                      " vertices exceeded for " + subgroup->name());
  }
  // A closed graph is fine (finite coset space); pad sphere offsets so
  // sphere_end(r) works for every r <= radius.
  while (static_cast<int64_t>(out.ball.sphere_offsets.size()) < radius + 2) {
    out.ball.sphere_offsets.push_back(out.ball.size());
  }
  out.ball.radius = radius;
  return std::move(out.ball);
}

DFunctionResult d_function_upper(const MarkedGroup& group, const std::vector<OraclePtr>& roster,
                                 int64_t radius, const Budget& budget) {
  if (roster.empty()) throw InfeasibleError("d-function requires a nonempty roster");
  DFunctionResult result;
  result.trivial_lower = radius + 1;
  for (size_t i = 0; i < roster.size(); ++i) {
    const IndexEvidence ev = infinite_index_evidence(group, roster[i], budget);
    if (!ev.infinite_ok()) {
      throw InfeasibleError("roster subgroup " + roster[i]->name() +
                            " has finite index: " + ev.tag());
    }
    const SchreierBall b = schreier_ball(group, roster[i], radius, budget);
    result.sizes.push_back(static_cast<int64_t>(b.size()));
  }
  result.argmin = 0;
  for (size_t i = 1; i < roster.size(); ++i) {
    if (result.sizes[i] < result.sizes[result.argmin]) result.argmin = i;
  }
  result.value = result.sizes[result.argmin];
  return result;
}

IndexEvidence infinite_index_evidence(const MarkedGroup& group, const OraclePtr& subgroup,
                                      const Budget& budget) {
  if (auto decided = subgroup->decide_index()) return *decided;
  BfsOutcome out = schreier_bfs(group, subgroup, std::numeric_limits<int64_t>::max() / 2,
                                budget.evidence_vertices);
  if (out.ball.closed && !out.hit_vertex_cap) {
    return IndexEvidence{IndexEvidence::Kind::FiniteIndex,
                         static_cast<int64_t>(out.ball.size()),
                         "Schreier BFS closed with " + std::to_string(out.ball.size()) +
                             " cosets"};
  }
  const int64_t depth = out.ball.radius;
  return IndexEvidence{IndexEvidence::Kind::Depth, depth,
                       "Schreier BFS found " + std::to_string(out.ball.size()) +
                           " cosets to depth " + std::to_string(depth) + " without closing"};
}

int64_t locate_coset(const SchreierBall& ball, const Element& g) {
  const SubgroupOracle& h = *ball.subgroup;
  if (auto key = h.coset_key(g)) {
    for (size_t v = 0; v < ball.size(); ++v) {
      if (*h.coset_key(ball.representatives[v]) == *key) return static_cast<int64_t>(v);
    }
    return -1;
  }
  for (size_t v = 0; v < ball.size(); ++v) {
    if (same_coset(h, g, ball.representatives[v])) return static_cast<int64_t>(v);
  }
  return -1;
}

}  // namespace cosetcover
