#include "cosetcover/stallings.hpp"

#include "cosetcover/errors.hpp"

#include <cstdlib>
#include <sstream>
#include <tuple>

namespace cosetcover {

namespace {

struct UnionFind {
  std::vector<int64_t> parent;

  int64_t add() {
    parent.push_back(static_cast<int64_t>(parent.size()));
    return static_cast<int64_t>(parent.size()) - 1;
  }
  int64_t find(int64_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  bool unite(int64_t a, int64_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

int StallingsGraph::slot(int8_t letter) {
  const int i = std::abs(static_cast<int>(letter));
  return 2 * (i - 1) + (letter < 0 ? 1 : 0);
}

StallingsGraph::StallingsGraph(const std::vector<FreeWord>& generators, int rank) : rank_(rank) {
  // Wedge of loops at the base vertex, one per generator word, then fold:
  // while some vertex has two same-slot edges to distinct vertices, merge the
  // targets. Adjacency is rebuilt from the raw edge list each pass, which
  // keeps the merge step trivially correct.
  UnionFind uf;
  const int64_t base = uf.add();
  std::vector<std::tuple<int64_t, int, int64_t>> raw_edges;  // (u, slot, v), one per letter
  for (const FreeWord& g : generators) {
    const FreeWord w = free_reduce(g);
    if (w.empty()) continue;
    int64_t cur = base;
    for (size_t i = 0; i < w.size(); ++i) {
      const int64_t next = (i + 1 == w.size()) ? base : uf.add();
      raw_edges.emplace_back(cur, slot(w[i]), next);
      cur = next;
    }
  }

  const int slots = 2 * rank_;
  while (true) {
    std::vector<std::vector<int64_t>> adj(uf.parent.size(), std::vector<int64_t>(slots, -1));
    bool merged = false;
    for (const auto& [u0, s, v0] : raw_edges) {
      const int64_t u = uf.find(u0);
      const int64_t v = uf.find(v0);
      // forward slot at u, inverse slot at v
      for (const auto& [from, sl, to] : {std::tuple{u, s, v}, std::tuple{v, s ^ 1, u}}) {
        if (adj[from][sl] == -1) {
          adj[from][sl] = to;
        } else if (adj[from][sl] != to) {
          uf.unite(adj[from][sl], to);
          merged = true;
        }
      }
      if (merged) break;
    }
    if (!merged) {
      // Folded; compact live vertices with the base first.
      std::vector<int64_t> remap(uf.parent.size(), -1);
      int64_t count = 0;
      remap[uf.find(base)] = count++;
      for (size_t v = 0; v < uf.parent.size(); ++v) {
        const int64_t r = uf.find(static_cast<int64_t>(v));
        if (remap[r] == -1) remap[r] = count++;
      }
      edges_.assign(count, std::vector<int64_t>(slots, -1));
      for (const auto& [u0, s, v0] : raw_edges) {
        const int64_t u = remap[uf.find(u0)];
        const int64_t v = remap[uf.find(v0)];
        edges_[u][s] = v;
        edges_[v][s ^ 1] = u;
      }
      return;
    }
  }
}

StallingsGraph::Trace StallingsGraph::trace(const FreeWord& reduced_word) const {
  Trace t;
  for (size_t i = 0; i < reduced_word.size(); ++i) {
    const int64_t next = edges_[t.vertex][slot(reduced_word[i])];
    if (next == -1) return t;
    t.vertex = next;
    t.consumed = i + 1;
  }
  return t;
}

bool StallingsGraph::accepts(const FreeWord& reduced_word) const {
  const Trace t = trace(reduced_word);
  return t.consumed == reduced_word.size() && t.vertex == 0;
}

bool StallingsGraph::complete() const {
  for (const auto& slots : edges_) {
    for (int64_t t : slots) {
      if (t == -1) return false;
    }
  }
  return true;
}

std::string StallingsGraph::coset_key(const FreeWord& g) const {
  const Trace t = trace(g);
  std::ostringstream out;
  out << t.vertex << "|";
  for (size_t i = t.consumed; i < g.size(); ++i) out << static_cast<int>(g[i]) << ",";
  return out.str();
}

}  // namespace cosetcover
