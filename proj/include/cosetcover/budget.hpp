#pragma once

#include <cstdint>

namespace cosetcover {

// Desk-scale resource caps. Everything fails loudly (BudgetError) instead of
// thrashing; the CLI exposes each knob.
struct Budget {
  int64_t ball_max_elements = 5'000'000;
  int64_t schreier_max_vertices = 100'000;
  // BFS failing to close after this many cosets yields "depth-d" evidence.
  int64_t evidence_vertices = 10'000;
  int64_t cover_max_universe = 1'000;
  int64_t cover_max_candidates = 10'000;
  int64_t cover_node_budget = 1'000'000;
  int64_t lp_max_universe = 512;
  int64_t lp_max_candidates = 1'024;
  // Rational walk DP is the default up to this n; beyond it doubles are used
  // unless the caller forces a mode.
  int64_t exact_dp_max_n = 64;
  int64_t exact_dp_max_states = 100'000;
};

}  // namespace cosetcover
