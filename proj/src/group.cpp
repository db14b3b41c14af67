#include "cosetcover/group.hpp"

#include "cosetcover/errors.hpp"
#include "cosetcover/lattice.hpp"
#include "cosetcover/stallings.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <unordered_set>

namespace cosetcover {

std::string family_name(Family f) {
  switch (f) {
    case Family::FreeAbelian: return "Z^d";
    case Family::Heisenberg: return "heisenberg";
    case Family::Free: return "free";
    case Family::Lamplighter: return "lamplighter";
    case Family::SL3Z: return "sl3z";
  }
  return "?";
}

namespace {

void check_form(const GroupSpec& spec, const Element& g) {
  bool ok = false;
  switch (spec.family) {
    case Family::FreeAbelian:
      ok = std::holds_alternative<VecZ>(g) &&
           static_cast<int>(std::get<VecZ>(g).size()) == spec.param;
      break;
    case Family::Heisenberg: ok = std::holds_alternative<HeisTriple>(g); break;
    case Family::Free: {
      ok = std::holds_alternative<FreeWord>(g);
      if (ok) {
        for (int8_t letter : std::get<FreeWord>(g)) {
          if (letter == 0 || std::abs(static_cast<int>(letter)) > spec.param) ok = false;
        }
      }
      break;
    }
    case Family::Lamplighter: {
      ok = std::holds_alternative<LampConf>(g);
      if (ok) {
        for (const auto& [pos, state] : std::get<LampConf>(g).lamps) {
          (void)pos;
          if (state <= 0 || state >= spec.param) ok = false;
        }
      }
      break;
    }
    case Family::SL3Z:
      ok = std::holds_alternative<Mat3>(g) && mat3_det(std::get<Mat3>(g)) == 1;
      break;
  }
  if (!ok) throw InfeasibleError("element does not belong to the group family");
}

LampConf lamp_normalize(std::vector<std::pair<int64_t, int32_t>> lamps, int64_t cursor, int m) {
  std::sort(lamps.begin(), lamps.end());
  LampConf out;
  out.cursor = cursor;
  for (auto& [pos, state] : lamps) {
    int32_t s = static_cast<int32_t>(((state % m) + m) % m);
    if (s != 0) out.lamps.emplace_back(pos, s);
  }
  return out;
}

Element identity_of(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::FreeAbelian: return VecZ(spec.param, 0);
    case Family::Heisenberg: return HeisTriple{};
    case Family::Free: return FreeWord{};
    case Family::Lamplighter: return LampConf{};
    case Family::SL3Z: return Mat3{};
  }
  throw InfeasibleError("unknown family");
}

std::vector<Element> standard_generators(const GroupSpec& spec) {
  std::vector<Element> gens;
  switch (spec.family) {
    case Family::FreeAbelian: {
      for (int i = 0; i < spec.param; ++i) {
        VecZ plus(spec.param, 0), minus(spec.param, 0);
        plus[i] = 1;
        minus[i] = -1;
        gens.push_back(plus);
        gens.push_back(minus);
      }
      break;
    }
    case Family::Heisenberg: {
      gens.push_back(HeisTriple{1, 0, 0});
      gens.push_back(HeisTriple{-1, 0, 0});
      gens.push_back(HeisTriple{0, 1, 0});
      gens.push_back(HeisTriple{0, -1, 0});
      break;
    }
    case Family::Free: {
      for (int i = 1; i <= spec.param; ++i) {
        gens.push_back(FreeWord{static_cast<int8_t>(i)});
        gens.push_back(FreeWord{static_cast<int8_t>(-i)});
      }
      break;
    }
    case Family::Lamplighter: {
      gens.push_back(LampConf{{}, 1});
      gens.push_back(LampConf{{}, -1});
      gens.push_back(LampConf{{{0, 1}}, 0});
      if (spec.param > 2) gens.push_back(LampConf{{{0, spec.param - 1}}, 0});
      break;
    }
    case Family::SL3Z: {
      // The twelve elementary matrices I +- E_ij, i != j.
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          for (int sign : {1, -1}) {
            Mat3 g;
            g.m[3 * i + j] = sign;
            gens.push_back(g);
          }
        }
      }
      break;
    }
  }
  return gens;
}

}  // namespace

Element MarkedGroup::mul(const Element& a, const Element& b) const {
  switch (spec_.family) {
    case Family::FreeAbelian: {
      const auto& x = std::get<VecZ>(a);
      const auto& y = std::get<VecZ>(b);
      VecZ out(x.size());
      for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
      return out;
    }
    case Family::Heisenberg: {
      const auto& x = std::get<HeisTriple>(a);
      const auto& y = std::get<HeisTriple>(b);
      return HeisTriple{x.a + y.a, x.b + y.b, x.c + y.c - y.a * x.b};
    }
    case Family::Free: return free_mul(std::get<FreeWord>(a), std::get<FreeWord>(b));
    case Family::Lamplighter: {
      const auto& x = std::get<LampConf>(a);
      const auto& y = std::get<LampConf>(b);
      std::vector<std::pair<int64_t, int32_t>> lamps(x.lamps.begin(), x.lamps.end());
      for (const auto& [pos, state] : y.lamps) lamps.emplace_back(pos + x.cursor, state);
      // merge duplicate positions before normalizing
      std::sort(lamps.begin(), lamps.end(),
                [](const auto& p, const auto& q) { return p.first < q.first; });
      std::vector<std::pair<int64_t, int32_t>> merged;
      for (const auto& [pos, state] : lamps) {
        if (!merged.empty() && merged.back().first == pos) {
          merged.back().second += state;
        } else {
          merged.emplace_back(pos, state);
        }
      }
      return lamp_normalize(std::move(merged), x.cursor + y.cursor, spec_.param);
    }
    case Family::SL3Z: return mat3_mul(std::get<Mat3>(a), std::get<Mat3>(b));
  }
  throw InfeasibleError("unknown family");
}

Element MarkedGroup::inv(const Element& a) const {
  switch (spec_.family) {
    case Family::FreeAbelian: {
      VecZ out = std::get<VecZ>(a);
      for (auto& x : out) x = -x;
      return out;
    }
    case Family::Heisenberg: {
      const auto& x = std::get<HeisTriple>(a);
      return HeisTriple{-x.a, -x.b, -x.c - x.a * x.b};
    }
    case Family::Free: return free_inv(std::get<FreeWord>(a));
    case Family::Lamplighter: {
      const auto& x = std::get<LampConf>(a);
      std::vector<std::pair<int64_t, int32_t>> lamps;
      for (const auto& [pos, state] : x.lamps) lamps.emplace_back(pos - x.cursor, -state);
      return lamp_normalize(std::move(lamps), -x.cursor, spec_.param);
    }
    case Family::SL3Z: return mat3_inv(std::get<Mat3>(a));
  }
  throw InfeasibleError("unknown family");
}

std::optional<int64_t> MarkedGroup::closed_form_length(const Element& g) const {
  if (!standard_marking()) return std::nullopt;
  switch (spec_.family) {
    case Family::FreeAbelian: {
      int64_t sum = 0;
      for (int64_t x : std::get<VecZ>(g)) sum += std::abs(x);
      return sum;
    }
    case Family::Free: return static_cast<int64_t>(std::get<FreeWord>(g).size());
    default: return std::nullopt;
  }
}

int MarkedGroup::abelianization_rank() const {
  switch (spec_.family) {
    case Family::FreeAbelian: return spec_.param;
    case Family::Free: return spec_.param;
    case Family::Heisenberg: return 2;
    case Family::Lamplighter: return 1;
    case Family::SL3Z: return 0;
  }
  return 0;
}

VecZ MarkedGroup::abelianize(const Element& g) const {
  switch (spec_.family) {
    case Family::FreeAbelian: return std::get<VecZ>(g);
    case Family::Free: {
      VecZ out(spec_.param, 0);
      for (int8_t letter : std::get<FreeWord>(g)) {
        out[std::abs(static_cast<int>(letter)) - 1] += letter > 0 ? 1 : -1;
      }
      return out;
    }
    case Family::Heisenberg: {
      const auto& h = std::get<HeisTriple>(g);
      return VecZ{h.a, h.b};
    }
    case Family::Lamplighter: return VecZ{std::get<LampConf>(g).cursor};
    case Family::SL3Z: return VecZ{};
  }
  throw InfeasibleError("unknown family");
}

namespace {

// For non-abelian, non-free families a custom set is accepted when BFS over
// its products reaches every standard generator within a fixed budget.
void check_generates_by_bfs(const MarkedGroup& g, const std::vector<Element>& gens) {
  std::unordered_set<Element, ElementHash> seen;
  std::deque<Element> frontier;
  seen.insert(g.identity());
  frontier.push_back(g.identity());
  const std::vector<Element> targets = standard_generators(g.spec());
  auto all_found = [&] {
    return std::all_of(targets.begin(), targets.end(),
                       [&](const Element& t) { return seen.count(t) > 0; });
  };
  const size_t budget = 200'000;
  while (!frontier.empty() && !all_found() && seen.size() < budget) {
    Element cur = frontier.front();
    frontier.pop_front();
    for (const Element& s : gens) {
      Element next = g.mul(cur, s);
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  if (!all_found()) {
    throw InfeasibleError("custom generating set: generation of " + g.name() +
                          " not verified within budget");
  }
}

}  // namespace

MarkedGroup MarkedGroup::make(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::FreeAbelian:
      if (spec.param < 1 || spec.param > 6) throw InfeasibleError("Z^d requires 1 <= d <= 6");
      break;
    case Family::Free:
      if (spec.param < 2 || spec.param > 4) throw InfeasibleError("free:k requires 2 <= k <= 4");
      break;
    case Family::Lamplighter:
      if (spec.param < 2 || spec.param > 4)
        throw InfeasibleError("lamplighter:m requires 2 <= m <= 4");
      break;
    default: break;
  }

  MarkedGroup g;
  g.spec_ = spec;
  g.identity_ = identity_of(spec);
  switch (spec.family) {
    case Family::FreeAbelian: g.name_ = "Z^" + std::to_string(spec.param); break;
    case Family::Heisenberg: g.name_ = "heisenberg"; break;
    case Family::Free: g.name_ = "free:" + std::to_string(spec.param); break;
    case Family::Lamplighter: g.name_ = "lamplighter:" + std::to_string(spec.param); break;
    case Family::SL3Z: g.name_ = "sl3z"; break;
  }

  if (spec.custom_generators.empty()) {
    g.generators_ = standard_generators(spec);
    return g;
  }

  // Custom set: canonical forms, no identity, deduplicated, symmetric,
  // generating.
  std::vector<Element> gens;
  for (const Element& raw : spec.custom_generators) {
    check_form(spec, raw);
    if (raw == g.identity_) continue;
    if (std::find(gens.begin(), gens.end(), raw) == gens.end()) gens.push_back(raw);
  }
  if (gens.empty()) throw InfeasibleError("custom generating set is empty");
  for (const Element& s : gens) {
    const Element si = g.inv(s);
    if (std::find(gens.begin(), gens.end(), si) == gens.end()) {
      throw InfeasibleError("custom generating set is not symmetric: missing inverse of " +
                            element_to_string(s));
    }
  }
  g.generators_ = gens;

  switch (spec.family) {
    case Family::FreeAbelian: {
      std::vector<VecZ> vecs;
      for (const Element& s : gens) vecs.push_back(std::get<VecZ>(s));
      LatticeForm lat(vecs, spec.param);
      const auto index = lat.index();
      if (!index || *index != 1) {
        throw InfeasibleError("custom generating set does not generate (rank check fails)");
      }
      break;
    }
    case Family::Free: {
      std::vector<FreeWord> words;
      for (const Element& s : gens) words.push_back(std::get<FreeWord>(s));
      StallingsGraph graph(words, spec.param);
      if (!(graph.complete() && graph.vertex_count() == 1)) {
        throw InfeasibleError("custom generating set does not generate the free group");
      }
      break;
    }
    default: check_generates_by_bfs(g, gens); break;
  }
  return g;
}

GroupSpec parse_group_spec(const std::string& name) {
  GroupSpec spec;
  auto parse_int = [&](const std::string& s, const char* what) {
    try {
      size_t pos = 0;
      int v = std::stoi(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(what);
      return v;
    } catch (const std::exception&) {
      throw UsageError(std::string("bad integer in group name field: ") + what);
    }
  };
  if (name == "Z" || name == "z") {
    spec.family = Family::FreeAbelian;
    spec.param = 1;
  } else if (name.rfind("Z^", 0) == 0 || name.rfind("z^", 0) == 0) {
    spec.family = Family::FreeAbelian;
    spec.param = parse_int(name.substr(2), "d");
  } else if (name.size() == 2 && (name[0] == 'Z' || name[0] == 'z') && isdigit(name[1])) {
    spec.family = Family::FreeAbelian;
    spec.param = name[1] - '0';
  } else if (name == "heisenberg" || name == "heis") {
    spec.family = Family::Heisenberg;
    spec.param = 0;
  } else if (name.rfind("free:", 0) == 0) {
    spec.family = Family::Free;
    spec.param = parse_int(name.substr(5), "k");
  } else if (name.rfind("lamplighter:", 0) == 0) {
    spec.family = Family::Lamplighter;
    spec.param = parse_int(name.substr(12), "m");
  } else if (name == "sl3z" || name == "SL3Z") {
    spec.family = Family::SL3Z;
    spec.param = 0;
  } else {
    throw UsageError("unknown group \"" + name +
                     "\" (expected Z^d, heisenberg, free:k, lamplighter:m or sl3z)");
  }
  return spec;
}

MarkedGroup parse_group(const std::string& name) { return MarkedGroup::make(parse_group_spec(name)); }

}  // namespace cosetcover
