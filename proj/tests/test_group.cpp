#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cosetcover/ball.hpp"
#include "cosetcover/errors.hpp"
#include "cosetcover/group.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

using namespace cosetcover;

namespace {

// |B_r(Z^d)| = sum_k 2^k C(d,k) C(r,k)
int64_t zd_ball_closed_form(int d, int r) {
  auto binom = [](int64_t n, int64_t k) {
    if (k < 0 || k > n) return static_cast<int64_t>(0);
    int64_t out = 1;
    for (int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
  };
  int64_t total = 0;
  for (int k = 0; k <= std::min(d, r); ++k) {
    total += (int64_t{1} << k) * binom(d, k) * binom(r, k);
  }
  return total;
}

int64_t free_ball_closed_form(int k, int r) {
  int64_t total = 1;
  int64_t sphere = 2 * k;
  for (int i = 1; i <= r; ++i) {
    total += sphere;
    sphere *= 2 * k - 1;
  }
  return total;
}

// Brute-force Z^2 ball oracle: lattice points with |x|+|y| <= r.
int64_t z2_ball_brute(int64_t r) {
  int64_t count = 0;
  for (int64_t x = -r; x <= r; ++x) {
    for (int64_t y = -r; y <= r; ++y) {
      if (std::abs(x) + std::abs(y) <= r) ++count;
    }
  }
  return count;
}

// Independent Heisenberg oracle: enumerate all products of <= r unitriangular
// generator matrices and count distinct results.
int64_t heisenberg_ball_brute(int r) {
  using M = std::array<int64_t, 9>;
  const M id{1, 0, 0, 0, 1, 0, 0, 0, 1};
  auto mul = [](const M& a, const M& b) {
    M out{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) out[3 * i + j] += a[3 * i + l] * b[3 * l + j];
    return out;
  };
  std::vector<M> gens;
  for (int sign : {1, -1}) {
    M x = id, y = id;
    x[1] = sign;  // x^sign: entry (0,1)
    y[5] = sign;  // y^sign: entry (1,2)
    gens.push_back(x);
    gens.push_back(y);
  }
  std::set<M> seen{id};
  std::vector<M> layer{id};
  for (int step = 0; step < r; ++step) {
    std::vector<M> next;
    for (const M& m : layer) {
      for (const M& g : gens) {
        M p = mul(m, g);
        if (seen.insert(p).second) next.push_back(p);
      }
    }
    layer = std::move(next);
  }
  return static_cast<int64_t>(seen.size());
}

}  // namespace

TEST_CASE("registry parses the documented names") {
  CHECK(parse_group("Z").param() == 1);
  CHECK(parse_group("Z^2").name() == "Z^2");
  CHECK(parse_group("heisenberg").family() == Family::Heisenberg);
  CHECK(parse_group("free:2").generators().size() == 4);
  CHECK(parse_group("lamplighter:2").generators().size() == 3);
  CHECK(parse_group("lamplighter:3").generators().size() == 4);
  CHECK(parse_group("sl3z").generators().size() == 12);
  CHECK_THROWS_AS(parse_group("dihedral"), UsageError);
  CHECK_THROWS_AS(parse_group("Z^9"), InfeasibleError);
  CHECK_THROWS_AS(parse_group("free:1"), InfeasibleError);
}

TEST_CASE("custom generating sets are validated") {
  GroupSpec asym;
  asym.family = Family::FreeAbelian;
  asym.param = 2;
  asym.custom_generators = {VecZ{1, 0}, VecZ{0, 1}, VecZ{0, -1}};
  CHECK_THROWS_AS(MarkedGroup::make(asym), InfeasibleError);

  GroupSpec degenerate;
  degenerate.family = Family::FreeAbelian;
  degenerate.param = 2;
  degenerate.custom_generators = {VecZ{1, 0}, VecZ{-1, 0}};
  CHECK_THROWS_AS(MarkedGroup::make(degenerate), InfeasibleError);

  GroupSpec rich;  // {+-1, +-2} on Z
  rich.family = Family::FreeAbelian;
  rich.param = 1;
  rich.custom_generators = {VecZ{1}, VecZ{-1}, VecZ{2}, VecZ{-2}};
  const MarkedGroup g = MarkedGroup::make(rich);
  CHECK(g.generators().size() == 4);
  CHECK(make_ball(g, 1).size() == 5);
  CHECK(make_ball(g, 2).size() == 9);
}

TEST_CASE("ball sizes match closed forms and brute-force oracles") {
  const MarkedGroup z = parse_group("Z");
  CHECK(make_ball(z, 3).size() == 7);
  CHECK(growth_function(z, 4) == std::vector<int64_t>{1, 3, 5, 7, 9});

  const MarkedGroup z2 = parse_group("Z^2");
  CHECK(make_ball(z2, 2).size() == 13);
  CHECK(z2_ball_brute(2) == 13);
  CHECK(growth_function(z2, 3) == std::vector<int64_t>{1, 5, 13, 25});

  const MarkedGroup f2 = parse_group("free:2");
  CHECK(make_ball(f2, 2).size() == 17);

  for (int r = 0; r <= 6; ++r) {
    CHECK(static_cast<int64_t>(make_ball(z2, r).size()) == zd_ball_closed_form(2, r));
    CHECK(static_cast<int64_t>(make_ball(f2, r).size()) == free_ball_closed_form(2, r));
  }
  const MarkedGroup z3 = parse_group("Z^3");
  for (int r = 0; r <= 5; ++r) {
    CHECK(static_cast<int64_t>(make_ball(z3, r).size()) == zd_ball_closed_form(3, r));
  }
}

TEST_CASE("heisenberg growth cross-checked by matrix enumeration") {
  const MarkedGroup h = parse_group("heisenberg");
  const auto growth = growth_function(h, 3);
  CHECK(growth[0] == 1);
  CHECK(growth[1] == 5);
  for (int r = 2; r <= 3; ++r) {
    CHECK(growth[r] == heisenberg_ball_brute(r));
  }
}

TEST_CASE("ball structure: identity first, distinct elements, sorted spheres") {
  for (const char* name : {"Z^2", "heisenberg", "free:2", "lamplighter:2", "sl3z"}) {
    const MarkedGroup g = parse_group(name);
    const Ball b = make_ball(g, name == std::string("sl3z") ? 2 : 4);
    CAPTURE(name);
    CHECK(b.elements[0] == g.identity());
    std::set<std::string> forms;
    for (const Element& e : b.elements) forms.insert(element_to_string(e));
    CHECK(forms.size() == b.size());
    for (int64_t k = 0; k <= b.radius; ++k) {
      for (size_t i = b.sphere_begin(k) + 1; i < b.sphere_end(k); ++i) {
        CHECK(element_less(b.elements[i - 1], b.elements[i]));
      }
    }
  }
}

TEST_CASE("spheres contain exactly the elements of that word length") {
  for (const char* name : {"Z^2", "heisenberg", "free:2", "lamplighter:2"}) {
    const MarkedGroup g = parse_group(name);
    const Ball b = make_ball(g, 4);
    for (size_t i = 0; i < b.size(); ++i) {
      CHECK(word_length(g, b.elements[i]) == b.length_of_index(i));
    }
  }
}

TEST_CASE("symmetry: balls are closed under inversion") {
  for (const char* name : {"Z^2", "heisenberg", "free:2", "lamplighter:3", "sl3z"}) {
    const MarkedGroup g = parse_group(name);
    const int64_t r = name == std::string("sl3z") ? 2 : 5;
    const Ball b = make_ball(g, r);
    CAPTURE(name);
    for (const Element& e : b.elements) {
      CHECK(b.contains(g.inv(e)));
    }
  }
}

TEST_CASE("canonicity round-trip: products are association-independent") {
  std::mt19937 rng(20240811);
  for (const char* name : {"Z^2", "heisenberg", "free:2", "lamplighter:2", "sl3z"}) {
    const MarkedGroup g = parse_group(name);
    const Ball b = make_ball(g, name == std::string("sl3z") ? 2 : 5);
    std::uniform_int_distribution<size_t> pick(0, b.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const Element x = b.elements[pick(rng)];
      const Element y = b.elements[pick(rng)];
      const Element z = b.elements[pick(rng)];
      CHECK(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
      CHECK(g.inv(g.mul(x, y)) == g.mul(g.inv(y), g.inv(x)));
      CHECK(g.mul(x, g.inv(x)) == g.identity());
    }
  }
}

TEST_CASE("word lengths") {
  const MarkedGroup z = parse_group("Z");
  CHECK(word_length(z, VecZ{5}) == 5);
  const MarkedGroup f2 = parse_group("free:2");
  CHECK(word_length(f2, parse_free_word("ab", 2)) == 2);
  CHECK(word_length(f2, parse_free_word("aba^-1", 2)) == 3);
  const MarkedGroup z2 = parse_group("Z^2");
  CHECK(word_length(z2, VecZ{2, -1}) == 3);
}

TEST_CASE("ball budget errors identify the exploding sphere") {
  Budget tiny;
  tiny.ball_max_elements = 40;
  const MarkedGroup f2 = parse_group("free:2");
  CHECK_THROWS_AS(make_ball(f2, 4, tiny), BudgetError);
  try {
    make_ball(f2, 4, tiny);
  } catch (const BudgetError& e) {
    CHECK(std::string(e.what()).find("sphere") != std::string::npos);
  }
}

TEST_CASE("free word parser") {
  CHECK(parse_free_word("aba^-1", 2) == FreeWord({1, 2, -1}));
  CHECK(parse_free_word("a^2b^-2", 2) == FreeWord({1, 1, -2, -2}));
  CHECK(parse_free_word("aa^-1", 2).empty());
  CHECK(parse_free_word("e", 2).empty());
  CHECK_THROWS_AS(parse_free_word("xyz", 2), UsageError);
}
