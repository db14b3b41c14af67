#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cosetcover {

// Canonical element forms, one alternative per group family. Equality of
// canonical forms is element equality; every operation returns a normalized
// value.

// Z^d: coordinate vector.
using VecZ = std::vector<int64_t>;

// Heisenberg group, Mal'cev coordinates: (a, b, c) stands for x^a y^b z^c
// with z = [x, y] central. Multiplication law derived from the unitriangular
// matrix model: (a1,b1,c1)(a2,b2,c2) = (a1+a2, b1+b2, c1+c2 - a2*b1).
struct HeisTriple {
  int64_t a = 0;
  int64_t b = 0;
  int64_t c = 0;
  auto operator<=>(const HeisTriple&) const = default;
};

// Free group F_k: freely reduced word. Letter +i is generator i (1-based),
// -i its inverse.
using FreeWord = std::vector<int8_t>;

// Lamplighter Z_m wr Z: finitely supported lamp map (position -> state in
// 1..m-1, sorted by position, zero states absent) plus cursor.
struct LampConf {
  std::vector<std::pair<int64_t, int32_t>> lamps;
  int64_t cursor = 0;
  auto operator<=>(const LampConf&) const = default;
};

// SL(3, Z): row-major integer matrix with determinant 1.
struct Mat3 {
  std::array<int64_t, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};
  auto operator<=>(const Mat3&) const = default;
};

using Element = std::variant<VecZ, HeisTriple, FreeWord, LampConf, Mat3>;

bool operator==(const Element& a, const Element& b);

// Total order within a family; used for the lexicographic-within-sphere ball
// ordering and for deterministic tie-breaking. Comparing across families is a
// logic error.
bool element_less(const Element& a, const Element& b);

size_t element_hash(const Element& e);

struct ElementHash {
  size_t operator()(const Element& e) const { return element_hash(e); }
};

std::string element_to_string(const Element& e);

// Free words: reduction and concatenation helpers shared by the free-group
// ops and the Stallings machinery.
FreeWord free_reduce(const FreeWord& w);
FreeWord free_mul(const FreeWord& a, const FreeWord& b);
FreeWord free_inv(const FreeWord& w);

// Parses "ab^-1a^2" style words over letters a..d; "e" or "" is the identity.
FreeWord parse_free_word(const std::string& text, int rank);

Mat3 mat3_mul(const Mat3& a, const Mat3& b);  // throws BudgetError on int64 overflow
Mat3 mat3_inv(const Mat3& a);
int64_t mat3_det(const Mat3& a);

}  // namespace cosetcover
