#include "cosetcover/element.hpp"

#include "cosetcover/errors.hpp"

#include <sstream>

namespace cosetcover {

bool operator==(const Element& a, const Element& b) {
  return std::visit(
      [&](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const T* rhs = std::get_if<T>(&b);
        return rhs != nullptr && lhs == *rhs;
      },
      a);
}

bool element_less(const Element& a, const Element& b) {
  return std::visit(
      [&](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const T* rhs = std::get_if<T>(&b);
        if (rhs == nullptr) throw InfeasibleError("element comparison across group families");
        return lhs < *rhs;
      },
      a);
}

namespace {

inline void hash_mix(size_t& h, uint64_t v) {
  // splitmix64-style mixing
  v += 0x9e3779b97f4a7c15ull;
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ull;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebull;
  v ^= v >> 31;
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
}

}  // namespace

size_t element_hash(const Element& e) {
  size_t h = e.index();
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, VecZ>) {
          for (int64_t x : v) hash_mix(h, static_cast<uint64_t>(x));
        } else if constexpr (std::is_same_v<T, HeisTriple>) {
          hash_mix(h, static_cast<uint64_t>(v.a));
          hash_mix(h, static_cast<uint64_t>(v.b));
          hash_mix(h, static_cast<uint64_t>(v.c));
        } else if constexpr (std::is_same_v<T, FreeWord>) {
          for (int8_t x : v) hash_mix(h, static_cast<uint64_t>(static_cast<int64_t>(x)));
          hash_mix(h, v.size());
        } else if constexpr (std::is_same_v<T, LampConf>) {
          for (const auto& [pos, state] : v.lamps) {
            hash_mix(h, static_cast<uint64_t>(pos));
            hash_mix(h, static_cast<uint64_t>(state));
          }
          hash_mix(h, static_cast<uint64_t>(v.cursor));
        } else {
          for (int64_t x : v.m) hash_mix(h, static_cast<uint64_t>(x));
        }
      },
      e);
  return h;
}

std::string element_to_string(const Element& e) {
  std::ostringstream out;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, VecZ>) {
          out << "(";
          for (size_t i = 0; i < v.size(); ++i) {
            if (i) out << ",";
            out << v[i];
          }
          out << ")";
        } else if constexpr (std::is_same_v<T, HeisTriple>) {
          out << "(" << v.a << "," << v.b << "," << v.c << ")";
        } else if constexpr (std::is_same_v<T, FreeWord>) {
          if (v.empty()) {
            out << "e";
            return;
          }
          for (int8_t letter : v) {
            char c = static_cast<char>('a' + std::abs(static_cast<int>(letter)) - 1);
            out << c;
            if (letter < 0) out << "^-1";
          }
        } else if constexpr (std::is_same_v<T, LampConf>) {
          out << "{";
          for (size_t i = 0; i < v.lamps.size(); ++i) {
            if (i) out << ",";
            out << v.lamps[i].first << ":" << v.lamps[i].second;
          }
          out << "}t" << v.cursor;
        } else {
          out << "[";
          for (int r = 0; r < 3; ++r) {
            if (r) out << ";";
            for (int c = 0; c < 3; ++c) {
              if (c) out << ",";
              out << v.m[3 * r + c];
            }
          }
          out << "]";
        }
      },
      e);
  return out.str();
}

FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (int8_t letter : w) {
    if (letter == 0) throw InfeasibleError("free word contains the zero letter");
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

FreeWord free_mul(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  for (int8_t letter : b) {
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

FreeWord free_inv(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(static_cast<int8_t>(-*it));
  return out;
}

FreeWord parse_free_word(const std::string& text, int rank) {
  FreeWord raw;
  size_t i = 0;
  if (text == "e" || text == "1" || text.empty()) return {};
  while (i < text.size()) {
    char c = text[i];
    if (c < 'a' || c >= static_cast<char>('a' + rank)) {
      throw UsageError("bad letter '" + std::string(1, c) + "' in free word \"" + text + "\"");
    }
    int8_t letter = static_cast<int8_t>(c - 'a' + 1);
    ++i;
    int64_t exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i]))) {
        throw UsageError("bad exponent in free word \"" + text + "\"");
      }
      int64_t mag = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
        mag = mag * 10 + (text[i] - '0');
        ++i;
      }
      exp = neg ? -mag : mag;
    }
    const int8_t signed_letter = exp >= 0 ? letter : static_cast<int8_t>(-letter);
    for (int64_t rep = 0; rep < std::abs(exp); ++rep) raw.push_back(signed_letter);
  }
  return free_reduce(raw);
}

namespace {

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw BudgetError("SL3Z matrix entry exceeds 64-bit range");
  }
  return out;
}

int64_t checked_add(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw BudgetError("SL3Z matrix entry exceeds 64-bit range");
  }
  return out;
}

}  // namespace

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
  Mat3 out;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      int64_t acc = 0;
      for (int k = 0; k < 3; ++k) {
        acc = checked_add(acc, checked_mul(a.m[3 * r + k], b.m[3 * k + c]));
      }
      out.m[3 * r + c] = acc;
    }
  }
  return out;
}

int64_t mat3_det(const Mat3& a) {
  const auto& m = a.m;
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

Mat3 mat3_inv(const Mat3& a) {
  // det == 1, so the inverse is the adjugate.
  const auto& m = a.m;
  Mat3 out;
  out.m[0] = m[4] * m[8] - m[5] * m[7];
  out.m[1] = m[2] * m[7] - m[1] * m[8];
  out.m[2] = m[1] * m[5] - m[2] * m[4];
  out.m[3] = m[5] * m[6] - m[3] * m[8];
  out.m[4] = m[0] * m[8] - m[2] * m[6];
  out.m[5] = m[2] * m[3] - m[0] * m[5];
  out.m[6] = m[3] * m[7] - m[4] * m[6];
  out.m[7] = m[1] * m[6] - m[0] * m[7];
  out.m[8] = m[0] * m[4] - m[1] * m[3];
  return out;
}

}  // namespace cosetcover
