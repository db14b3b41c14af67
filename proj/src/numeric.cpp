#include "cosetcover/numeric.hpp"

#include <cmath>
#include <cstdio>

namespace cosetcover {

double to_double(const Rational& q) { return q.convert_to<double>(); }

int64_t isqrt_floor(int64_t n) {
  if (n < 0) return 0;
  auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::optional<int64_t> exact_sqrt(int64_t n) {
  if (n < 0) return std::nullopt;
  int64_t r = isqrt_floor(n);
  if (r * r == n) return r;
  return std::nullopt;
}

BigInt pow_bigint(const BigInt& base, unsigned exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1u) result *= b;
    b *= b;
    exp >>= 1u;
  }
  return result;
}

static std::pair<double, double> wilson_interval(uint64_t successes, uint64_t n, double z) {
  if (n == 0) return {0.0, 1.0};
  const double p = static_cast<double>(successes) / static_cast<double>(n);
  const double z2 = z * z;
  const double denom = 1.0 + z2 / static_cast<double>(n);
  const double center = p + z2 / (2.0 * static_cast<double>(n));
  const double spread =
      z * std::sqrt(p * (1.0 - p) / static_cast<double>(n) +
                    z2 / (4.0 * static_cast<double>(n) * static_cast<double>(n)));
  double lo = (center - spread) / denom;
  double hi = (center + spread) / denom;
  if (lo < 0.0) lo = 0.0;
  if (hi > 1.0) hi = 1.0;
  return {lo, hi};
}

double wilson_lower(uint64_t successes, uint64_t n, double z) {
  return wilson_interval(successes, n, z).first;
}

double wilson_upper(uint64_t successes, uint64_t n, double z) {
  return wilson_interval(successes, n, z).second;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string format_rational(const Rational& q) {
  const BigInt num = numerator(q);
  const BigInt den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

OriginFit fit_through_origin(const std::vector<double>& xs, const std::vector<double>& ys) {
  OriginFit fit;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
    sxy += xs[i] * ys[i];
    sxx += xs[i] * xs[i];
    syy += ys[i] * ys[i];
  }
  if (sxx == 0.0) return fit;
  fit.slope = sxy / sxx;
  if (syy == 0.0) return fit;
  double ss_res = 0.0;
  for (size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
    const double r = ys[i] - fit.slope * xs[i];
    ss_res += r * r;
  }
  fit.r_squared = 1.0 - ss_res / syy;
  return fit;
}

}  // namespace cosetcover
