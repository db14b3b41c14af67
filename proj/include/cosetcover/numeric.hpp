#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cosetcover {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& q);

// floor(sqrt(n)) for n >= 0.
int64_t isqrt_floor(int64_t n);

// sqrt(n) as an exact integer when n is a perfect square.
std::optional<int64_t> exact_sqrt(int64_t n);

BigInt pow_bigint(const BigInt& base, unsigned exp);

// Wilson score interval lower bound for a binomial proportion, at z standard
// deviations. Returns 0 for n == 0.
double wilson_lower(uint64_t successes, uint64_t n, double z);
double wilson_upper(uint64_t successes, uint64_t n, double z);

// Fixed CSV float format: 12 significant digits.
std::string format_double(double x);
std::string format_rational(const Rational& q);

// Least-squares slope of y ~ a*x through the origin, plus R^2 defined as
// 1 - SS_res / sum(y^2). Empty or all-zero input yields {0, 1}.
struct OriginFit {
  double slope = 0.0;
  double r_squared = 1.0;
};
OriginFit fit_through_origin(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace cosetcover
