#include "netc/encoding.hpp"
#include "netc/errors.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace netc {

namespace {

constexpr double kLn2 = 0.6931471805599453094172321214581766;

using big_float = boost::multiprecision::cpp_bin_float_50;
using big_int = boost::multiprecision::cpp_int;

// log2 binomial(n, k) with ~50 significant digits; abs error is negligible
// against the 1e-6 near-integer guard even for n ~ 1e10.
big_float log2_binomial_hp(std::int64_t n, std::int64_t k) {
  big_float bn(n), bk(k), bd(n - k);
  big_float v = boost::math::lgamma(bn + 1) - boost::math::lgamma(bk + 1) -
                boost::math::lgamma(bd + 1);
  return v / boost::math::constants::ln_two<big_float>();
}

} // namespace

std::int64_t ceil_log2(std::int64_t n) {
  if (n < 1) throw DomainError("ceil_log2: n must be >= 1, got " + std::to_string(n));
  if (n == 1) return 0;
  return std::bit_width(static_cast<std::uint64_t>(n - 1));
}

double log2_factorial(std::int64_t k) {
  if (k < 0) throw DomainError("log2_factorial: k must be >= 0, got " + std::to_string(k));
  // Cached exact prefix sums of log2(i) for small k.
  static const std::array<double, 1001> table = [] {
    std::array<double, 1001> t{};
    long double acc = 0.0L;
    t[0] = 0.0;
    for (int i = 1; i <= 1000; ++i) {
      acc += std::log2(static_cast<long double>(i));
      t[static_cast<std::size_t>(i)] = static_cast<double>(acc);
    }
    return t;
  }();
  if (k <= 1000) return table[static_cast<std::size_t>(k)];
  return std::lgamma(static_cast<double>(k) + 1.0) / kLn2;
}

double log2_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n)
    throw DomainError("log2_binomial: k out of range, k=" + std::to_string(k) +
                      " n=" + std::to_string(n));
  if (k == 0 || k == n) return 0.0;
  if (n <= 2000) return log2_factorial(n) - log2_factorial(k) - log2_factorial(n - k);
  long double v = std::lgamma(static_cast<long double>(n) + 1.0L) -
                  std::lgamma(static_cast<long double>(k) + 1.0L) -
                  std::lgamma(static_cast<long double>(n - k) + 1.0L);
  return static_cast<double>(v / static_cast<long double>(kLn2));
}

std::int64_t ceil_log2_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n)
    throw DomainError("ceil_log2_binomial: k out of range, k=" + std::to_string(k) +
                      " n=" + std::to_string(n));
  if (k == 0 || k == n) return 0;
  std::int64_t t = std::min(k, n - k);

  double approx = log2_binomial(n, k);
  double nearest = std::round(approx);
  if (std::abs(approx - nearest) > 1e-6) {
    return static_cast<std::int64_t>(std::ceil(approx));
  }

  // Within the misrounding window: settle exactly.
  if (t <= 100000) {
    big_int omega = 1;
    for (std::int64_t i = 0; i < t; ++i) {
      omega *= (n - i);
      omega /= (i + 1);
    }
    // ceil(log2 omega): msb gives floor; exact power of two iff popcount 1.
    std::size_t msb = boost::multiprecision::msb(omega);
    big_int pow2 = big_int(1) << msb;
    return static_cast<std::int64_t>(msb) + (omega == pow2 ? 0 : 1);
  }
  // Huge t: 50-digit floats leave ~1e-35 absolute error, far inside the window.
  big_float v = log2_binomial_hp(n, k);
  big_float fl = boost::multiprecision::floor(v);
  if (v - fl < big_float("1e-30")) return static_cast<std::int64_t>(fl);
  return static_cast<std::int64_t>(fl) + 1;
}

EncodingLength description_length(std::int64_t n, std::int64_t l) {
  if (n < 1) throw DomainError("description_length: n must be >= 1, got " + std::to_string(n));
  std::int64_t pairs = n * (n - 1);
  if (l < 0 || l > pairs)
    throw DomainError("description_length: link count " + std::to_string(l) +
                      " outside [0, " + std::to_string(pairs) + "] for n=" +
                      std::to_string(n));
  EncodingLength el;
  std::int64_t b = ceil_log2(n);
  el.prefix_bits = 2 * b;
  el.linkcount_bits = (n >= 2) ? ceil_log2(pairs) : 0;
  el.linklist_bits = (n >= 2) ? ceil_log2_binomial(pairs, l) : 0;
  el.total_bits = 1 + el.prefix_bits + el.linkcount_bits + el.linklist_bits;
  return el;
}

} // namespace netc
