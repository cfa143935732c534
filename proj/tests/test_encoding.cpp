#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netc/encoding.hpp"
#include "netc/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>

using namespace netc;
using big_int = boost::multiprecision::cpp_int;

namespace {

// Independent oracle: exact big-integer binomial and its ceil(log2).
big_int exact_binomial(std::int64_t n, std::int64_t k) {
  big_int r = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

std::int64_t oracle_ceil_log2(const big_int &v) {
  std::size_t msb = boost::multiprecision::msb(v);
  return static_cast<std::int64_t>(msb) + ((v == (big_int(1) << msb)) ? 0 : 1);
}

double oracle_log2_factorial(std::int64_t k) {
  big_int f = 1;
  for (std::int64_t i = 2; i <= k; ++i) f *= i;
  // log2 via msb + fractional part of the top bits
  std::size_t msb = boost::multiprecision::msb(f);
  big_int top = f >> (msb > 60 ? msb - 60 : 0);
  double frac = std::log2(top.convert_to<double>());
  return (msb > 60 ? static_cast<double>(msb - 60) : 0.0) + frac;
}

} // namespace

TEST_CASE("description_length matches the hand-evaluated formula") {
  EncodingLength el = description_length(3, 3);
  CHECK(el.prefix_bits == 4);
  CHECK(el.linkcount_bits == 3);
  CHECK(el.linklist_bits == 5); // ceil(log2 binomial(6,3)) = ceil(log2 20)
  CHECK(el.total_bits == 13);
}

TEST_CASE("empty linklist costs zero bits") {
  EncodingLength el = description_length(2, 0);
  CHECK(el.linklist_bits == 0);
  CHECK(el.total_bits == 1 + 2 + 1 + 0);
}

TEST_CASE("n=1 is a one-bit description") {
  EncodingLength el = description_length(1, 0);
  CHECK(el.total_bits == 1);
  CHECK_THROWS_AS(description_length(1, 1), DomainError);
}

TEST_CASE("linklist bits agree with the exact big-integer oracle") {
  // The celegans-sized case plus a spread of (n, l).
  struct Case { std::int64_t n, l; };
  for (Case c : {Case{297, 2345}, Case{10, 17}, Case{50, 1000}, Case{100, 9900},
                 Case{1000, 5}, Case{8000, 62}}) {
    std::int64_t L = c.n * (c.n - 1);
    EncodingLength el = description_length(c.n, c.l);
    CHECK(el.linklist_bits == oracle_ceil_log2(exact_binomial(L, c.l)));
    CHECK(el.total_bits ==
          1 + el.prefix_bits + el.linkcount_bits + el.linklist_bits);
  }
}

TEST_CASE("total length is non-decreasing in l up to L/2") {
  for (std::int64_t n = 2; n <= 50; ++n) {
    std::int64_t L = n * (n - 1);
    std::int64_t prev = -1;
    for (std::int64_t l = 0; l <= L / 2; ++l) {
      std::int64_t t = description_length(n, l).total_bits;
      CHECK(t >= prev);
      prev = t;
    }
  }
}

TEST_CASE("out-of-range link counts are rejected by name") {
  CHECK_THROWS_AS(description_length(3, 7), DomainError);
  CHECK_THROWS_AS(description_length(3, -1), DomainError);
  CHECK_THROWS_AS(description_length(0, 0), DomainError);
}

TEST_CASE("log2_factorial basics") {
  CHECK(log2_factorial(0) == 0.0);
  CHECK(log2_factorial(1) == 0.0);
  CHECK(log2_factorial(4) == doctest::Approx(std::log2(24.0)).epsilon(1e-12));
}

TEST_CASE("log2_factorial matches the big-integer oracle") {
  for (std::int64_t k : {10, 100, 1000, 5000}) {
    double expected = oracle_log2_factorial(k);
    CHECK(log2_factorial(k) == doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("log2_factorial is monotone non-decreasing") {
  double prev = 0.0;
  for (std::int64_t k = 0; k <= 2000; ++k) {
    double v = log2_factorial(k);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("ceil_log2_binomial exhaustive against oracle for small n") {
  for (std::int64_t n = 1; n <= 40; ++n)
    for (std::int64_t k = 0; k <= n; ++k)
      CHECK(ceil_log2_binomial(n, k) == oracle_ceil_log2(exact_binomial(n, k)));
}

TEST_CASE("power-of-two binomials are not misrounded") {
  // binomial(4,1)=4, binomial(64,1)=64: log2 is an exact integer.
  CHECK(ceil_log2_binomial(4, 1) == 2);
  CHECK(ceil_log2_binomial(64, 1) == 6);
  CHECK(ceil_log2_binomial(1 << 20, 1) == 20);
}
