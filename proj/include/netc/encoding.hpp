#ifndef NETC_ENCODING_HPP
#define NETC_ENCODING_HPP

#include <cstdint>

namespace netc {

// Bit budget of the prefix-free binary encoding of an n-node, l-link
// directed graph: a unary run of ceil(log2 n) 1s, a 0 stop bit, n itself,
// the link count, and the rank of the link list among binomial(n(n-1), l)
// possibilities.
struct EncodingLength {
  std::int64_t total_bits = 0;
  std::int64_t prefix_bits = 0;    // unary length marker 1s + bits of n
  std::int64_t linkcount_bits = 0; // ceil(log2 n + log2(n-1))
  std::int64_t linklist_bits = 0;  // ceil(log2 binomial(n(n-1), l))
  // total_bits = 1 (stop bit) + prefix_bits + linkcount_bits + linklist_bits
};

// Exact integer bit counts; throws DomainError if l is outside [0, n(n-1)]
// or n < 1.  Safe for n up to 1e5.
EncodingLength description_length(std::int64_t n, std::int64_t l);

// log2(k!).  Exact summation for k <= 1000, lgamma beyond.
double log2_factorial(std::int64_t k);

// log2 of binomial(n, k) as a real number.
double log2_binomial(std::int64_t n, std::int64_t k);

// ceil(log2 binomial(n, k)), exact.  Floating-point results within 1e-6 of
// an integer are re-derived with exact big-integer arithmetic.
std::int64_t ceil_log2_binomial(std::int64_t n, std::int64_t k);

// ceil(log2 n) for n >= 1.
std::int64_t ceil_log2(std::int64_t n);

} // namespace netc

#endif
