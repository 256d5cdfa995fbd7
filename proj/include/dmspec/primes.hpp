#ifndef DMSPEC_PRIMES_HPP
#define DMSPEC_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace dmspec {

inline bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

/// Distinct prime divisors of n in ascending order.
inline std::vector<unsigned> prime_divisors(std::uint64_t n)
{
  std::vector<unsigned> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<unsigned>(d));
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(static_cast<unsigned>(n));
  return out;
}

inline std::vector<unsigned> primes_up_to(unsigned bound)
{
  std::vector<unsigned> out;
  for (unsigned n = 2; n <= bound; ++n)
    if (is_prime(n))
      out.push_back(n);
  return out;
}

/// True iff n is a power of p (including p^0 = 1).
inline bool is_power_of(std::uint64_t n, std::uint64_t p)
{
  if (n == 0)
    return false;
  while (n % p == 0)
    n /= p;
  return n == 1;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b)
{
  while (b != 0) {
    auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::uint64_t lcm(std::uint64_t a, std::uint64_t b)
{
  return a / gcd(a, b) * b;
}

} // namespace dmspec

#endif
