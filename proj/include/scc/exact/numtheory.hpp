#pragma once

#include <cstdint>
#include <vector>

namespace scc::nt {

long euler_phi(long n);
std::vector<long> divisors(long n);
long mobius(long n);
long gcd(long a, long b);
long lcm(long a, long b);

// 64-bit modular helpers (q < 2^62)
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t q);
std::uint64_t invmod(std::uint64_t a, std::uint64_t q);
bool is_prime(std::uint64_t n);

// Smallest prime q = 1 mod n with q > lower_bound, and a primitive n-th root of unity mod q.
struct PrimeRoot {
    std::uint64_t q;
    std::uint64_t root;
};
PrimeRoot prime_with_root(long n, std::uint64_t lower_bound);

}  // namespace scc::nt
