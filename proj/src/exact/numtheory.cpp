#include "scc/exact/numtheory.hpp"

#include <stdexcept>

namespace scc::nt {

long gcd(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long lcm(long a, long b) { return a / gcd(a, b) * b; }

long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

std::vector<long> divisors(long n) {
    std::vector<long> lo, hi;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        lo.push_back(d);
        if (d * d != n) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

long mobius(long n) {
    long r = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        r = -r;
    }
    if (n > 1) r = -r;
    return r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % q);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t q) {
    std::uint64_t r = 1 % q;
    a %= q;
    while (e) {
        if (e & 1) r = mulmod(r, a, q);
        a = mulmod(a, a, q);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t q) {
    if (a % q == 0) throw std::domain_error("invmod: zero");
    return powmod(a, q - 2, q);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic for n < 2^64
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

PrimeRoot prime_with_root(long n, std::uint64_t lower_bound) {
    std::uint64_t un = static_cast<std::uint64_t>(n);
    std::uint64_t k = lower_bound / un + 1;
    for (;; ++k) {
        std::uint64_t q = k * un + 1;
        if (!is_prime(q)) continue;
        // primes dividing n
        std::vector<std::uint64_t> ps;
        long m = n;
        for (long p = 2; p * p <= m; ++p) {
            if (m % p) continue;
            ps.push_back(p);
            while (m % p == 0) m /= p;
        }
        if (m > 1) ps.push_back(m);
        for (std::uint64_t g = 2; g < q; ++g) {
            std::uint64_t r = powmod(g, (q - 1) / un, q);
            bool prim = true;
            for (auto p : ps) {
                if (powmod(r, un / p, q) == 1) {
                    prim = false;
                    break;
                }
            }
            if (prim) return {q, r};
        }
    }
}

}  // namespace scc::nt
