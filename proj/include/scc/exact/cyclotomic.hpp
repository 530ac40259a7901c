#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace scc {

// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1}.
// Stored as integer numerators over one positive denominator, gcd-normalised,
// so equality of values is equality of representations.
class Cyclotomic {
public:
    Cyclotomic();  // 0 in Q(zeta_1)
    explicit Cyclotomic(long n);
    Cyclotomic(long n, long value);
    Cyclotomic(long n, const mpq_class& value);
    static Cyclotomic zeta(long n, long k = 1);
    static Cyclotomic from_coeffs(long n, const std::vector<mpq_class>& c);
    static Cyclotomic from_raw(long n, std::vector<mpz_class> num, mpz_class den);

    long order() const { return n_; }
    std::vector<mpq_class> coeffs() const;
    const std::vector<mpz_class>& numerators() const { return num_; }
    const mpz_class& denominator() const { return den_; }

    bool is_zero() const;
    bool is_rational() const;
    mpq_class rational_value() const;  // throws unless is_rational

    Cyclotomic embed(long m) const;      // into Q(zeta_m), n | m
    Cyclotomic galois(long j) const;     // zeta -> zeta^j, gcd(j, n) = 1
    Cyclotomic conj() const { return galois(n_ - 1); }
    Cyclotomic inv() const;
    Cyclotomic pow(long e) const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inv(); }
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // image under zeta_n -> root in F_q (denominator must be invertible mod q)
    std::uint64_t reduce_mod(std::uint64_t q, std::uint64_t root) const;
    // complex value under zeta_n -> exp(2 pi i / n), for diagnostics only
    std::pair<double, double> approx() const;

    std::string to_string() const;

    static long max_order();
    static void set_max_order(long m);

private:
    void normalize();
    long n_;
    std::vector<mpz_class> num_;
    mpz_class den_;
};

// Field data shared by all elements of a given order.
struct CycloField {
    long n;
    long phi;
    std::vector<long> poly;                   // Phi_n coefficients, low first, monic
    std::vector<std::vector<mpz_class>> pw;   // pw[j] = zeta^j reduced, j = 0 .. n-1
    static const CycloField& get(long n);
};

// Reduce a raw integer convolution (any length) into power-basis coordinates in place.
void cyclo_reduce(const CycloField& F, std::vector<mpz_class>& raw);

}  // namespace scc
