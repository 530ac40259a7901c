#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace scc {

// Integer polynomial, coefficients low degree first; zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    static IntPolynomial from_ints(const std::vector<long>& c);

    const std::vector<mpz_class>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& leading() const { return c_.back(); }

    mpz_class content() const;
    IntPolynomial primitive() const;  // content removed, leading coefficient positive

    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

    // exact division by a monic divisor; returns false (and leaves *this) if the remainder is nonzero
    bool divide_exact_monic(const IntPolynomial& m);

    std::string to_string() const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

// n-th cyclotomic polynomial, cached.
const IntPolynomial& cyclotomic_poly(long n);

// true iff every complex root is a root of unity; throws on zero input.
bool is_cyclotomic_product(const IntPolynomial& q);

// Rational polynomial helpers used by field inversion.
using QPoly = std::vector<mpq_class>;
void qpoly_trim(QPoly& p);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
void qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);

}  // namespace scc
