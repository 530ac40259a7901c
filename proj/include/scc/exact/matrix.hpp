#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scc/exact/cyclotomic.hpp"
#include "scc/exact/polynomial.hpp"

namespace scc {

// Polynomial with Cyclotomic coefficients (low degree first).
using CycPoly = std::vector<Cyclotomic>;

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int dim, long order);  // zero matrix
    static ExactMatrix identity(int dim, long order);
    static ExactMatrix scalar(int dim, const Cyclotomic& s);
    static ExactMatrix diagonal(const std::vector<Cyclotomic>& d);

    int dim() const { return d_; }
    long order() const { return n_; }
    const Cyclotomic& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * d_ + j]; }
    Cyclotomic& operator()(int i, int j) { return e_[static_cast<size_t>(i) * d_ + j]; }
    const std::vector<Cyclotomic>& entries() const { return e_; }

    ExactMatrix embed(long m) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix scaled(const Cyclotomic& s) const;
    ExactMatrix transpose() const;
    ExactMatrix conj_transpose() const;
    ExactMatrix galois(long j) const;
    ExactMatrix pow(long e) const;
    ExactMatrix inverse() const;  // throws on singular
    Cyclotomic determinant() const;
    Cyclotomic trace() const;
    bool operator==(const ExactMatrix& o) const { return d_ == o.d_ && n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    bool is_scalar() const;
    std::optional<Cyclotomic> scalar_value() const;
    bool is_identity() const;
    bool projectively_equal(const ExactMatrix& o) const;  // M * o^{-1} scalar

    // entries mod q under zeta -> root; row-major
    std::vector<std::uint64_t> reduce_mod(std::uint64_t q, std::uint64_t root) const;

    std::string hash_hex() const;  // stable digest of the exact entries

private:
    int d_ = 0;
    long n_ = 1;
    std::vector<Cyclotomic> e_;
};

ExactMatrix block_diagonal(const std::vector<ExactMatrix>& blocks);
ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);

// characteristic polynomial det(xI - M), monic, degree d
CycPoly char_poly(const ExactMatrix& M);
ExactMatrix poly_eval(const CycPoly& p, const ExactMatrix& M);

// product over all Galois conjugates of p, as a primitive integer polynomial
IntPolynomial galois_norm(const CycPoly& p);

struct ProjectiveOrder {
    enum class Kind { Finite, Infinite, Unknown };
    Kind kind = Kind::Unknown;
    long k = 0;               // for Finite
    IntPolynomial witness;    // for Infinite: non-cyclotomic-product norm polynomial
    std::string route;        // "scalar-power", "ad", "power-det", "budget"
    std::string to_string() const;
};

struct OrderOptions {
    long max_norm_degree = 700;  // d * phi budget for the certificate
};

ProjectiveOrder projective_order(const ExactMatrix& M, long k_max, const OrderOptions& opt = {});

// certificate only: the norm polynomial of the eigenvalue-ratio operator
IntPolynomial ratio_norm_polynomial(const ExactMatrix& M, std::string* route = nullptr);

}  // namespace scc
