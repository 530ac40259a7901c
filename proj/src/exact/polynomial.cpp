#include "scc/exact/polynomial.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "scc/exact/errors.hpp"
#include "scc/exact/numtheory.hpp"

namespace scc {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::from_ints(const std::vector<long>& c) {
    std::vector<mpz_class> v;
    v.reserve(c.size());
    for (long x : c) v.emplace_back(x);
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPolynomial::content() const {
    mpz_class g = 0;
    for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

IntPolynomial IntPolynomial::primitive() const {
    if (c_.empty()) return {};
    mpz_class g = content();
    if (c_.back() < 0) g = -g;
    std::vector<mpz_class> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) mpz_divexact(v[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), c_[i].get_mpz_t(), o.c_[j].get_mpz_t());
    }
    return IntPolynomial(std::move(r));
}

bool IntPolynomial::divide_exact_monic(const IntPolynomial& m) {
    if (m.is_zero() || m.leading() != 1) throw ArithmeticError("divide_exact_monic: divisor not monic");
    if (c_.size() < m.c_.size()) return c_.empty();
    std::vector<mpz_class> r = c_;
    size_t dm = m.c_.size() - 1;
    std::vector<mpz_class> q(c_.size() - dm);
    for (size_t k = c_.size(); k-- > dm;) {
        mpz_class t = r[k];
        q[k - dm] = t;
        if (t == 0) continue;
        for (size_t j = 0; j <= dm; ++j) mpz_submul(r[k - dm + j].get_mpz_t(), t.get_mpz_t(), m.c_[j].get_mpz_t());
    }
    for (size_t k = 0; k < dm; ++k)
        if (r[k] != 0) return false;
    c_ = std::move(q);
    trim();
    return true;
}

std::string IntPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0) continue;
        mpz_class a = abs(c_[k]);
        os << (c_[k] < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (a != 1 || k == 0) os << a.get_str();
        if (k > 0) os << "x";
        if (k > 1) os << "^" << k;
        first = false;
    }
    return os.str();
}

const IntPolynomial& cyclotomic_poly(long n) {
    static std::map<long, IntPolynomial> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_n = prod_{d|n} (x^d - 1)^{mu(n/d)}: multiply numerators, divide denominators.
    IntPolynomial num = IntPolynomial::from_ints({1});
    std::vector<long> dens;
    for (long d : nt::divisors(n)) {
        long m = nt::mobius(n / d);
        if (m == 0) continue;
        if (m == 1) {
            std::vector<long> c(d + 1, 0);
            c[0] = -1;
            c[d] = 1;
            num = num * IntPolynomial::from_ints(c);
        } else {
            dens.push_back(d);
        }
    }
    for (long d : dens) {
        std::vector<long> c(d + 1, 0);
        c[0] = -1;
        c[d] = 1;
        if (!num.divide_exact_monic(IntPolynomial::from_ints(c))) throw ArithmeticError("cyclotomic_poly: inexact");
    }
    return cache.emplace(n, std::move(num)).first->second;
}

namespace {

std::uint64_t eval_mod(const IntPolynomial& p, std::uint64_t x, std::uint64_t q) {
    std::uint64_t acc = 0;
    for (size_t k = p.coeffs().size(); k-- > 0;) {
        std::uint64_t rv = mpz_fdiv_ui(p.coeffs()[k].get_mpz_t(), q);
        acc = (nt::mulmod(acc, x, q) + rv) % q;
    }
    return acc;
}

}  // namespace

bool is_cyclotomic_product(const IntPolynomial& q0) {
    if (q0.is_zero()) throw ArithmeticError("is_cyclotomic_product: zero polynomial");
    IntPolynomial q = q0.primitive();
    if (q.leading() != 1) return false;
    if (q.degree() == 0) return true;
    long deg = q.degree();
    long nmax = 2 * deg * deg;
    for (long N = 1; N <= nmax && q.degree() > 0; ++N) {
        long ph = nt::euler_phi(N);
        if (ph > q.degree()) continue;
        // cheap filter: Phi_N | q forces q(r) = 0 mod p for a primitive N-th root r mod p
        auto pr = nt::prime_with_root(N, std::uint64_t(1) << 40);
        if (eval_mod(q, pr.root, pr.q) != 0) continue;
        const IntPolynomial& phi = cyclotomic_poly(N);
        while (q.degree() >= phi.degree() && q.divide_exact_monic(phi)) {
        }
    }
    return q.degree() == 0;
}

void qpoly_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qpoly_trim(r);
    return r;
}

void qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
    if (b.empty()) throw ArithmeticError("qpoly_divmod: division by zero polynomial");
    rem = a;
    qpoly_trim(rem);
    quot.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, 0);
    while (rem.size() >= b.size()) {
        size_t s = rem.size() - b.size();
        mpq_class t = rem.back() / b.back();
        quot[s] = t;
        for (size_t j = 0; j < b.size(); ++j) rem[s + j] -= t * b[j];
        rem.pop_back();
        qpoly_trim(rem);
    }
    qpoly_trim(quot);
}

}  // namespace scc
