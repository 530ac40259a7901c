#include "scc/exact/cyclotomic.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "scc/exact/errors.hpp"
#include "scc/exact/numtheory.hpp"
#include "scc/exact/polynomial.hpp"

namespace scc {

namespace {
std::atomic<long> g_max_order{1024};
}

long Cyclotomic::max_order() { return g_max_order.load(); }
void Cyclotomic::set_max_order(long m) { g_max_order.store(m); }

const CycloField& CycloField::get(long n) {
    static std::map<long, std::unique_ptr<CycloField>> cache;
    static std::mutex mu;
    thread_local long last_n = -1;
    thread_local const CycloField* last = nullptr;
    if (n < 1) throw ArithmeticError("cyclotomic order must be positive");
    if (n > Cyclotomic::max_order()) throw OrderOverflow("cyclotomic order " + std::to_string(n) + " exceeds maximum " + std::to_string(Cyclotomic::max_order()));
    if (n == last_n) return *last;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) {
        last_n = n;
        last = it->second.get();
        return *last;
    }
    auto F = std::make_unique<CycloField>();
    F->n = n;
    F->phi = nt::euler_phi(n);
    for (const auto& c : cyclotomic_poly(n).coeffs()) F->poly.push_back(c.get_si());
    F->pw.resize(n);
    std::vector<mpz_class> cur(F->phi, 0);
    cur[0] = 1;
    for (long j = 0; j < n; ++j) {
        F->pw[j] = cur;
        // multiply by x and reduce
        std::vector<mpz_class> nx(F->phi + 1, 0);
        for (long i = 0; i < F->phi; ++i) nx[i + 1] = cur[i];
        cyclo_reduce(*F, nx);
        cur = std::move(nx);
    }
    last = cache.emplace(n, std::move(F)).first->second.get();
    last_n = n;
    return *last;
}

void cyclo_reduce(const CycloField& F, std::vector<mpz_class>& raw) {
    long phi = F.phi;
    for (long k = static_cast<long>(raw.size()) - 1; k >= phi; --k) {
        if (raw[k] == 0) continue;
        mpz_class c = raw[k];
        for (long j = 0; j < phi; ++j) {
            long pj = F.poly[j];
            if (pj == 0) continue;
            if (pj > 0)
                mpz_submul_ui(raw[k - phi + j].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(pj));
            else
                mpz_addmul_ui(raw[k - phi + j].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-pj));
        }
        raw[k] = 0;
    }
    raw.resize(phi);
}

Cyclotomic::Cyclotomic() : Cyclotomic(1) {}

Cyclotomic::Cyclotomic(long n) : n_(n), num_(CycloField::get(n).phi, 0), den_(1) {}

Cyclotomic::Cyclotomic(long n, long value) : Cyclotomic(n) { num_[0] = value; }

Cyclotomic::Cyclotomic(long n, const mpq_class& value) : Cyclotomic(n) {
    num_[0] = value.get_num();
    den_ = value.get_den();
}

Cyclotomic Cyclotomic::zeta(long n, long k) {
    const CycloField& F = CycloField::get(n);
    k %= n;
    if (k < 0) k += n;
    Cyclotomic z(n);
    z.num_ = F.pw[k];
    return z;
}

Cyclotomic Cyclotomic::from_coeffs(long n, const std::vector<mpq_class>& c) {
    Cyclotomic z(n);
    if (static_cast<long>(c.size()) > CycloField::get(n).phi) {
        // longer input: reduce via the field polynomial
        mpz_class L = 1;
        for (const auto& x : c) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x.get_den_mpz_t());
        std::vector<mpz_class> raw(c.size());
        for (size_t i = 0; i < c.size(); ++i) raw[i] = c[i].get_num() * (L / c[i].get_den());
        return from_raw(n, std::move(raw), L);
    }
    mpz_class L = 1;
    for (const auto& x : c) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x.get_den_mpz_t());
    for (size_t i = 0; i < c.size(); ++i) z.num_[i] = c[i].get_num() * (L / c[i].get_den());
    z.den_ = L;
    z.normalize();
    return z;
}

Cyclotomic Cyclotomic::from_raw(long n, std::vector<mpz_class> num, mpz_class den) {
    const CycloField& F = CycloField::get(n);
    if (den == 0) throw ArithmeticError("zero denominator");
    if (static_cast<long>(num.size()) < F.phi) num.resize(F.phi, 0);
    cyclo_reduce(F, num);
    Cyclotomic z(n);
    z.num_ = std::move(num);
    z.den_ = std::move(den);
    z.normalize();
    return z;
}

void Cyclotomic::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& x : num_) x = -x;
    }
    mpz_class g = den_;
    for (const auto& x : num_) {
        if (g == 1) break;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (is_zero()) {
        den_ = 1;
        return;
    }
    if (g != 1) {
        for (auto& x : num_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

std::vector<mpq_class> Cyclotomic::coeffs() const {
    std::vector<mpq_class> r(num_.size());
    for (size_t i = 0; i < num_.size(); ++i) {
        r[i] = mpq_class(num_[i], den_);
        r[i].canonicalize();
    }
    return r;
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : num_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    return true;
}

mpq_class Cyclotomic::rational_value() const {
    if (!is_rational()) throw ArithmeticError("not rational");
    mpq_class q(num_[0], den_);
    q.canonicalize();
    return q;
}

Cyclotomic Cyclotomic::embed(long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw ArithmeticError("embed: order does not divide target");
    const CycloField& G = CycloField::get(m);
    long s = m / n_;
    std::vector<mpz_class> raw(G.phi, 0);
    for (size_t k = 0; k < num_.size(); ++k) {
        if (num_[k] == 0) continue;
        const auto& p = G.pw[(k * s) % m];
        for (long j = 0; j < G.phi; ++j)
            if (p[j] != 0) mpz_addmul(raw[j].get_mpz_t(), num_[k].get_mpz_t(), p[j].get_mpz_t());
    }
    return from_raw(m, std::move(raw), den_);
}

Cyclotomic Cyclotomic::galois(long j) const {
    j %= n_;
    if (j < 0) j += n_;
    if (nt::gcd(j, n_) != 1) throw ArithmeticError("galois: exponent not coprime to order");
    const CycloField& F = CycloField::get(n_);
    std::vector<mpz_class> raw(F.phi, 0);
    for (size_t k = 0; k < num_.size(); ++k) {
        if (num_[k] == 0) continue;
        const auto& p = F.pw[(k * j) % n_];
        for (long i = 0; i < F.phi; ++i)
            if (p[i] != 0) mpz_addmul(raw[i].get_mpz_t(), num_[k].get_mpz_t(), p[i].get_mpz_t());
    }
    return from_raw(n_, std::move(raw), den_);
}

Cyclotomic Cyclotomic::inv() const {
    if (is_zero()) throw ArithmeticError("division by zero in Q(zeta_" + std::to_string(n_) + ")");
    const CycloField& F = CycloField::get(n_);
    QPoly r0, r1, s0{0}, s1{1};
    for (long c : F.poly) r0.emplace_back(c);
    r1 = coeffs();
    qpoly_trim(r1);
    qpoly_trim(s0);
    while (!r1.empty()) {
        QPoly q, r;
        qpoly_divmod(r0, r1, q, r);
        QPoly qs = qpoly_mul(q, s1);
        QPoly s2 = s0;
        if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        qpoly_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant
    for (auto& x : s0) x /= r0[0];
    return from_coeffs(n_, s0);
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Cyclotomic r(n_, 1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

namespace {
long common_order(const Cyclotomic& a, const Cyclotomic& b) { return nt::lcm(a.order(), b.order()); }
}  // namespace

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (o.n_ != n_) {
        long m = common_order(*this, o);
        return embed(m) + o.embed(m);
    }
    Cyclotomic z(n_);
    z.den_ = den_ * o.den_;
    for (size_t i = 0; i < num_.size(); ++i) z.num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
    z.normalize();
    return z;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic z = *this;
    for (auto& x : z.num_) x = -x;
    return z;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (o.n_ != n_) {
        long m = common_order(*this, o);
        return embed(m) * o.embed(m);
    }
    const CycloField& F = CycloField::get(n_);
    std::vector<mpz_class> raw(2 * F.phi - 1, 0);
    for (long i = 0; i < F.phi; ++i) {
        if (num_[i] == 0) continue;
        for (long j = 0; j < F.phi; ++j)
            if (o.num_[j] != 0) mpz_addmul(raw[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
    }
    return from_raw(n_, std::move(raw), den_ * o.den_);
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (o.n_ != n_) {
        long m = common_order(*this, o);
        return embed(m) == o.embed(m);
    }
    return den_ == o.den_ && num_ == o.num_;
}

std::uint64_t Cyclotomic::reduce_mod(std::uint64_t q, std::uint64_t root) const {
    std::uint64_t acc = 0;
    for (size_t k = num_.size(); k-- > 0;) {
        std::uint64_t c = mpz_fdiv_ui(num_[k].get_mpz_t(), q);
        acc = (nt::mulmod(acc, root, q) + c) % q;
    }
    std::uint64_t d = mpz_fdiv_ui(den_.get_mpz_t(), q);
    if (d == 0) throw ArithmeticError("reduce_mod: denominator vanishes mod q");
    return nt::mulmod(acc, nt::invmod(d, q), q);
}

std::pair<double, double> Cyclotomic::approx() const {
    double re = 0, im = 0, dd = den_.get_d();
    for (size_t k = 0; k < num_.size(); ++k) {
        double a = 2 * M_PI * static_cast<double>(k) / static_cast<double>(n_);
        double c = num_[k].get_d() / dd;
        re += c * std::cos(a);
        im += c * std::sin(a);
    }
    return {re, im};
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < num_.size(); ++k) {
        if (num_[k] == 0) continue;
        mpq_class c(num_[k], den_);
        c.canonicalize();
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        mpq_class a = abs(c);
        if (k == 0 || a != 1) os << a.get_str();
        if (k > 0) os << (k == 0 || a != 1 ? "*" : "") << "z" << n_ << (k > 1 ? "^" + std::to_string(k) : "");
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace scc
