#include "scc/geom/interval.hpp"

#include <cmath>
#include <sstream>

namespace scc {

namespace {
thread_local mpfr_prec_t g_prec = 256;
}

void Interval::set_precision(mpfr_prec_t bits) { g_prec = bits; }
mpfr_prec_t Interval::precision() { return g_prec; }

Interval::Interval(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
}

Interval::Interval() : Interval(g_prec) {
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(double x) : Interval(g_prec) {
    mpfr_set_d(lo_, x, MPFR_RNDD);
    mpfr_set_d(hi_, x, MPFR_RNDU);
}

Interval Interval::point(long x) {
    Interval r(g_prec);
    mpfr_set_si(r.lo_, x, MPFR_RNDD);
    mpfr_set_si(r.hi_, x, MPFR_RNDU);
    return r;
}

Interval Interval::from_bounds(double lo, double hi) {
    Interval r(g_prec);
    mpfr_set_d(r.lo_, lo, MPFR_RNDD);
    mpfr_set_d(r.hi_, hi, MPFR_RNDU);
    return r;
}

Interval Interval::pi() {
    Interval r(g_prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
    Interval r(g_prec);
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval::Interval(const Interval& o) : Interval(mpfr_get_prec(o.lo_)) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : Interval(mpfr_get_prec(o.lo_)) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
    if (this == &o) return *this;
    mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
    mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::operator+(const Interval& o) const {
    Interval r(g_prec);
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& o) const {
    Interval r(g_prec);
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-() const {
    Interval r(g_prec);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& o) const {
    Interval r(g_prec);
    mpfr_t t;
    mpfr_init2(t, g_prec);
    const mpfr_t* a[2] = {&lo_, &hi_};
    const mpfr_t* b[2] = {&o.lo_, &o.hi_};
    bool first = true;
    for (auto x : a)
        for (auto y : b) {
            mpfr_mul(t, *x, *y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, *x, *y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Interval Interval::operator/(const Interval& o) const {
    if (o.contains_zero()) throw PrecisionExhausted("interval division by an interval containing 0");
    Interval inv(g_prec);
    mpfr_ui_div(inv.lo_, 1, o.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, o.lo_, MPFR_RNDU);
    return *this * inv;
}

Interval Interval::sqr() const {
    Interval a = abs();
    Interval r(g_prec);
    mpfr_sqr(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqr(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::sqrt() const {
    if (neg()) throw PrecisionExhausted("sqrt of negative interval");
    Interval r(g_prec);
    if (mpfr_sgn(lo_) <= 0)
        mpfr_set_zero(r.lo_, 1);
    else
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::exp() const {
    Interval r(g_prec);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::log() const {
    if (!pos()) throw PrecisionExhausted("log of non-positive interval");
    Interval r(g_prec);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::cosh() const {
    Interval a = abs();
    Interval r(g_prec);
    mpfr_cosh(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_cosh(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::sinh() const {
    Interval r(g_prec);
    mpfr_sinh(r.lo_, lo_, MPFR_RNDD);
    mpfr_sinh(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::acosh() const {
    if (mpfr_cmp_ui(hi_, 1) < 0) throw PrecisionExhausted("acosh below 1");
    Interval r(g_prec);
    if (mpfr_cmp_ui(lo_, 1) <= 0)
        mpfr_set_zero(r.lo_, 1);
    else
        mpfr_acosh(r.lo_, lo_, MPFR_RNDD);
    mpfr_acosh(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::abs() const {
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    Interval r(g_prec);
    mpfr_set_zero(r.lo_, 1);
    mpfr_t t;
    mpfr_init2(t, g_prec);
    mpfr_neg(t, lo_, MPFR_RNDU);
    mpfr_max(r.hi_, t, hi_, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Interval Interval::cos() const {
    Interval r(g_prec);
    mpfr_t a, b;
    mpfr_init2(a, g_prec);
    mpfr_init2(b, g_prec);
    mpfr_cos(a, lo_, MPFR_RNDD);
    mpfr_cos(b, hi_, MPFR_RNDD);
    mpfr_min(r.lo_, a, b, MPFR_RNDD);
    mpfr_cos(a, lo_, MPFR_RNDU);
    mpfr_cos(b, hi_, MPFR_RNDU);
    mpfr_max(r.hi_, a, b, MPFR_RNDU);
    mpfr_clear(a);
    mpfr_clear(b);
    // extrema inside: multiples of pi, located conservatively
    const double k0 = std::floor(lo() / M_PI - 1e-9), k1 = std::floor(hi() / M_PI + 1e-9);
    for (double k = k0; k <= k1 + 0.5; k += 1.0) {
        double x = k * M_PI;
        if (x < lo() - 1e-9 || x > hi() + 1e-9) continue;
        if (static_cast<long>(k) % 2 == 0)
            mpfr_set_ui(r.hi_, 1, MPFR_RNDU);
        else
            mpfr_set_si(r.lo_, -1, MPFR_RNDD);
    }
    return r;
}

Interval Interval::sin() const { return (*this - pi() * Interval(0.5)).cos(); }

bool Interval::pos() const { return mpfr_sgn(lo_) > 0; }
bool Interval::neg() const { return mpfr_sgn(hi_) < 0; }
bool Interval::contains(double x) const { return mpfr_cmp_d(lo_, x) <= 0 && mpfr_cmp_d(hi_, x) >= 0; }
bool Interval::less(const Interval& o) const { return mpfr_less_p(hi_, o.lo_); }
bool Interval::overlaps(const Interval& o) const { return !less(o) && !o.less(*this); }

int Interval::sign() const {
    if (pos()) return 1;
    if (neg()) return -1;
    throw PrecisionExhausted("sign undecided");
}

double Interval::lo() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double Interval::mid() const {
    mpfr_t m;
    mpfr_init2(m, mpfr_get_prec(lo_) + 1);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
}
double Interval::width() const {
    mpfr_t m;
    mpfr_init2(m, 64);
    mpfr_sub(m, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(m, MPFR_RNDU);
    mpfr_clear(m);
    return d;
}

std::string Interval::to_string() const {
    std::ostringstream os;
    os.precision(17);
    os << "[" << lo() << ", " << hi() << "]";
    return os.str();
}

Interval max(const Interval& a, const Interval& b) {
    Interval r = a;
    mpfr_max(const_cast<mpfr_ptr>(r.lo_raw()), a.lo_raw(), b.lo_raw(), MPFR_RNDD);
    mpfr_max(const_cast<mpfr_ptr>(r.hi_raw()), a.hi_raw(), b.hi_raw(), MPFR_RNDU);
    return r;
}

Interval min(const Interval& a, const Interval& b) { return -max(-a, -b); }

}  // namespace scc
