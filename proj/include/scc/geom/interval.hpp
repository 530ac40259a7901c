#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>

namespace scc {

// Raised when an interval decision is ambiguous at the current precision.
struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Closed real interval [lo, hi] with outward rounding, MPFR endpoints.
class Interval {
public:
    Interval();
    Interval(double x);  // NOLINT: implicit from exact double
    static Interval point(long x);
    static Interval pi();
    static Interval hull(const Interval& a, const Interval& b);
    static Interval from_bounds(double lo, double hi);

    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    // working precision for newly created intervals (thread local)
    static void set_precision(mpfr_prec_t bits);
    static mpfr_prec_t precision();

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator-() const;
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const;  // throws PrecisionExhausted if o contains 0
    Interval& operator+=(const Interval& o) { return *this = *this + o; }
    Interval& operator-=(const Interval& o) { return *this = *this - o; }
    Interval& operator*=(const Interval& o) { return *this = *this * o; }

    Interval sqr() const;
    Interval sqrt() const;
    Interval exp() const;
    Interval log() const;
    Interval cosh() const;
    Interval sinh() const;
    Interval acosh() const;
    Interval abs() const;
    Interval cos() const;
    Interval sin() const;

    bool pos() const;  // certainly > 0
    bool neg() const;  // certainly < 0
    bool contains_zero() const { return !pos() && !neg(); }
    bool contains(double x) const;
    bool less(const Interval& o) const;  // certainly this < o
    bool overlaps(const Interval& o) const;
    int sign() const;  // +1, -1; throws PrecisionExhausted if ambiguous

    double lo() const;
    double hi() const;
    double mid() const;
    double width() const;
    std::string to_string() const;

    const mpfr_t& lo_raw() const { return lo_; }
    const mpfr_t& hi_raw() const { return hi_; }

private:
    explicit Interval(mpfr_prec_t prec);
    mpfr_t lo_, hi_;
};

Interval max(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);

// RAII precision scope
class PrecisionScope {
public:
    explicit PrecisionScope(mpfr_prec_t bits) : old_(Interval::precision()) { Interval::set_precision(bits); }
    ~PrecisionScope() { Interval::set_precision(old_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    mpfr_prec_t old_;
};

}  // namespace scc
