#include "scc/exact/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>

#include "scc/exact/errors.hpp"
#include "scc/exact/numtheory.hpp"

namespace scc {

ExactMatrix::ExactMatrix(int dim, long order) : d_(dim), n_(order) {
    if (dim < 0) throw PreconditionError("negative dimension");
    e_.assign(static_cast<size_t>(dim) * dim, Cyclotomic(order));
}

ExactMatrix ExactMatrix::identity(int dim, long order) {
    ExactMatrix m(dim, order);
    for (int i = 0; i < dim; ++i) m(i, i) = Cyclotomic(order, 1);
    return m;
}

ExactMatrix ExactMatrix::scalar(int dim, const Cyclotomic& s) {
    ExactMatrix m(dim, s.order());
    for (int i = 0; i < dim; ++i) m(i, i) = s;
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Cyclotomic>& d) {
    long n = 1;
    for (const auto& x : d) n = nt::lcm(n, x.order());
    ExactMatrix m(static_cast<int>(d.size()), n);
    for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i].embed(n);
    return m;
}

ExactMatrix ExactMatrix::embed(long m) const {
    if (m == n_) return *this;
    ExactMatrix r(d_, m);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].embed(m);
    return r;
}

namespace {

template <class F>
void parallel_rows(int d, F&& f) {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (d < 24 || hw == 1) {
        for (int i = 0; i < d; ++i) f(i);
        return;
    }
    unsigned nt_ = std::min<unsigned>(hw, static_cast<unsigned>(d));
    std::vector<std::thread> th;
    for (unsigned t = 0; t < nt_; ++t)
        th.emplace_back([&, t] {
            for (int i = static_cast<int>(t); i < d; i += static_cast<int>(nt_)) f(i);
        });
    for (auto& x : th) x.join();
}

}  // namespace

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (d_ != o.d_) throw PreconditionError("matrix dimension mismatch");
    if (n_ != o.n_) {
        long m = nt::lcm(n_, o.n_);
        return embed(m) * o.embed(m);
    }
    const CycloField& F = CycloField::get(n_);
    const long phi = F.phi;
    const int d = d_;
    // integer-scaled copies: rows of this by row lcm, columns of o by column lcm
    std::vector<mpz_class> rowL(d, 1), colL(d, 1);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) mpz_lcm(rowL[i].get_mpz_t(), rowL[i].get_mpz_t(), (*this)(i, k).denominator().get_mpz_t());
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j) mpz_lcm(colL[j].get_mpz_t(), colL[j].get_mpz_t(), o(k, j).denominator().get_mpz_t());
    std::vector<std::vector<mpz_class>> IA(static_cast<size_t>(d) * d), IB(static_cast<size_t>(d) * d);
    std::vector<char> za(static_cast<size_t>(d) * d), zb(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            const Cyclotomic& x = (*this)(i, k);
            size_t idx = static_cast<size_t>(i) * d + k;
            za[idx] = x.is_zero();
            if (za[idx]) continue;
            mpz_class s = rowL[i] / x.denominator();
            IA[idx] = x.numerators();
            for (auto& c : IA[idx]) c *= s;
        }
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j) {
            const Cyclotomic& x = o(k, j);
            size_t idx = static_cast<size_t>(k) * d + j;
            zb[idx] = x.is_zero();
            if (zb[idx]) continue;
            mpz_class s = colL[j] / x.denominator();
            IB[idx] = x.numerators();
            for (auto& c : IB[idx]) c *= s;
        }
    ExactMatrix r(d, n_);
    parallel_rows(d, [&](int i) {
        std::vector<mpz_class> raw(2 * phi - 1);
        for (int j = 0; j < d; ++j) {
            bool any = false;
            for (auto& c : raw) c = 0;
            for (int k = 0; k < d; ++k) {
                size_t ia = static_cast<size_t>(i) * d + k, ib = static_cast<size_t>(k) * d + j;
                if (za[ia] || zb[ib]) continue;
                any = true;
                const auto& a = IA[ia];
                const auto& b = IB[ib];
                for (long u = 0; u < phi; ++u) {
                    if (a[u] == 0) continue;
                    for (long v = 0; v < phi; ++v)
                        if (b[v] != 0) mpz_addmul(raw[u + v].get_mpz_t(), a[u].get_mpz_t(), b[v].get_mpz_t());
                }
            }
            if (any) r(i, j) = Cyclotomic::from_raw(n_, raw, rowL[i] * colL[j]);
        }
    });
    return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (d_ != o.d_) throw PreconditionError("matrix dimension mismatch");
    if (n_ != o.n_) {
        long m = nt::lcm(n_, o.n_);
        return embed(m) + o.embed(m);
    }
    ExactMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const { return *this + o.scaled(Cyclotomic(o.n_, -1)); }

ExactMatrix ExactMatrix::scaled(const Cyclotomic& s) const {
    long m = nt::lcm(n_, s.order());
    ExactMatrix r = embed(m);
    Cyclotomic t = s.embed(m);
    for (auto& x : r.e_)
        if (!x.is_zero()) x *= t;
    return r;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(d_, n_);
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

ExactMatrix ExactMatrix::galois(long j) const {
    ExactMatrix r(d_, n_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].galois(j);
    return r;
}

ExactMatrix ExactMatrix::conj_transpose() const { return galois(n_ - 1).transpose(); }

ExactMatrix ExactMatrix::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    ExactMatrix r = identity(d_, n_), b = *this;
    bool first = true;
    while (e) {
        if (e & 1) {
            r = first ? b : r * b;
            first = false;
        }
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

ExactMatrix ExactMatrix::inverse() const {
    const int d = d_;
    ExactMatrix a = *this, r = identity(d, n_);
    for (int c = 0; c < d; ++c) {
        int piv = -1;
        for (int i = c; i < d; ++i)
            if (!a(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw PreconditionError("singular matrix");
        if (piv != c)
            for (int j = 0; j < d; ++j) {
                std::swap(a(piv, j), a(c, j));
                std::swap(r(piv, j), r(c, j));
            }
        Cyclotomic inv = a(c, c).inv();
        for (int j = 0; j < d; ++j) {
            if (!a(c, j).is_zero()) a(c, j) *= inv;
            if (!r(c, j).is_zero()) r(c, j) *= inv;
        }
        for (int i = 0; i < d; ++i) {
            if (i == c || a(i, c).is_zero()) continue;
            Cyclotomic t = a(i, c);
            for (int j = 0; j < d; ++j) {
                if (!a(c, j).is_zero()) a(i, j) -= t * a(c, j);
                if (!r(c, j).is_zero()) r(i, j) -= t * r(c, j);
            }
        }
    }
    return r;
}

Cyclotomic ExactMatrix::determinant() const {
    const int d = d_;
    ExactMatrix a = *this;
    Cyclotomic det(n_, 1);
    for (int c = 0; c < d; ++c) {
        int piv = -1;
        for (int i = c; i < d; ++i)
            if (!a(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return Cyclotomic(n_);
        if (piv != c) {
            for (int j = 0; j < d; ++j) std::swap(a(piv, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        Cyclotomic inv = a(c, c).inv();
        for (int i = c + 1; i < d; ++i) {
            if (a(i, c).is_zero()) continue;
            Cyclotomic t = a(i, c) * inv;
            for (int j = c; j < d; ++j)
                if (!a(c, j).is_zero()) a(i, j) -= t * a(c, j);
        }
    }
    return det;
}

Cyclotomic ExactMatrix::trace() const {
    Cyclotomic t(n_);
    for (int i = 0; i < d_; ++i) t += (*this)(i, i);
    return t;
}

std::optional<Cyclotomic> ExactMatrix::scalar_value() const {
    if (d_ == 0) return Cyclotomic(n_, 1);
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j) {
            if (i == j) {
                if ((*this)(i, i) != (*this)(0, 0)) return std::nullopt;
            } else if (!(*this)(i, j).is_zero()) {
                return std::nullopt;
            }
        }
    return (*this)(0, 0);
}

bool ExactMatrix::is_scalar() const {
    auto s = scalar_value();
    return s.has_value() && !s->is_zero();
}

bool ExactMatrix::is_identity() const {
    auto s = scalar_value();
    return s.has_value() && *s == Cyclotomic(n_, 1);
}

bool ExactMatrix::projectively_equal(const ExactMatrix& o) const { return ((*this) * o.inverse()).is_scalar(); }

std::vector<std::uint64_t> ExactMatrix::reduce_mod(std::uint64_t q, std::uint64_t root) const {
    std::vector<std::uint64_t> r(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) r[i] = e_[i].reduce_mod(q, root);
    return r;
}

std::string ExactMatrix::hash_hex() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0xff;
        h *= 1099511628211ull;
    };
    mix(std::to_string(d_) + ":" + std::to_string(n_));
    for (const auto& x : e_) {
        for (const auto& c : x.numerators()) mix(c.get_str(16));
        mix(x.denominator().get_str(16));
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ExactMatrix block_diagonal(const std::vector<ExactMatrix>& blocks) {
    long n = 1;
    int d = 0;
    for (const auto& b : blocks) {
        n = nt::lcm(n, b.order());
        d += b.dim();
    }
    ExactMatrix r(d, n);
    int off = 0;
    for (const auto& b0 : blocks) {
        ExactMatrix b = b0.embed(n);
        for (int i = 0; i < b.dim(); ++i)
            for (int j = 0; j < b.dim(); ++j) r(off + i, off + j) = b(i, j);
        off += b.dim();
    }
    return r;
}

ExactMatrix kronecker(const ExactMatrix& a0, const ExactMatrix& b0) {
    long n = nt::lcm(a0.order(), b0.order());
    ExactMatrix a = a0.embed(n), b = b0.embed(n);
    int da = a.dim(), db = b.dim();
    ExactMatrix r(da * db, n);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) {
            if (a(i, j).is_zero()) continue;
            for (int k = 0; k < db; ++k)
                for (int l = 0; l < db; ++l)
                    if (!b(k, l).is_zero()) r(i * db + k, j * db + l) = a(i, j) * b(k, l);
        }
    return r;
}

}  // namespace scc
