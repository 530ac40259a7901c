#include <sstream>

#include "scc/exact/errors.hpp"
#include "scc/exact/matrix.hpp"
#include "scc/exact/numtheory.hpp"

namespace scc {

namespace {

CycPoly cp_mul(const CycPoly& a, const CycPoly& b, long n) {
    CycPoly r(a.size() + b.size() - 1, Cyclotomic(n));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    return r;
}

}  // namespace

CycPoly char_poly(const ExactMatrix& M) {
    const int d = M.dim();
    const long n = M.order();
    ExactMatrix H = M;
    // reduce to upper Hessenberg form by similarity
    for (int k = 0; k + 2 < d; ++k) {
        int piv = -1;
        for (int r = k + 1; r < d; ++r)
            if (!H(r, k).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != k + 1) {
            for (int j = 0; j < d; ++j) std::swap(H(piv, j), H(k + 1, j));
            for (int i = 0; i < d; ++i) std::swap(H(i, piv), H(i, k + 1));
        }
        Cyclotomic inv = H(k + 1, k).inv();
        for (int i = k + 2; i < d; ++i) {
            if (H(i, k).is_zero()) continue;
            Cyclotomic t = H(i, k) * inv;
            for (int j = k; j < d; ++j)
                if (!H(k + 1, j).is_zero()) H(i, j) -= t * H(k + 1, j);
            for (int r = 0; r < d; ++r)
                if (!H(r, i).is_zero()) H(r, k + 1) += t * H(r, i);
        }
    }
    // p_m = (x - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod subdiag) p_{m-i-1}
    std::vector<CycPoly> p(d + 1);
    p[0] = {Cyclotomic(n, 1)};
    for (int m = 1; m <= d; ++m) {
        const int c = m - 1;
        CycPoly cur = cp_mul({-H(c, c), Cyclotomic(n, 1)}, p[m - 1], n);
        Cyclotomic prod(n, 1);
        for (int i = 1; i <= c; ++i) {
            prod *= H(c - i + 1, c - i);
            if (prod.is_zero()) break;
            Cyclotomic t = H(c - i, c) * prod;
            if (t.is_zero()) continue;
            for (size_t j = 0; j < p[m - i - 1].size(); ++j) cur[j] -= t * p[m - i - 1][j];
        }
        p[m] = std::move(cur);
    }
    return p[d];
}

ExactMatrix poly_eval(const CycPoly& p, const ExactMatrix& M) {
    ExactMatrix acc(M.dim(), M.order());
    for (size_t k = p.size(); k-- > 0;) {
        acc = acc * M;
        acc = acc + ExactMatrix::scalar(M.dim(), p[k]);
    }
    return acc;
}

IntPolynomial galois_norm(const CycPoly& p) {
    if (p.empty()) return {};
    long n = p[0].order();
    for (const auto& c : p) n = nt::lcm(n, c.order());
    CycPoly base;
    for (const auto& c : p) base.push_back(c.embed(n));
    CycPoly acc{Cyclotomic(n, 1)};
    for (long j = 1; j < n || j == 1; ++j) {
        if (nt::gcd(j, n) != 1) continue;
        CycPoly s;
        for (const auto& c : base) s.push_back(c.galois(j));
        acc = cp_mul(acc, s, n);
        if (n == 1) break;
    }
    mpz_class L = 1;
    for (const auto& c : acc) {
        if (!c.is_rational()) throw ArithmeticError("galois_norm: non-rational coefficient");
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.denominator().get_mpz_t());
    }
    std::vector<mpz_class> v;
    for (const auto& c : acc) {
        mpq_class q = c.rational_value();
        v.push_back(q.get_num() * (L / q.get_den()));
    }
    return IntPolynomial(std::move(v)).primitive();
}

IntPolynomial ratio_norm_polynomial(const ExactMatrix& M, std::string* route) {
    const int d = M.dim();
    ExactMatrix op;
    if (d <= 6) {
        op = kronecker(M, M.inverse().transpose());
        if (route) *route = "ad";
    } else {
        Cyclotomic det = M.determinant();
        if (det.is_zero()) throw PreconditionError("singular matrix");
        op = M.pow(d).scaled(det.inv());
        if (route) *route = "power-det";
    }
    return galois_norm(char_poly(op));
}

namespace {

using Mat64 = std::vector<std::uint64_t>;

Mat64 mulq(const Mat64& a, const Mat64& b, int d, std::uint64_t q) {
    Mat64 r(static_cast<size_t>(d) * d, 0);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            std::uint64_t x = a[static_cast<size_t>(i) * d + k];
            if (!x) continue;
            for (int j = 0; j < d; ++j) {
                std::uint64_t y = b[static_cast<size_t>(k) * d + j];
                if (y) r[static_cast<size_t>(i) * d + j] = (r[static_cast<size_t>(i) * d + j] + nt::mulmod(x, y, q)) % q;
            }
        }
    return r;
}

bool scalarq(const Mat64& a, int d) {
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::uint64_t x = a[static_cast<size_t>(i) * d + j];
            if (i == j ? x != a[0] : x != 0) return false;
        }
    return a[0] != 0;
}

std::uint64_t detq(Mat64 a, int d, std::uint64_t q) {
    std::uint64_t det = 1;
    for (int c = 0; c < d; ++c) {
        int piv = -1;
        for (int i = c; i < d; ++i)
            if (a[static_cast<size_t>(i) * d + c]) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < d; ++j) std::swap(a[static_cast<size_t>(piv) * d + j], a[static_cast<size_t>(c) * d + j]);
            det = (q - det) % q;
        }
        std::uint64_t p = a[static_cast<size_t>(c) * d + c];
        det = nt::mulmod(det, p, q);
        std::uint64_t inv = nt::invmod(p, q);
        for (int i = c + 1; i < d; ++i) {
            std::uint64_t t = nt::mulmod(a[static_cast<size_t>(i) * d + c], inv, q);
            if (!t) continue;
            for (int j = c; j < d; ++j) {
                std::uint64_t s = nt::mulmod(t, a[static_cast<size_t>(c) * d + j], q);
                auto& x = a[static_cast<size_t>(i) * d + j];
                x = (x + q - s) % q;
            }
        }
    }
    return det;
}

}  // namespace

ProjectiveOrder projective_order(const ExactMatrix& M, long k_max, const OrderOptions& opt) {
    const int d = M.dim();
    if (d == 0) throw PreconditionError("projective_order: empty matrix");
    const long n = M.order();
    // modular image; retry primes whose reduction hits a denominator
    std::uint64_t lb = std::uint64_t(1) << 61;
    Mat64 A;
    nt::PrimeRoot pr{};
    for (int attempt = 0;; ++attempt) {
        pr = nt::prime_with_root(n, lb);
        try {
            A = M.reduce_mod(pr.q, pr.root);
            break;
        } catch (const ArithmeticError&) {
            lb = pr.q;
            if (attempt > 20) throw;
        }
    }
    if (detq(A, d, pr.q) == 0 && M.determinant().is_zero()) throw PreconditionError("projective_order: singular matrix");

    ProjectiveOrder res;
    Mat64 P = A;
    for (long k = 1; k <= k_max; ++k) {
        if (k > 1) P = mulq(P, A, d, pr.q);
        if (!scalarq(P, d)) continue;  // non-scalar mod q implies non-scalar
        if (M.pow(k).is_scalar()) {
            res.kind = ProjectiveOrder::Kind::Finite;
            res.k = k;
            res.route = "scalar-power";
            return res;
        }
    }
    long deg = (d <= 6 ? static_cast<long>(d) * d : d) * nt::euler_phi(n);
    if (deg > opt.max_norm_degree) {
        res.kind = ProjectiveOrder::Kind::Unknown;
        res.route = "budget";
        return res;
    }
    IntPolynomial w = ratio_norm_polynomial(M, &res.route);
    if (!is_cyclotomic_product(w)) {
        res.kind = ProjectiveOrder::Kind::Infinite;
        res.witness = std::move(w);
    } else {
        res.kind = ProjectiveOrder::Kind::Unknown;
    }
    return res;
}

std::string ProjectiveOrder::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Finite: os << "finite(" << k << ")"; break;
        case Kind::Infinite: os << "infinite"; break;
        case Kind::Unknown: os << "unknown"; break;
    }
    return os.str();
}

}  // namespace scc
