#include "scc/tqft/fusion.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "scc/exact/errors.hpp"

namespace scc {

namespace {

Cyclotomic sign(long n, int e) { return Cyclotomic(n, (e % 2) ? -1 : 1); }

}  // namespace

Fusion::Fusion(int p) : p_(p) {
    if (p < 3 || p % 2 == 0) throw PreconditionError("Fusion: level must be odd and at least 3");
    for (int c = 0; c <= p - 3; c += 2) colours_.push_back(c);
    const long n = order();
    Cyclotomic a2 = Cyclotomic::zeta(n, 2), am2 = Cyclotomic::zeta(n, n - 2);
    Cyclotomic den = (a2 - am2).inv();
    const int top = 2 * p + 4;
    qint_.reserve(top + 1);
    qfact_.reserve(top + 1);
    for (int k = 0; k <= top; ++k) {
        qint_.push_back((Cyclotomic::zeta(n, (2L * k) % n) - Cyclotomic::zeta(n, ((n - 2L * k) % n + n) % n)) * den);
        qfact_.push_back(k == 0 ? one() : qfact_.back() * qint_.back());
    }
}

bool Fusion::admissible(int i, int j, int k) const {
    return (i + j + k) % 2 == 0 && std::abs(i - j) <= k && k <= i + j && i + j + k <= 2 * p_ - 4 && i >= 0 && j >= 0;
}

const Cyclotomic& Fusion::qint(int n) const {
    if (n < 0 || n >= static_cast<int>(qint_.size())) throw PreconditionError("quantum integer out of range");
    return qint_[n];
}

const Cyclotomic& Fusion::qfact(int n) const {
    if (n < 0 || n >= static_cast<int>(qfact_.size())) throw PreconditionError("quantum factorial out of range");
    return qfact_[n];
}

Cyclotomic Fusion::delta(int n) const { return sign(order(), n) * qint(n + 1); }

Cyclotomic Fusion::theta(int a, int b, int c) const {
    std::array<int, 3> key{a, b, c};
    std::sort(key.begin(), key.end());
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = theta_cache_.find(key);
        if (it != theta_cache_.end()) return it->second;
    }
    if (!admissible(a, b, c)) throw PreconditionError("theta: inadmissible triple");
    int i = (b + c - a) / 2, j = (a + c - b) / 2, k = (a + b - c) / 2;
    Cyclotomic v = sign(order(), i + j + k) * qfact(i + j + k + 1) * qfact(i) * qfact(j) * qfact(k) /
                   (qfact(i + j) * qfact(j + k) * qfact(i + k));
    std::lock_guard<std::mutex> lk(mu_);
    theta_cache_.emplace(key, v);
    return v;
}

Cyclotomic Fusion::tet(int A, int B, int E, int C, int D, int F) const {
    std::array<int, 6> key{A, B, E, C, D, F};
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = tet_cache_.find(key);
        if (it != tet_cache_.end()) return it->second;
    }
    const int a[4] = {(A + D + E) / 2, (B + C + E) / 2, (A + B + F) / 2, (C + D + F) / 2};
    const int b[3] = {(B + D + E + F) / 2, (A + C + E + F) / 2, (A + B + C + D) / 2};
    Cyclotomic I = one();
    for (int bj : b)
        for (int ai : a) I *= qfact(bj - ai);
    Cyclotomic Ef = qfact(A) * qfact(B) * qfact(C) * qfact(D) * qfact(E) * qfact(F);
    Cyclotomic s = zero();
    const int lo = *std::max_element(a, a + 4), hi = *std::min_element(b, b + 3);
    for (int S = lo; S <= hi; ++S) {
        Cyclotomic den = one();
        for (int ai : a) den *= qfact(S - ai);
        for (int bj : b) den *= qfact(bj - S);
        s += sign(order(), S) * qfact(S + 1) / den;
    }
    Cyclotomic v = I / Ef * s;
    std::lock_guard<std::mutex> lk(mu_);
    tet_cache_.emplace(key, v);
    return v;
}

Cyclotomic Fusion::sixj(int a, int b, int c, int d, int e, int f) const {
    return tet(a, b, e, c, d, f) * delta(f) / (theta(a, b, f) * theta(c, d, f));
}

Cyclotomic Fusion::twist(int c) const {
    const long n = order();
    return sign(n, c) * Cyclotomic::zeta(n, (static_cast<long>(c) * c + 2L * c) % n);
}

Cyclotomic Fusion::hopf(int j, int k) const { return sign(order(), j + k) * qint((j + 1) * (k + 1) % order()); }

Fusion::PentagonReport Fusion::pentagon() const {
    using Edge = std::pair<int, int>;
    using State = std::vector<std::pair<Edge, int>>;  // the two diagonals, sorted
    auto side = [](int i, int j) { return Edge{std::min(i, j), std::max(i, j)}; };
    PentagonReport rep;
    const auto& C = colours_;
    std::vector<int> s(5);
    auto flip = [&](const std::map<State, Cyclotomic>& v, Edge old, Edge nw) {
        std::map<State, Cyclotomic> out;
        std::vector<int> q{old.first, old.second, nw.first, nw.second};
        std::sort(q.begin(), q.end());
        if (side(q[1], q[3]) == old) std::rotate(q.begin(), q.begin() + 1, q.end());
        for (const auto& [st, coef] : v) {
            auto col = [&](Edge e) {
                if (e.second - e.first == 1 || (e.first == 0 && e.second == 4)) return s[e.first == 0 && e.second == 4 ? 4 : e.first];
                for (const auto& [de, c] : st)
                    if (de == e) return c;
                throw PreconditionError("pentagon: missing edge");
            };
            int a = col(side(q[1], q[2])), b = col(side(q[2], q[3])), c = col(side(q[3], q[0])), d = col(side(q[0], q[1]));
            int e = col(old);
            for (int f : C) {
                if (!admissible(a, b, f) || !admissible(c, d, f)) continue;
                State st2;
                for (const auto& de : st)
                    if (de.first != old) st2.push_back(de);
                st2.push_back({nw, f});
                std::sort(st2.begin(), st2.end());
                auto it = out.find(st2);
                Cyclotomic add = coef * sixj(a, b, c, d, e, f);
                if (it == out.end())
                    out.emplace(std::move(st2), add);
                else
                    it->second += add;
            }
        }
        return out;
    };
    const std::pair<Edge, Edge> cycle[5] = {{{0, 2}, {1, 3}}, {{0, 3}, {1, 4}}, {{1, 3}, {2, 4}}, {{1, 4}, {0, 2}}, {{2, 4}, {0, 3}}};
    const size_t nc = C.size();
    for (size_t m = 0; m < nc * nc * nc * nc * nc; ++m) {
        size_t r = m;
        for (int i = 0; i < 5; ++i) {
            s[i] = C[r % nc];
            r /= nc;
        }
        for (int e1 : C)
            for (int e2 : C) {
                if (!admissible(s[0], s[1], e1) || !admissible(e1, s[2], e2) || !admissible(e2, s[3], s[4])) continue;
                ++rep.tuples;
                State st{{side(0, 2), e1}, {side(0, 3), e2}};
                std::map<State, Cyclotomic> v{{st, one()}};
                for (const auto& [o, nw] : cycle) v = flip(v, o, nw);
                for (const auto& [k, c] : v) {
                    Cyclotomic want = k == st ? one() : zero();
                    if (c != want) ++rep.nonzero;
                }
                if (!v.count(st)) ++rep.nonzero;
            }
    }
    return rep;
}

long verlinde_dim(int genus, int p, int marked_colour) {
    if (genus < 1) throw PreconditionError("verlinde_dim: genus must be at least 1");
    Fusion F(p);
    const auto& C = F.colours();
    auto loops = [&](int stem) {
        long k = 0;
        for (int a : C) k += F.admissible(a, a, stem);
        return k;
    };
    if (genus == 1) return loops(marked_colour);
    // ways[e]: colourings of the first i handles with backbone edge e
    std::map<int, long> ways;
    for (int s : C) ways[s] = loops(s);
    for (int i = 2; i <= genus; ++i) {
        std::map<int, long> next;
        for (auto [e, w] : ways)
            for (int s : C) {
                long l = loops(s);
                if (!l) continue;
                if (i == genus) {
                    if (F.admissible(e, s, marked_colour)) next[marked_colour] += w * l;
                } else {
                    for (int e2 : C)
                        if (F.admissible(e, s, e2)) next[e2] += w * l;
                }
            }
        ways = std::move(next);
    }
    return ways.count(marked_colour) ? ways[marked_colour] : 0;
}

}  // namespace scc
