#include "scc/geom/intersection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_map>

#include "intersection_core.hpp"
#include "scc/exact/errors.hpp"

namespace scc {

using detail::BoundaryHit;
using detail::Frame;
using detail::Lift;
using detail::Tile;

namespace {

// Runs fn(model, cfac) over the segment factors, doubling precision on PrecisionExhausted.
// Returns false if max_bits is reached without success.
template <class Fn>
bool escalate(const FuchsianModel& M, mpfr_prec_t max_bits, Fn&& fn) {
    for (mpfr_prec_t bits = M.precision(); bits <= std::max(max_bits, M.precision()); bits *= 2) {
        auto Mb = M.at_precision(bits);
        for (double cfac : detail::kSegmentFactors) {
            try {
                if (fn(*Mb, cfac)) return true;
                break;  // fn asked for more precision
            } catch (const BoundaryHit&) {
                continue;
            } catch (const PrecisionExhausted&) {
                break;
            }
        }
    }
    return false;
}

struct SelfRun {
    Frame f;
    std::vector<Lift> lifts;
    int tiles = 0;
    mpfr_prec_t bits = 0;
    std::shared_ptr<const FuchsianModel> model;
};

LiftFilter conjugated(const LiftFilter& filter, const Word& left, const Word& right) {
    if (!filter) return {};
    return [=](const Word& g) { return filter(free_reduce(concat({left, g, inverse(right)}))); };
}

std::optional<SelfRun> run_self(const FuchsianModel& M, const Word& w, const LiftFilter& filter,
                                const SearchLimits& lim) {
    SelfRun out;
    bool ok = escalate(M, lim.max_bits, [&](const FuchsianModel& Mb, double cfac) {
        Frame f = detail::make_frame(Mb, w, cfac);
        auto tiles = detail::segment_tiles(Mb, f, lim.max_tiles);
        auto lifts = detail::crossing_lifts(Mb, f, tiles, f, tiles, conjugated(filter, f.conj, f.conj));
        if (lifts.size() % 2) return false;
        out.tiles = static_cast<int>(tiles.size());
        out.f = std::move(f);
        out.lifts = std::move(lifts);
        out.bits = Mb.precision();
        out.model = Mb.at_precision(Mb.precision());
        return true;
    });
    if (!ok) return std::nullopt;
    std::sort(out.lifts.begin(), out.lifts.end(), [](const Lift& a, const Lift& b) { return word_less(a.g, b.g); });
    return out;
}

void check_nontrivial(const SurfaceGroup& G, const Word& w) {
    if (G.is_identity(w)) throw PreconditionError("identity element has no closed geodesic");
}

}  // namespace

nlohmann::json SelfIntersectionReport::to_json() const {
    nlohmann::json wit = nlohmann::json::array();
    for (const auto& u : witnesses) wit.push_back(format_word(u));
    return {{"word", format_word(word)}, {"count", count},          {"certified", certified},
            {"witnesses", wit},          {"precision_bits", precision_bits}, {"tiles", tiles}};
}

SelfIntersectionReport self_intersection(const FuchsianModel& M, const Word& w, const LiftFilter& in_subgroup,
                                         const SearchLimits& lim) {
    const SurfaceGroup& G = M.group();
    check_nontrivial(G, w);
    SelfIntersectionReport rep;
    rep.word = w;
    auto run = run_self(M, w, in_subgroup, lim);
    if (!run) return rep;
    rep.certified = true;
    rep.count = static_cast<int>(run->lifts.size() / 2);
    rep.precision_bits = run->bits;
    rep.tiles = run->tiles;
    for (const auto& L : run->lifts) rep.witnesses.push_back(G.dehn_reduce(concat({run->f.conj, L.g, inverse(run->f.conj)})));
    return rep;
}

SelfIntersectionReport mutual_intersection(const FuchsianModel& M, const Word& w1, const Word& w2,
                                           const LiftFilter& in_subgroup, const SearchLimits& lim) {
    const SurfaceGroup& G = M.group();
    check_nontrivial(G, w1);
    check_nontrivial(G, w2);
    SelfIntersectionReport rep;
    rep.word = w1;
    escalate(M, lim.max_bits, [&](const FuchsianModel& Mb, double cfac) {
        Frame f1 = detail::make_frame(Mb, w1, cfac);
        Frame f2 = detail::make_frame(Mb, w2, detail::kSegmentFactors[0]);
        auto t1 = detail::segment_tiles(Mb, f1, lim.max_tiles);
        auto t2 = detail::segment_tiles(Mb, f2, lim.max_tiles);
        auto lifts = detail::crossing_lifts(Mb, f1, t1, f2, t2, conjugated(in_subgroup, f1.conj, f2.conj));
        rep.certified = true;
        rep.count = static_cast<int>(lifts.size());
        rep.precision_bits = Mb.precision();
        rep.tiles = static_cast<int>(t1.size());
        rep.witnesses.clear();
        for (const auto& L : lifts) rep.witnesses.push_back(G.dehn_reduce(concat({f1.conj, L.g, inverse(f2.conj)})));
        return true;
    });
    return rep;
}

bool is_simple(const FuchsianModel& M, const Word& w) {
    auto rep = self_intersection(M, w);
    if (!rep.certified) throw PrecisionExhausted("self-intersection count not certified for " + format_word(w));
    return rep.count == 0;
}

std::optional<std::pair<Word, int>> is_proper_power(const FuchsianModel& M, const Word& w) {
    const SurfaceGroup& G = M.group();
    check_nontrivial(G, w);
    if (auto lit = G.literal_power(w)) {
        // the literal root may itself be a power
        if (auto inner = is_proper_power(M, lit->first)) return std::make_pair(inner->first, inner->second * lit->second);
        return lit;
    }
    std::optional<std::pair<Word, int>> out;
    bool ok = escalate(M, 4096, [&](const FuchsianModel& Mb, double cfac) {
        Frame f = detail::make_frame(Mb, w, cfac);
        auto tiles = detail::segment_tiles(Mb, f, SearchLimits{}.max_tiles);
        out = detail::geometric_root(Mb, f, tiles);
        return true;
    });
    if (!ok) throw PrecisionExhausted("proper power search failed for " + format_word(w));
    if (out) {
        if (auto inner = is_proper_power(M, out->first)) return std::make_pair(inner->first, inner->second * out->second);
    }
    return out;
}

namespace {

// isometric circle of a unit-disk matrix [[al, be], [conj be, conj al]]: centre -conj(al)/conj(be), radius 1/|be|
struct Circle {
    Interval cx, cy, r;
};

std::vector<Circle> isometric_circles(const IMat2& m) {
    Interval ar = (m.a + m.d) * Interval(0.5), ai = (m.b - m.c) * Interval(0.5);
    Interval br = (m.a - m.d) * Interval(0.5), bi = -(m.b + m.c) * Interval(0.5);
    Interval nb = br.sqr() + bi.sqr();
    // al / be = al conj(be) / |be|^2
    Interval qr = (ar * br + ai * bi) / nb, qi = (ai * br - ar * bi) / nb;
    Interval r = Interval(1.0) / nb.sqrt();
    // the inverse has centre al / conj(be) = al be / |be|^2
    Interval pr = (ar * br - ai * bi) / nb, pi = (ar * bi + ai * br) / nb;
    return {{-qr, qi, r}, {pr, pi, r}};
}

bool disjoint(const Circle& a, const Circle& b) {
    Interval d2 = (a.cx - b.cx).sqr() + (a.cy - b.cy).sqr();
    return (a.r + b.r).sqr().less(d2);
}

int pingpong_power(const FuchsianModel& M, const Word& g1, const Word& g2) {
    PrecisionScope ps(M.precision());
    for (int m = 1; m <= 16; ++m) {
        try {
            auto c = isometric_circles(M.holonomy(power(g1, m)));
            auto d = isometric_circles(M.holonomy(power(g2, m)));
            c.insert(c.end(), d.begin(), d.end());
            bool ok = true;
            for (size_t i = 0; i < c.size() && ok; ++i)
                for (size_t j = i + 1; j < c.size() && ok; ++j) ok = disjoint(c[i], c[j]);
            if (ok) return m;
        } catch (const PrecisionExhausted&) {
        }
    }
    return 0;
}

}  // namespace

FigureEight figure_eight_decompose(const FuchsianModel& M, const Word& w, const LiftFilter& in_subgroup) {
    const SurfaceGroup& G = M.group();
    auto run = run_self(M, w, in_subgroup, {});
    if (!run) throw PrecisionExhausted("self-intersection count not certified for " + format_word(w));
    if (run->lifts.empty()) throw PreconditionError("figure_eight_decompose: " + format_word(w) + " is simple");
    const FuchsianModel& Mb = *run->model;
    PrecisionScope ps(Mb.precision());
    const Frame& f = run->f;
    const Lift& L = run->lifts.front();
    // crossing point i h on the axis; its preimage under g lies on the axis at height h'
    Interval h = L.H.sqrt();
    IMat2 Q = f.P * Mb.holonomy(inverse(L.g)) * f.P.inv_sl2();
    Interval hp = h * Q.det() / (Q.c.sqr() * L.H + Q.d.sqr());
    long k = std::lround(std::ceil((h / hp).log().mid() / f.kappa.log().mid()));
    FigureEight fe;
    fe.conjugator = f.conj;
    fe.witness = L.g;
    fe.crossing_height = h.mid();
    fe.gamma1 = G.dehn_reduce(concat(power(f.w, static_cast<int>(k)), inverse(L.g)));
    fe.gamma2 = G.dehn_reduce(concat(f.w, inverse(fe.gamma1)));
    fe.free_exact = !G.commute(fe.gamma1, fe.gamma2);
    fe.pingpong_power = pingpong_power(Mb, fe.gamma1, fe.gamma2);
    return fe;
}

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

constexpr double kAngleRes = 1e5;
const long kAngleBuckets = std::lround(2 * M_PI * kAngleRes);

long angle_key(double t) {
    long k = std::lround((t < 0 ? t + 2 * M_PI : t) * kAngleRes);
    return ((k % kAngleBuckets) + kAngleBuckets) % kAngleBuckets;
}

struct ClassLifts {
    std::vector<Tile> tiles;
    std::vector<std::pair<double, double>> angles;
    Word w;
};

ClassLifts class_lifts(const FuchsianModel& M, const Word& w) {
    ClassLifts out;
    bool ok = escalate(M, 4096, [&](const FuchsianModel& Mb, double cfac) {
        Frame f = detail::make_frame(Mb, w, cfac);
        out.tiles = detail::segment_tiles(Mb, f, SearchLimits{}.max_tiles);
        out.angles = detail::lift_angles(f, out.tiles);
        out.w = f.w;
        return true;
    });
    if (!ok) throw PrecisionExhausted("lift computation failed for " + format_word(w));
    return out;
}

// exact check that h2 h1^-1 conjugates a onto b
bool verify_conjugator(const SurfaceGroup& G, const ClassLifts& a, size_t i, const ClassLifts& b, size_t j) {
    Word x = concat(b.tiles[j].word, inverse(a.tiles[i].word));
    return G.is_identity(concat({x, a.w, inverse(x), inverse(b.w)}));
}

double angle_gap(double s, double t) {
    double d = std::fabs(s - t);
    return std::min(d, 2 * M_PI - d);
}

}  // namespace

std::vector<Word> enumerate_classes(const FuchsianModel& M, int r) {
    const SurfaceGroup& G = M.group();
    if (r <= 0) return {};
    std::set<Word> canon;
    for (const Word& w : all_reduced_words(G.genus(), r)) {
        if (w.empty()) continue;
        Word c = G.canonical_cyclic(w);
        if (!c.empty()) canon.insert(std::move(c));
    }
    std::vector<Word> cand(canon.begin(), canon.end());
    std::vector<ClassLifts> lifts;
    lifts.reserve(cand.size());
    for (const Word& w : cand) lifts.push_back(class_lifts(M, w));
    UnionFind uf(cand.size());
    std::unordered_map<long long, std::vector<std::pair<int, int>>> buckets;
    auto key = [](long a, long b) { return a * kAngleBuckets + b; };
    for (size_t c = 0; c < cand.size(); ++c) {
        for (size_t t = 0; t < lifts[c].angles.size(); ++t) {
            auto [ta, tr] = lifts[c].angles[t];
            long ka = angle_key(ta), kr = angle_key(tr);
            for (long da = -1; da <= 1; ++da)
                for (long dr = -1; dr <= 1; ++dr) {
                    long na = (ka + da + kAngleBuckets) % kAngleBuckets, nr = (kr + dr + kAngleBuckets) % kAngleBuckets;
                    auto it = buckets.find(key(na, nr));
                    if (it == buckets.end()) continue;
                    for (auto [c2, t2] : it->second) {
                        if (uf.find(c2) == uf.find(static_cast<int>(c))) continue;
                        auto [sa, sr] = lifts[c2].angles[t2];
                        if (angle_gap(sa, ta) > 1e-6 || angle_gap(sr, tr) > 1e-6) continue;
                        if (verify_conjugator(G, lifts[c2], t2, lifts[c], t)) uf.unite(c2, static_cast<int>(c));
                    }
                }
            buckets[key(ka, kr)].push_back({static_cast<int>(c), static_cast<int>(t)});
        }
    }
    std::map<int, Word> best;
    for (size_t c = 0; c < cand.size(); ++c) {
        int root = uf.find(static_cast<int>(c));
        auto it = best.find(root);
        if (it == best.end() || word_less(cand[c], it->second)) best[root] = cand[c];
    }
    std::vector<Word> out;
    for (auto& [root, w] : best) out.push_back(w);
    std::sort(out.begin(), out.end(), word_less);
    return out;
}

bool are_conjugate(const FuchsianModel& M, const Word& a, const Word& b) {
    const SurfaceGroup& G = M.group();
    check_nontrivial(G, a);
    check_nontrivial(G, b);
    if (G.canonical_cyclic(a) == G.canonical_cyclic(b)) return true;
    {
        PrecisionScope ps(M.precision());
        Interval la = M.translation_length(a), lb = M.translation_length(b);
        if (la.less(lb) || lb.less(la)) return false;
    }
    ClassLifts A = class_lifts(M, G.cyclic_reduce(a)), B = class_lifts(M, G.cyclic_reduce(b));
    for (size_t i = 0; i < A.angles.size(); ++i)
        for (size_t j = 0; j < B.angles.size(); ++j) {
            if (angle_gap(A.angles[i].first, B.angles[j].first) > 1e-6) continue;
            if (angle_gap(A.angles[i].second, B.angles[j].second) > 1e-6) continue;
            if (verify_conjugator(G, A, i, B, j)) return true;
        }
    return false;
}

std::vector<QuadraticRow> quadratic_bound_report(const FuchsianModel& M, int r) {
    const SurfaceGroup& G = M.group();
    std::vector<QuadraticRow> rows(std::max(r, 0));
    for (int l = 1; l <= r; ++l) rows[l - 1].length = l;
    for (const Word& w : enumerate_classes(M, r)) {
        if (is_proper_power(M, w)) continue;
        int l = G.length(w);
        QuadraticRow& row = rows[l - 1];
        ++row.classes;
        auto rep = self_intersection(M, w);
        if (!rep.certified) {
            row.certified = false;
            continue;
        }
        if (rep.count > row.max_count || row.argmax.empty()) {
            row.max_count = rep.count;
            row.argmax = w;
        }
    }
    double C = 0;
    for (auto& row : rows) {
        C = std::max(C, static_cast<double>(row.max_count) / (row.length * row.length));
        row.fitted_C = C;
    }
    return rows;
}

}  // namespace scc
