#include "intersection_core.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "scc/exact/errors.hpp"

namespace scc::detail {

const double kSegmentFactors[5] = {1.0001, 1.1371, 0.9137, 1.2713, 0.8311};

namespace {

double mid(const Interval& x) { return x.mid(); }

// centre Q(i) of the tile, Q = P h, in doubles
void centre(const IMat2& Q, double& x, double& y) {
    double a = mid(Q.a), b = mid(Q.b), c = mid(Q.c), d = mid(Q.d);
    double den = c * c + d * d;
    x = (a * c + b * d) / den;
    y = (a * d - b * c) / den;
}

double dist_to_segment(double x, double y, double s, double ks) {
    double r = std::sqrt(x * x + y * y);
    double ys = std::clamp(r, s, ks);
    return std::acosh(std::max(1.0, (x * x + y * y + ys * ys) / (2 * y * ys)));
}

double dist(double x1, double y1, double x2, double y2) {
    double dx = x1 - x2;
    return std::acosh(std::max(1.0, 1.0 + (dx * dx + (y1 - y2) * (y1 - y2)) / (2 * y1 * y2)));
}

double dist_to_point(double x, double y, double py) { return dist(x, y, 0.0, py); }

}  // namespace

Frame make_frame(const FuchsianModel& M, const Word& w0, double cfac) {
    const SurfaceGroup& G = M.group();
    Frame f;
    f.w = G.cyclic_reduce(w0, &f.conj);
    if (f.w.empty()) throw PreconditionError("identity has no geodesic");
    PrecisionScope ps(M.precision());
    f.W = M.holonomy(f.w);
    Axis ax = axis_of(f.W);
    f.va = ax.attracting;
    f.vr = ax.repelling;
    Interval det = f.va.x * f.vr.y - f.vr.x * f.va.y;
    if (det.neg())
        f.vr = {-f.vr.x, -f.vr.y};
    else if (!det.pos())
        throw PrecisionExhausted("degenerate eigenbasis");
    f.P = {f.vr.y, -f.vr.x, -f.va.y, f.va.x};
    f.kappa = ax.multiplier;
    Interval num = (f.P.a.sqr() + f.P.b.sqr()).sqrt(), den = (f.P.c.sqr() + f.P.d.sqr()).sqrt();
    f.s = num / den * Interval(cfac);
    f.s2 = f.s.sqr();
    f.ks2 = f.s2 * f.kappa.sqr();
    f.s_d = f.s.mid();
    f.kappa_d = f.kappa.mid();
    return f;
}

std::vector<Tile> segment_tiles(const FuchsianModel& M, const Frame& f, int max_tiles) {
    PrecisionScope ps(M.precision());
    const SurfaceGroup& G = M.group();
    const double s = f.s_d, ks = f.s_d * f.kappa_d;
    const double thr = M.circumradius() + 0.3;
    auto make = [&](Word w, IMat2 m) {
        Tile t{std::move(w), std::move(m), 0, 0};
        centre(f.P * t.m, t.x, t.y);
        return t;
    };
    // walk to the tile whose Dirichlet domain contains the segment start i s
    Tile cur = make({}, IMat2::identity());
    for (int steps = 0;; ++steps) {
        if (steps > 100000) throw PrecisionExhausted("tile walk did not terminate");
        double best = dist_to_point(cur.x, cur.y, s);
        int arg = 0;
        Tile cand;
        for (const Word& x : G.generators()) {
            Tile t = make(concat(cur.word, x), cur.m * M.generator(x[0]));
            double d = dist_to_point(t.x, t.y, s);
            if (d < best - 1e-9) {
                best = d;
                arg = x[0];
                cand = std::move(t);
            }
        }
        if (!arg) break;
        cand.word = free_reduce(cand.word);
        cur = std::move(cand);
    }
    // breadth-first search over tiles near the segment
    std::map<std::pair<long, long>, std::vector<int>> index;
    std::vector<Tile> tiles;
    auto key = [&](const Tile& t) {
        return std::make_pair(std::lround(std::log(t.y / s) * 64.0), std::lround(t.x / t.y * 64.0));
    };
    auto find = [&](const Tile& t) {
        auto k = key(t);
        for (long da = -1; da <= 1; ++da)
            for (long db = -1; db <= 1; ++db) {
                auto it = index.find({k.first + da, k.second + db});
                if (it == index.end()) continue;
                for (int i : it->second)
                    if (dist(t.x, t.y, tiles[i].x, tiles[i].y) < 1e-3) return i;
            }
        return -1;
    };
    std::map<std::pair<long, long>, int> far_keys;
    std::deque<int> queue;
    tiles.push_back(std::move(cur));
    index[key(tiles[0])].push_back(0);
    queue.push_back(0);
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        for (const Word& x : G.generators()) {
            Tile t = make(free_reduce(concat(tiles[i].word, x)), tiles[i].m * M.generator(x[0]));
            if (find(t) >= 0) continue;
            auto k = key(t);
            if (far_keys.count(k)) continue;
            if (dist_to_segment(t.x, t.y, s, ks) > thr) {
                far_keys[k] = 1;
                continue;
            }
            if (static_cast<int>(tiles.size()) >= max_tiles) throw PrecisionExhausted("tile budget exhausted");
            index[k].push_back(static_cast<int>(tiles.size()));
            queue.push_back(static_cast<int>(tiles.size()));
            tiles.push_back(std::move(t));
        }
    }
    return tiles;
}

std::vector<Lift> crossing_lifts(const FuchsianModel& M, const Frame& f1, const std::vector<Tile>& t1, const Frame& f2,
                                 const std::vector<Tile>& t2, const LiftFilter& filter) {
    PrecisionScope ps(M.precision());
    const SurfaceGroup& G = M.group();
    std::vector<Lift> out;
    std::vector<IMat2> inv2;
    inv2.reserve(t2.size());
    for (const auto& t : t2) inv2.push_back(t.m.inv_sl2());
    std::vector<IMat2> P1h;
    P1h.reserve(t1.size());
    for (const auto& t : t1) P1h.push_back(f1.P * t.m);
    for (size_t i = 0; i < t1.size(); ++i) {
        for (size_t j = 0; j < t2.size(); ++j) {
            IMat2 Pg = P1h[i] * inv2[j];
            IVec2 u = apply(Pg, f2.vr), v = apply(Pg, f2.va);
            bool degenerate = u.x.contains_zero() || u.y.contains_zero() || v.x.contains_zero() || v.y.contains_zero();
            int su = 0, sv = 0;
            if (!degenerate) {
                su = u.x.sign() * u.y.sign();
                sv = v.x.sign() * v.y.sign();
                if (su == sv) continue;  // both endpoints on one side: no crossing
            }
            Word g = free_reduce(concat(t1[i].word, inverse(t2[j].word)));
            if (filter && !filter(g)) continue;
            if (degenerate) {
                // shares an endpoint with axis(f1): only possible for the same axis
                Word conjw2 = concat({g, f2.w, inverse(g)});
                if (G.commute(conjw2, f1.w)) continue;
                throw PrecisionExhausted("endpoint sign undecided");
            }
            Interval H = -(u.x * v.x) / (u.y * v.y);
            if (H.less(f1.s2) || f1.ks2.less(H)) continue;
            if (!(f1.s2.less(H) && H.less(f1.ks2))) throw BoundaryHit("crossing on the segment boundary");
            bool dup = false;
            for (const Lift& L : out) {
                if (!(L.u.x.overlaps(u.x * L.u.y / u.y) && L.v.x.overlaps(v.x * L.v.y / v.y))) continue;
                if (G.commute(free_reduce(concat(inverse(L.g), g)), f2.w)) {
                    dup = true;
                    break;
                }
                throw PrecisionExhausted("distinct lifts not separated");
            }
            if (!dup) out.push_back({std::move(g), std::move(u), std::move(v), std::move(H)});
        }
    }
    return out;
}

std::optional<std::pair<Word, int>> geometric_root(const FuchsianModel& M, const Frame& f, const std::vector<Tile>& tiles) {
    PrecisionScope ps(M.precision());
    const SurfaceGroup& G = M.group();
    // tiles containing the segment start (ties included)
    double dmin = 1e300;
    for (const auto& t : tiles) dmin = std::min(dmin, dist_to_point(t.x, t.y, f.s_d));
    std::vector<const Tile*> start;
    for (const auto& t : tiles)
        if (dist_to_point(t.x, t.y, f.s_d) <= dmin + 1e-6) start.push_back(&t);
    struct Cand {
        double len;
        Word rho;
    };
    std::vector<Cand> cands;
    Interval lw = f.kappa.log();
    for (const Tile* h0 : start) {
        IMat2 h0i = h0->m.inv_sl2();
        for (const auto& h : tiles) {
            IMat2 R = h.m * h0i;
            IMat2 PR = f.P * R;
            IVec2 a = apply(PR, f.vr), b = apply(PR, f.va);
            if (!a.x.contains_zero() || !b.y.contains_zero()) continue;
            Word rho = G.dehn_reduce(concat(h.word, inverse(h0->word)));
            if (rho.empty() || !G.commute(rho, f.w)) continue;
            Interval t = R.trace().abs();
            if (!Interval(2.0).less(t)) continue;
            cands.push_back({(Interval(2.0) * (t * Interval(0.5)).acosh()).mid(), rho});
        }
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.len < b.len; });
    for (const auto& c : cands) {
        long n = std::lround(lw.mid() / c.len);
        if (n < 2) break;
        for (int sgn : {1, -1}) {
            Word r = sgn > 0 ? c.rho : inverse(c.rho);
            if (G.is_identity(concat(power(r, static_cast<int>(n)), inverse(f.w))))
                return std::make_pair(G.dehn_reduce(concat({f.conj, r, inverse(f.conj)})), static_cast<int>(n));
        }
    }
    return std::nullopt;
}

std::vector<std::pair<double, double>> lift_angles(const Frame& f, const std::vector<Tile>& tiles) {
    std::vector<std::pair<double, double>> out;
    auto angle = [](const IVec2& p) {
        double X = p.x.mid(), Y = p.y.mid();
        double n = std::hypot(X, Y);
        X /= n;
        Y /= n;
        return std::atan2(-2 * X * Y, X * X - Y * Y);
    };
    for (const auto& t : tiles) {
        IMat2 hi = t.m.inv_sl2();
        out.emplace_back(angle(apply(hi, f.va)), angle(apply(hi, f.vr)));
    }
    return out;
}

}  // namespace scc::detail
