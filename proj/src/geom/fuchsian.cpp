#include "scc/geom/fuchsian.hpp"

#include <cmath>

#include "scc/exact/errors.hpp"

namespace scc {

IMat2 IMat2::identity() { return {Interval(1.0), Interval(0.0), Interval(0.0), Interval(1.0)}; }

IMat2 IMat2::operator*(const IMat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

IMat2 IMat2::inv_sl2() const { return {d, -b, -c, a}; }

bool IMat2::contains_identity() const { return a.contains(1) && b.contains(0) && c.contains(0) && d.contains(1); }
bool IMat2::contains_minus_identity() const { return a.contains(-1) && b.contains(0) && c.contains(0) && d.contains(-1); }

double IMat2::max_width() const { return std::max(std::max(a.width(), b.width()), std::max(c.width(), d.width())); }

IVec2 apply(const IMat2& m, const IVec2& v) { return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y}; }

namespace {

IMat2 rot(const Interval& theta) {
    Interval h = theta * Interval(0.5);
    Interval c = h.cos(), s = h.sin();
    return {c, s, -s, c};
}

}  // namespace

FuchsianModel::FuchsianModel(const SurfaceGroup& G, mpfr_prec_t bits) : G_(G), bits_(bits) {
    PrecisionScope ps(bits);
    const int g = G.genus();
    const long N = 4L * g;
    Interval pi = Interval::pi();
    Interval ang = pi / Interval::point(N);
    Interval cot = ang.cos() / ang.sin();
    Interval E = cot + (cot.sqr() - Interval(1.0)).sqrt();  // exp(t/2), cosh(t/2) = cot(pi/N)
    IMat2 D{E, Interval(0.0), Interval(0.0), Interval(1.0) / E};
    auto pair = [&](long j, long m) {
        Interval thm = Interval(2.0) * pi * Interval::point(m) / Interval::point(N);
        Interval thj = pi - Interval(2.0) * pi * Interval::point(j) / Interval::point(N);
        return rot(thm) * D * rot(thj);
    };
    gens_.assign(4 * g + 1, IMat2::identity());
    for (int i = 0; i < g; ++i) {
        IMat2 a = pair(4 * i + 2, 4 * i), b = pair(4 * i + 1, 4 * i + 3);
        gens_[letter(2 * i, 1) + 2 * g] = a;
        gens_[letter(2 * i, -1) + 2 * g] = a.inv_sl2();
        gens_[letter(2 * i + 1, 1) + 2 * g] = b;
        gens_[letter(2 * i + 1, -1) + 2 * g] = b.inv_sl2();
    }
    double c = 1.0 / std::tan(M_PI / static_cast<double>(N));
    side_t_ = 2.0 * std::acosh(c);
    circ_r_ = std::acosh(c * c);
}

IMat2 FuchsianModel::holonomy(const Word& w) const {
    PrecisionScope ps(bits_);
    IMat2 m = IMat2::identity();
    for (int l : w) m = m * generator(l);
    return m;
}

Interval FuchsianModel::translation_length(const Word& w) const {
    if (G_.is_identity(w)) throw PreconditionError("translation_length of the identity");
    PrecisionScope ps(bits_);
    Interval t = holonomy(w).trace().abs();
    if (!Interval(2.0).less(t)) throw PrecisionExhausted("trace not certified > 2");
    return Interval(2.0) * (t * Interval(0.5)).acosh();
}

std::shared_ptr<const FuchsianModel> FuchsianModel::at_precision(mpfr_prec_t bits) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(bits);
    if (it != cache_.end()) return it->second;
    auto m = std::make_shared<const FuchsianModel>(G_, bits);
    cache_[bits] = m;
    return m;
}

Axis axis_of(const IMat2& W0) {
    IMat2 W = W0;
    Interval tr = W.trace();
    if (tr.neg()) W = {-W.a, -W.b, -W.c, -W.d};
    tr = W.trace();
    if (!Interval(2.0).less(tr)) throw PrecisionExhausted("axis: trace not certified > 2");
    Interval disc = (tr.sqr() - Interval(4.0)).sqrt();
    Interval la = (tr + disc) * Interval(0.5), lr = (tr - disc) * Interval(0.5);
    auto eig = [&](const Interval& l) {
        IVec2 v1{W.b, l - W.a}, v2{l - W.d, W.c};
        double m1 = std::fabs(v1.x.mid()) + std::fabs(v1.y.mid());
        double m2 = std::fabs(v2.x.mid()) + std::fabs(v2.y.mid());
        return m1 >= m2 ? v1 : v2;
    };
    Axis ax{eig(la), eig(lr), la / lr, Interval(2.0) * (tr * Interval(0.5)).acosh()};
    return ax;
}

Distortion distortion_constant(const FuchsianModel& M, int r) {
    const SurfaceGroup& G = M.group();
    Distortion best{0.0, {}};
    PrecisionScope ps(M.precision());
    struct Frame {
        Word w;
        IMat2 h;
    };
    std::vector<Frame> stack{{{}, IMat2::identity()}};
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (!f.w.empty()) {
            int lx = G.length(f.w);
            if (lx > 0) {
                Interval t = f.h.trace().abs();
                if (Interval(2.0).less(t)) {
                    double ratio = (Interval(2.0) * (t * Interval(0.5)).acosh()).hi() / lx;
                    if (ratio > best.lambda) best = {ratio, G.dehn_reduce(f.w)};
                }
            }
        }
        if (static_cast<int>(f.w.size()) == r) continue;
        for (int k = 0; k < G.num_generators(); ++k)
            for (int s : {1, -1}) {
                int l = letter(k, s);
                if (!f.w.empty() && f.w.back() == -l) continue;
                Word w = f.w;
                w.push_back(l);
                stack.push_back({std::move(w), f.h * M.generator(l)});
            }
    }
    return best;
}

}  // namespace scc
