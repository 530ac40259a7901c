#include "scc/tqft/representation.hpp"

#include <algorithm>
#include <numeric>

#include "scc/exact/errors.hpp"
#include "scc/exact/serialize.hpp"

namespace scc {

ExactMatrix block_inverse(const ExactMatrix& M) {
    const int d = M.dim();
    std::vector<int> parent(d);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (!M(i, j).is_zero()) parent[find(i)] = find(j);
    std::map<int, std::vector<int>> comps;
    for (int i = 0; i < d; ++i) comps[find(i)].push_back(i);
    ExactMatrix out(d, M.order());
    for (const auto& [root, idx] : comps) {
        const int m = static_cast<int>(idx.size());
        ExactMatrix B(m, M.order());
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) B(r, c) = M(idx[r], idx[c]);
        ExactMatrix Bi = B.inverse();
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) out(idx[r], idx[c]) = Bi(r, c);
    }
    return out;
}

SO3Rep::SO3Rep(int p, int genus) : F_(p) {
    if (genus != 2) throw PreconditionError("SO3Rep: the curve dictionary is implemented for genus 2 only");
    if (p < 5) throw PreconditionError("SO3Rep: the marked colour 2 needs level p >= 5");
    const auto& C = F_.colours();
    for (int a : C)
        for (int c1 : C)
            for (int c2 : C)
                for (int b : C)
                    if (F_.admissible(a, a, c1) && F_.admissible(c1, c2, 2) && F_.admissible(b, b, c2)) {
                        index_[{a, c1, c2, b}] = static_cast<int>(basis_.size());
                        basis_.push_back({a, c1, c2, b});
                    }
    for (int h = 0; h < 2; ++h) {
        Tb_[h] = build_twist_beta(h);
        build_fmove(h);
    }
    for (int h = 0; h < 2; ++h) {
        // the push along alpha_h is the twist ratio at the leg, conjugated from the theta-leg basis
        ExactMatrix P = Fi_[h] * diag_[h] * Fm_[h];
        ExactMatrix Pi = Fi_[h] * diag_inv_[h] * Fm_[h];
        ExactMatrix Tbi = block_inverse(Tb_[h]);
        gens_[2 * h] = P;
        inv_[2 * h] = Pi;
        gens_[2 * h + 1] = Pi * Tb_[h] * P * Tbi;
        inv_[2 * h + 1] = Tb_[h] * Pi * Tbi * P;
    }
    std::vector<Cyclotomic> hd;
    for (const auto& v : basis_) {
        auto [a, c1, c2, b] = v;
        hd.push_back(F_.theta(a, a, c1) * F_.theta(c1, c2, 2) * F_.theta(b, b, c2) /
                     (F_.delta(a) * F_.delta(c1) * F_.delta(c2) * F_.delta(b)));
    }
    H_ = ExactMatrix::diagonal(hd);
}

ExactMatrix SO3Rep::build_twist_beta(int h) const {
    const auto& C = F_.colours();
    const long n = order();
    const int m = static_cast<int>(C.size());
    // coefficients x_j with sum_j x_j hopf(j, k) / delta(k) = twist(k): the longitude twist
    // as a combination of loop insertions of colour j
    ExactMatrix Mx(m, n);
    for (int k = 0; k < m; ++k)
        for (int j = 0; j < m; ++j) Mx(k, j) = F_.hopf(C[j], C[k]) / F_.delta(C[k]);
    ExactMatrix Mi = Mx.inverse();
    std::vector<Cyclotomic> x(m, F_.zero());
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) x[j] += Mi(j, k) * F_.twist(C[k]);
    // loop of colour k fused into the handle loop a with stem c, giving loop a2
    auto zloop = [&](int k, int a, int c, int a2) {
        if (!F_.admissible(a, k, a2) || !F_.admissible(a2, a2, c)) return F_.zero();
        return F_.delta(a2) / F_.theta(a, k, a2) * F_.tet(a2, a2, k, a, a, c) / F_.theta(a2, a2, c);
    };
    const int d = dim();
    ExactMatrix T(d, n);
    for (int col = 0; col < d; ++col)
        for (int row = 0; row < d; ++row) {
            const Vec& v = basis_[col];
            const Vec& w = basis_[row];
            bool same = h == 0 ? (v[1] == w[1] && v[2] == w[2] && v[3] == w[3]) : (v[1] == w[1] && v[2] == w[2] && v[0] == w[0]);
            if (!same) continue;
            int a = h == 0 ? v[0] : v[3], a2 = h == 0 ? w[0] : w[3], c = h == 0 ? v[1] : v[2];
            Cyclotomic s = F_.zero();
            for (int j = 0; j < m; ++j) s += x[j] * zloop(C[j], a, c, a2);
            T(row, col) = s;
        }
    return T;
}

void SO3Rep::build_fmove(int h) {
    const auto& C = F_.colours();
    const long n = order();
    // theta-leg basis (loop, i, x, other): the leg attaches to the loop of handle h,
    // splitting it into edges loop and i; x is the far stem
    std::vector<Vec> ib;
    std::map<Vec, int> ibx;
    for (const auto& v : basis_) {
        int lp = h == 0 ? v[0] : v[3], x = h == 0 ? v[2] : v[1], other = h == 0 ? v[3] : v[0];
        for (int i : C)
            if (F_.admissible(2, lp, i) && F_.admissible(lp, i, x)) {
                Vec key{lp, i, x, other};
                if (!ibx.count(key)) {
                    ibx[key] = static_cast<int>(ib.size());
                    ib.push_back(key);
                }
            }
    }
    const int d = dim();
    if (static_cast<int>(ib.size()) != d) throw ArithmeticError("fmove: theta-leg basis has the wrong dimension");
    ExactMatrix F(d, n);
    for (int col = 0; col < d; ++col) {
        const Vec& v = basis_[col];
        int lp = h == 0 ? v[0] : v[3], j = h == 0 ? v[1] : v[2], x = h == 0 ? v[2] : v[1], other = h == 0 ? v[3] : v[0];
        for (int i : C) {
            auto it = ibx.find({lp, i, x, other});
            if (it == ibx.end()) continue;
            F(it->second, col) =
                F_.tet(lp, 2, j, x, lp, i) * F_.delta(i) / (F_.theta(lp, 2, i) * F_.theta(lp, x, i));
        }
    }
    std::vector<Cyclotomic> dg, dgi;
    for (const auto& w : ib) {
        Cyclotomic r = F_.twist(w[0]) / F_.twist(w[1]);
        dg.push_back(r);
        dgi.push_back(r.inv());
    }
    Fm_[h] = F;
    Fi_[h] = block_inverse(F);
    diag_[h] = ExactMatrix::diagonal(dg);
    diag_inv_[h] = ExactMatrix::diagonal(dgi);
}

ExactMatrix SO3Rep::twist(const std::string& curve) const {
    int slot;
    if (curve == "alpha1")
        slot = 0;
    else if (curve == "stem1")
        slot = 1;
    else if (curve == "stem2")
        slot = 2;
    else if (curve == "alpha2")
        slot = 3;
    else
        throw PreconditionError("twist: unknown decomposition curve " + curve);
    std::vector<Cyclotomic> dg;
    for (const auto& v : basis_) dg.push_back(F_.twist(v[slot]));
    return ExactMatrix::diagonal(dg);
}

ExactMatrix SO3Rep::smove(int h) const {
    ExactMatrix Ta = twist(h == 0 ? "alpha1" : "alpha2");
    return Ta * Tb_[h] * Ta;
}

ExactMatrix SO3Rep::rho(const Word& w) const {
    ExactMatrix M = ExactMatrix::identity(dim(), order());
    for (int l : w) M = M * (l > 0 ? gens_[gen_of(l)] : inv_[gen_of(l)]);
    return M;
}

bool SO3Rep::preserves_form(const ExactMatrix& M) const {
    ExactMatrix X = M.conj_transpose() * H_ * M;
    Cyclotomic c = X(0, 0) / H_(0, 0);
    return X == H_.scaled(c);
}

nlohmann::json SO3Rep::to_json() const {
    nlohmann::json gens = nlohmann::json::object();
    for (int k = 0; k < 4; ++k) gens[format_word({letter(k, 1)})] = scc::to_json(gens_[k]);
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& v : basis_) basis.push_back(v);
    return {{"genus", 2}, {"level", level()}, {"dim", dim()}, {"basis", basis}, {"generators", gens}};
}

std::string ImageOrder::to_string() const { return "p=" + std::to_string(level) + " " + order.to_string(); }

nlohmann::json ImageOrder::to_json() const {
    nlohmann::json j = {{"level", level}, {"verdict", order.to_string()}, {"route", order.route}};
    if (order.kind == ProjectiveOrder::Kind::Finite) j["k"] = order.k;
    if (order.kind == ProjectiveOrder::Kind::Infinite) j["certificate"] = scc::to_json(order.witness);
    return j;
}

ImageOrder order_of_image(const SO3Rep& R, const Word& w, const OrderOptions& opt) {
    const long p = R.level();
    ImageOrder out;
    out.level = R.level();
    out.order = projective_order(R.rho(w), 4 * p * p, opt);
    return out;
}

}  // namespace scc
