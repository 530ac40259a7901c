#include "scc/covers/covers.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "scc/exact/errors.hpp"

namespace scc {

namespace {

std::string gen_name(int k) { return format_word({letter(k, 1)}); }

int column(int l) { return 2 * gen_of(l) + (l < 0 ? 1 : 0); }

// partial coset table: row per sheet, column per signed generator, -1 undefined
struct Partial {
    int cols = 0;
    int n = 0;  // sheets defined
    std::vector<int> T;
    int& at(int c, int x) { return T[static_cast<size_t>(c) * cols + x]; }
    int at(int c, int x) const { return T[static_cast<size_t>(c) * cols + x]; }
};

// Scan the relator from every sheet, deducing single-gap entries. False on contradiction.
bool close(Partial& P, const std::vector<int>& rel) {
    const int L = static_cast<int>(rel.size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int c = 0; c < P.n; ++c) {
            int f = c, i = 0;
            while (i < L && P.at(f, column(rel[i])) >= 0) f = P.at(f, column(rel[i++]));
            if (i == L) {
                if (f != c) return false;
                continue;
            }
            int b = c, j = L;
            while (j > i && P.at(b, column(-rel[j - 1])) >= 0) b = P.at(b, column(-rel[--j]));
            if (j == i) {
                if (f != b) return false;
            } else if (j == i + 1) {
                int x = column(rel[i]);
                if (P.at(b, x ^ 1) >= 0) return false;
                P.at(f, x) = b;
                P.at(b, x ^ 1) = f;
                changed = true;
            }
        }
    }
    return true;
}

// renumber sheets by first appearance from basepoint b, scanning rows then columns
std::vector<int> standardise(const Partial& P, int b) {
    std::vector<int> num(P.n, -1), order;
    num[b] = 0;
    order.push_back(b);
    for (size_t k = 0; k < order.size(); ++k)
        for (int x = 0; x < P.cols; ++x) {
            int d = P.at(order[k], x);
            if (num[d] < 0) {
                num[d] = static_cast<int>(order.size());
                order.push_back(d);
            }
        }
    std::vector<int> out(P.T.size());
    for (int k = 0; k < P.n; ++k)
        for (int x = 0; x < P.cols; ++x) out[static_cast<size_t>(k) * P.cols + x] = num[P.at(order[k], x)];
    return out;
}

CosetTable to_table(int genus, const std::vector<int>& T, int n) {
    CosetTable t;
    t.genus = genus;
    t.degree = n;
    const int cols = 4 * genus;
    t.perm.assign(2 * genus, std::vector<int>(n));
    for (int c = 0; c < n; ++c)
        for (int k = 0; k < 2 * genus; ++k) t.perm[k][c] = T[static_cast<size_t>(c) * cols + 2 * k];
    return t;
}

struct Search {
    int genus, degree;
    CoverClasses mode;
    const std::function<bool(const CosetTable&)>& fn;
    Word rel;
    bool stopped = false;

    void emit(const Partial& P) {
        std::vector<int> s0 = standardise(P, 0);
        if (mode == CoverClasses::PerConjugacyClass)
            for (int b = 1; b < P.n; ++b)
                if (standardise(P, b) < s0) return;
        if (!fn(to_table(genus, s0, P.n))) stopped = true;
    }

    void run(Partial P) {
        if (stopped) return;
        int c = 0, x = 0;
        bool open = false;
        for (c = 0; c < P.n && !open; ++c)
            for (x = 0; x < P.cols; ++x)
                if (P.at(c, x) < 0) {
                    open = true;
                    break;
                }
        if (!open) {
            if (P.n == degree) emit(P);
            return;
        }
        --c;
        for (int d = 0; d <= P.n && d < degree; ++d) {
            Partial Q = P;
            if (d == P.n) ++Q.n;
            if (Q.at(d, x ^ 1) >= 0) continue;
            Q.at(c, x) = d;
            Q.at(d, x ^ 1) = c;
            if (close(Q, rel)) run(std::move(Q));
            if (stopped) return;
        }
    }
};

}  // namespace

CosetTable CosetTable::trivial(int genus) {
    CosetTable t;
    t.genus = genus;
    t.degree = 1;
    t.perm.assign(2 * genus, std::vector<int>{0});
    return t;
}

int CosetTable::act(int sheet, const Word& w) const {
    for (int l : w) {
        const auto& p = perm[gen_of(l)];
        if (l > 0) {
            sheet = p[sheet];
        } else {
            sheet = static_cast<int>(std::find(p.begin(), p.end(), sheet) - p.begin());
        }
    }
    return sheet;
}

std::vector<int> CosetTable::permutation(const Word& w) const {
    std::vector<int> out(degree);
    for (int i = 0; i < degree; ++i) out[i] = act(i, w);
    return out;
}

bool CosetTable::is_valid() const {
    if (degree < 1 || static_cast<int>(perm.size()) != 2 * genus) return false;
    for (const auto& p : perm) {
        if (static_cast<int>(p.size()) != degree) return false;
        std::vector<int> s = p;
        std::sort(s.begin(), s.end());
        for (int i = 0; i < degree; ++i)
            if (s[i] != i) return false;
    }
    Word rel;
    for (int i = 0; i < genus; ++i) {
        Word c = commutator({letter(2 * i, 1)}, {letter(2 * i + 1, 1)});
        rel.insert(rel.end(), c.begin(), c.end());
    }
    for (int i = 0; i < degree; ++i)
        if (act(i, rel) != i) return false;
    std::vector<bool> seen(degree, false);
    std::deque<int> q{0};
    seen[0] = true;
    int reached = 1;
    while (!q.empty()) {
        int s = q.front();
        q.pop_front();
        for (const auto& p : perm)
            for (int d : {p[s], static_cast<int>(std::find(p.begin(), p.end(), s) - p.begin())})
                if (!seen[d]) {
                    seen[d] = true;
                    ++reached;
                    q.push_back(d);
                }
    }
    return reached == degree;
}

nlohmann::json CosetTable::to_json() const {
    nlohmann::json perms = nlohmann::json::object();
    for (int k = 0; k < 2 * genus; ++k) {
        std::vector<int> one(perm[k]);
        for (int& v : one) ++v;
        perms[gen_name(k)] = one;
    }
    return {{"genus", genus}, {"degree", degree}, {"perms", perms}};
}

CosetTable CosetTable::from_json(const nlohmann::json& j) {
    CosetTable t;
    t.genus = j.at("genus").get<int>();
    t.degree = j.at("degree").get<int>();
    for (int k = 0; k < 2 * t.genus; ++k) {
        auto one = j.at("perms").at(gen_name(k)).get<std::vector<int>>();
        for (int& v : one) --v;
        t.perm.push_back(std::move(one));
    }
    if (!t.is_valid()) throw PreconditionError("invalid coset table");
    return t;
}

bool for_each_cover(int genus, int degree, CoverClasses mode, const std::function<bool(const CosetTable&)>& fn) {
    if (genus < 1 || degree < 1) return true;
    Search s{genus, degree, mode, fn, {}};
    for (int i = 0; i < genus; ++i) {
        Word c = commutator({letter(2 * i, 1)}, {letter(2 * i + 1, 1)});
        s.rel.insert(s.rel.end(), c.begin(), c.end());
    }
    Partial P;
    P.cols = 4 * genus;
    P.n = 1;
    P.T.assign(static_cast<size_t>(degree) * P.cols, -1);
    s.run(std::move(P));
    return !s.stopped;
}

std::vector<CosetTable> low_index_covers(int genus, int max_degree, CoverClasses mode) {
    std::vector<CosetTable> out;
    for (int d = 1; d <= max_degree; ++d)
        for_each_cover(genus, d, mode, [&](const CosetTable& t) {
            out.push_back(t);
            return true;
        });
    return out;
}

int cover_genus(const CosetTable& t) { return t.degree * (t.genus - 1) + 1; }

std::optional<std::vector<int>> refinement_map(const CosetTable& fine, const CosetTable& coarse) {
    if (fine.genus != coarse.genus || fine.degree % coarse.degree) return std::nullopt;
    std::vector<int> phi(fine.degree, -1);
    phi[0] = 0;
    std::deque<int> q{0};
    while (!q.empty()) {
        int s = q.front();
        q.pop_front();
        for (int k = 0; k < 2 * fine.genus; ++k)
            for (int sign : {1, -1}) {
                Word x{letter(k, sign)};
                int d = fine.act(s, x), e = coarse.act(phi[s], x);
                if (phi[d] < 0) {
                    phi[d] = e;
                    q.push_back(d);
                } else if (phi[d] != e) {
                    return std::nullopt;
                }
            }
    }
    return phi;
}

LiftFilter subgroup_filter(const CosetTable& t) {
    if (t.degree == 1) return {};
    return [t](const Word& g) { return t.contains(g); };
}

SelfIntersectionReport lifted_self_intersection(const FuchsianModel& M, const CosetTable& t, const Word& w) {
    if (!t.contains(w)) throw PreconditionError(format_word(w) + " does not lift to a closed curve in this cover");
    return self_intersection(M, w, subgroup_filter(t));
}

nlohmann::json FigureEightCover::to_json() const {
    nlohmann::json j = {{"found", found}, {"covers_examined", covers_examined}, {"max_degree", max_degree}};
    if (!found) return j;
    j["cover"] = cover.to_json();
    j["cover_genus"] = cover_genus(cover);
    j["lifted_count"] = lifted_count;
    j["gamma1"] = format_word(decomposition.gamma1);
    j["gamma2"] = format_word(decomposition.gamma2);
    j["conjugator"] = format_word(decomposition.conjugator);
    j["witness"] = format_word(decomposition.witness);
    j["subloop_counts"] = {loop1_count, loop2_count};
    j["subloops_mutual"] = loops_mutual;
    j["free_exact"] = decomposition.free_exact;
    j["pingpong_power"] = decomposition.pingpong_power;
    return j;
}

FigureEightCover find_figure_eight_cover(const FuchsianModel& M, const Word& w, int max_degree) {
    const SurfaceGroup& G = M.group();
    if (is_proper_power(M, w)) throw PreconditionError(format_word(w) + " is a proper power");
    auto base = self_intersection(M, w);
    if (!base.certified) throw PrecisionExhausted("self-intersection count not certified for " + format_word(w));
    if (base.count == 0) throw PreconditionError(format_word(w) + " is simple");
    FigureEightCover out;
    out.max_degree = max_degree;
    for (int d = 1; d <= max_degree && !out.found; ++d) {
        for_each_cover(G.genus(), d, CoverClasses::PerSubgroup, [&](const CosetTable& t) {
            ++out.covers_examined;
            if (!t.contains(w)) return true;
            LiftFilter K = subgroup_filter(t);
            auto lifted = self_intersection(M, w, K);
            if (!lifted.certified || lifted.count != 1) return true;
            FigureEight fe = figure_eight_decompose(M, w, K);
            // subloops are based at the crossing; conjugate them back to the lifted basepoint
            Word c = fe.conjugator;
            Word g1 = concat({c, fe.gamma1, inverse(c)}), g2 = concat({c, fe.gamma2, inverse(c)});
            auto s1 = self_intersection(M, g1, K), s2 = self_intersection(M, g2, K);
            auto mu = mutual_intersection(M, g1, g2, K);
            if (!s1.certified || !s2.certified || !mu.certified) return true;
            if (s1.count || s2.count || mu.count) return true;
            out.found = true;
            out.cover = t;
            out.decomposition = fe;
            out.lifted_count = lifted.count;
            out.loop1_count = s1.count;
            out.loop2_count = s2.count;
            out.loops_mutual = mu.count;
            return false;
        });
    }
    return out;
}

double patel_bound(const PatelParams& p) {
    if (p.n < 2) throw PreconditionError("patel_bound: rank must be at least 2");
    if (!(p.d > 0 && p.e > 0 && p.beta > 0 && p.length > 0)) throw PreconditionError("patel_bound: parameters must be positive");
    return 4.0 * p.n - 4.0 + 2.0 * std::sinh(p.d * (p.length / p.e + 2.0)) / M_PI * p.beta;
}

}  // namespace scc
