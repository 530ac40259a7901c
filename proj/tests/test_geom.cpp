#include <doctest.h>

#include <cmath>
#include <map>

#include "scc/exact/errors.hpp"
#include "scc/geom/intersection.hpp"

using namespace scc;

namespace {

const SurfaceGroup& G2() {
    static SurfaceGroup G(2);
    return G;
}

const FuchsianModel& M2() {
    static FuchsianModel M(G2());
    return M;
}

int count(const std::string& s) {
    auto r = self_intersection(M2(), G2().parse(s));
    REQUIRE(r.certified);
    return r.count;
}

}  // namespace

TEST_CASE("interval arithmetic encloses") {
    PrecisionScope ps(128);
    Interval x = Interval(2.0).sqrt();
    CHECK(x.sqr().contains(2.0));
    CHECK(x.width() < 1e-30);
    CHECK(std::fabs((Interval::pi() * Interval(0.25)).cos().mid() - std::sqrt(0.5)) < 1e-15);
    CHECK(Interval(1.0).less(Interval(2.0)));
    CHECK_THROWS_AS((Interval(1.0) / Interval::from_bounds(-1, 1)), PrecisionExhausted);
    CHECK_THROWS_AS(Interval::from_bounds(-1, 1).sign(), PrecisionExhausted);
}

TEST_CASE("fuchsian model") {
    const auto& M = M2();
    const auto& G = G2();
    IMat2 R = M.holonomy(G.relator());
    CHECK(R.contains_pm_identity());
    CHECK(R.max_width() < std::ldexp(1.0, -30));
    IMat2 I = M.holonomy({});
    CHECK(I.contains_identity());
    for (const Word& x : G.generators()) {
        CHECK(Interval(2.0).less(M.holonomy(x).trace().abs()));
        CHECK(M.holonomy(x).det().contains(1.0));
    }
    Interval la = M.translation_length(G.parse("a1")), lb = M.translation_length(G.parse("b1"));
    CHECK(la.overlaps(lb));
    CHECK(M.translation_length(G.parse("a1 a1")).overlaps(la * Interval(2.0)));
    // pairing sides two apart in the regular octagon: |tr| = 2 + sqrt 2
    CHECK(std::fabs(M.holonomy(G.parse("a1")).trace().abs().mid() - (2 + std::sqrt(2.0))) < 1e-14);
    CHECK(std::fabs(M.holonomy(G.parse("a1 b1")).trace().abs().mid() - (2 + 2 * std::sqrt(2.0))) < 1e-14);
    CHECK_THROWS_AS(M.translation_length(G.relator()), PreconditionError);
    // same model at doubled precision is shared and tighter
    auto M2x = M.at_precision(512);
    CHECK(M2x->holonomy(G.relator()).max_width() < R.max_width());
}

TEST_CASE("word problem agrees with holonomy") {
    const auto& M = M2();
    const auto& G = G2();
    int trivial = 0;
    for (const Word& w : all_reduced_words(2, 6)) {
        IMat2 h = M.holonomy(w);
        bool id = G.is_identity(w);
        CHECK(id == h.contains_pm_identity());
        trivial += id;
    }
    CHECK(trivial == 1);
    // conjugates of the relator reduce and evaluate to +-1
    for (const Word& x : all_reduced_words(2, 3)) {
        Word c = concat({x, G.relator(), inverse(x)});
        CHECK(G.is_identity(c));
        CHECK(M.holonomy(c).contains_pm_identity());
    }
}

TEST_CASE("self-intersection counts") {
    CHECK(count("a1") == 0);
    CHECK(count("b2") == 0);
    CHECK(count("[a1,b1]") == 0);
    CHECK(count("a1 a2") == 0);
    CHECK(count("a1 A2") == 1);
    CHECK(count("a1 b2") == 1);
    CHECK(count("b1 a2") == 1);
    CHECK(count("b1 B2") == 1);
    CHECK(count("a1 A2 B1") == 3);
    CHECK(is_simple(M2(), G2().parse("a1 b1 a2 b2")));
    CHECK_THROWS_AS(self_intersection(M2(), G2().relator()), PreconditionError);
}

TEST_CASE("self-intersection invariances") {
    const auto& G = G2();
    for (const char* s : {"a1 A2", "a1 a1 A2 B1", "a1 b2 b2", "a1 b1 a2 A1 b2"}) {
        Word w = G.parse(s);
        int c = self_intersection(M2(), w).count;
        CHECK(self_intersection(M2(), inverse(w)).count == c);
        for (const char* x : {"b1", "a2 B1", "A1 b2 b2"}) {
            Word u = G.parse(x);
            CHECK(self_intersection(M2(), concat({u, w, inverse(u)})).count == c);
        }
        for (size_t k = 1; k < w.size(); ++k) CHECK(self_intersection(M2(), rotate(w, k)).count == c);
        // stable under precision doubling
        auto hi = self_intersection(*M2().at_precision(512), w);
        CHECK(hi.certified);
        CHECK(hi.count == c);
    }
}

TEST_CASE("witnesses cross the axis") {
    const auto& G = G2();
    Word w = G.parse("a1 A2 B1");
    auto r = self_intersection(M2(), w);
    CHECK(r.witnesses.size() == static_cast<size_t>(2 * r.count));
    for (const Word& u : r.witnesses) {
        CHECK(!G.commute(u, w));
        // u w u^-1 crosses w: the geodesics are linked, so their mutual count is positive
        CHECK(mutual_intersection(M2(), w, concat({u, w, inverse(u)})).count > 0);
    }
}

TEST_CASE("mutual intersections") {
    const auto& G = G2();
    CHECK(mutual_intersection(M2(), G.parse("a1"), G.parse("b1")).count == 1);
    CHECK(mutual_intersection(M2(), G.parse("a1"), G.parse("a2")).count == 0);
    CHECK(mutual_intersection(M2(), G.parse("a1"), G.parse("b2")).count == 0);
    CHECK(mutual_intersection(M2(), G.parse("a1"), G.parse("a1")).count == 0);
    CHECK(mutual_intersection(M2(), G.parse("b1"), G.parse("a1")).count == 1);
}

TEST_CASE("proper powers") {
    const auto& G = G2();
    auto p = is_proper_power(M2(), G.parse("(a1 b1 a2)^3"));
    REQUIRE(p);
    CHECK(p->first == G.parse("a1 b1 a2"));
    CHECK(p->second == 3);
    p = is_proper_power(M2(), G.parse("a1 a1"));
    REQUIRE(p);
    CHECK(p->first == G.parse("a1"));
    CHECK(p->second == 2);
    CHECK(!is_proper_power(M2(), G.parse("a1")));
    CHECK(!is_proper_power(M2(), G.parse("a1 A2")));
    // powers hidden by conjugation and relator rewriting
    Word x = G.parse("b1 a2"), d = G.parse("a1 b2 A2");
    Word w = G.dehn_reduce(concat({x, power(d, 2), inverse(x)}));
    p = is_proper_power(M2(), concat(w, G.relator()));
    REQUIRE(p);
    CHECK(p->second == 2);
    CHECK(G.is_identity(concat(power(p->first, 2), inverse(w))));
    p = is_proper_power(M2(), G.parse("(a1 A2)^4"));
    REQUIRE(p);
    CHECK(p->second == 4);
    CHECK_THROWS_AS(is_proper_power(M2(), G.relator()), PreconditionError);
}

TEST_CASE("enumerate conjugacy classes") {
    const auto& G = G2();
    CHECK(enumerate_classes(M2(), 0).empty());
    CHECK(enumerate_classes(M2(), 1).size() == 8);
    auto cl = enumerate_classes(M2(), 2);
    // oracle: cyclic words of length <= 2 merged by exhaustive conjugator search
    std::vector<Word> cand;
    for (const Word& w : all_reduced_words(2, 2))
        if (!w.empty()) {
            Word c = G.canonical_cyclic(w);
            if (std::find(cand.begin(), cand.end(), c) == cand.end()) cand.push_back(c);
        }
    std::vector<int> rep(cand.size());
    int classes = 0;
    for (size_t i = 0; i < cand.size(); ++i) {
        rep[i] = static_cast<int>(i);
        for (size_t j = 0; j < i; ++j)
            if (rep[j] == static_cast<int>(j) && conjugate_bounded(G, cand[i], cand[j], 5)) {
                rep[i] = static_cast<int>(j);
                break;
            }
        classes += rep[i] == static_cast<int>(i);
    }
    CHECK(cl.size() == static_cast<size_t>(classes));
    for (size_t i = 0; i < cl.size(); ++i)
        for (size_t j = 0; j < i; ++j) CHECK(!are_conjugate(M2(), cl[i], cl[j]));
}

TEST_CASE("conjugacy test") {
    const auto& G = G2();
    Word w = G.parse("a1 A2 b1");
    CHECK(are_conjugate(M2(), w, concat({G.parse("b2 a1"), w, G.parse("A1 B2")})));
    CHECK(are_conjugate(M2(), w, rotate(w, 1)));
    CHECK(!are_conjugate(M2(), w, inverse(w)));
    CHECK(!are_conjugate(M2(), G.parse("a1"), G.parse("b1")));
    CHECK(!are_conjugate(M2(), G.parse("a1 A2"), G.parse("a1 b2")));
    // relator rewriting: a1 b1 A1 B1 a2 = b2 a2 B2 is conjugate to a2
    CHECK(are_conjugate(M2(), G.parse("a1 b1 A1 B1 a2 b2 A2"), G.parse("b2")));
}

TEST_CASE("figure eight decomposition") {
    const auto& G = G2();
    for (const char* s : {"a1 A2", "a1 b2", "b1 B2"}) {
        Word w = G.parse(s);
        auto fe = figure_eight_decompose(M2(), w);
        Word prod = concat(fe.gamma1, fe.gamma2);
        CHECK(are_conjugate(M2(), prod, w));
        CHECK(conjugate_bounded(G, prod, w, 4));
        CHECK(fe.free_exact);
        CHECK(fe.pingpong_power > 0);
        // the two loops are the simple generators, up to conjugation
        CHECK(is_simple(M2(), fe.gamma1));
        CHECK(is_simple(M2(), fe.gamma2));
        auto hi = figure_eight_decompose(*M2().at_precision(512), w);
        CHECK(are_conjugate(M2(), hi.gamma1, fe.gamma1));
        CHECK(are_conjugate(M2(), hi.gamma2, fe.gamma2));
    }
    auto fe = figure_eight_decompose(M2(), G.parse("a1 A2"));
    bool a1_first = are_conjugate(M2(), fe.gamma1, G.parse("a1")) || are_conjugate(M2(), fe.gamma2, G.parse("a1"));
    bool a2_second = are_conjugate(M2(), fe.gamma1, G.parse("A2")) || are_conjugate(M2(), fe.gamma2, G.parse("A2"));
    CHECK(a1_first);
    CHECK(a2_second);
    CHECK_THROWS_AS(figure_eight_decompose(M2(), G.parse("a1 a2")), PreconditionError);
}

TEST_CASE("quadratic bound report") {
    auto rows = quadratic_bound_report(M2(), 3);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].max_count == 0);
    CHECK(rows[1].max_count == 1);
    CHECK(rows[2].max_count == 3);
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].certified);
        CHECK(rows[i].max_count <= rows[i].fitted_C * rows[i].length * rows[i].length + 1e-12);
        if (i) CHECK(rows[i].fitted_C >= rows[i - 1].fitted_C);
    }
}

TEST_CASE("distortion constant") {
    auto d = distortion_constant(M2(), 3);
    CHECK(d.lambda > 0);
    Interval l = M2().translation_length(d.argmax);
    CHECK(l.mid() / static_cast<double>(G2().length(d.argmax)) <= d.lambda + 1e-9);
    for (const char* s : {"a1", "a1 A2", "a1 b1 a2"})
        CHECK(M2().translation_length(G2().parse(s)).mid() <= d.lambda * G2().length(G2().parse(s)) + 1e-9);
}
