#include <doctest.h>

#include <cmath>

#include "scc/covers/covers.hpp"
#include "scc/exact/errors.hpp"

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

// same cover with sheets 0 and b exchanged
CosetTable rebase(const CosetTable& t, int b) {
    auto sw = [b](int i) { return i == 0 ? b : i == b ? 0 : i; };
    CosetTable r = t;
    for (size_t k = 0; k < t.perm.size(); ++k)
        for (int i = 0; i < t.degree; ++i) r.perm[k][sw(i)] = sw(t.perm[k][i]);
    return r;
}

// number of distinct conjugates of K (stabilisers of the sheets)
int conjugates(const CosetTable& t) {
    std::vector<CosetTable> reps;
    for (int b = 0; b < t.degree; ++b) {
        CosetTable r = rebase(t, b);
        bool seen = false;
        for (const auto& q : reps) seen = seen || refinement_map(r, q).has_value();
        if (!seen) reps.push_back(r);
    }
    return static_cast<int>(reps.size());
}

// Z/2 cover from the homomorphism H_1 -> Z/2 with the given generator values
CosetTable z2_cover(const std::vector<int>& v) {
    CosetTable t;
    t.genus = static_cast<int>(v.size()) / 2;
    t.degree = 2;
    for (int x : v) t.perm.push_back(x ? std::vector<int>{1, 0} : std::vector<int>{0, 1});
    return t;
}

}  // namespace

TEST_CASE("low index counts match the homomorphism oracle") {
    // subgroups of index n in the genus 2 surface group: 1, 15, 220, 5275
    const long expected[] = {1, 15, 220, 5275};
    for (int n = 1; n <= 4; ++n) {
        long subgroups = 0, classes = 0, per_class_total = 0;
        for_each_cover(2, n, CoverClasses::PerSubgroup, [&](const CosetTable& t) {
            ++subgroups;
            return true;
        });
        for_each_cover(2, n, CoverClasses::PerConjugacyClass, [&](const CosetTable& t) {
            CHECK(t.is_valid());
            CHECK(t.degree == n);
            ++classes;
            per_class_total += conjugates(t);
            return true;
        });
        CHECK(subgroups == expected[n - 1]);
        CHECK(per_class_total == expected[n - 1]);
        CHECK(classes <= subgroups);
    }
    long g3 = 0;
    for_each_cover(3, 2, CoverClasses::PerSubgroup, [&](const CosetTable&) {
        ++g3;
        return true;
    });
    CHECK(g3 == 63);
    CHECK(low_index_covers(2, 1).size() == 1);
    CHECK(low_index_covers(2, 2).size() == 16);
    CHECK(low_index_covers(2, 0).empty());
}

TEST_CASE("enumeration is deterministic and tables are valid") {
    auto a = low_index_covers(2, 3), b = low_index_covers(2, 3);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        CHECK(a[i].is_valid());
        CHECK(a[i].permutation(G2().relator()) == a[i].permutation({}));
        CHECK(cover_genus(a[i]) == a[i].degree + 1);
        CHECK(CosetTable::from_json(a[i].to_json()) == a[i]);
        CHECK(CosetTable::from_json(nlohmann::json::parse(a[i].to_json().dump())) == a[i]);
    }
    CHECK(cover_genus(CosetTable::trivial(2)) == 2);
    CosetTable six;
    six.genus = 2;
    six.degree = 6;
    CHECK(cover_genus(six) == 7);
    CosetTable bad = z2_cover({1, 0, 0, 0});
    bad.perm[0] = {0, 0};
    CHECK(!bad.is_valid());
    CHECK_THROWS_AS(CosetTable::from_json(bad.to_json()), PreconditionError);
}

TEST_CASE("containment") {
    const auto& G = G2();
    for (const char* s : {"a1", "b1 A2", "[a1,b1]"}) CHECK(CosetTable::trivial(2).contains(G.parse(s)));
    CosetTable t = z2_cover({0, 1, 0, 0});
    CHECK(t.is_valid());
    CHECK(t.contains(G.parse("a1")));
    CHECK(!t.contains(G.parse("b1")));
    CHECK(t.contains(G.parse("b1 b1")));
    // homomorphic: permutation of a product is the composite
    for (const auto& c : low_index_covers(2, 3)) {
        Word u = G.parse("a1 B2 b1"), v = G.parse("A2 b1 a1 a1");
        auto pu = c.permutation(u), pv = c.permutation(v), puv = c.permutation(concat(u, v));
        for (int i = 0; i < c.degree; ++i) CHECK(puv[i] == pv[pu[i]]);
    }
}

TEST_CASE("lifted self-intersection") {
    const auto& G = G2();
    for (const char* s : {"a1", "a1 A2", "a1 A2 B1", "a1 b2 b2"}) {
        Word w = G.parse(s);
        CHECK(lifted_self_intersection(M2(), CosetTable::trivial(2), w).count == self_intersection(M2(), w).count);
    }
    CHECK_THROWS_AS(lifted_self_intersection(M2(), z2_cover({0, 1, 0, 0}), G.parse("b1")), PreconditionError);
    // lifts of simple curves stay simple
    for (const auto& t : low_index_covers(2, 3))
        for (const char* s : {"a1", "[a1,b1]", "a1 b1 a2 b2"}) {
            Word w = G.parse(s);
            for (int k = 1; k <= t.degree; ++k) {
                Word wk = power(w, k);
                if (!t.contains(wk)) continue;
                if (k == 1) CHECK(lifted_self_intersection(M2(), t, w).count == 0);
                break;
            }
        }
    // a class with count 3 has a cover of degree <= 3 where its lift crosses itself less
    Word w = G.parse("a1 A2 B1");
    int base = self_intersection(M2(), w).count;
    REQUIRE(base == 3);
    int best = base;
    for (const auto& t : low_index_covers(2, 3))
        if (t.contains(w)) best = std::min(best, lifted_self_intersection(M2(), t, w).count);
    CHECK(best < base);
}

TEST_CASE("refinement is monotone") {
    const auto& G = G2();
    auto small = low_index_covers(2, 2, CoverClasses::PerSubgroup);
    std::vector<CosetTable> big;
    for_each_cover(2, 4, CoverClasses::PerSubgroup, [&](const CosetTable& t) {
        big.push_back(t);
        return big.size() < 400;
    });
    std::vector<Word> words;
    for (const char* s : {"a1 A2", "a1 A2 B1", "a1 b2 b2", "a1 a1 A2 B1"}) words.push_back(G.parse(s));
    int checked = 0;
    for (const auto& f : big)
        for (const auto& c : small) {
            if (c.degree == 1 || !refinement_map(f, c)) continue;
            for (const Word& w : words) {
                if (!f.contains(w)) continue;
                CHECK(c.contains(w));
                CHECK(lifted_self_intersection(M2(), f, w).count <= lifted_self_intersection(M2(), c, w).count);
                ++checked;
            }
        }
    CHECK(checked > 0);
    // every cover refines the trivial one; a Z/2 cover does not refine another
    CHECK(refinement_map(big[0], CosetTable::trivial(2)));
    CHECK(!refinement_map(z2_cover({1, 0, 0, 0}), z2_cover({0, 1, 0, 0})));
}

TEST_CASE("figure eight cover search") {
    const auto& G = G2();
    auto r = find_figure_eight_cover(M2(), G.parse("a1 A2"), 2);
    REQUIRE(r.found);
    CHECK(r.cover.degree == 1);
    CHECK(r.lifted_count == 1);
    CHECK(r.loop1_count == 0);
    CHECK(r.loop2_count == 0);
    CHECK(r.loops_mutual == 0);
    CHECK(r.to_json()["found"] == true);
    CHECK(!find_figure_eight_cover(M2(), G.parse("a1 A2"), 0).found);
    CHECK_THROWS_AS(find_figure_eight_cover(M2(), G.parse("a1"), 2), PreconditionError);
    CHECK_THROWS_AS(find_figure_eight_cover(M2(), G.parse("a1 a2"), 2), PreconditionError);
    CHECK_THROWS_AS(find_figure_eight_cover(M2(), G.parse("(a1 A2)^2"), 2), PreconditionError);
    // a class crossing itself three times lifts to a figure eight in a small cover
    Word w = G.parse("a1 A2 B1");
    auto s = find_figure_eight_cover(M2(), w, 3);
    REQUIRE(s.found);
    CHECK(s.cover.degree > 1);
    CHECK(s.cover.contains(w));
    CHECK(lifted_self_intersection(M2(), s.cover, w).count == 1);
    Word c = s.decomposition.conjugator;
    CHECK(s.cover.contains(concat({c, s.decomposition.gamma1, inverse(c)})));
    CHECK(s.decomposition.free_exact);
}

TEST_CASE("patel bound") {
    PatelParams p;
    CHECK(std::fabs(patel_bound(p) - (4 + 2 * std::sinh(3.0) / M_PI)) < 1e-12);
    CHECK(std::fabs(patel_bound(p) - 10.378) < 1e-3);
    double prev = 0;
    for (double l = 0.5; l < 5; l += 0.5) {
        p.length = l;
        CHECK(patel_bound(p) > prev);
        prev = patel_bound(p);
    }
    p.n = 1;
    CHECK_THROWS_AS(patel_bound(p), PreconditionError);
    p.n = 2;
    p.beta = 0;
    CHECK_THROWS_AS(patel_bound(p), PreconditionError);
}
