#include <doctest.h>

#include <cmath>

#include "scc/exact/errors.hpp"
#include "scc/exact/serialize.hpp"
#include "scc/group/surface_group.hpp"
#include "scc/tqft/representation.hpp"

using namespace scc;

namespace {

const SO3Rep& rep(int p) {
    static SO3Rep r5(5), r7(7);
    return p == 5 ? r5 : r7;
}

double closed_verlinde(int g, int p) {
    double s = 0;
    for (int j = 1; j <= (p - 1) / 2; ++j) s += std::pow(std::sin(2 * M_PI * j / p), 2 - 2 * g);
    return std::pow(p / 4.0, g - 1) * s;
}

}  // namespace

TEST_CASE("fusion data") {
    CHECK_THROWS_AS(Fusion(6), PreconditionError);
    CHECK_THROWS_AS(Fusion(1), PreconditionError);
    Fusion F(5);
    CHECK(F.colours() == std::vector<int>{0, 2});
    Cyclotomic A = F.A();
    CHECK(F.qint(0).is_zero());
    CHECK(F.qint(1) == F.one());
    CHECK(F.qint(2) == A.pow(2) + A.pow(-2));
    CHECK(F.delta(1) == -A.pow(2) - A.pow(-2));
    CHECK(!F.delta(1).is_zero());
    CHECK(F.qint(5).is_zero());  // [p] = 0
    CHECK(F.twist(0) == F.one());
    CHECK(F.twist(2) == A.pow(8));
    CHECK(!F.admissible(4, 4, 0));
    CHECK(F.admissible(2, 2, 2));
    for (int p : {5, 7, 9}) {
        Fusion G(p);
        for (int a : G.colours())
            for (int b : G.colours())
                for (int c : G.colours())
                    if (G.admissible(a, b, c)) CHECK(!G.theta(a, b, c).is_zero());
        // theta with a zero edge is the loop value
        for (int a : G.colours()) CHECK(G.theta(a, a, 0) == G.delta(a));
    }
}

TEST_CASE("pentagon identity is exact") {
    for (int p : {5, 7}) {
        auto r = Fusion(p).pentagon();
        CHECK(r.tuples > 0);
        CHECK(r.nonzero == 0);
    }
}

TEST_CASE("dimensions") {
    for (int p : {5, 7, 9}) {
        Fusion F(p);
        const auto& C = F.colours();
        long g1 = 0, g2 = 0;
        for (int a : C) g1 += F.admissible(a, a, 2);
        for (int a : C)
            for (int c1 : C)
                for (int c2 : C)
                    for (int b : C) g2 += F.admissible(a, a, c1) && F.admissible(c1, c2, 2) && F.admissible(b, b, c2);
        CHECK(verlinde_dim(1, p) == g1);
        CHECK(verlinde_dim(2, p) == g2);
        for (int g : {1, 2, 3}) CHECK(verlinde_dim(g, p, 0) == std::lround(closed_verlinde(g, p)));
    }
    CHECK(SO3Rep(5).dim() == verlinde_dim(2, 5));
    CHECK(SO3Rep(7).dim() == verlinde_dim(2, 7));
    CHECK_THROWS_AS(SO3Rep(5, 3), PreconditionError);
}

TEST_CASE("twists and moves") {
    for (int p : {5, 7}) {
        const auto& R = rep(p);
        const int d = R.dim();
        auto T1 = R.twist("alpha1"), T2 = R.twist("alpha2"), S1 = R.twist("stem1");
        CHECK(T1 * T2 == T2 * T1);
        CHECK(T1 * S1 == S1 * T1);
        for (int i = 0; i < d; ++i)
            if (R.basis()[i][0] == 0) CHECK(T1(i, i) == R.fusion().one());
        CHECK_THROWS_AS(R.twist("gamma"), PreconditionError);
        for (int h = 0; h < 2; ++h) {
            auto Ta = R.twist(h ? "alpha2" : "alpha1");
            const auto& Tb = R.twist_beta(h);
            CHECK(Ta * Tb * Ta == Tb * Ta * Tb);  // braid relation, curves meeting once
            CHECK(R.fmove(h) * R.fmove_inverse(h) == ExactMatrix::identity(d, R.order()));
            CHECK(R.fmove_inverse(h) * R.fmove(h) == ExactMatrix::identity(d, R.order()));
            auto S = R.smove(h);
            CHECK(R.preserves_form(S));
            // one-holed torus chain relation: (Ta Tb)^6 is the boundary twist, S^2 is central
            auto X = Ta * Tb;
            CHECK(X.pow(6).projectively_equal(R.twist(h ? "stem2" : "stem1")));
            CHECK(S.pow(4).projectively_equal(R.twist(h ? "stem2" : "stem1")));
            CHECK(S * S * Ta == Ta * S * S);
            CHECK(S * S * Tb == Tb * S * S);
            CHECK(!S.is_scalar());
        }
    }
}

TEST_CASE("point push representation") {
    SurfaceGroup G(2);
    for (int p : {5, 7}) {
        const auto& R = rep(p);
        const auto I = ExactMatrix::identity(R.dim(), R.order());
        CHECK(R.rho(G.relator()).is_scalar());
        CHECK(R.rho({}) == I);
        for (int k = 0; k < 4; ++k) {
            CHECK(R.push(k) * R.push_inverse(k) == I);
            CHECK(R.preserves_form(R.push(k)));
            CHECK(!R.push(k).is_scalar());
        }
        // conjugates of the relator are scalar too
        for (const char* c : {"b1", "a2 B1"}) {
            Word x = G.parse(c);
            CHECK(R.rho(concat({x, G.relator(), inverse(x)})).is_scalar());
        }
        Word u = G.parse("a1 B2 b1"), v = G.parse("A2 b1 a1");
        CHECK(R.rho(concat(u, v)) == R.rho(u) * R.rho(v));
        CHECK(R.rho(inverse(u)) == R.rho(u).inverse());
        // relator rewriting does not change the projective image
        Word w = G.parse("a1 b1 A1 B1 a2");
        CHECK(R.rho(w).projectively_equal(R.rho(G.dehn_reduce(w))));
    }
}

TEST_CASE("order of images") {
    SurfaceGroup G(2);
    for (int p : {5, 7}) {
        const auto& R = rep(p);
        auto e = order_of_image(R, {});
        CHECK(e.order.kind == ProjectiveOrder::Kind::Finite);
        CHECK(e.order.k == 1);
        for (const char* s : {"a1", "b1", "b2", "[a1,b1]", "a1 a2"}) {
            auto o = order_of_image(R, G.parse(s));
            REQUIRE(o.order.kind == ProjectiveOrder::Kind::Finite);
            CHECK((2 * p) % o.order.k == 0);
        }
        for (const char* s : {"a1 A2", "a1 b2"}) {
            auto o = order_of_image(R, G.parse(s));
            CHECK(o.order.kind == ProjectiveOrder::Kind::Infinite);
            CHECK(!is_cyclotomic_product(o.order.witness));
            CHECK(o.to_json()["verdict"] == "infinite");
        }
    }
}

TEST_CASE("serialisation of a representation") {
    const auto& R = rep(5);
    auto j = nlohmann::json::parse(R.to_json().dump());
    CHECK(j["dim"] == R.dim());
    CHECK(j["level"] == 5);
    CHECK(matrix_from_json(j["generators"]["a1"]) == R.push(0));
    CHECK(matrix_from_json(j["generators"]["b2"]) == R.push(3));
}
