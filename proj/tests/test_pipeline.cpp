#include <doctest.h>

#include "scc/exact/errors.hpp"
#include "scc/pipeline/classify.hpp"

using namespace scc;

namespace {

const SO3Rep& R5() {
    static SO3Rep R(5);
    return R;
}

Word W(const std::string& s) { return parse_word(s, 2); }

std::vector<Word> short_words() {
    std::vector<Word> out;
    for (const Word& w : all_reduced_words(2, 3)) out.push_back(w);
    return out;
}

}  // namespace

TEST_CASE("index one induction is the identity") {
    Representation rho = Representation::from_so3(R5());
    CosetTable t = CosetTable::trivial(2);
    Representation ind = induce(rho, t);
    CHECK(ind.dim() == rho.dim());
    for (const char* s : {"a1", "a1 B2", "b1 a2 A1"}) CHECK(ind.image(W(s)) == rho.image(W(s)));
}

TEST_CASE("induced images, characters and restriction") {
    Representation rho = Representation::from_so3(R5());
    auto covers = low_index_covers(2, 3);
    int checked = 0;
    for (const CosetTable& t : covers) {
        if (t.degree < 2) continue;
        Representation ind = induce(rho, t);
        CHECK(ind.dim() == t.degree * rho.dim());
        SubgroupRep V = restrict_to(rho, t);
        for (const Word& w : short_words()) {
            ExactMatrix M = ind.image(w);
            CHECK(M.trace() == frobenius_character(V, w));
        }
        // relator maps to a scalar
        CHECK(ind.image(W("a1 b1 A1 B1 a2 b2 A2 B2")).is_scalar());
        if (++checked == 3) break;
    }
    CHECK(checked == 3);
}

TEST_CASE("induction in stages") {
    Representation rho = Representation::from_so3(R5());
    auto covers = low_index_covers(2, 4, CoverClasses::PerSubgroup);
    int checked = 0;
    for (const CosetTable& fine : covers) {
        if (fine.degree != 4) continue;
        for (const CosetTable& coarse : covers) {
            if (coarse.degree != 2 || !refinement_map(fine, coarse)) continue;
            SubgroupRep V = restrict_to(rho, fine);
            Representation two = induce(induce_to(V, coarse));
            Representation one = induce(V);
            CHECK(two.dim() == one.dim());
            for (const char* s : {"a1", "b2", "a1 A2", "a1 b1 a2", "B1 b2 a2"})
                CHECK(two.image(W(s)).trace() == one.image(W(s)).trace());
            ++checked;
            break;
        }
        if (checked == 2) break;
    }
    CHECK(checked == 2);
}

TEST_CASE("direct sums") {
    Representation a = Representation::from_so3(R5());
    Representation b = Representation::from_so3(SO3Rep(7));
    Representation s = direct_sum({a, b});
    CHECK(s.dim() == a.dim() + b.dim());
    CHECK(s.order() % a.order() == 0);
    CHECK(s.order() % b.order() == 0);
    ExactMatrix M = s.image(W("a1"));
    CHECK(M.trace() == a.image(W("a1")).trace().embed(s.order()) + b.image(W("a1")).trace().embed(s.order()));
    // a simple curve stays finite order in the sum, a figure eight stays infinite
    CHECK(projective_order(s.image(W("a1")), 4 * 35 * 35).kind == ProjectiveOrder::Kind::Finite);
    CHECK_THROWS_AS(direct_sum({a, Representation{3, "x", {}, {}}}), PreconditionError);
}

TEST_CASE("infinite order survives induction") {
    Word w = W("a1 A2");
    ImageOrder o = order_of_image(R5(), w);
    REQUIRE(o.order.kind == ProjectiveOrder::Kind::Infinite);
    for (const CosetTable& t : low_index_covers(2, 2)) {
        if (!t.contains(w)) continue;
        ExactMatrix M = induce(Representation::from_so3(R5()), t).image(w);
        CHECK(projective_order(M, 4 * 25, {2000}).kind != ProjectiveOrder::Kind::Finite);
    }
}

TEST_CASE("classify labelled words") {
    PipelineConfig cfg;
    cfg.levels = {5, 7};
    using V = ClassificationResult::Verdict;
    CHECK(classify(W("a1"), cfg).verdict == V::Simple);
    CHECK(classify(W("b2"), cfg).verdict == V::Simple);
    CHECK(classify(W("a1 b1 A1 B1"), cfg).verdict == V::Simple);
    // a1 a2 is simple in the standard presentation
    CHECK(classify(W("a1 a2"), cfg).verdict == V::Simple);

    auto sq = classify(W("a1 a1"), cfg);
    CHECK(sq.verdict == V::ProperPower);
    CHECK(sq.exponent == 2);
    REQUIRE(sq.root_result.size() == 1);
    CHECK(sq.root_result[0].verdict == V::Simple);

    auto cube = classify(power(W("a1 b1 a2"), 3), cfg);
    CHECK(cube.verdict == V::ProperPower);
    CHECK(cube.exponent == 3);

    auto f8 = classify(W("a1 A2"), cfg);
    CHECK(f8.verdict == V::NonSimple);
    CHECK(f8.geometry.count == 1);
    REQUIRE(f8.certificate);
    CHECK(f8.certificate->level == 5);
    CHECK(verify_certificate(*f8.certificate));
    CHECK(verify_certificate(RepCertificate::from_json(f8.certificate->to_json())));

    CHECK_THROWS_AS(classify(W("a1 A1"), cfg), PreconditionError);
}

TEST_CASE("classification results re-verify from JSON") {
    PipelineConfig cfg;
    cfg.levels = {5};
    for (const char* s : {"a1", "a1 a1", "a1 A2", "a1 A2 B1"}) {
        auto r = classify(W(s), cfg);
        nlohmann::json j = nlohmann::json::parse(r.to_json().dump());
        CHECK(verify_result(j));
    }
    auto r = classify(W("a1 A2"), cfg);
    nlohmann::json j = r.to_json();
    j["certificates"]["representation"]["induced_hash"] = "00";
    CHECK_FALSE(verify_result(j));
    j = r.to_json();
    j["certificates"]["geometry"]["count"] = 0;
    CHECK_FALSE(verify_result(j));
}

TEST_CASE("configuration") {
    PipelineConfig c;
    c.apply("levels", "5, 7");
    c.apply("max_cover_degree", "3");
    CHECK(c.levels == std::vector<int>{5, 7});
    CHECK(c.max_cover_degree == 3);
    CHECK_THROWS_AS(c.apply("nope", "1"), PreconditionError);
    CHECK_THROWS_AS(c.apply("max_bits", "x"), PreconditionError);
}

TEST_CASE("rho_1") {
    PipelineConfig cfg;
    cfg.levels = {5, 7};
    RhoI r = build_rho_i(1, cfg);
    CHECK_FALSE(r.rho);
    CHECK(r.manifest["summary"]["simple"].get<int>() == 8);
    CHECK_FALSE(r.partial);
}

TEST_CASE("rho_2") {
    PipelineConfig cfg;
    cfg.levels = {5};
    RhoI r = build_rho_i(2, cfg);
    REQUIRE(r.rho);
    CHECK_FALSE(r.partial);
    CHECK(r.manifest["summary"]["unknown"].get<int>() == 0);
    for (const auto& c : r.manifest["classes"]) {
        Word w = W(c["word"].get<std::string>());
        auto st = c["status"].get<std::string>();
        auto o = projective_order(r.rho->image(w), r.simple_order_bound, {2000});
        if (st == "simple") {
            CHECK(o.kind == ProjectiveOrder::Kind::Finite);
        } else if (st == "covered") {
            CHECK(o.kind != ProjectiveOrder::Kind::Finite);
        }
    }
}
