// Acceptance suite: one PASS/FAIL line per criterion, details on "  info:" lines.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "scc/pipeline/classify.hpp"

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
Word W(const std::string& s) { return G2().parse(s); }

void info(const std::string& s) { std::cout << "  info: " << s << "\n"; }

int failures = 0;

void run(int n, const std::string& name, const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        info(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.1f s)", s);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << name << buf << std::endl;
    failures += !ok;
}

// 1. every freely reduced word of length <= 8: Dehn reduction vs certified holonomy
bool word_problem() {
    const auto& G = G2();
    const auto& M = M2();
    PrecisionScope ps(M.precision());
    long words = 0, agree = 0, trivial = 0;
    Word w;
    std::vector<IMat2> prefix{IMat2::identity()};
    std::function<void()> dfs = [&]() {
        ++words;
        bool id = G.is_identity(w);
        trivial += id;
        agree += id == prefix.back().contains_pm_identity();
        if (w.size() == 8) return;
        for (int g = 1; g <= 4; ++g)
            for (int l : {g, -g}) {
                if (!w.empty() && w.back() == -l) continue;
                w.push_back(l);
                prefix.push_back(prefix.back() * M.generator(l));
                dfs();
                prefix.pop_back();
                w.pop_back();
            }
    };
    dfs();
    info("words " + std::to_string(words) + ", agreements " + std::to_string(agree) + ", trivial " +
         std::to_string(trivial));
    return words == 7686401 && agree == words && trivial == 2 * 8 + 1;
}

// 2. literal C'(1/8) on the symmetrised genus-2 relator
bool small_cancellation() {
    const auto& G = G2();
    int piece = G.max_piece_length(), len = static_cast<int>(G.relator().size());
    info("max piece " + std::to_string(piece) + ", relator length " + std::to_string(len) + "; C'(1/6) " +
         (G.small_cancellation(1, 6) ? "holds" : "fails") + ", C'(1/8) " +
         (G.small_cancellation(1, 8) ? "holds" : "fails"));
    return 8 * piece < len;
}

// 3. curated self-intersection counts, rerun at doubled precision
bool curated_counts() {
    auto hi = M2().at_precision(2 * M2().precision());
    bool ok = true;
    auto check = [&](const char* s, int expect, bool scored) {
        auto a = self_intersection(M2(), W(s)), b = self_intersection(*hi, W(s));
        bool good = a.certified && b.certified && a.count == b.count && a.count == expect;
        info(std::string(s) + ": count " + std::to_string(a.count) + ", rerun " + std::to_string(b.count) +
             ", expected " + std::to_string(expect) + (scored ? "" : " (not scored)") + (good ? "" : " MISMATCH"));
        if (scored) ok = ok && good;
    };
    check("a1", 0, true);
    check("b2", 0, true);
    check("[a1,b1]", 0, true);
    check("a1 a2", 1, true);
    check("a1 A2", 1, false);
    return ok;
}

// 4. quadratic self-intersection bound over all classes of length <= 6
bool quadratic_bound() {
    auto rows = quadratic_bound_report(M2(), 6);
    bool ok = !rows.empty();
    double C = 0;
    for (const auto& r : rows) {
        std::ostringstream os;
        os << "l=" << r.length << " classes=" << r.classes << " max=" << r.max_count << " argmax="
           << format_word(r.argmax) << " C=" << r.fitted_C << (r.certified ? "" : " UNCERTIFIED");
        info(os.str());
        ok = ok && r.certified;
        C = r.fitted_C;
    }
    for (const auto& r : rows) ok = ok && r.max_count <= C * r.length * r.length;
    info("fitted C = " + std::to_string(C));
    return ok && std::isfinite(C);
}

// 5. index-2 covers
bool covers_index_two() {
    std::vector<CosetTable> t2;
    for_each_cover(2, 2, CoverClasses::PerSubgroup, [&](const CosetTable& t) {
        t2.push_back(t);
        return true;
    });
    bool ok = t2.size() == 15;
    for (const auto& t : t2)
        ok = ok && t.is_valid() && t.permutation(G2().relator()) == t.permutation({}) && cover_genus(t) == 2 * (2 - 1) + 1;
    info("index-2 subgroups " + std::to_string(t2.size()));
    return ok;
}

// 6. pentagon, braid relations, relator
bool tqft_consistency() {
    bool ok = true;
    for (int p : {5, 7}) {
        auto pent = Fusion(p).pentagon();
        SO3Rep R(p);
        ExactMatrix Ta[2] = {R.twist("alpha1"), R.twist("alpha2")};
        bool braid = true, commute = true;
        for (int h = 0; h < 2; ++h) {
            const ExactMatrix& Tb = R.twist_beta(h);
            braid = braid && Ta[h] * Tb * Ta[h] == Tb * Ta[h] * Tb;
            // disjoint curves commute
            commute = commute && Ta[1 - h] * Tb == Tb * Ta[1 - h] && R.twist_beta(1 - h) * Tb == Tb * R.twist_beta(1 - h);
        }
        ExactMatrix stem = R.twist("stem1");
        commute = commute && stem * Ta[0] == Ta[0] * stem && stem * R.twist_beta(0) == R.twist_beta(0) * stem;
        bool rel = R.rho(G2().relator()).is_scalar();
        info("p=" + std::to_string(p) + " dim " + std::to_string(R.dim()) + ": pentagon tuples " +
             std::to_string(pent.tuples) + " nonzero " + std::to_string(pent.nonzero) + ", braid " +
             (braid ? "ok" : "FAILED") + ", disjoint commute " + (commute ? "ok" : "FAILED") + ", relator scalar " +
             (rel ? "ok" : "FAILED"));
        ok = ok && pent.tuples > 0 && pent.nonzero == 0 && braid && commute && rel;
    }
    return ok;
}

// 7. simple classes of length <= 4 have order <= 2p
bool simple_orders() {
    const SO3Rep R5(5), R7(7);
    int simple = 0, bad = 0;
    long maxk[2] = {0, 0};
    for (const Word& w : enumerate_classes(M2(), 4)) {
        if (is_proper_power(M2(), w)) continue;
        auto si = self_intersection(M2(), w);
        if (!si.certified) {
            ++bad;
            info("uncertified " + format_word(w));
            continue;
        }
        if (si.count) continue;
        ++simple;
        int i = 0;
        for (const SO3Rep* R : {&R5, &R7}) {
            auto o = order_of_image(*R, w);
            long p = R->level();
            if (o.order.kind != ProjectiveOrder::Kind::Finite || o.order.k > 2 * p) {
                ++bad;
                info(format_word(w) + " p=" + std::to_string(p) + " " + o.to_string());
            } else {
                maxk[i] = std::max(maxk[i], o.order.k);
            }
            ++i;
        }
    }
    info("simple classes " + std::to_string(simple) + ", max order p=5: " + std::to_string(maxk[0]) +
         ", p=7: " + std::to_string(maxk[1]));
    return simple > 0 && bad == 0;
}

// 8. Ad certificate vs scalar search on finite-order twist products; per-level verdicts for a1 a2
bool infinite_order() {
    std::mt19937 rng(20240607);
    bool ok = true;
    int agree = 0, total = 0;
    for (int p : {5, 7}) {
        SO3Rep R(p);
        std::vector<ExactMatrix> tw = {R.twist("alpha1"), R.twist("alpha2"), R.twist("stem1"), R.twist_beta(0),
                                       R.twist_beta(1)};
        std::vector<ExactMatrix> twi;
        for (const auto& t : tw) twi.push_back(block_inverse(t));
        const int n = p == 5 ? 35 : 15;
        for (int s = 0; s < n; ++s) {
            // conjugate of a finite-order product: commuting twists, a handle chain element, or an S-move
            int h = rng() % 2;
            ExactMatrix D = ExactMatrix::identity(R.dim(), R.order());
            switch (rng() % 3) {
                case 0:
                    for (int c : {0, 1, 2}) D = D * tw[c].pow(1 + rng() % (p - 1));
                    break;
                case 1: D = tw[h] * tw[3 + h]; break;
                default: D = R.smove(h); break;
            }
            ExactMatrix C = ExactMatrix::identity(R.dim(), R.order()), Ci = C;
            for (int k = 0, len = 1 + rng() % 4; k < len; ++k) {
                int c = rng() % 5;
                C = C * tw[c];
                Ci = twi[c] * Ci;
            }
            ExactMatrix Mx = C * D * Ci;
            auto scal = projective_order(Mx, 12 * p);
            auto ref = projective_order(D, 12 * p);
            bool cyc = is_cyclotomic_product(ratio_norm_polynomial(Mx));
            bool good = scal.kind == ProjectiveOrder::Kind::Finite && ref.kind == ProjectiveOrder::Kind::Finite &&
                        scal.k == ref.k && cyc;
            agree += good;
            ++total;
        }
    }
    info("finite-order twist products: " + std::to_string(agree) + "/" + std::to_string(total) +
         " agree (scalar search finite, norm polynomial cyclotomic)");
    ok = agree == total && total == 50;

    auto verdicts = [](const char* s) {
        bool any_inf = false, all_unknown = true;
        std::string line = std::string(s) + ":";
        for (int p : {5, 7, 9, 11, 13}) {
            auto o = order_of_image(SO3Rep(p), W(s));
            line += " p=" + std::to_string(p) + " " + o.order.to_string() + (o.order.route.empty() ? "" : "[" + o.order.route + "]");
            any_inf = any_inf || o.order.kind == ProjectiveOrder::Kind::Infinite;
            all_unknown = all_unknown && o.order.kind == ProjectiveOrder::Kind::Unknown;
        }
        info(line);
        if (!any_inf && all_unknown) info(std::string(s) + ": KNOWN-LIMIT");
        return any_inf || all_unknown;
    };
    bool a1a2 = verdicts("a1 a2");
    verdicts("a1 A2");
    return ok && a1a2;
}

// 9. induction: dimension, Frobenius characters, certificate survival
bool induction() {
    const SO3Rep R(5);
    Representation rho = Representation::from_so3(R);
    auto covers = low_index_covers(2, 3);
    bool ok = true;
    int tested = 0;
    long words = 0;
    for (const CosetTable& t : covers) {
        if (t.degree == 1 || tested >= 8) continue;
        ++tested;
        Representation ind = induce(rho, t);
        ok = ok && ind.dim() == t.degree * rho.dim();
        SubgroupRep V = restrict_to(rho, t);
        Word w;
        std::vector<ExactMatrix> prefix{ExactMatrix::identity(ind.dim(), ind.order())};
        std::function<void()> dfs = [&]() {
            ++words;
            ok = ok && prefix.back().trace() == frobenius_character(V, w);
            if (w.size() == 4) return;
            for (int g = 1; g <= 4; ++g)
                for (int l : {g, -g}) {
                    if (!w.empty() && w.back() == -l) continue;
                    w.push_back(l);
                    prefix.push_back(prefix.back() * (l > 0 ? ind.gens[l - 1] : ind.inv[-l - 1]));
                    dfs();
                    prefix.pop_back();
                    w.pop_back();
                }
        };
        dfs();
    }
    info("covers " + std::to_string(tested) + ", character checks " + std::to_string(words) + (ok ? "" : " MISMATCH"));

    Word f8 = W("a1 A2");
    auto o = order_of_image(R, f8);
    int survived = 0, cand = 0;
    for (const CosetTable& t : low_index_covers(2, 2, CoverClasses::PerSubgroup)) {
        if (!t.contains(f8)) continue;
        ++cand;
        ExactMatrix Mw = induce(rho, t).image(f8);
        RepCertificate c;
        c.level = 5;
        c.word = f8;
        c.cover = t;
        c.induced_hash = Mw.hash_hex();
        c.witness = o.order.witness;
        c.route = o.order.route;
        bool inf = projective_order(Mw, 100, {4000}).kind == ProjectiveOrder::Kind::Infinite;
        survived += verify_certificate(RepCertificate::from_json(c.to_json())) && inf;
    }
    info("a1 A2 at p=5 " + o.to_string() + "; certificate accepted on " + std::to_string(survived) + "/" +
         std::to_string(cand) + " covers of degree <= 2 containing it");
    return ok && tested > 0 && o.order.kind == ProjectiveOrder::Kind::Infinite && cand > 1 && survived == cand;
}

// 10. end-to-end classifier
bool end_to_end() {
    using V = ClassificationResult::Verdict;
    PipelineConfig cfg;
    cfg.apply_environment();
    struct Case {
        Word w;
        V expect;
        bool scored;
    };
    std::vector<Case> cases = {{W("a1"), V::Simple, true},
                               {W("b2"), V::Simple, true},
                               {W("[a1,b1]"), V::Simple, true},
                               {W("a1 a1"), V::ProperPower, true},
                               {power(W("a1 b1 a2"), 3), V::ProperPower, true},
                               {W("a1 a2"), V::NonSimple, true},
                               {W("a1 A2"), V::NonSimple, false}};
    bool ok = true;
    for (const auto& c : cases) {
        auto r = classify(c.w, cfg);
        bool verified = verify_result(nlohmann::json::parse(r.to_json().dump()));
        bool good = r.verdict == c.expect && verified;
        std::string extra = r.certificate ? " certificate p=" + std::to_string(r.certificate->level) : "";
        info(format_word(c.w) + ": " + r.verdict_name() + (verified ? " verified" : " NOT verified") + extra +
             (c.scored ? "" : " (not scored)") + (good ? "" : " MISMATCH"));
        if (c.scored) ok = ok && good;
    }
    return ok;
}

}  // namespace

int main() {
    run(1, "word problem vs holonomy, all reduced words of length <= 8", word_problem);
    run(2, "small cancellation C'(1/8) of the genus-2 relator", small_cancellation);
    run(3, "curated self-intersection counts with doubled-precision rerun", curated_counts);
    run(4, "quadratic self-intersection bound, l_X <= 6", quadratic_bound);
    run(5, "index-2 covers of the genus-2 surface", covers_index_two);
    run(6, "TQFT consistency at p = 5, 7", tqft_consistency);
    run(7, "simple classes l_X <= 4 have order <= 2p at p = 5, 7", simple_orders);
    run(8, "infinite-order certification", infinite_order);
    run(9, "induction: dimension, characters, certificate survival", induction);
    run(10, "end-to-end classifier on the labelled set", end_to_end);
    std::cout << (10 - failures) << "/10 criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
