#include "scc/pipeline/classify.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>

#include "scc/exact/errors.hpp"
#include "scc/exact/numtheory.hpp"
#include "scc/exact/serialize.hpp"

namespace scc {

namespace {

const FuchsianModel& model_for(int genus) {
    static std::mutex mu;
    static std::map<int, std::pair<std::unique_ptr<SurfaceGroup>, std::unique_ptr<FuchsianModel>>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto& slot = cache[genus];
    if (!slot.first) {
        slot.first = std::make_unique<SurfaceGroup>(genus);
        slot.second = std::make_unique<FuchsianModel>(*slot.first);
    }
    return *slot.second;
}

const SO3Rep& so3(int p) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<SO3Rep>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto& slot = cache[p];
    if (!slot) slot = std::make_unique<SO3Rep>(p);
    return *slot;
}

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

// sheet-0 block of an induced image, after checking that sheet 0 is invariant
ExactMatrix sheet0_block(const ExactMatrix& M, int d) {
    for (int r = d; r < M.dim(); ++r)
        for (int c = 0; c < d; ++c)
            if (!M(r, c).is_zero()) throw ArithmeticError("sheet 0 is not invariant");
    ExactMatrix B(d, M.order());
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) B(r, c) = M(r, c);
    return B;
}

}  // namespace

void PipelineConfig::apply(const std::string& key, const std::string& value) {
    try {
        if (key == "genus") {
            genus = std::stoi(value);
        } else if (key == "levels") {
            levels.clear();
            std::stringstream ss(value);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!trim(tok).empty()) levels.push_back(std::stoi(trim(tok)));
        } else if (key == "max_cover_degree") {
            max_cover_degree = std::stoi(value);
        } else if (key == "max_bits") {
            max_bits = std::stol(value);
        } else if (key == "max_norm_degree") {
            max_norm_degree = std::stol(value);
        } else if (key == "all_levels") {
            all_levels = value == "1" || value == "true" || value == "yes";
        } else {
            throw PreconditionError("unknown configuration key: " + key);
        }
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const PreconditionError*>(&e)) throw;
        throw PreconditionError("bad value for " + key + ": " + value);
    }
}

PipelineConfig PipelineConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot read configuration file " + path);
    PipelineConfig c;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw PreconditionError("configuration line without '=': " + line);
        c.apply(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return c;
}

void PipelineConfig::apply_environment() {
    if (const char* v = std::getenv("SCC_MAX_PRECISION")) apply("max_bits", v);
}

nlohmann::json PipelineConfig::to_json() const {
    return {{"genus", genus},       {"levels", levels},
            {"max_cover_degree", max_cover_degree}, {"max_bits", max_bits},
            {"max_norm_degree", max_norm_degree},   {"all_levels", all_levels}};
}

nlohmann::json RepCertificate::to_json() const {
    return {{"level", level},
            {"word", word_to_json(word)},
            {"cover", cover.to_json()},
            {"induced_hash", induced_hash},
            {"witness", scc::to_json(witness)},
            {"route", route}};
}

RepCertificate RepCertificate::from_json(const nlohmann::json& j) {
    RepCertificate c;
    c.level = j.at("level").get<int>();
    c.word = word_from_json(j.at("word"));
    c.cover = CosetTable::from_json(j.at("cover"));
    c.induced_hash = j.at("induced_hash").get<std::string>();
    c.witness = intpoly_from_json(j.at("witness"));
    c.route = j.at("route").get<std::string>();
    return c;
}

namespace {

std::optional<RepCertificate> make_certificate(const SO3Rep& R, const Word& w, const CosetTable& cover,
                                               const ImageOrder& o) {
    if (o.order.kind != ProjectiveOrder::Kind::Infinite || !cover.contains(w)) return std::nullopt;
    Representation ind = induce(Representation::from_so3(R), cover);
    ExactMatrix Mw = ind.image(w);
    // the induced image restricts to rho_p(w) on sheet 0, so the same witness applies
    ExactMatrix B = sheet0_block(Mw, R.dim());
    if (B != R.rho(w)) return std::nullopt;
    std::string route;
    if (ratio_norm_polynomial(B, &route) != o.order.witness) return std::nullopt;
    RepCertificate c;
    c.level = R.level();
    c.word = w;
    c.cover = cover;
    c.induced_hash = Mw.hash_hex();
    c.witness = o.order.witness;
    c.route = route;
    return c;
}

}  // namespace

bool verify_certificate(const RepCertificate& c) {
    if (!c.cover.is_valid() || !c.cover.contains(c.word)) return false;
    if (is_cyclotomic_product(c.witness)) return false;
    SO3Rep R(c.level);
    ExactMatrix Mw = induce(Representation::from_so3(R), c.cover).image(c.word);
    if (Mw.hash_hex() != c.induced_hash) return false;
    ExactMatrix B;
    try {
        B = sheet0_block(Mw, R.dim());
    } catch (const ArithmeticError&) {
        return false;
    }
    return ratio_norm_polynomial(B) == c.witness;
}

std::string ClassificationResult::verdict_name() const {
    switch (verdict) {
        case Verdict::Simple: return "Simple";
        case Verdict::ProperPower: return "ProperPower";
        case Verdict::NonSimple: return "NonSimple";
        case Verdict::Unknown: return "Unknown";
    }
    return "Unknown";
}

nlohmann::json ClassificationResult::to_json() const {
    nlohmann::json j = {{"verdict", verdict_name()}, {"word", format_word(word)}, {"word_json", word_to_json(word)}};
    if (verdict == Verdict::ProperPower) {
        j["root"] = format_word(root);
        j["root_json"] = word_to_json(root);
        j["exponent"] = exponent;
        if (!root_result.empty()) j["root_result"] = root_result[0].to_json();
    }
    nlohmann::json certs = nlohmann::json::object();
    if (verdict != Verdict::ProperPower) certs["geometry"] = geometry.to_json();
    if (cover_search) certs["cover_search"] = cover_search->to_json();
    if (!level_verdicts.empty()) {
        nlohmann::json lv = nlohmann::json::array();
        for (const auto& o : level_verdicts) lv.push_back(o.to_json());
        certs["levels"] = lv;
    }
    if (verdict == Verdict::NonSimple) certs["representation"] = certificate ? certificate->to_json() : nlohmann::json(nullptr);
    j["certificates"] = certs;
    j["timings"] = timings;
    j["config"] = config;
    return j;
}

ClassificationResult classify(const Word& w0, const PipelineConfig& cfg) {
    const FuchsianModel& M = model_for(cfg.genus);
    const SurfaceGroup& G = M.group();
    if (G.is_identity(w0)) throw PreconditionError("classify: the identity element has no free homotopy class");
    ClassificationResult res;
    res.word = w0;
    res.config = cfg.to_json();
    auto t0 = std::chrono::steady_clock::now();
    auto pp = is_proper_power(M, w0);
    res.timings["proper_power"] = since(t0);
    if (pp) {
        res.verdict = ClassificationResult::Verdict::ProperPower;
        res.root = pp->first;
        res.exponent = pp->second;
        res.root_result.push_back(classify(pp->first, cfg));
        return res;
    }
    t0 = std::chrono::steady_clock::now();
    SearchLimits lim;
    lim.max_bits = cfg.max_bits;
    res.geometry = self_intersection(M, w0, {}, lim);
    res.timings["self_intersection"] = since(t0);
    if (!res.geometry.certified) return res;
    if (res.geometry.count == 0) {
        res.verdict = ClassificationResult::Verdict::Simple;
        return res;
    }
    // the certified count already proves non-simplicity; add a representation certificate if one is found
    res.verdict = ClassificationResult::Verdict::NonSimple;
    t0 = std::chrono::steady_clock::now();
    try {
        res.cover_search = find_figure_eight_cover(M, w0, cfg.max_cover_degree);
    } catch (const std::runtime_error&) {
        res.cover_search.reset();
    }
    res.timings["cover_search"] = since(t0);
    if (!res.cover_search || !res.cover_search->found || cfg.genus != 2) return res;
    t0 = std::chrono::steady_clock::now();
    OrderOptions opt;
    opt.max_norm_degree = cfg.max_norm_degree;
    for (int p : cfg.levels) {
        const SO3Rep& R = so3(p);
        ImageOrder o = order_of_image(R, w0, opt);
        res.level_verdicts.push_back(o);
        if (!res.certificate) res.certificate = make_certificate(R, w0, res.cover_search->cover, o);
        if (res.certificate && !cfg.all_levels) break;
    }
    res.timings["representation"] = since(t0);
    return res;
}

bool verify_result(const nlohmann::json& j) {
    const int genus = j.at("config").at("genus").get<int>();
    const FuchsianModel& M = model_for(genus);
    const SurfaceGroup& G = M.group();
    Word w = word_from_json(j.at("word_json"));
    const std::string v = j.at("verdict").get<std::string>();
    if (v == "ProperPower") {
        Word root = word_from_json(j.at("root_json"));
        int n = j.at("exponent").get<int>();
        if (n < 2 || !G.is_identity(concat(power(root, n), inverse(w)))) return false;
        return !j.contains("root_result") || verify_result(j.at("root_result"));
    }
    if (v == "Unknown") return false;
    auto hi = self_intersection(*M.at_precision(2 * M.precision()), w);
    if (!hi.certified || hi.count != j.at("certificates").at("geometry").at("count").get<int>()) return false;
    if (v == "Simple") return hi.count == 0;
    if (hi.count == 0) return false;
    const auto& rep = j.at("certificates").at("representation");
    return rep.is_null() || verify_certificate(RepCertificate::from_json(rep));
}

RhoI build_rho_i(int i, const PipelineConfig& cfg) {
    const FuchsianModel& M = model_for(cfg.genus);
    RhoI out;
    out.i = i;
    nlohmann::json classes = nlohmann::json::array();
    std::vector<Representation> factors;
    std::vector<nlohmann::json> factor_info;
    std::map<std::string, int> factor_index;
    int nonsimple = 0, covered = 0, unknown = 0, simple = 0, powers = 0;
    OrderOptions opt;
    opt.max_norm_degree = cfg.max_norm_degree;
    for (const Word& w : enumerate_classes(M, i)) {
        nlohmann::json e = {{"word", format_word(w)}, {"length", M.group().length(w)}};
        if (is_proper_power(M, w)) {
            e["status"] = "proper-power";
            ++powers;
            classes.push_back(e);
            continue;
        }
        SearchLimits lim;
        lim.max_bits = cfg.max_bits;
        auto si = self_intersection(M, w, {}, lim);
        if (!si.certified) {
            e["status"] = "uncertified";
            ++unknown;
            classes.push_back(e);
            continue;
        }
        e["self_intersection"] = si.count;
        if (si.count == 0) {
            e["status"] = "simple";
            ++simple;
            classes.push_back(e);
            continue;
        }
        ++nonsimple;
        e["status"] = "unknown";
        FigureEightCover fc;
        try {
            fc = find_figure_eight_cover(M, w, cfg.max_cover_degree);
        } catch (const std::runtime_error&) {
            fc.found = false;
        }
        if (fc.found && cfg.genus == 2) {
            for (int p : cfg.levels) {
                const SO3Rep& R = so3(p);
                if (order_of_image(R, w, opt).order.kind != ProjectiveOrder::Kind::Infinite) continue;
                std::string key = std::to_string(p) + ":" + fc.cover.to_json().dump();
                auto it = factor_index.find(key);
                if (it == factor_index.end()) {
                    it = factor_index.emplace(key, static_cast<int>(factors.size())).first;
                    factors.push_back(induce(Representation::from_so3(R), fc.cover));
                    factor_info.push_back({{"level", p}, {"cover", fc.cover.to_json()}, {"dim", factors.back().dim()}});
                    long bound = 1;
                    for (long k = 1; k <= fc.cover.degree; ++k) bound = nt::lcm(bound, k);
                    out.simple_order_bound = nt::lcm(out.simple_order_bound, bound * 2 * p);
                }
                e["status"] = "covered";
                e["factor"] = it->second;
                e["level"] = p;
                e["cover_degree"] = fc.cover.degree;
                ++covered;
                break;
            }
        }
        if (e["status"] == "unknown") ++unknown;
        classes.push_back(e);
    }
    if (!factors.empty()) out.rho = direct_sum(factors);
    out.partial = unknown > 0;
    out.manifest = {{"i", i},
                    {"genus", cfg.genus},
                    {"classes", classes},
                    {"factors", factor_info},
                    {"summary",
                     {{"simple", simple},
                      {"proper_powers", powers},
                      {"nonsimple", nonsimple},
                      {"covered", covered},
                      {"unknown", unknown}}},
                    {"dim", out.rho ? out.rho->dim() : 0},
                    {"simple_order_bound", out.simple_order_bound},
                    {"partial", out.partial},
                    {"config", cfg.to_json()}};
    return out;
}

}  // namespace scc
