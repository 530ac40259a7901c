#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "scc/pipeline/induction.hpp"

namespace scc {

struct PipelineConfig {
    int genus = 2;
    std::vector<int> levels{5, 7, 9, 11, 13};
    int max_cover_degree = 2;
    mpfr_prec_t max_bits = 4096;  // precision ceiling for certified geometry
    long max_norm_degree = 700;   // budget for the infinite-order certificate
    bool all_levels = false;      // classify: keep evaluating levels after a certificate

    // key = value lines: genus, levels (comma list), max_cover_degree, max_bits, max_norm_degree, all_levels
    static PipelineConfig from_file(const std::string& path);
    void apply(const std::string& key, const std::string& value);
    // SCC_MAX_PRECISION overrides max_bits
    void apply_environment();
    nlohmann::json to_json() const;
};

// Infinite-order certificate for w through an induced representation; re-verifiable from its JSON.
struct RepCertificate {
    int level = 0;
    Word word;
    CosetTable cover;
    std::string induced_hash;  // hash of the induced image of w
    IntPolynomial witness;     // norm polynomial, not a product of cyclotomics
    std::string route;
    nlohmann::json to_json() const;
    static RepCertificate from_json(const nlohmann::json& j);
};

// rebuild rho_p, induce along the cover, check the hash, the sheet-0 block, and the witness polynomial
bool verify_certificate(const RepCertificate& c);

struct ClassificationResult {
    enum class Verdict { Simple, ProperPower, NonSimple, Unknown };
    Verdict verdict = Verdict::Unknown;
    Word word;
    Word root;  // ProperPower
    int exponent = 0;
    std::vector<ClassificationResult> root_result;  // classification of the root (at most one)
    SelfIntersectionReport geometry;
    std::optional<FigureEightCover> cover_search;
    std::vector<ImageOrder> level_verdicts;
    std::optional<RepCertificate> certificate;
    std::map<std::string, double> timings;  // seconds per stage
    nlohmann::json config;

    std::string verdict_name() const;
    nlohmann::json to_json() const;
};

ClassificationResult classify(const Word& w, const PipelineConfig& cfg = {});

// re-check a result from its JSON alone: proper power identity, certified count at doubled
// precision, representation certificate
bool verify_result(const nlohmann::json& j);

struct RhoI {
    int i = 0;
    std::optional<Representation> rho;  // empty sum when no class was certified
    nlohmann::json manifest;            // classes covered / left unknown, factors, order bound
    long simple_order_bound = 1;        // lcm over factors of lcm(1..N) * 2p
    bool partial = false;
};

RhoI build_rho_i(int i, const PipelineConfig& cfg = {});

}  // namespace scc
