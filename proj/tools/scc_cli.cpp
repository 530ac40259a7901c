#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "scc/exact/errors.hpp"
#include "scc/pipeline/classify.hpp"

using namespace scc;
namespace fs = std::filesystem;

namespace {

void write_json(const nlohmann::json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw PreconditionError("cannot write " + path);
    out << j.dump(2) << "\n";
}

std::string levels_csv(const std::vector<int>& v) {
    std::string s;
    for (int p : v) s += (s.empty() ? "" : ",") + std::to_string(p);
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"simple closed curve detection on closed surface groups"};
    app.require_subcommand(1);

    std::string config_path, word, levels, out;
    int genus = 2, max_degree = -1, level = 5, rho_index = 1;
    bool json = false;

    auto* cls = app.add_subcommand("classify", "decide whether a word is represented by a simple closed curve");
    cls->add_option("--genus", genus, "surface genus");
    cls->add_option("--word", word, "word, e.g. \"a1 A2\" or \"a1 a2^-1\"")->required();
    cls->add_option("--levels", levels, "comma separated odd levels p");
    cls->add_option("--max-degree", max_degree, "cover degree cap");
    cls->add_option("--config", config_path, "key = value configuration file");
    cls->add_flag("--json", json, "print the full JSON result");

    auto* cov = app.add_subcommand("cover-search", "search for a cover in which the word lifts to a figure eight");
    cov->add_option("--genus", genus, "surface genus");
    cov->add_option("--word", word, "word")->required();
    cov->add_option("--max-degree", max_degree, "cover degree cap");

    auto* rep = app.add_subcommand("rep", "SO(3) quantum representations");
    rep->require_subcommand(1);
    auto* rep_build = rep->add_subcommand("build", "write generator images");
    rep_build->add_option("--genus", genus, "surface genus (2)");
    rep_build->add_option("--level", level, "odd level p >= 5");
    rep_build->add_option("--out", out, "output file (default stdout)");
    auto* rep_order = rep->add_subcommand("order", "projective order of the image of a word");
    rep_order->add_option("--word", word, "word")->required();
    rep_order->add_option("--level", level, "odd level p >= 5");

    auto* rho = app.add_subcommand("rho-i", "build the direct sum over non-simple classes of length <= i");
    rho->add_option("--i", rho_index, "length bound")->required();
    rho->add_option("--levels", levels, "comma separated odd levels p");
    rho->add_option("--max-degree", max_degree, "cover degree cap");
    rho->add_option("--config", config_path, "key = value configuration file");
    rho->add_option("--out", out, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        PipelineConfig cfg = config_path.empty() ? PipelineConfig{} : PipelineConfig::from_file(config_path);
        cfg.apply_environment();
        if (cls->parsed() || cov->parsed()) cfg.genus = genus;
        if (!levels.empty()) cfg.apply("levels", levels);
        if (max_degree >= 0) cfg.max_cover_degree = max_degree;

        if (cls->parsed()) {
            auto r = classify(parse_word(word, cfg.genus), cfg);
            if (json) {
                std::cout << r.to_json().dump(2) << "\n";
            } else {
                std::cout << r.verdict_name();
                if (r.verdict == ClassificationResult::Verdict::ProperPower)
                    std::cout << " root=" << format_word(r.root) << " n=" << r.exponent;
                else if (r.geometry.certified)
                    std::cout << " self_intersection=" << r.geometry.count;
                if (r.certificate) std::cout << " certificate_level=" << r.certificate->level;
                std::cout << "\n";
            }
        } else if (cov->parsed()) {
            SurfaceGroup G(cfg.genus);
            FuchsianModel M(G);
            auto fc = find_figure_eight_cover(M, parse_word(word, cfg.genus), cfg.max_cover_degree);
            std::cout << fc.to_json().dump(2) << "\n";
        } else if (rep_build->parsed()) {
            if (genus != 2) throw PreconditionError("rep build: only genus 2 is implemented");
            write_json(SO3Rep(level).to_json(), out);
        } else if (rep_order->parsed()) {
            OrderOptions opt;
            opt.max_norm_degree = cfg.max_norm_degree;
            std::cout << order_of_image(SO3Rep(level), parse_word(word, 2), opt).to_json().dump(2) << "\n";
        } else if (rho->parsed()) {
            RhoI r = build_rho_i(rho_index, cfg);
            fs::create_directories(out);
            write_json(r.manifest, (fs::path(out) / "manifest.json").string());
            if (r.rho) write_json(r.rho->to_json(), (fs::path(out) / "rho.json").string());
            std::cout << "i=" << rho_index << " dim=" << r.manifest["dim"] << " factors=" << r.manifest["factors"].size()
                      << " levels=" << levels_csv(cfg.levels) << (r.partial ? " partial" : "") << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
