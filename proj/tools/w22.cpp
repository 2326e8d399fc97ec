#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "w22/suites.hpp"

namespace {

const char* suite_blurb(const std::string& name) {
    if (name == "axioms")
        return "Lie bracket axioms, module compatibility, PBW straightening";
    if (name == "omega")
        return "Polynomial module construction and simplicity probes";
    if (name == "hom")
        return "Intertwiner space dimensions between polynomial modules";
    if (name == "tensor-simplicity")
        return "Coefficient extraction, reduction spans, vacuum generation";
    if (name == "degenerate")
        return "Proper submodule at coincident parameters";
    if (name == "rg")
        return "Rank invariant of the operator-image span";
    if (name == "determinant")
        return "Block determinant closed form";
    if (name == "q-identity")
        return "Quadratic element normalization and degree growth";
    if (name == "fingerprint")
        return "Isomorphism invariants recovered from the action";
    return "Every suite in sequence";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic verifier for W-algebra module constructions"};
    app.require_subcommand(1);

    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 0;
    std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
    bool timings = false;

    verify->add_option("--config", config_path, "JSON file overriding the default parameters");
    CLI::Option* seed_opt =
        verify->add_option("--seed", seed, "Seed for the randomized sweeps (default 0)");
    verify->add_option("--out", out_path, "Write the JSON report here instead of stdout");
    verify->add_option("--jobs", jobs, "Worker threads (default: hardware concurrency)");
    verify->add_flag("--timings", timings, "Include per-check millis in the report");

    std::vector<std::string> all_suites = w22::suite_names();
    all_suites.push_back("all");
    for (const auto& name : all_suites)
        verify->add_subcommand(name, suite_blurb(name))->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    w22::RunConfig cfg = w22::RunConfig::defaults();
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "config: cannot read " << config_path << "\n";
            return 2;
        }
        w22::Json doc;
        try {
            doc = w22::Json::parse(in);
        } catch (const w22::Json::parse_error& e) {
            std::cerr << "config: " << e.what() << "\n";
            return 2;
        }
        try {
            cfg = w22::RunConfig::from_json(doc);
        } catch (const w22::ConfigError& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
    }
    if (seed_opt->count() > 0)
        cfg.seed = seed;

    std::string suite = verify->get_subcommands().front()->get_name();
    std::vector<w22::CheckJob> checks;
    try {
        checks = w22::build_suite(suite, cfg);
    } catch (const w22::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    w22::SuiteRun run = w22::execute_jobs(suite, std::move(checks), cfg.seed, jobs);
    std::string report = w22::report_json(run, timings).dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << report;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        out << report;
    }
    std::cerr << suite << ": " << run.passed << " passed, " << run.failed << " failed, "
              << run.skipped << " skipped\n";
    return run.failed > 0 ? 1 : 0;
}
