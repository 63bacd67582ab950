// Batch front end: parse fixture workspaces, run verification suites, emit
// deterministic reports.  Exit codes: 0 pass, 1 check failure, 2 input error.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "skewcov/suites.hpp"

using namespace skewcov;

namespace {

int run_command(const std::string& path, const std::string& suite, uint64_t seed, int budget,
                bool strict, const std::string& out_dir, std::optional<uint32_t> field_p) {
    Workspace ws;
    try {
        ws = parse_workspace(path, field_p);
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    std::vector<std::string> suites;
    bool run_all = suite == "all";
    if (run_all)
        suites = kSuiteNames;
    else
        suites.push_back(suite);
    int code = 0;
    for (auto& s : suites) {
        SuiteResult res;
        try {
            res = run_suite(ws, s, seed, budget);
        } catch (const UnknownSuite& e) {
            std::cerr << "input error: " << e.what() << "\n";
            return 2;
        } catch (const std::exception& e) {
            if (run_all) {
                // a workspace need not carry inputs for every suite
                std::cout << "suite " << s << " skipped: " << e.what() << "\n";
                continue;
            }
            std::cerr << "input error in suite " << s << ": " << e.what() << "\n";
            return 2;
        }
        std::cout << res.text();
        if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            std::ofstream txt(out_dir + "/" + s + ".txt");
            txt << res.text();
            std::ofstream csv(out_dir + "/" + s + ".csv");
            csv << res.csv();
        }
        code = std::max(code, res.exit_code(strict));
    }
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"skewcov: verification workbench for skew group algebras"};
    app.require_subcommand(1);

    std::string path, suite = "all", out_dir;
    uint64_t seed = 0;
    int budget = 64;
    bool strict = false;
    unsigned field_p = 0;

    auto* run = app.add_subcommand("run", "run a verification suite over a workspace file");
    run->add_option("workspace", path, "workspace file")->required();
    run->add_option("--suite", suite,
                    "suite name (default: all): semicovering-mod hgcm adjunction gstab gcf "
                    "phi-exact-faithful yoneda-square radical-preservation brauer-all");
    run->add_option("--seed", seed, "seed for the randomized witness searches");
    run->add_option("--budget", budget, "trial budget for the randomized searches");
    run->add_option("--field-p", field_p, "prime field modulus override");
    run->add_option("--out", out_dir, "directory for the .txt/.csv reports");
    run->add_flag("--strict", strict, "treat inconclusive outcomes as failures");

    auto* parse = app.add_subcommand("parse", "parse and validate a workspace file");
    parse->add_option("workspace", path, "workspace file")->required();
    parse->add_option("--field-p", field_p, "prime field modulus override");

    CLI11_PARSE(app, argc, argv);

    std::optional<uint32_t> fp;
    if (field_p) fp = (uint32_t)field_p;

    if (app.got_subcommand(parse)) {
        try {
            Workspace ws = parse_workspace(path, fp);
            std::cout << "ok: " << ws.algebras.size() << " algebras, " << ws.groups.size()
                      << " groups, " << (ws.action ? 1 : 0) << " action, " << ws.modules.size()
                      << " modules, " << ws.morphisms.size() << " morphisms, "
                      << ws.functors.size() << " functors, " << ws.brauer_graphs.size()
                      << " brauer graphs\n";
            return 0;
        } catch (const std::exception& e) {
            std::cerr << "input error: " << e.what() << "\n";
            return 2;
        }
    }
    return run_command(path, suite, seed, budget, strict, out_dir, fp);
}
