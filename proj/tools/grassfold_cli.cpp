// Command-line front end for libgrassfold. Talks to the library exclusively
// through the C API in grassfold.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "grassfold.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct StringHolder {
    char* s = nullptr;
    ~StringHolder() { gf_string_free(s); }
    std::string str() const { return s ? std::string(s) : std::string(); }
};

struct SeedHolder {
    gf_seed_t* seed = nullptr;
    ~SeedHolder() { gf_seed_free(seed); }
};

void emit_error(int status, const std::string& message) {
    std::cerr << "{\"error\": {\"status\": \"" << gf_status_name(status)
              << "\", \"message\": \"" << message << "\"}}" << std::endl;
}

int check(int status) {
    if (status != GF_OK) {
        emit_error(status, gf_last_error());
        std::exit(status == GF_ERROR_INVALID_ARGUMENT || status == GF_ERROR_PARSE
                      ? kExitUsage
                      : kExitVerificationFailed);
    }
    return status;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << std::endl;
        return;
    }
    std::ofstream f(out_path);
    if (!f) {
        emit_error(GF_ERROR_IO, "cannot open output file " + out_path);
        std::exit(kExitVerificationFailed);
    }
    f << text << "\n";
}

// Accepts "9,10,11" or, in positions mode, "1:3,2:3" pairs of row:col.
std::vector<int> parse_sequence(const std::string& text, bool positions,
                                const gf_seed_t* seed) {
    std::vector<int> ids;
    if (text.empty()) return ids;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (positions) {
            auto colon = item.find(':');
            if (colon == std::string::npos) {
                emit_error(GF_ERROR_INVALID_ARGUMENT,
                           "positions mode expects row:col entries, got " + item);
                std::exit(kExitUsage);
            }
            int row = std::stoi(item.substr(0, colon));
            int col = std::stoi(item.substr(colon + 1));
            int id = 0;
            check(gf_seed_vertex_id(seed, row, col, &id));
            ids.push_back(id);
        } else {
            ids.push_back(std::stoi(item));
        }
    }
    return ids;
}

bool report_passes(const std::string& json) {
    // the reports guarantee a top-level "pass" field
    auto pos = json.rfind("\"pass\": ");
    return pos != std::string::npos && json.compare(pos + 8, 4, "true") == 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"grassfold: foldable seeds of Grassmannian cluster algebras and the "
                 "D=3 constraint verification toolkit"};
    app.require_subcommand(1);

    int k = 4, n = 9, trials = 20, dim = 3;
    double tol = 1e-8;
    uint64_t rng_seed = 0;
    std::string sequence, out_path, variant = "uniform", format = "json";
    bool positions = false;

    auto add_kn = [&](CLI::App* cmd) {
        cmd->add_option("--k", k, "number of rows (even for folding)");
        cmd->add_option("--n", n, "number of columns / particles");
    };

    auto* cmd_seed = app.add_subcommand("seed", "emit the initial seed");
    add_kn(cmd_seed);
    cmd_seed->add_option("--out", out_path, "output file (default stdout)");
    cmd_seed->add_option("--format", format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));

    auto* cmd_mutate = app.add_subcommand("mutate", "apply a mutation sequence");
    add_kn(cmd_mutate);
    cmd_mutate->add_option("--sequence", sequence, "comma-separated vertex ids");
    cmd_mutate->add_flag("--positions", positions, "sequence entries are row:col pairs");
    cmd_mutate->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_fold = app.add_subcommand("fold", "schedule, foldable seed, folding equations");
    add_kn(cmd_fold);
    cmd_fold->add_option("--variant", variant, "uniform or literal")
        ->check(CLI::IsMember({"uniform", "literal"}));
    cmd_fold->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_vseed = app.add_subcommand("verify-seed",
                                         "compare engine output against the predictions");
    add_kn(cmd_vseed);
    cmd_vseed->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_vex = app.add_subcommand("verify-exchange", "exact exchange-relation checks");
    add_kn(cmd_vex);
    cmd_vex->add_option("--variant", variant, "uniform or literal")
        ->check(CLI::IsMember({"uniform", "literal"}));
    cmd_vex->add_option("--trials", trials, "random matrices per exchange record");
    cmd_vex->add_option("--rng-seed", rng_seed, "random seed");
    cmd_vex->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_vkin = app.add_subcommand("verify-kinematics",
                                        "D=3 residual suite or D=4 negative control");
    cmd_vkin->add_option("--n", n, "number of particles");
    cmd_vkin->add_option("--dim", dim, "3 or 4")->check(CLI::IsMember({3, 4}));
    cmd_vkin->add_option("--trials", trials, "number of samples");
    cmd_vkin->add_option("--tol", tol, "residual tolerance (dim 3) or threshold (dim 4)");
    cmd_vkin->add_option("--rng-seed", rng_seed, "random seed");
    cmd_vkin->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_dot = app.add_subcommand("export-dot", "Graphviz export of a seed");
    add_kn(cmd_dot);
    cmd_dot->add_option("--sequence", sequence, "mutations to apply first");
    cmd_dot->add_flag("--positions", positions, "sequence entries are row:col pairs");
    std::string input_path;
    cmd_dot->add_option("--input", input_path, "seed JSON file instead of --k/--n");
    cmd_dot->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        emit_error(GF_ERROR_INVALID_ARGUMENT, e.what());
        return kExitUsage;
    }

    if (cmd_seed->parsed()) {
        SeedHolder seed;
        check(gf_seed_initial(k, n, &seed.seed));
        StringHolder text;
        check(format == "dot" ? gf_seed_to_dot(seed.seed, &text.s)
                              : gf_seed_to_json(seed.seed, &text.s));
        write_output(text.str(), out_path);
        return kExitOk;
    }

    if (cmd_mutate->parsed()) {
        SeedHolder seed;
        check(gf_seed_initial(k, n, &seed.seed));
        auto ids = parse_sequence(sequence, positions, seed.seed);
        StringHolder trace;
        check(gf_seed_apply_sequence(seed.seed, ids.data(), ids.size(), &trace.s));
        StringHolder sj;
        check(gf_seed_to_json(seed.seed, &sj.s));
        write_output("{\n\"seed\": " + sj.str() + ",\n\"trace\": " + trace.str() + "\n}",
                     out_path);
        return kExitOk;
    }

    if (cmd_fold->parsed()) {
        StringHolder text;
        check(gf_fold(k, n, variant == "literal" ? GF_SCHEDULE_LITERAL : GF_SCHEDULE_UNIFORM,
                      &text.s));
        write_output(text.str(), out_path);
        return kExitOk;
    }

    if (cmd_vseed->parsed()) {
        StringHolder text;
        check(gf_verify_seed(k, n, &text.s));
        write_output(text.str(), out_path);
        return report_passes(text.str()) ? kExitOk : kExitVerificationFailed;
    }

    if (cmd_vex->parsed()) {
        StringHolder text;
        check(gf_verify_exchange(k, n,
                                 variant == "literal" ? GF_SCHEDULE_LITERAL
                                                      : GF_SCHEDULE_UNIFORM,
                                 trials, rng_seed, &text.s));
        write_output(text.str(), out_path);
        return report_passes(text.str()) ? kExitOk : kExitVerificationFailed;
    }

    if (cmd_vkin->parsed()) {
        StringHolder text;
        check(gf_verify_kinematics(n, dim, trials, tol, rng_seed, &text.s));
        write_output(text.str(), out_path);
        return report_passes(text.str()) ? kExitOk : kExitVerificationFailed;
    }

    if (cmd_dot->parsed()) {
        SeedHolder seed;
        if (!input_path.empty()) {
            std::ifstream f(input_path);
            if (!f) {
                emit_error(GF_ERROR_IO, "cannot read " + input_path);
                return kExitUsage;
            }
            std::stringstream buf;
            buf << f.rdbuf();
            check(gf_seed_from_json(buf.str().c_str(), &seed.seed));
        } else {
            check(gf_seed_initial(k, n, &seed.seed));
        }
        auto ids = parse_sequence(sequence, positions, seed.seed);
        if (!ids.empty())
            check(gf_seed_apply_sequence(seed.seed, ids.data(), ids.size(), nullptr));
        StringHolder text;
        check(gf_seed_to_dot(seed.seed, &text.s));
        write_output(text.str(), out_path);
        return kExitOk;
    }

    return kExitUsage;
}
