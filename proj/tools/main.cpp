#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sp2q/json_io.hpp"
#include "sp2q/synth.hpp"

namespace {

// Exit codes: 0 ok, 2 parse/usage, 3 validation, 4 failed check,
// 5 unsupported request.
constexpr int kOk = 0;
constexpr int kParseError = 2;
constexpr int kValidationError = 3;
constexpr int kCheckFailed = 4;
constexpr int kUnsupported = 5;

struct CliError {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{kParseError, "cannot open " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError{kValidationError, "cannot write " + path};
    out << text << "\n";
}

int run_compile(const std::string& input, const std::string& output, bool check) {
    sp2q::Mat4 u;
    try {
        u = sp2q::mat4_from_json(read_file(input));
    } catch (const std::invalid_argument& e) {
        throw CliError{kParseError, e.what()};
    }
    if (!sp2q::is_unitary(u, 1e-8)) throw CliError{kValidationError, "input matrix is not unitary"};

    const sp2q::SetupConfig cfg = sp2q::compile_two_qubit(u);
    write_output(output, sp2q::to_json(cfg));

    if (check) {
        const sp2q::Mat4 rebuilt = sp2q::assemble_two_qubit(cfg);
        const double up_to_phase = sp2q::dist_up_to_phase(rebuilt, u);
        const double exact = sp2q::frobenius_distance(rebuilt, u);
        std::fprintf(stderr, "check: dist_up_to_phase=%.3e exact=%.3e\n", up_to_phase, exact);
        if (!(exact < 1e-8)) return kCheckFailed;
    }
    return kOk;
}

int run_gate(const std::string& name, const std::string& emit) {
    sp2q::GateName g;
    try {
        g = sp2q::gate_name_from_string(name);
    } catch (const std::invalid_argument& e) {
        throw CliError{kParseError, e.what()};
    }
    if (emit == "matrix") {
        std::cout << sp2q::to_json(sp2q::gate(g)) << "\n";
        return kOk;
    }
    if (!sp2q::has_settings(g))
        throw CliError{kUnsupported, "no published settings for " + name + "; use `compile`"};
    std::cout << sp2q::to_json(sp2q::settings(g)) << "\n";
    return kOk;
}

int run_simulate(const std::string& setup_path, const std::string& state_path,
                 const std::string& rho_path, std::uint64_t shots,
                 const std::optional<std::uint64_t>& seed) {
    sp2q::SetupConfig cfg;
    try {
        cfg = sp2q::setup_from_json(read_file(setup_path));
    } catch (const std::invalid_argument& e) {
        throw CliError{kParseError, e.what()};
    }

    const sp2q::DensityMat rho = [&]() -> sp2q::DensityMat {
        try {
            if (!state_path.empty())
                return sp2q::DensityMat::pure(sp2q::statevec_from_json(read_file(state_path)));
            return sp2q::DensityMat::checked(sp2q::density_matrix_from_json(read_file(rho_path)));
        } catch (const std::invalid_argument& e) {
            throw CliError{kValidationError, e.what()};
        }
    }();

    sp2q::SimulationReport report;
    report.probabilities = sp2q::detection_probabilities(rho, sp2q::assemble_two_qubit(cfg));
    if (shots > 0) {
        if (!seed) throw CliError{kParseError, "--shots requires an explicit --seed"};
        report.counts = sp2q::sample_counts(report.probabilities, shots, *seed);
        report.seed = *seed;
    }
    std::cout << sp2q::to_json(report) << "\n";
    return kOk;
}

int run_tomography(const std::string& rho_path, std::uint64_t shots,
                   const std::optional<std::uint64_t>& seed) {
    const sp2q::DensityMat rho = [&]() -> sp2q::DensityMat {
        try {
            return sp2q::DensityMat::checked(sp2q::density_matrix_from_json(read_file(rho_path)));
        } catch (const std::invalid_argument& e) {
            throw CliError{kValidationError, e.what()};
        }
    }();
    if (shots > 0 && !seed) throw CliError{kParseError, "--shots requires an explicit --seed"};
    const sp2q::TomographyResult result = sp2q::tomography_pipeline(rho, shots, seed.value_or(0));
    std::cout << sp2q::to_json(result) << "\n";
    return kOk;
}

int run_grover(int oracle) {
    std::cout << sp2q::to_string(sp2q::grover_run(oracle)) << "\n";
    return kOk;
}

int run_vaa(std::uint64_t seed, const std::optional<int>& which, const std::optional<int>& outcome) {
    if (which.has_value() != outcome.has_value())
        throw CliError{kParseError, "--measurement and --outcome must be given together"};
    sp2q::VaaTranscript t{};
    if (which) {
        if (*outcome != 1 && *outcome != -1) throw CliError{kParseError, "--outcome must be +1 or -1"};
        t = sp2q::vaa_run_prepared({*which, *outcome}, seed);
    } else {
        t = sp2q::vaa_full_run(seed);
    }
    std::cout << sp2q::to_json(t) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-photon two-qubit optical gate toolkit"};
    app.require_subcommand(1);

    // compile
    auto* compile = app.add_subcommand("compile", "decompose a 4x4 unitary into optical settings");
    std::string compile_input, compile_output;
    bool compile_check = false;
    compile->add_option("input", compile_input, "path to the unitary (matrix JSON)")->required();
    compile->add_option("--output", compile_output, "write the setup JSON here instead of stdout");
    compile->add_flag("--check", compile_check, "re-assemble and verify the round trip");

    // gate
    auto* gate_cmd = app.add_subcommand("gate", "look up a named gate");
    std::string gate_name, gate_emit = "matrix";
    gate_cmd->add_option("--name", gate_name, "gate name, e.g. bell, swap, tomo-4")->required();
    gate_cmd->add_option("--emit", gate_emit, "matrix or settings")
        ->check(CLI::IsMember({"matrix", "settings"}));

    // simulate
    auto* sim = app.add_subcommand("simulate", "detector statistics for a setup and input state");
    std::string sim_setup, sim_state, sim_rho;
    std::uint64_t sim_shots = 0;
    std::optional<std::uint64_t> sim_seed;
    sim->add_option("--setup", sim_setup, "setup JSON path")->required();
    auto* state_opt = sim->add_option("--state", sim_state, "pure state JSON path");
    auto* rho_opt = sim->add_option("--rho", sim_rho, "density matrix JSON path");
    state_opt->excludes(rho_opt);
    sim->add_option("--shots", sim_shots, "number of sampled detections (0 = analytic only)");
    sim->add_option("--seed", sim_seed, "RNG seed for sampling");

    // tomography
    auto* tomo = app.add_subcommand("tomography", "five-basis state reconstruction");
    std::string tomo_rho;
    std::uint64_t tomo_shots = 0;
    std::optional<std::uint64_t> tomo_seed;
    tomo->add_option("--rho", tomo_rho, "density matrix JSON path")->required();
    tomo->add_option("--shots", tomo_shots, "shots per basis (0 = analytic)");
    tomo->add_option("--seed", tomo_seed, "RNG seed for sampling");

    // grover
    auto* grover = app.add_subcommand("grover", "run the four-item search");
    int grover_oracle = 0;
    grover->add_option("--oracle", grover_oracle, "oracle index 1..4")
        ->required()
        ->check(CLI::Range(1, 4));

    // vaa
    auto* vaa = app.add_subcommand("vaa", "run the three-stage retrodiction protocol");
    std::optional<std::uint64_t> vaa_seed;
    std::optional<int> vaa_which, vaa_outcome;
    vaa->add_option("--seed", vaa_seed, "RNG seed")->required();
    vaa->add_option("--measurement", vaa_which, "fix the polarization measurement: 1, 2 or 3")
        ->check(CLI::Range(1, 3));
    vaa->add_option("--outcome", vaa_outcome, "fix its outcome: +1 or -1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParseError;
    }

    try {
        if (compile->parsed()) return run_compile(compile_input, compile_output, compile_check);
        if (gate_cmd->parsed()) return run_gate(gate_name, gate_emit);
        if (sim->parsed()) {
            if (sim_state.empty() == sim_rho.empty())
                throw CliError{kParseError, "exactly one of --state/--rho is required"};
            return run_simulate(sim_setup, sim_state, sim_rho, sim_shots, sim_seed);
        }
        if (tomo->parsed()) return run_tomography(tomo_rho, tomo_shots, tomo_seed);
        if (grover->parsed()) return run_grover(grover_oracle);
        if (vaa->parsed()) return run_vaa(*vaa_seed, vaa_which, vaa_outcome);
    } catch (const CliError& e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return e.code;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kValidationError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kValidationError;
    }
    return kParseError;
}
