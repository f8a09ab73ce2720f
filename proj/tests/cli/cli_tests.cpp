#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "sp2q/gates.hpp"
#include "sp2q/json_io.hpp"
#include "sp2q/synth.hpp"

using namespace sp2q;

namespace {

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

// Runs the CLI with stderr silenced; stdout is captured byte for byte.
RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SP2Q_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/sp2q_cli_test_") + name;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << text;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("gate lookup matches the library output") {
    const RunResult r = run_cli("gate --name grover-g3 --emit matrix");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == to_json(gate(GateName::GroverG3)) + "\n");

    const RunResult s = run_cli("gate --name bell --emit settings");
    CHECK(s.exit_code == 0);
    CHECK(s.stdout_text == to_json(settings(GateName::Bell)) + "\n");

    CHECK(run_cli("gate --name nonesuch --emit matrix").exit_code == 2);
    CHECK(run_cli("gate --name grover-g1 --emit settings").exit_code == 5);
    CHECK(run_cli("gate --name bell --emit nonsense").exit_code == 2);
}

TEST_CASE("compile round-trips the identity and rejects bad input") {
    const std::string id_path = temp_path("identity.json");
    write_file(id_path, to_json(Mat4::identity()));
    const RunResult ok = run_cli("compile " + id_path + " --check");
    CHECK(ok.exit_code == 0);
    const SetupConfig cfg = setup_from_json(ok.stdout_text);
    CHECK(frobenius_distance(assemble_two_qubit(cfg), Mat4::identity()) < 1e-12);

    const std::string wh_path = temp_path("wh.json");
    write_file(wh_path, to_json(gate(GateName::WalshHadamard)));
    CHECK(run_cli("compile " + wh_path + " --check").exit_code == 0);

    const std::string bad_path = temp_path("nonunitary.json");
    Mat4 bad = Mat4::identity();
    bad(0, 0) = 2.0;
    write_file(bad_path, to_json(bad));
    CHECK(run_cli("compile " + bad_path).exit_code == 3);

    write_file(temp_path("garbage.json"), "{{{");
    CHECK(run_cli("compile " + temp_path("garbage.json")).exit_code == 2);
    CHECK(run_cli("compile " + temp_path("missing-file.json")).exit_code == 2);

    // --output writes the file instead of stdout
    const std::string out_path = temp_path("setup-out.json");
    const RunResult to_file = run_cli("compile " + id_path + " --output " + out_path);
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.stdout_text.empty());
    std::ifstream written(out_path);
    CHECK(written.good());
}

TEST_CASE("simulate reproduces the Bell detection pattern") {
    const std::string setup_path = temp_path("bell-setup.json");
    write_file(setup_path, to_json(settings(GateName::Bell)));

    const double r = 1.0 / std::sqrt(2.0);
    const std::string state_path = temp_path("e4.json");
    write_file(state_path, to_json(StateVec{{cd(r), cd(0), cd(0), cd(r)}}));

    const RunResult res = run_cli("simulate --setup " + setup_path + " --state " + state_path);
    CHECK(res.exit_code == 0);
    const auto parsed = nlohmann::json::parse(res.stdout_text);
    const auto probs = parsed.at("probabilities");
    REQUIRE(probs.size() == 4);
    // all weight on the Lh detector
    CHECK(probs[3].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(probs[0].get<double>() < 1e-10);

    // counts with deterministic seed: identity setup keeps |Rv>
    const std::string id_setup = temp_path("id-setup.json");
    write_file(id_setup, to_json(settings(GateName::Tomo3)));
    const std::string rv_path = temp_path("rv.json");
    write_file(rv_path, to_json(StateVec{{cd(1), cd(0), cd(0), cd(0)}}));
    const RunResult counted =
        run_cli("simulate --setup " + id_setup + " --state " + rv_path + " --shots 10 --seed 4");
    CHECK(counted.exit_code == 0);
    CHECK(counted.stdout_text.find("\"Rv\":10") != std::string::npos);

    CHECK(run_cli("simulate --setup " + id_setup + " --state " + rv_path + " --shots 10").exit_code == 2);
    CHECK(run_cli("simulate --setup " + id_setup).exit_code == 2);
    CHECK(run_cli("simulate --setup " + id_setup + " --state " + rv_path + " --rho " + rv_path)
              .exit_code == 2);

    // the retrodiction setup splits |Rv> evenly over the first two detectors
    const std::string vaa_setup = temp_path("vaa-setup.json");
    write_file(vaa_setup, to_json(settings(GateName::Vaa)));
    const RunResult vaa_res = run_cli("simulate --setup " + vaa_setup + " --state " + rv_path);
    CHECK(vaa_res.exit_code == 0);
    const auto vaa_probs = nlohmann::json::parse(vaa_res.stdout_text).at("probabilities");
    CHECK(vaa_probs[0].get<double>() == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(vaa_probs[1].get<double>() == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(vaa_probs[2].get<double>() < 1e-10);
    CHECK(vaa_probs[3].get<double>() < 1e-10);
}

TEST_CASE("tomography of the maximally mixed state has zero coefficients") {
    const std::string rho_path = temp_path("mixed.json");
    write_file(rho_path, to_json(DensityMat::checked(cd(0.25) * Mat4::identity())));
    const RunResult res = run_cli("tomography --rho " + rho_path);
    CHECK(res.exit_code == 0);
    CHECK(res.stdout_text.find("\"c01\":0,") != std::string::npos);
    CHECK(res.stdout_text.find("\"positive\":true") != std::string::npos);

    CHECK(run_cli("tomography --rho " + rho_path + " --shots 100").exit_code == 2);

    // a state vector file is not a density matrix
    const std::string bad = temp_path("state-as-rho.json");
    write_file(bad, to_json(StateVec{{cd(1), cd(0), cd(0), cd(0)}}));
    CHECK(run_cli("tomography --rho " + bad).exit_code == 3);
}

TEST_CASE("grover subcommand") {
    const RunResult res = run_cli("grover --oracle 2");
    CHECK(res.exit_code == 0);
    CHECK(res.stdout_text == "Rh\n");
    CHECK(run_cli("grover --oracle 9").exit_code == 2);
    CHECK(run_cli("grover").exit_code == 2);
}

TEST_CASE("vaa subcommand") {
    const RunResult fixed = run_cli("vaa --measurement 3 --outcome 1 --seed 11");
    CHECK(fixed.exit_code == 0);
    CHECK(fixed.stdout_text.find("\"consistent\":true") != std::string::npos);
    const bool f1 = fixed.stdout_text.find("\"detector\":\"f1\"") != std::string::npos;
    const bool f2 = fixed.stdout_text.find("\"detector\":\"f2\"") != std::string::npos;
    CHECK((f1 || f2));

    CHECK(run_cli("vaa --measurement 3 --seed 1").exit_code == 2);
    CHECK(run_cli("vaa").exit_code == 2);
}

TEST_CASE("identical seeds give byte-identical outputs") {
    const std::string rho_path = temp_path("mixed2.json");
    write_file(rho_path, to_json(DensityMat::checked(cd(0.25) * Mat4::identity())));

    const std::string tomo_cmd = "tomography --rho " + rho_path + " --shots 5000 --seed 99";
    CHECK(run_cli(tomo_cmd).stdout_text == run_cli(tomo_cmd).stdout_text);

    const std::string vaa_cmd = "vaa --seed 123";
    CHECK(run_cli(vaa_cmd).stdout_text == run_cli(vaa_cmd).stdout_text);

    CHECK(run_cli("gate --name vaa --emit matrix").stdout_text ==
          run_cli("gate --name vaa --emit matrix").stdout_text);
}

TEST_CASE("unknown flags are rejected") {
    CHECK(run_cli("gate --name bell --emit matrix --bogus").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_SUITE_END();
