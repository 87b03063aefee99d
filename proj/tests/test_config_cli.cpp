#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "orthospec/config.hpp"

using namespace orthospec;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / "orthospec_cli_test";
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
    fs::path p = scratch_dir() / name;
    std::ofstream(p) << text;
    return p;
}

CliResult run_cli(const std::string& args, const std::string& env = "") {
    const char* bin = std::getenv("ORTHOSPEC_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "ORTHOSPEC_BIN must point at the CLI binary");
    std::string cmd = env + " " + std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace

TEST_CASE("config parsing") {
    GroupConfig cfg = parse_config(R"({
        "builtin": "bolza",
        "geodesic": {"word": [1]},
        "params": {"cutoff_X": 30.0, "t_ladder": [1.0, 2.0], "threads": 2}
    })");
    CHECK(cfg.builtin.value() == "bolza");
    CHECK(cfg.geodesic_word == std::vector<int>{1});
    CHECK(cfg.cutoff_x.value() == 30.0);
    CHECK(cfg.t_ladder.size() == 2);
    CHECK(cfg.threads == 2);
    CHECK(load_group(cfg).label == "bolza");
}

TEST_CASE("config rejects malformed and contradictory documents") {
    // malformed JSON carries a line:column anchor
    try {
        parse_config("{\n  \"builtin\": \"bolza\",\n  oops\n}");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("config:3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config(R"({"builtin": "bolza", "generators": [[1,0,0,1]]})"),
                    ConfigError);
    CHECK_THROWS_AS(load_group(parse_config(R"({"builtin": "nonesuch"})")), ConfigError);
    CHECK_THROWS_AS(load_group(parse_config(R"({"generators": [[2,0,0,1]]})")),
                    BadDeterminant);
    CHECK_THROWS_AS(load_group(parse_config("{}")), EmptyGenerators);
}

TEST_CASE("explicit generator groups ingest and close under inverses") {
    GroupConfig cfg = parse_config(R"({"generators": [[2,1,1,1], [1,1,1,2]]})");
    FuchsianGroup g = load_group(cfg);
    CHECK(g.generators.size() == 4);
}

TEST_CASE("spectral csv roundtrip") {
    fs::path p = write_file("spec.csv", "# comment\nlambda,p\n0.0,1.0\n2.5,0.125\n");
    std::vector<SpectralDatum> data = read_spectral_csv(p.string());
    REQUIRE(data.size() == 2);
    CHECK(data[1].lambda == 2.5);
    CHECK(data[1].p == 0.125);
    fs::path bad = write_file("bad.csv", "lambda,p\n1.0\n");
    CHECK_THROWS_AS(read_spectral_csv(bad.string()), ConfigError);
}

TEST_CASE("cli end to end") {
    fs::path cfg = write_file("ortho.json", R"({
        "builtin": "bolza",
        "geodesic": {"word": [1]},
        "params": {"cutoff_X": 30.0}
    })");

    CliResult res = run_cli("ortho-spectrum --config " + cfg.string());
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("delta,kind,ortholength_or_angle,nu,lambda_l,lambda_r,multiplicity") !=
          std::string::npos);
    CHECK(res.out.find("# orthospec") != std::string::npos);

    // X = 1 violates the cutoff precondition: validation exit code
    fs::path bad = write_file("bad_cutoff.json", R"({
        "builtin": "bolza",
        "geodesic": {"word": [1]},
        "params": {"cutoff_X": 1.0}
    })");
    CHECK(run_cli("ortho-spectrum --config " + bad.string()).exit_code == 2);

    // malformed JSON: exit 2
    fs::path malformed = write_file("malformed.json", "{\"builtin\": }");
    CHECK(run_cli("ortho-spectrum --config " + malformed.string()).exit_code == 2);

    // numerical failure: impossible tolerance at small t: exit 3
    fs::path tight = write_file("tight.json", R"({
        "builtin": "bolza",
        "geodesic": {"word": [1]},
        "params": {"cutoff_X": 20.0, "t": 0.05, "tolerance": 1e-9}
    })");
    CHECK(run_cli("geom-side --config " + tight.string()).exit_code == 3);
}

TEST_CASE("cli bessel value matches the library") {
    fs::path cfg = write_file("bessel.json", R"({"params": {"r": 0.0, "z": 1.0}})");
    CliResult res = run_cli("bessel --config " + cfg.string());
    CHECK(res.exit_code == 0);
    // parse the value column of the data row
    std::size_t pos = res.out.find("\n0,1,");
    REQUIRE(pos != std::string::npos);
    double value = std::strtod(res.out.c_str() + pos + 5, nullptr);
    CHECK(value == doctest::Approx(0.42102443824070834).epsilon(1e-10));
}

TEST_CASE("cli determinism across runs and thread counts") {
    fs::path cfg = write_file("det.json", R"({
        "builtin": "bolza",
        "geodesic": {"word": [1]},
        "params": {"cutoff_X": 25.0, "t_ladder": [0.5, 2.0, 8.0]}
    })");
    CliResult a = run_cli("geom-side --config " + cfg.string(), "ORTHOSPEC_THREADS=1");
    CliResult b = run_cli("geom-side --config " + cfg.string(), "ORTHOSPEC_THREADS=4");
    CliResult c = run_cli("geom-side --config " + cfg.string(), "ORTHOSPEC_THREADS=1");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(run_cli("geom-side --config " + cfg.string(), "ORTHOSPEC_THREADS=zero").exit_code ==
          2);
}

TEST_CASE("cli synthetic output feeds spectral-side") {
    fs::path syn_cfg = write_file("syn.json", R"({
        "params": {"volX": 12.566370614359172, "lenC": 3.0, "lambda_max": 500.0}
    })");
    fs::path csv = scratch_dir() / "syn.csv";
    CliResult res = run_cli("synthetic --config " + syn_cfg.string() + " --out " + csv.string());
    CHECK(res.exit_code == 0);

    std::string spec_cfg = R"({"params": {"t": 1.0, "spectral_csv": ")" + csv.string() +
                           R"("}})";
    fs::path side = write_file("side.json", spec_cfg);
    CliResult out = run_cli("spectral-side --config " + side.string());
    CHECK(out.exit_code == 0);
    CHECK(out.out.find("t,value") != std::string::npos);
}
