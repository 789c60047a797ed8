#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "rfkit/core.hpp"
#include "schema_check.hpp"
#include "support.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::filesystem::path scratch_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "rfkit_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const auto dir = scratch_dir();
    const auto out_path = dir / ("out_" + std::to_string(++counter) + ".txt");
    const auto err_path = dir / ("err_" + std::to_string(counter) + ".txt");
    const std::string cmd =
        std::string(RFKIT_CLI_PATH) + " " + args + " > " + out_path.string() + " 2> " + err_path.string();
    const int raw = std::system(cmd.c_str());
    CliResult result;
    result.exit_code = WEXITSTATUS(raw);
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

const std::string kN420 = std::string(RFKIT_DATA_DIR) + "/n420.s2p";
const std::string kMaxGainCfg = std::string(RFKIT_DATA_DIR) + "/design_max_gain.cfg";

std::string write_config(const std::string& name, const std::string& content) {
    const auto path = scratch_dir() / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("analyze emits the expected JSON report") {
    const CliResult r = run_cli("analyze " + kN420 + " --freq 3GHz --json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);

    const auto schema = schemacheck::load_json_file(std::string(RFKIT_SCHEMA_DIR) + "/analyze.schema.json");
    const auto errors = schemacheck::validate(schema, j);
    for (const auto& e : errors) FAIL_CHECK(e);
    CHECK(errors.empty());

    const rfkit::Complex delta = rfkit::parse_gamma_literal(j["stability"]["delta"].get<std::string>());
    CHECK(testsupport::polar_close(delta, 0.336, -79.6, 0.002, 0.3));
    CHECK(j["stability"]["k"].get<double>() == doctest::Approx(1.1269).epsilon(0.005));
    CHECK(j["stability"]["mu"].get<double>() > 1.0);
    CHECK(j["stability"]["unconditional"].get<bool>());
    CHECK(j["gain"]["mag_db"].get<double>() == doctest::Approx(15.05).epsilon(0.02));
    CHECK(j["gain"]["u"].get<double>() == doctest::Approx(0.0408).epsilon(0.03));
    CHECK(j["stability"]["load_circle"]["stable_region"].get<std::string>() == "inside");
    CHECK(j["stability"]["source_circle"]["stable_region"].get<std::string>() == "outside");
}

TEST_CASE("analyze exit codes and diagnostics") {
    const CliResult missing = run_cli("analyze /no/such/file.s2p --freq 3GHz");
    CHECK(missing.exit_code == 2);
    CHECK(missing.err.find("/no/such/file.s2p") != std::string::npos);

    const CliResult out_of_sweep = run_cli("analyze " + kN420 + " --freq 5GHz");
    CHECK(out_of_sweep.exit_code == 3);
    CHECK(out_of_sweep.err.find("range") != std::string::npos);

    const CliResult bad_flag = run_cli("analyze " + kN420 + " --freq 3GHz --no-such-flag");
    CHECK(bad_flag.exit_code == 2);
}

TEST_CASE("analyze output is byte-stable across runs") {
    const CliResult a = run_cli("analyze " + kN420 + " --freq 3GHz --json");
    const CliResult b = run_cli("analyze " + kN420 + " --freq 3GHz --json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("design reproduces the published terminations") {
    const CliResult r = run_cli("design " + kN420 + " --config " + kMaxGainCfg + " --json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);

    const auto schema = schemacheck::load_json_file(std::string(RFKIT_SCHEMA_DIR) + "/design.schema.json");
    const auto errors = schemacheck::validate(schema, j);
    for (const auto& e : errors) FAIL_CHECK(e);
    CHECK(errors.empty());

    const rfkit::Complex gamma_s = rfkit::parse_gamma_literal(j["gamma_s"].get<std::string>());
    const rfkit::Complex gamma_l = rfkit::parse_gamma_literal(j["gamma_l"].get<std::string>());
    CHECK(testsupport::polar_close(gamma_s, 0.697, -157.0, 0.005, 1.0));
    CHECK(testsupport::polar_close(gamma_l, 0.516, 85.0, 0.005, 1.0));
    CHECK(j["gt_db"].get<double>() == doctest::Approx(15.05).epsilon(0.02));
    CHECK(j["nf"].is_null());
    CHECK(j["source_network"]["topology"].get<std::string>() == "series_line_shunt_stub");
    CHECK(j["bias_line"]["electrical_deg"].get<double>() == doctest::Approx(90.0));
}

TEST_CASE("design writes matching-network files on request") {
    const std::string prefix = (scratch_dir() / "networks").string();
    const CliResult r = run_cli("design " + kN420 + " --config " + kMaxGainCfg + " --networks " + prefix);
    REQUIRE(r.exit_code == 0);
    const json source = json::parse(slurp(prefix + "_source.json"));
    CHECK(source["elements"].is_array());
    CHECK(source["elements"].size() == 2);
    CHECK(source["elements"][0]["type"].get<std::string>() == "series_line");
}

TEST_CASE("design without required noise parameters exits 4") {
    const std::string cfg = write_config("nf_cap.cfg", "freq=3GHz\nobjective=gain_at_nf_cap\nnf_max_db=1.0\n");
    const CliResult r = run_cli("design " + kN420 + " --config " + cfg);
    CHECK(r.exit_code == 4);
    CHECK(r.err.find("noise parameters required") != std::string::npos);
}

TEST_CASE("min-noise design reports fmin when rn is zero") {
    const std::string cfg = write_config("min_noise.cfg", "freq=3GHz\nobjective=min_noise\n");
    const CliResult r =
        run_cli("design " + kN420 + " --config " + cfg + " --noise \"fmin_db=0.8, rn=0, gopt=0.4<60\" --json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["nf_db"].get<double>() == doctest::Approx(0.8).epsilon(1e-9));
    CHECK(j["gamma_s"].get<std::string>() == "0.4<60");
}

TEST_CASE("unreachable gain_min is flagged, not fatal") {
    const std::string cfg =
        write_config("gain_min.cfg", "freq=3GHz\nobjective=max_gain\ngain_min_db=20\n");
    const CliResult r = run_cli("design " + kN420 + " --config " + cfg + " --json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(!j["meets_gain_min"].get<bool>());
    CHECK(j["gt_db"].get<double>() < 20.0);
}

TEST_CASE("noise resistance accepts ohm-suffixed values") {
    const std::string cfg = write_config("min_noise2.cfg", "freq=3GHz\nobjective=min_noise\n");
    const CliResult a =
        run_cli("design " + kN420 + " --config " + cfg + " --noise \"fmin_db=0.8, rn=0.2, gopt=0.4<60\" --json");
    const CliResult b =
        run_cli("design " + kN420 + " --config " + cfg + " --noise \"fmin_db=0.8, Rn=10ohm, gopt=0.4<60\" --json");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(json::parse(a.out)["nf_db"] == json::parse(b.out)["nf_db"]);
}

TEST_CASE("cascade matches the worked totals") {
    const CliResult one = run_cli("cascade --stage nf_db=3.01,gain_db=10 --json");
    REQUIRE(one.exit_code == 0);
    CHECK(json::parse(one.out)["total_nf_db"].get<double>() == doctest::Approx(3.01).epsilon(1e-9));

    const CliResult two = run_cli("cascade --stage nf_db=3.01,gain_db=10 --stage nf_db=4.77,gain_db=10 --json");
    REQUIRE(two.exit_code == 0);
    const json j2 = json::parse(two.out);
    CHECK(j2["total_f"].get<double>() == doctest::Approx(2.2).epsilon(0.001));
    CHECK(j2["total_nf_db"].get<double>() == doctest::Approx(3.42).epsilon(0.01 / 3.42));

    const auto schema = schemacheck::load_json_file(std::string(RFKIT_SCHEMA_DIR) + "/cascade.schema.json");
    CHECK(schemacheck::validate(schema, j2).empty());

    const CliResult swapped =
        run_cli("cascade --stage nf_db=4.77,gain_db=10 --stage nf_db=3.01,gain_db=10 --json");
    CHECK(json::parse(swapped.out)["total_nf_db"].get<double>() == doctest::Approx(4.91).epsilon(0.01 / 4.91));

    const CliResult malformed = run_cli("cascade --stage nf_db=3.01");
    CHECK(malformed.exit_code == 2);
}

TEST_CASE("svg output is byte-identical across runs") {
    const auto svg1 = scratch_dir() / "plot1.svg";
    const auto svg2 = scratch_dir() / "plot2.svg";
    const std::string base = "circles " + kN420 + " --freq 3GHz --stability --point \"GammaS=0.697<-157\" --svg ";
    REQUIRE(run_cli(base + svg1.string()).exit_code == 0);
    REQUIRE(run_cli(base + svg2.string()).exit_code == 0);
    const std::string bytes = slurp(svg1);
    CHECK(!bytes.empty());
    CHECK(bytes == slurp(svg2));
    CHECK(bytes.find("GammaS") != std::string::npos);
}

TEST_CASE("circles command reports the requested families") {
    const CliResult r = run_cli("circles " + kN420 + " --freq 3GHz --stability --ga-db 12 --json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["circles"].size() == 3);  // two stability circles + one gain circle
    bool saw_gain = false;
    for (const auto& c : j["circles"])
        if (c["label"].get<std::string>().find("GA") == 0) saw_gain = true;
    CHECK(saw_gain);

    const CliResult noise = run_cli("circles " + kN420 +
                                    " --freq 3GHz --nf-db 1.2 --noise \"fmin_db=0.8, rn=0.2, gopt=0.4<60\" --json");
    REQUIRE(noise.exit_code == 0);
    CHECK(json::parse(noise.out)["circles"].size() == 1);

    const CliResult missing_noise = run_cli("circles " + kN420 + " --freq 3GHz --nf-db 1.2");
    CHECK(missing_noise.exit_code == 4);
    CHECK(missing_noise.err.find("noise parameters required") != std::string::npos);
}

TEST_CASE("cascade csv output") {
    const CliResult r = run_cli("cascade --stage nf_db=3.01,gain_db=10 --stage nf_db=4.77,gain_db=10 --csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("stage,nf_db,gain_db,f,g,contribution") == 0);
    CHECK(r.out.find("total,") != std::string::npos);
}

TEST_CASE("match synthesizes a verified network") {
    const CliResult r = run_cli("match --gamma \"0.697<-157\" --json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    const rfkit::Complex achieved =
        rfkit::parse_gamma_literal(j["network"]["achieved_gamma"]["literal"].get<std::string>());
    CHECK(testsupport::polar_close(achieved, 0.697, -157.0, 0.001, 0.1));
    CHECK(j["network"]["elements"].size() == 2);

    const CliResult qw = run_cli("match --quarter-wave 25 100 --json");
    REQUIRE(qw.exit_code == 0);
    CHECK(json::parse(qw.out)["network"]["elements"][0]["z0"].get<double>() == doctest::Approx(50.0));

    const CliResult neither = run_cli("match");
    CHECK(neither.exit_code == 2);
}

TEST_CASE("match with a substrate reports physical lengths") {
    const CliResult r =
        run_cli("match --gamma \"0.516<85\" --freq 3GHz --eps-r 4.6 --height-mm 1.6 --json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["microstrip"]["width_mm"].get<double>() > 0.5);
    CHECK(j["network"]["elements"][0].contains("mm"));
    // Dimensional sanity: eps_eff in (1, eps_r).
    const double ee = j["microstrip"]["eps_eff"].get<double>();
    CHECK(ee > 1.0);
    CHECK(ee < 4.6);
}

TEST_SUITE_END();
