#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "omseq/io.hpp"
#include "omseq/sequence.hpp"

namespace fs = std::filesystem;
using omseq::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(OMSEQ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "omseq_cli_tests";
    fs::create_directories(dir);
    return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path path = scratch_dir() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

const std::string kLinearSpec = R"({"family":"power","p":1,"s":1})";

}  // namespace

TEST_CASE("cli: norm of the geometric sequence") {
    const auto x = omseq::geometric_example(2.0, 1.0, 64);
    const auto seq = write_file("geom.json", omseq::to_json(x).dump());
    const auto r = run_cli("norm " + seq.string() + " --Phi '" + kLinearSpec + "'");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(std::fabs(doc["norm"].get<double>() - 1.5) <= 1e-6);
    CHECK(doc.contains("witness"));
    CHECK(doc["witness"].contains("m"));
    CHECK(doc["witness"].contains("N"));
    CHECK(doc["iterations"].get<int>() > 0);
}

TEST_CASE("cli: zero sequence has norm 0 with witness (0,0)") {
    const auto seq = write_file("zero.json", R"({"offset":0,"values":[]})");
    const auto r = run_cli("norm " + seq.string() + " --Phi '" + kLinearSpec + "'");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc["norm"].get<double>() == 0.0);
    CHECK(doc["witness"]["m"].get<long long>() == 0);
    CHECK(doc["witness"]["N"].get<long long>() == 0);
}

TEST_CASE("cli: s out of range is an input error") {
    const auto seq = write_file("one.json", R"({"offset":0,"values":[1]})");
    const auto r =
        run_cli("norm " + seq.string() + R"( --Phi '{"family":"power","p":2,"s":1.5}')");
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli: norm refuses a non-s-convex declaration") {
    const auto seq = write_file("one2.json", R"({"offset":0,"values":[1]})");
    const auto r =
        run_cli("norm " + seq.string() + R"( --Phi '{"family":"power","p":0.5,"s":1}')");
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli: malformed sequence file") {
    const auto seq = write_file("broken.json", "{ not json");
    const auto r = run_cli("norm " + seq.string() + " --Phi '" + kLinearSpec + "'");
    CHECK(r.exit_code == 2);
    const auto missing = run_cli("norm /nonexistent.json --Phi '" + kLinearSpec + "'");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("cli: window-norm matches the partial closed form") {
    const auto x = omseq::geometric_example(2.0, 1.0, 64);
    const auto seq = write_file("geom2.json", omseq::to_json(x).dump());
    const auto r = run_cli("window-norm " + seq.string() + " --m 0 --N 10 --Phi '" +
                           kLinearSpec + "'");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(std::fabs(doc["norm"].get<double>() - 1.4990234375) <= 1e-9);
}

TEST_CASE("cli: modular at a fixed level") {
    const auto seq = write_file("pyth.json", R"({"offset":0,"values":[3,0,4]})");
    const auto r = run_cli("modular " + seq.string() +
                           R"( --m 1 --N 1 --b 5 --Phi '{"family":"power","p":2,"s":1}')");
    REQUIRE(r.exit_code == 0);
    CHECK(std::fabs(json::parse(r.output)["modular"].get<double>() - 1.0) <= 1e-12);
}

TEST_CASE("cli: validate young specs") {
    const auto good = write_file("young_ok.json", R"({"family":"power","p":2,"s":1})");
    CHECK(run_cli("validate " + good.string()).exit_code == 0);

    const auto bad = write_file("young_bad.json", R"({"family":"power","p":0.5,"s":1})");
    const auto r = run_cli("validate " + bad.string());
    CHECK(r.exit_code == 1);
    const json doc = json::parse(r.output);
    CHECK(doc["kind"] == "young");
    CHECK_FALSE(doc["report"]["valid"].get<bool>());
    CHECK(doc["report"]["violations"].size() > 0);

    const auto broken = write_file("young_broken.json", "]");
    CHECK(run_cli("validate " + broken.string()).exit_code == 2);
}

TEST_CASE("cli: validate weight specs with auto-detection") {
    const auto ident = write_file("w_ident.json", R"({"family":"identity"})");
    const auto r = run_cli("validate " + ident.string());
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.output)["kind"] == "weight");

    const auto theta2 = write_file("w_theta2.json", R"({"family":"power","theta":2})");
    const auto r2 = run_cli("validate " + theta2.string());
    CHECK(r2.exit_code == 1);
    CHECK(json::parse(r2.output)["report"]["violations"][0]["property"] ==
          "ratio-nonincreasing");
}

TEST_CASE("cli: verify runs the suite and reports the quoted discrepancy") {
    const auto cfg = write_file("suite.json", R"({"seed":42,"trials":15,
        "checks":["homogeneity","counterexample","positivity-zero"]})");
    const auto r = run_cli("verify " + cfg.string());
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc["all_pass"].get<bool>());
    REQUIRE(doc["checks"].size() == 3);
    bool saw_record = false;
    for (const auto& c : doc["checks"]) {
        if (c["name"] != "counterexample") continue;
        saw_record = true;
        CHECK(c["details"]["quoted_norm_sum"].get<double>() == 4.0);
        CHECK(std::fabs(c["details"]["norm_sum"].get<double>() - 2.0) <= 1e-6);
        CHECK(c["details"]["discrepancy"].get<bool>());
    }
    CHECK(saw_record);
}

TEST_CASE("cli: verify flags") {
    const auto r = run_cli("verify --seed 42 --trials 10 --checks homogeneity,window-laws");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.output)["checks"].size() == 2);

    CHECK(run_cli("verify --trials 5 --checks nonsense").exit_code == 2);

    const auto bad_cfg = write_file("suite_bad.json", R"({"checks":["foo"]})");
    CHECK(run_cli("verify " + bad_cfg.string()).exit_code == 2);
}

TEST_CASE("cli: example geometric") {
    const auto r = run_cli("example geometric --D 2 --p 1");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc["closed_form"].get<double>() == 1.5);
    CHECK(std::fabs(doc["truncated_norm"].get<double>() - 1.5) <= 1e-6);
    CHECK(std::fabs(doc["difference"].get<double>()) <= 1e-6);

    // D = 1 + sqrt(2) at p = 1/2: closed form exactly 1.
    const auto r2 = run_cli("example geometric --D 2.4142135623730951 --p 0.5");
    REQUIRE(r2.exit_code == 0);
    CHECK(std::fabs(json::parse(r2.output)["closed_form"].get<double>() - 1.0) <= 1e-9);
}

TEST_CASE("cli: example counterexample emits the comparison record") {
    const auto r = run_cli("example counterexample");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(std::fabs(doc["norm_x"].get<double>() - 1.0) <= 1e-6);
    CHECK(std::fabs(doc["norm_sum"].get<double>() - 2.0) <= 1e-6);
    CHECK(doc["quoted_norm_sum"].get<double>() == 4.0);
    CHECK(doc["discrepancy"].get<bool>());
}

TEST_CASE("cli: unknown example name") {
    CHECK(run_cli("example fourier").exit_code == 2);
}

TEST_CASE("cli: verify --list names every check") {
    const auto r = run_cli("verify --list");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc["checks"].size() == 9);
}

TEST_CASE("cli: out-of-range window arguments are input errors") {
    const auto seq = write_file("range_seq.json", R"({"offset":0,"values":[1]})");
    CHECK(run_cli("window-norm " + seq.string() + " --m 0 --N -1 --Phi '" + kLinearSpec +
                  "'").exit_code == 2);
    CHECK(run_cli("window-norm " + seq.string() + " --m 9e18 --N 0 --Phi '" + kLinearSpec +
                  "'").exit_code == 2);
}

TEST_CASE("cli: --out writes the document to a file") {
    const auto seq = write_file("out_seq.json", R"({"offset":0,"values":[1,2]})");
    const fs::path out = scratch_dir() / "result.json";
    std::error_code ec;
    fs::remove(out, ec);
    const auto r = run_cli("norm " + seq.string() + " --Phi '" + kLinearSpec + "' --out " +
                           out.string());
    REQUIRE(r.exit_code == 0);
    std::ifstream in(out);
    REQUIRE(in.good());
    json doc;
    in >> doc;
    CHECK(doc["norm"].get<double>() == Catch::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("cli: inline weight spec and --s override") {
    const auto seq = write_file("w_seq.json", R"({"offset":0,"values":[2]})");
    const auto r = run_cli("norm " + seq.string() +
                           R"( --Phi '{"family":"power","p":2}' --s 1)" +
                           R"( --phi '{"family":"constant","c":1}')");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.output)["norm"].get<double>() == Catch::Approx(2.0).epsilon(1e-10));
}
