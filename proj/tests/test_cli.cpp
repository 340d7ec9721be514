// End-to-end exercises of the jbtlab binary: flags, exit codes, schema, and
// byte-determinism. The binary path arrives through the JBTLAB_BIN
// environment variable set by CTest.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "jbt/report.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

std::string binary_path() {
    const char* env = std::getenv("JBTLAB_BIN");
    REQUIRE_MESSAGE(env != nullptr, "JBTLAB_BIN must point at the jbtlab binary");
    return env;
}

RunResult run(const std::string& args) {
    const std::string command = binary_path() + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) {
        output += buffer.data();
    }
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), output};
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
    const std::filesystem::path path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << body;
    return path;
}

const std::string kDiagHalfOne =
    R"({"shape":[2,2],"data":[[[0.5,0],[0,0]],[[0,0],[1,0]]]})";
const std::string kDiagOneZero =
    R"({"shape":[2,2],"data":[[[1,0],[0,0]],[[0,0],[0,0]]]})";
const std::string kZero =
    R"({"shape":[2,2],"data":[[[0,0],[0,0]],[[0,0],[0,0]]]})";

}  // namespace

TEST_CASE("analyze reports the reference values") {
    const auto path = write_temp("jbtlab_diag.json", kDiagHalfOne);
    const RunResult r = run("analyze --input " + path.string());
    REQUIRE(r.exit_code == 0);
    const jbt::Json j = jbt::Json::parse(r.output);
    CHECK(j.at("m_q").get<double>() == doctest::Approx(0.5));
    CHECK(j.at("lambda_value").get<double>() == doctest::Approx(0.75));
    CHECK(j.at("dist_to_extremals").at("value").get<double>() == doctest::Approx(0.5));
    CHECK(j.at("bp_quasi_invertible").get<bool>());
}

TEST_CASE("analyze tags the zero matrix conorm as inf") {
    const auto path = write_temp("jbtlab_zero.json", kZero);
    const RunResult r = run("analyze --input " + path.string());
    REQUIRE(r.exit_code == 0);
    const jbt::Json j = jbt::Json::parse(r.output);
    CHECK(j.at("gamma_q") == "inf");
    CHECK(j.at("m_q").get<double>() == 0.0);
    CHECK(j.at("lambda_value").get<double>() == doctest::Approx(0.5));
}

TEST_CASE("analyze of a 1x1 unit") {
    const auto path = write_temp("jbtlab_unit.json",
                                 R"({"shape":[1,1],"data":[[[1,0]]]})");
    const RunResult r = run("analyze --input " + path.string());
    REQUIRE(r.exit_code == 0);
    const jbt::Json j = jbt::Json::parse(r.output);
    CHECK(j.at("bp_quasi_invertible").get<bool>());
    CHECK(j.at("lambda_value").get<double>() == doctest::Approx(1.0));
}

TEST_CASE("analyze output is byte-identical across runs and round-trips") {
    const auto path = write_temp("jbtlab_det.json", kDiagHalfOne);
    const RunResult r1 = run("analyze --input " + path.string() + " --emit-matrices");
    const RunResult r2 = run("analyze --input " + path.string() + " --emit-matrices");
    REQUIRE(r1.exit_code == 0);
    CHECK(r1.output == r2.output);
    const jbt::Json j = jbt::Json::parse(r1.output);
    const jbt::MatrixElement r = jbt::element_from_json(j.at("range_tripotent"));
    CHECK((r - jbt::range_tripotent(jbt::element_from_json(
                   jbt::Json::parse(kDiagHalfOne)))
                   .element())
              .norm() <= 1e-15);
}

TEST_CASE("analyze exit codes for I/O and flag errors") {
    CHECK(run("analyze --input /nonexistent/nope.json").exit_code == 3);
    const auto bad = write_temp("jbtlab_bad.json", "{not json");
    CHECK(run("analyze --input " + bad.string()).exit_code == 3);
    const auto schema = write_temp("jbtlab_schema.json", R"({"shape":[1,1]})");
    CHECK(run("analyze --input " + schema.string()).exit_code == 3);
    CHECK(run("analyze --no-such-flag").exit_code == 1);
    CHECK(run("nonsense").exit_code == 1);
}

TEST_CASE("decompose with an explicit weight") {
    const auto path = write_temp("jbtlab_dec.json", kDiagHalfOne);
    const RunResult r = run("decompose --input " + path.string() + " --lambda 0.75");
    REQUIRE(r.exit_code == 0);
    const jbt::Json j = jbt::Json::parse(r.output);
    CHECK(j.at("lambda").get<double>() == doctest::Approx(0.75));
    CHECK(j.at("reconstruction_residual").get<double>() <= 1e-10);
    const jbt::MatrixElement e = jbt::element_from_json(j.at("e"));
    CHECK(std::abs(e.entries()(0, 0) - jbt::Complex(1.0)) <= 1e-9);
    CHECK(std::abs(e.entries()(1, 1) - jbt::Complex(1.0)) <= 1e-9);
}

TEST_CASE("JBLAB_TOL is honored and echoed") {
    const auto path = write_temp("jbtlab_env.json", kDiagHalfOne);
    const std::string command =
        "JBLAB_TOL=1e-7 " + binary_path() + " analyze --input " + path.string();
    std::array<char, 4096> buffer{};
    std::string output;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) {
        output += buffer.data();
    }
    REQUIRE(WEXITSTATUS(pclose(pipe)) == 0);
    const jbt::Json j = jbt::Json::parse(output);
    CHECK(j.at("tolerances").at("tol").get<double>() == doctest::Approx(1e-7));
    CHECK(j.at("tolerances").at("env_tol_override").get<double>() ==
          doctest::Approx(1e-7));
}

TEST_CASE("decompose defaults to the maximal feasible weight on quasi-invertibles") {
    const auto path = write_temp("jbtlab_dec_default.json", kDiagHalfOne);
    const RunResult r = run("decompose --input " + path.string());
    REQUIRE(r.exit_code == 0);
    const jbt::Json j = jbt::Json::parse(r.output);
    CHECK(j.at("lambda").get<double>() == doctest::Approx(0.75));
    CHECK(j.at("reconstruction_residual").get<double>() <= 1e-10);
    CHECK(j.at("e_complete").get<bool>());
    CHECK(j.at("u_complete").get<bool>());
}

TEST_CASE("decompose falls back to the mean split off the quasi-invertibles") {
    const auto path = write_temp("jbtlab_dec0.json", kDiagOneZero);
    const RunResult r = run("decompose --input " + path.string());
    REQUIRE(r.exit_code == 0);
    const jbt::Json j = jbt::Json::parse(r.output);
    CHECK(j.at("lambda").get<double>() == doctest::Approx(0.5));
    CHECK(j.at("reconstruction_residual").get<double>() <= 1e-10);
}

TEST_CASE("decompose rejects infeasible weights with exit 1") {
    const auto path = write_temp("jbtlab_dec_err.json", kDiagHalfOne);
    const RunResult r = run("decompose --input " + path.string() + " --lambda 0.9");
    CHECK(r.exit_code == 1);
}

TEST_CASE("verify runs deterministically with a tiny budget") {
    const RunResult r1 = run("verify --trials 2 --seed 11");
    REQUIRE(r1.exit_code == 0);
    const RunResult r2 = run("verify --trials 2 --seed 11");
    CHECK(r1.output == r2.output);
    const jbt::Json j = jbt::Json::parse(r1.output);
    CHECK(j.at("all_passed").get<bool>());
    CHECK(j.at("suites").size() >= 20);
}

TEST_CASE("verify surfaces forced failures with exit 2") {
    const RunResult r = run("verify --trials 2 --seed 11 --tol 1e-30");
    CHECK(r.exit_code == 2);
    const jbt::Json j = jbt::Json::parse(r.output);
    CHECK_FALSE(j.at("all_passed").get<bool>());
    bool reported = false;
    for (const auto& suite : j.at("suites")) {
        if (suite.at("failures").get<int>() > 0) {
            reported = suite.contains("first_failing_counter") && suite.contains("note");
            break;
        }
    }
    CHECK(reported);
}

TEST_CASE("text mode renders without JSON punctuation at the top level") {
    const auto path = write_temp("jbtlab_text.json", kDiagHalfOne);
    const RunResult r = run("analyze --text --input " + path.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("operator_norm:") != std::string::npos);
    CHECK(r.output.rfind("{", 0) != 0);
}
