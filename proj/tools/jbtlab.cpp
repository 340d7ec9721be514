// jbtlab: batch front door for the JB*-triple toolkit. Reads matrices in the
// JSON wire schema, runs analyses and convex decompositions, and drives the
// property-verification suites.

#include "CLI11.hpp"

#include "jbt/report.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 1;
constexpr int kExitVerifyFailure = 2;
constexpr int kExitIo = 3;

std::optional<double> env_tol() {
    const char* raw = std::getenv("JBLAB_TOL");
    if (raw == nullptr) return std::nullopt;
    try {
        return std::stod(raw);
    } catch (...) {
        return std::nullopt;
    }
}

void emit(const jbt::Json& j, bool text) {
    if (text) {
        std::cout << jbt::render_text(j);
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"JB*-triple analysis toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // --text / --json may follow the subcommand
    bool text = false;
    bool json = true;
    app.add_flag("--text", text, "plain-text output");
    app.add_flag("--json,!--no-json", json, "JSON output (default)");

    const std::optional<double> tol_env = env_tol();
    const double default_tol = tol_env.value_or(jbt::kDefaultTol);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "full report for one matrix");
    std::string analyze_input;
    double analyze_tol = default_tol;
    double analyze_rank_tol = jbt::kDefaultRankTol;
    bool emit_matrices = false;
    analyze->add_option("--input", analyze_input, "matrix JSON file")->required();
    analyze->add_option("--tol", analyze_tol, "residual tolerance");
    analyze->add_option("--rank-tol", analyze_rank_tol, "numerical-rank threshold");
    analyze->add_flag("--emit-matrices", emit_matrices,
                      "include the range tripotent and generalized inverse");

    // decompose
    auto* decompose = app.add_subcommand("decompose",
                                         "convex decomposition into extreme points");
    std::string decompose_input;
    double decompose_tol = default_tol;
    std::optional<double> lambda_flag;
    decompose->add_option("--input", decompose_input, "matrix JSON file")->required();
    decompose->add_option("--tol", decompose_tol, "residual tolerance");
    decompose->add_option("--lambda", lambda_flag,
                          "requested weight in [1/2, (1 + m_q)/2]");

    // verify
    auto* verify = app.add_subcommand("verify", "run every property suite");
    jbt::VerifyConfig vcfg;
    vcfg.tol = default_tol;
    verify->add_option("--seed", vcfg.seed, "generator seed");
    verify->add_option("--trials", vcfg.trials, "trials per suite");
    verify->add_option("--max-rows", vcfg.max_rows, "largest row count");
    verify->add_option("--max-cols", vcfg.max_cols, "largest column count");
    verify->add_option("--tol", vcfg.tol, "residual tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitPrecondition;
    }

    try {
        if (*analyze) {
            jbt::MatrixElement a = jbt::read_element(analyze_input);
            jbt::AnalysisOptions opts;
            opts.tol = analyze_tol;
            opts.rank_tol = analyze_rank_tol;
            opts.emit_matrices = emit_matrices;
            opts.env_tol_override = tol_env;
            emit(jbt::analyze_element(a, opts), text);
            return kExitOk;
        }
        if (*decompose) {
            jbt::MatrixElement a = jbt::read_element(decompose_input);
            jbt::DecompositionCertificate cert = [&] {
                if (lambda_flag) {
                    return jbt::lambda_decompose(a, *lambda_flag, decompose_tol);
                }
                if (jbt::has_full_support(a)) {
                    return jbt::lambda_decompose(a, jbt::lambda_value(a, decompose_tol),
                                                 decompose_tol);
                }
                return jbt::mean_of_two_extremals(a, decompose_tol);
            }();
            emit(jbt::certificate_to_json(cert), text);
            return kExitOk;
        }
        if (*verify) {
            const std::vector<jbt::SuiteResult> results = jbt::run_all_suites(vcfg);
            emit(jbt::suites_to_json(vcfg, results, tol_env), text);
            for (const jbt::SuiteResult& r : results) {
                if (!r.passed()) return kExitVerifyFailure;
            }
            return kExitOk;
        }
    } catch (const jbt::ShapeMismatch& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitIo;
    } catch (const jbt::TripleError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}
