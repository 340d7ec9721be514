#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jbt/oracle.hpp"

namespace jbt {

/// Budget for the property suites. Every suite is deterministic given the
/// seed: trial k derives its generator state from (seed, k).
struct VerifyConfig {
    std::uint64_t seed = 0;
    int trials = 200;
    int max_rows = 5;
    int max_cols = 7;
    double tol = 1e-9;
};

struct SuiteResult {
    std::string suite;
    int trials = 0;
    int failures = 0;
    double worst_residual = 0.0;
    std::optional<std::uint64_t> first_failing_counter;
    std::string note;  ///< what failed first, when anything failed

    bool passed() const { return failures == 0; }
};

// Core algebraic identities on random instances (scale-aware residuals).
SuiteResult suite_fundamental_identity(const VerifyConfig& cfg);
SuiteResult suite_cube_identity(const VerifyConfig& cfg);
SuiteResult suite_jordan_identity(const VerifyConfig& cfg);

// Peirce calculus for random tripotents.
SuiteResult suite_peirce_projections(const VerifyConfig& cfg);
SuiteResult suite_peirce_multiplication_rules(const VerifyConfig& cfg);
SuiteResult suite_orthogonality_symmetry(const VerifyConfig& cfg);

// Generalized inverse and its operator identities.
SuiteResult suite_generalized_inverse(const VerifyConfig& cfg);
SuiteResult suite_inverse_operator_identities(const VerifyConfig& cfg);

// Spectral scalars.
SuiteResult suite_mq_homogeneity(const VerifyConfig& cfg, double rel_tol = 1e-12);
SuiteResult suite_mq_lipschitz(const VerifyConfig& cfg);
SuiteResult suite_odd_calculus_spectrum(const VerifyConfig& cfg);
SuiteResult suite_spectrum_embedding(const VerifyConfig& cfg);

// Distance theorems against the brute-force oracles.
SuiteResult suite_rank_drop_distance(const VerifyConfig& cfg,
                                     double compare_tol = 1e-8,
                                     double witness_tol = 1e-10);
SuiteResult suite_extremal_distance_quasi_invertible(const VerifyConfig& cfg,
                                                     double compare_tol = 1e-6);
SuiteResult suite_extremal_distance_rank_deficient(const VerifyConfig& cfg,
                                                   double compare_tol = 1e-6);
SuiteResult suite_extremal_distance_bounds(const VerifyConfig& cfg);
SuiteResult suite_extreme_point_characterization(const VerifyConfig& cfg);
SuiteResult suite_near_extremal_quasi_invertibility(const VerifyConfig& cfg);

// The lambda-function and the constructive decompositions.
SuiteResult suite_lambda_agreement(const VerifyConfig& cfg, double tol = 0.02);
SuiteResult suite_lambda_uniform_lower_bound(const VerifyConfig& cfg);
SuiteResult suite_lambda_decomposition(const VerifyConfig& cfg,
                                       double residual_tol = 1e-10);
SuiteResult suite_mean_of_two_extremals(const VerifyConfig& cfg,
                                        double residual_tol = 1e-10);
SuiteResult suite_convex_combination_characterization(const VerifyConfig& cfg);
SuiteResult suite_perturbation_certificates(const VerifyConfig& cfg);

// On square matrices the classical quasi-invertibility formulas must agree
// with the triple-theoretic ones; compared through a direct SVD route.
SuiteResult suite_square_cstar_agreement(const VerifyConfig& cfg);

// Cross-model agreement between the grid and diagonal-matrix realizations.
SuiteResult suite_commutative_crosscheck(const VerifyConfig& cfg);

/// Runs every suite at the given budget.
std::vector<SuiteResult> run_all_suites(const VerifyConfig& cfg);

}  // namespace jbt
