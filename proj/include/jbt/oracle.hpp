#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "jbt/decompose.hpp"

namespace jbt {

/// Budget and determinism knobs for the brute-force oracles. Outputs are a
/// pure function of (seed, trials, search_grid) plus the explicit counter
/// passed to the generators, so independent trials can run concurrently.
struct OracleConfig {
    std::uint64_t seed = 0;
    int trials = 200;       ///< random samples per search
    int search_grid = 100;  ///< lambda discretization density (steps per unit)
    double tol = 1e-9;
};

/// Deterministic generator derived from (seed, counter).
std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t counter);

/// Complex standard-normal element; with norm_cap set, rescaled to a
/// uniform-random operator norm in (0, norm_cap]. Deterministic per
/// (cfg.seed, counter).
MatrixElement random_element(const TripleSpace& space, const OracleConfig& cfg,
                             std::optional<double> norm_cap = std::nullopt,
                             std::uint64_t counter = 0);

/// Random tripotent built from random singular frames: a random nonempty
/// subset of singular values is set to 1 (all of them when complete = true).
Tripotent random_tripotent(const TripleSpace& space, const OracleConfig& cfg,
                           bool complete, std::uint64_t counter = 0);

/// Distance from a to the non-quasi-invertible set by direct construction:
/// the norm of the smallest-singular-value truncation (the classical
/// best rank-drop approximation in spectral norm), sharpened by random
/// sampling of nearby rank-deficient matrices. Never consults m_q.
double oracle_dist_rank_deficient(const MatrixElement& a,
                                  const OracleConfig& cfg = {});

struct ExtremalDistanceEstimate {
    double estimate;        ///< distance to the best extreme point found
    bool lower_bound_pass;  ///< estimate >= certified lower bound from geometry
};

/// Distance from a to the extreme points of the unit ball by direct search:
/// the polar-factor candidate (all singular values snapped to 1) plus random
/// perturbed complete tripotents re-projected through the polar factor.
ExtremalDistanceEstimate oracle_dist_extremals(const MatrixElement& a,
                                               const OracleConfig& cfg = {});

/// Largest weight lambda on a descending grid for which a = lambda e +
/// (1 - lambda) y is found feasible with e a complete tripotent and
/// ||y|| <= 1, by randomized local search over e. Intended for spaces no
/// larger than 3x3; requires ||a|| <= 1. Never consults lambda_value or m_q.
double oracle_lambda_max(const MatrixElement& a, const OracleConfig& cfg = {});

/// Cross-model agreement report: the same data as a commutative grid element
/// and as the diagonal matrix, compared on every exported quantity.
struct CrosscheckReport {
    bool passed = true;
    double worst_discrepancy = 0.0;
    std::vector<std::string> mismatches;
    double spectrum_gap = 0.0;
    double m_q_gap = 0.0;
    double alpha_q_gap = 0.0;
    double lambda_gap = 0.0;        ///< compared when the norm is <= 1
    double distance_gap = 0.0;
    double grid_mean_residual = 0.0;
    double matrix_mean_residual = 0.0;
    /// |dist - max(1 + alpha_q, norm - 1)| for rank-deficient data of any
    /// norm, where dist is the exact pointwise distance in the commutative
    /// model; the identity is a theorem for commutative triples.
    std::optional<double> rank_deficient_identity_gap;
};

CrosscheckReport commutative_crosscheck(const Eigen::VectorXcd& entries,
                                        const OracleConfig& cfg = {});

}  // namespace jbt
