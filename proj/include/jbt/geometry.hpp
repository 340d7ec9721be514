#pragma once

#include <optional>
#include <string>
#include <variant>

#include "jbt/spectral.hpp"

namespace jbt {

/// Outcome of the Brown-Pedersen quasi-invertibility test. When the element
/// is quasi-invertible the generalized inverse witnesses B(a, b) = 0;
/// witness_residual records the worst norm of B(a, b) over the canonical
/// basis.
struct QuasiInvertibilityReport {
    bool is_bp_quasi_invertible = false;
    std::optional<MatrixElement> witness_b;
    bool range_tripotent_complete = false;
    double m_q = 0.0;
    double alpha_q = 0.0;
    double witness_residual = 0.0;
};

QuasiInvertibilityReport is_bp_quasi_invertible(const MatrixElement& a,
                                                double rank_tol = kDefaultRankTol);

/// Distance from a to the quasi-invertible set. Identically 0 here: elements
/// of full support are dense in every finite-dimensional model. The operation
/// is kept so the distance formulas read literally.
double alpha_q(const MatrixElement& a);

/// A full-support element within eps of a (at distance exactly eps/2 when a
/// is rank-deficient): below-threshold singular values are raised to eps/2.
MatrixElement alpha_q_witness(const MatrixElement& a, double eps,
                              double rank_tol = kDefaultRankTol);

/// m_q(a) together with a nearest non-quasi-invertible element:
/// y0 = a - m_q(a) r(a) for quasi-invertible a, a itself otherwise.
struct RankDropDistance {
    double value;
    MatrixElement witness;
};

RankDropDistance dist_to_non_quasi_invertible(const MatrixElement& a,
                                              double rank_tol = kDefaultRankTol);

/// Distance from a to the extreme points of the closed unit ball, either an
/// exact theorem value or certified bounds. The theorem_tag names the case
/// that produced the result.
struct ExactDistance {
    double value;
    std::string theorem_tag;
};

struct DistanceInterval {
    double lower;
    double upper;
    double conjectured;  ///< max(1 + alpha_q, ||a|| - 1); supported numerically, unproven
    std::string theorem_tag;
};

using DistanceResult = std::variant<ExactDistance, DistanceInterval>;

inline constexpr const char* kCaseQuasiInvertible =
    "quasi-invertible: max(1 - m_q, norm - 1)";
inline constexpr const char* kCaseNonQuasiInvertibleBall =
    "not quasi-invertible, norm <= 1: 1 + alpha_q";
inline constexpr const char* kCaseNonQuasiInvertibleBounds =
    "not quasi-invertible, norm > 1: bounds only";

DistanceResult dist_to_extremals(const MatrixElement& a,
                                 double rank_tol = kDefaultRankTol);

double distance_lower_bound(const DistanceResult& r);
double distance_upper_bound(const DistanceResult& r);
bool distance_is_exact(const DistanceResult& r);

/// Aron-Lohman lambda-function on the closed unit ball:
/// (1 + m_q(a))/2 when a is quasi-invertible, 1/2 otherwise. Always in
/// [1/2, 1]; equals 1 exactly on the extreme points. Throws NormExceedsOne
/// when ||a|| > 1 + tol.
double lambda_value(const MatrixElement& a, double tol = kDefaultTol,
                    double rank_tol = kDefaultRankTol);

}  // namespace jbt
