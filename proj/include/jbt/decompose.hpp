#pragma once

#include <utility>

#include "jbt/geometry.hpp"

namespace jbt {

/// Witness for a convex decomposition a = lambda e + (1 - lambda) u with both
/// factors complete tripotents (extreme points of the unit ball).
struct DecompositionCertificate {
    double lambda;
    Tripotent e;
    Tripotent u;
    double reconstruction_residual;
    std::pair<double, double> tripotency_residuals;
    double tol;
};

/// Splits a scalar 0 <= t <= 1 into t = lambda u1 + (1 - lambda) u2 with
/// |u1| = |u2| = 1, for 1/2 <= lambda <= 1. Feasible exactly when
/// t >= 2 lambda - 1; otherwise throws InfeasibleSplit. The degenerate t = 0
/// (forcing lambda = 1/2) returns (i, -i); lambda = 1 requires t = 1 and
/// returns (1, 1). The square root branch is fixed to +sqrt so the output is
/// deterministic.
std::pair<Complex, Complex> scalar_circle_split(double t, double lambda);

/// Convex decomposition of a quasi-invertible unit-ball element into two
/// extreme points, at any weight 1/2 <= lambda <= (1 + m_q(a))/2: the scalar
/// circle split is applied to each singular value on the singular frames of
/// a (pointwise on moduli for grid elements). Throws NormExceedsOne,
/// NotQuasiInvertible, or LambdaTooLarge past the feasibility bound.
DecompositionCertificate lambda_decompose(const MatrixElement& a, double lambda,
                                          double tol = kDefaultTol,
                                          double rank_tol = kDefaultRankTol);

/// Writes any unit-ball element (no rank condition) as the mean of two
/// extreme points, via sigma +- i sqrt(1 - sigma^2) on each singular value.
/// Realizes lambda(a) >= 1/2 for every element of the closed unit ball.
DecompositionCertificate mean_of_two_extremals(const MatrixElement& a,
                                               double tol = kDefaultTol);

/// Evidence returned with the perturbation z = a + beta r(b):
///  - z is quasi-invertible with m_q(z) >= beta - ||b - a||;
///  - the Peirce-2 part P_2(r(b))(a) + beta r(b) is invertible in the
///    Peirce-2 algebra of r(b), certified through the smallest singular
///    value of its square compression.
struct PerturbationCertificate {
    bool z_quasi_invertible = false;
    double m_q_z = 0.0;
    double m_q_lower_bound = 0.0;
    double peirce_min_singular_value = 0.0;
    bool peirce_invertible = false;
    bool all_hold = false;
};

struct PerturbationResult {
    MatrixElement z;
    PerturbationCertificate certificate;
};

/// Requires b quasi-invertible and ||a - b|| < beta; throws
/// PreconditionViolated otherwise.
PerturbationResult perturb_to_quasi_invertible(const MatrixElement& a,
                                               const MatrixElement& b,
                                               double beta,
                                               double tol = kDefaultTol,
                                               double rank_tol = kDefaultRankTol);

}  // namespace jbt
