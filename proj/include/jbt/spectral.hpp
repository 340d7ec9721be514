#pragma once

#include <Eigen/Core>

#include <functional>
#include <vector>

#include "jbt/algebra.hpp"
#include "jbt/space.hpp"

namespace jbt {

/// Default relative threshold for numerical-rank decisions: a singular value
/// counts as nonzero when sigma > rank_tol * sigma_max.
inline constexpr double kDefaultRankTol = 1e-9;

/// Full singular value decomposition of a matrix element plus the derived
/// triple-spectral data. Bases are unique only up to gauge (phases and
/// rotations of degenerate subspaces); everything exported downstream is a
/// gauge-invariant function of the element.
struct SpectralData {
    Eigen::VectorXd sigma;      ///< all min(m,n) singular values, descending
    Matrix left_vectors;        ///< m x min(m,n), orthonormal columns
    Matrix right_vectors;       ///< n x min(m,n), orthonormal columns
    Index numerical_rank = 0;   ///< #{sigma_i > rank_threshold}
    std::vector<double> triple_spectrum;  ///< S_a: distinct values above threshold, ascending
    std::vector<double> sigma_sq;         ///< squares of triple_spectrum
    double norm = 0.0;          ///< sigma_max
    double rank_threshold = 0.0;  ///< absolute cutoff rank_tol * sigma_max
};

/// SVD of a rectangular element. The zero matrix yields rank 0 and an empty
/// triple spectrum.
SpectralData compute_svd(const MatrixElement& a, double rank_tol = kDefaultRankTol);

/// Triple spectrum S_a: the distinct numerical singular values (matrices) or
/// the distinct moduli of the entries at nonzero points (grid), ascending.
/// For a != 0, max(S_a) = ||a||.
std::vector<double> triple_spectrum(const MatrixElement& a,
                                    double rank_tol = kDefaultRankTol);

/// Continuous odd functional calculus f_t(a): applies f to each singular
/// value while keeping the singular frames (pointwise on modulus, keeping the
/// phase, for grid elements). Below-threshold singular values are treated as
/// exact zeros so that the output stays inside the subtriple generated by a.
/// f must be odd with f(0) = 0 and defined on [0, ||a||].
MatrixElement odd_calculus(const MatrixElement& a,
                           const std::function<double(double)>& f,
                           double rank_tol = kDefaultRankTol);

/// Range tripotent r(a): the partial isometry of the reduced polar
/// decomposition (limit of the odd roots a^[1/(2n-1)]). Throws ZeroElement
/// for a = 0.
Tripotent range_tripotent(const MatrixElement& a, double rank_tol = kDefaultRankTol);

/// Generalized inverse: the unique b with Q(a)b = a, Q(b)a = b and
/// [Q(a),Q(b)] = 0. Same shape as a, reciprocal singular values. Throws
/// ZeroElement for a = 0.
MatrixElement generalized_inverse(const MatrixElement& a,
                                  double rank_tol = kDefaultRankTol);

/// Extended real used for the quadratic conorm: gamma^q(0) is the infinity
/// sentinel, kept tagged so reports never smuggle it through as a float.
class ExtendedReal {
public:
    static ExtendedReal infinity() { return ExtendedReal(true, 0.0); }
    static ExtendedReal finite(double v) { return ExtendedReal(false, v); }

    bool is_infinite() const { return infinite_; }
    double value() const {
        if (infinite_) throw PreconditionViolated("value() called on the infinity sentinel");
        return value_;
    }

private:
    ExtendedReal(bool inf, double v) : infinite_(inf), value_(v) {}
    bool infinite_;
    double value_;
};

/// Quadratic conorm gamma^q(a) = min { s^2 : s in S_a }, with gamma^q(0)
/// infinite by convention.
ExtendedReal quadratic_conorm(const MatrixElement& a,
                              double rank_tol = kDefaultRankTol);

/// True when the element has full support: full numerical rank for matrices,
/// no vanishing entry at a nonzero grid point. This is exactly
/// Brown-Pedersen quasi-invertibility in these models.
bool has_full_support(const MatrixElement& a, double rank_tol = kDefaultRankTol);

/// m_q(a): sqrt(gamma^q(a)) = smallest singular value when a is
/// Brown-Pedersen quasi-invertible, 0 otherwise. Equals the distance from a
/// to the non-quasi-invertible set.
double m_q(const MatrixElement& a, double rank_tol = kDefaultRankTol);

}  // namespace jbt
