#include "jbt/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace jbt {

QuasiInvertibilityReport is_bp_quasi_invertible(const MatrixElement& a,
                                                double rank_tol) {
    QuasiInvertibilityReport report;
    report.alpha_q = alpha_q(a);
    report.is_bp_quasi_invertible = has_full_support(a, rank_tol);
    report.m_q = m_q(a, rank_tol);
    if (!a.is_zero()) {
        report.range_tripotent_complete =
            range_tripotent(a, rank_tol).is_complete();
    }
    if (report.is_bp_quasi_invertible) {
        MatrixElement b = generalized_inverse(a, rank_tol);
        report.witness_residual = max_basis_residual(
            a.space(),
            [&](const MatrixElement& z) { return bergmann_apply(a, b, z); },
            [&](const MatrixElement& z) { return MatrixElement::zero(z.space()); });
        report.witness_b = std::move(b);
    }
    return report;
}

double alpha_q(const MatrixElement&) { return 0.0; }

MatrixElement alpha_q_witness(const MatrixElement& a, double eps, double rank_tol) {
    if (eps <= 0.0) throw PreconditionViolated("eps must be positive");
    if (a.space().is_grid()) {
        const double thresh = rank_tol * a.norm();
        Matrix out = a.entries();
        for (Index i = 1; i < a.space().rows(); ++i) {
            if (std::abs(out(i, 0)) <= thresh) out(i, 0) = eps / 2.0;
        }
        return MatrixElement(a.space(), std::move(out));
    }
    SpectralData s = compute_svd(a, rank_tol);
    Eigen::VectorXd lifted = s.sigma;
    for (Index i = 0; i < lifted.size(); ++i) {
        if (lifted(i) <= s.rank_threshold) lifted(i) = eps / 2.0;
    }
    Matrix out = s.left_vectors * lifted.asDiagonal() * s.right_vectors.adjoint();
    return MatrixElement(a.space(), std::move(out));
}

RankDropDistance dist_to_non_quasi_invertible(const MatrixElement& a,
                                              double rank_tol) {
    const double mq = m_q(a, rank_tol);
    if (mq == 0.0) {
        return RankDropDistance{0.0, a};
    }
    // a - m_q r(a), evaluated on the singular frames so the smallest
    // singular value of the witness cancels to an exact zero
    MatrixElement witness =
        odd_calculus(a, [mq](double s) { return s - mq; }, rank_tol);
    return RankDropDistance{mq, std::move(witness)};
}

DistanceResult dist_to_extremals(const MatrixElement& a, double rank_tol) {
    const double norm = a.norm();
    const double mq = m_q(a, rank_tol);
    if (mq > 0.0) {
        return ExactDistance{std::max(1.0 - mq, norm - 1.0), kCaseQuasiInvertible};
    }
    const double aq = alpha_q(a);
    if (norm <= 1.0) {
        return ExactDistance{1.0 + aq, kCaseNonQuasiInvertibleBall};
    }
    const double lower = std::max(1.0 + aq, norm - 1.0);
    return DistanceInterval{lower, 1.0 + norm, lower, kCaseNonQuasiInvertibleBounds};
}

double distance_lower_bound(const DistanceResult& r) {
    if (const auto* e = std::get_if<ExactDistance>(&r)) return e->value;
    return std::get<DistanceInterval>(r).lower;
}

double distance_upper_bound(const DistanceResult& r) {
    if (const auto* e = std::get_if<ExactDistance>(&r)) return e->value;
    return std::get<DistanceInterval>(r).upper;
}

bool distance_is_exact(const DistanceResult& r) {
    return std::holds_alternative<ExactDistance>(r);
}

double lambda_value(const MatrixElement& a, double tol, double rank_tol) {
    if (a.norm() > 1.0 + tol) {
        throw NormExceedsOne("the lambda-function is defined on the closed unit ball");
    }
    const double mq = m_q(a, rank_tol);
    if (mq > 0.0) return std::min(1.0, (1.0 + mq) / 2.0);
    return 0.5;
}

}  // namespace jbt
