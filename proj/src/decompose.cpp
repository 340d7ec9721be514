#include "jbt/decompose.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace jbt {

namespace {

constexpr double kBoundarySlack = 1e-12;  // relative slack at feasibility boundaries
constexpr double kSplitSlack = 1e-11;     // absorbs roundoff of sigma at the boundary

Complex unit_phase(Complex v) {
    const double mod = std::abs(v);
    return mod > 0.0 ? v / mod : Complex(1.0, 0.0);
}

// Builds e, u from per-singular-value unimodular pairs on the singular
// frames of a (per-point pairs on the phases for grid elements).
DecompositionCertificate assemble(const MatrixElement& a, double lambda,
                                  const std::function<std::pair<Complex, Complex>(double)>& split,
                                  double tol) {
    MatrixElement e = MatrixElement::zero(a.space());
    MatrixElement u = MatrixElement::zero(a.space());
    if (a.space().is_grid()) {
        Matrix d1 = Matrix::Zero(a.space().rows(), 1);
        Matrix d2 = Matrix::Zero(a.space().rows(), 1);
        for (Index i = 1; i < a.space().rows(); ++i) {
            const Complex v = a.entries()(i, 0);
            const auto [u1, u2] = split(std::min(std::abs(v), 1.0));
            d1(i, 0) = unit_phase(v) * u1;
            d2(i, 0) = unit_phase(v) * u2;
        }
        e = MatrixElement(a.space(), std::move(d1));
        u = MatrixElement(a.space(), std::move(d2));
    } else {
        Eigen::JacobiSVD<Matrix> svd(a.entries(),
                                     Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Eigen::VectorXd& sigma = svd.singularValues();
        Eigen::VectorXcd d1(sigma.size()), d2(sigma.size());
        for (Index i = 0; i < sigma.size(); ++i) {
            const auto [u1, u2] = split(std::min(sigma(i), 1.0));
            d1(i) = u1;
            d2(i) = u2;
        }
        e = MatrixElement(a.space(),
                          svd.matrixU() * d1.asDiagonal() * svd.matrixV().adjoint());
        u = MatrixElement(a.space(),
                          svd.matrixU() * d2.asDiagonal() * svd.matrixV().adjoint());
    }

    const double residual = (a - (lambda * e + (1.0 - lambda) * u)).norm();
    if (residual > tol) {
        throw TripleError("decomposition residual exceeded the requested tolerance");
    }
    const double te = (triple_product(e, e, e) - e).norm();
    const double tu = (triple_product(u, u, u) - u).norm();
    return DecompositionCertificate{lambda,
                                    classify_tripotent(e, tol),
                                    classify_tripotent(u, tol),
                                    residual,
                                    {te, tu},
                                    tol};
}

}  // namespace

std::pair<Complex, Complex> scalar_circle_split(double t, double lambda) {
    if (lambda < 0.5 - kBoundarySlack || lambda > 1.0 + kBoundarySlack) {
        throw PreconditionViolated("the weight must lie in [1/2, 1]");
    }
    if (t < 0.0 || t > 1.0 + kBoundarySlack) {
        throw PreconditionViolated("the scalar must lie in [0, 1]");
    }
    t = std::min(t, 1.0);
    if (t - (2.0 * lambda - 1.0) < -kSplitSlack) {
        std::ostringstream msg;
        msg << "no unimodular split of " << t << " at weight " << lambda
            << ": needs t >= 2*lambda - 1 = " << (2.0 * lambda - 1.0);
        throw InfeasibleSplit(msg.str());
    }
    if (lambda >= 1.0 - kBoundarySlack) {
        return {Complex(1.0, 0.0), Complex(1.0, 0.0)};  // forces t = 1
    }
    if (t == 0.0) {
        return {Complex(0.0, 1.0), Complex(0.0, -1.0)};  // forces lambda = 1/2
    }
    // x = (t^2 + 2 lambda - 1) / (2t), written through the factored gap
    // lambda - x = (1 - t)(t - (2 lambda - 1)) / (2t) so that y^2 carries only
    // relative error at the feasibility boundary instead of sqrt(roundoff).
    const double gap = (1.0 - t) * std::max(t - (2.0 * lambda - 1.0), 0.0) / (2.0 * t);
    const double x = lambda - gap;
    const double y = std::sqrt(gap * (lambda + x));
    Complex u1 = Complex(x, y) / lambda;
    u1 /= std::abs(u1);
    Complex u2 = (Complex(t, 0.0) - lambda * u1) / (1.0 - lambda);
    u2 /= std::abs(u2);
    return {u1, u2};
}

DecompositionCertificate lambda_decompose(const MatrixElement& a, double lambda,
                                          double tol, double rank_tol) {
    if (a.norm() > 1.0 + tol) {
        throw NormExceedsOne("lambda_decompose needs ||a|| <= 1");
    }
    if (!has_full_support(a, rank_tol)) {
        throw NotQuasiInvertible("lambda_decompose needs a quasi-invertible element");
    }
    if (lambda < 0.5 - kBoundarySlack) {
        throw PreconditionViolated("the weight must lie in [1/2, 1]");
    }
    const double mq = m_q(a, rank_tol);
    const double bound = (1.0 + mq) / 2.0;  // <= 1, so this also caps lambda at 1
    if (lambda > bound + kBoundarySlack * std::max(1.0, bound)) {
        std::ostringstream msg;
        msg << "weight " << lambda << " exceeds the maximal feasible value (1 + m_q)/2 = "
            << bound << " (m_q = " << mq << "); such a convex decomposition does not exist";
        throw LambdaTooLarge(msg.str());
    }
    return assemble(
        a, lambda, [&](double t) { return scalar_circle_split(t, lambda); }, tol);
}

DecompositionCertificate mean_of_two_extremals(const MatrixElement& a, double tol) {
    if (a.norm() > 1.0 + tol) {
        throw NormExceedsOne("mean_of_two_extremals needs ||a|| <= 1");
    }
    return assemble(
        a, 0.5,
        [](double t) {
            const double y = std::sqrt(std::max(1.0 - t * t, 0.0));
            return std::pair<Complex, Complex>{Complex(t, y), Complex(t, -y)};
        },
        tol);
}

PerturbationResult perturb_to_quasi_invertible(const MatrixElement& a,
                                               const MatrixElement& b, double beta,
                                               double tol, double rank_tol) {
    require_same_space(a, b);
    if (!has_full_support(b, rank_tol)) {
        throw PreconditionViolated("b must be quasi-invertible");
    }
    const double gap = (a - b).norm();
    if (!(beta > gap)) {
        throw PreconditionViolated("need ||a - b|| < beta");
    }

    const Tripotent r = range_tripotent(b, rank_tol);
    MatrixElement z = a + beta * r.element();

    PerturbationCertificate cert;
    cert.z_quasi_invertible = has_full_support(z, rank_tol);
    cert.m_q_z = m_q(z, rank_tol);
    cert.m_q_lower_bound = beta - gap;

    MatrixElement w = peirce_project(r, 2, a) + beta * r.element();
    double smin = 0.0, smax = 0.0;
    if (a.space().is_grid()) {
        smin = std::numeric_limits<double>::infinity();
        for (Index i = 1; i < a.space().rows(); ++i) {
            const double mod = std::abs(w.entries()(i, 0));
            smin = std::min(smin, mod);
            smax = std::max(smax, mod);
        }
    } else {
        // Square compression of the Peirce-2 algebra of r: x -> x r* when r
        // is a row isometry, x -> r* x when it is a column isometry.
        const Matrix& re = r.element().entries();
        const Index m = re.rows();
        const bool row_complete =
            (re * re.adjoint() - Matrix::Identity(m, m)).norm() <= 1e-8;
        Matrix compression =
            row_complete ? Matrix(w.entries() * re.adjoint())
                         : Matrix(re.adjoint() * w.entries());
        Eigen::JacobiSVD<Matrix> svd(compression);
        smin = svd.singularValues().minCoeff();
        smax = svd.singularValues().maxCoeff();
    }
    cert.peirce_min_singular_value = smin;
    cert.peirce_invertible = smin > rank_tol * smax;
    cert.all_hold = cert.z_quasi_invertible &&
                    cert.m_q_z >= cert.m_q_lower_bound - tol && cert.peirce_invertible;
    return PerturbationResult{std::move(z), cert};
}

}  // namespace jbt
