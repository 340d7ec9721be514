#include "jbt/spectral.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace jbt {

namespace {

// Distinct values of a nonincreasing list, merging entries closer than
// 1e-10 * scale; returned ascending.
std::vector<double> distinct_ascending(std::vector<double> values, double scale) {
    std::sort(values.begin(), values.end());
    const double merge_tol = 1e-10 * scale;
    std::vector<double> out;
    for (double v : values) {
        if (out.empty() || v - out.back() > merge_tol) {
            out.push_back(v);
        }
    }
    return out;
}

// Moduli of the entries at nonzero grid points.
std::vector<double> grid_moduli(const MatrixElement& a) {
    std::vector<double> mods;
    for (Index i = 1; i < a.space().rows(); ++i) {
        mods.push_back(std::abs(a.entries()(i, 0)));
    }
    return mods;
}

double grid_threshold(const MatrixElement& a, double rank_tol) {
    return rank_tol * a.norm();
}

}  // namespace

SpectralData compute_svd(const MatrixElement& a, double rank_tol) {
    if (!a.space().is_rectangular()) {
        throw ShapeMismatch("compute_svd requires a rectangular matrix element");
    }
    if (rank_tol < 0.0) throw PreconditionViolated("rank_tol must be >= 0");

    Eigen::JacobiSVD<Matrix> svd(a.entries(), Eigen::ComputeThinU | Eigen::ComputeThinV);
    SpectralData data;
    data.sigma = svd.singularValues();
    data.left_vectors = svd.matrixU();
    data.right_vectors = svd.matrixV();
    data.norm = data.sigma.size() > 0 ? data.sigma(0) : 0.0;
    data.rank_threshold = rank_tol * data.norm;

    std::vector<double> kept;
    for (Index i = 0; i < data.sigma.size(); ++i) {
        if (data.norm > 0.0 && data.sigma(i) > data.rank_threshold) {
            ++data.numerical_rank;
            kept.push_back(data.sigma(i));
        }
    }
    data.triple_spectrum = distinct_ascending(std::move(kept), data.norm);
    data.sigma_sq.reserve(data.triple_spectrum.size());
    for (double s : data.triple_spectrum) data.sigma_sq.push_back(s * s);
    return data;
}

std::vector<double> triple_spectrum(const MatrixElement& a, double rank_tol) {
    if (a.space().is_grid()) {
        const double thresh = grid_threshold(a, rank_tol);
        std::vector<double> kept;
        for (double m : grid_moduli(a)) {
            if (a.norm() > 0.0 && m > thresh) kept.push_back(m);
        }
        return distinct_ascending(std::move(kept), a.norm());
    }
    return compute_svd(a, rank_tol).triple_spectrum;
}

MatrixElement odd_calculus(const MatrixElement& a,
                           const std::function<double(double)>& f,
                           double rank_tol) {
    if (a.space().is_grid()) {
        const double thresh = grid_threshold(a, rank_tol);
        Matrix out = Matrix::Zero(a.space().rows(), 1);
        for (Index i = 1; i < a.space().rows(); ++i) {
            const Complex v = a.entries()(i, 0);
            const double mod = std::abs(v);
            if (mod > thresh) out(i, 0) = (v / mod) * f(mod);
        }
        return MatrixElement(a.space(), std::move(out));
    }
    SpectralData s = compute_svd(a, rank_tol);
    Eigen::VectorXd mapped = Eigen::VectorXd::Zero(s.sigma.size());
    for (Index i = 0; i < s.sigma.size(); ++i) {
        if (s.norm > 0.0 && s.sigma(i) > s.rank_threshold) mapped(i) = f(s.sigma(i));
    }
    Matrix out = s.left_vectors * mapped.asDiagonal() * s.right_vectors.adjoint();
    return MatrixElement(a.space(), std::move(out));
}

Tripotent range_tripotent(const MatrixElement& a, double rank_tol) {
    if (a.is_zero()) throw ZeroElement("the zero element has no range tripotent");
    MatrixElement r = odd_calculus(a, [](double) { return 1.0; }, rank_tol);
    return classify_tripotent(r, kDefaultTol);
}

MatrixElement generalized_inverse(const MatrixElement& a, double rank_tol) {
    if (a.is_zero()) throw ZeroElement("the zero element has no generalized inverse");
    return odd_calculus(a, [](double s) { return 1.0 / s; }, rank_tol);
}

ExtendedReal quadratic_conorm(const MatrixElement& a, double rank_tol) {
    if (a.is_zero()) return ExtendedReal::infinity();
    const std::vector<double> spectrum = triple_spectrum(a, rank_tol);
    const double smallest = spectrum.front();
    return ExtendedReal::finite(smallest * smallest);
}

bool has_full_support(const MatrixElement& a, double rank_tol) {
    if (a.space().is_grid()) {
        if (a.is_zero()) return false;
        const double thresh = grid_threshold(a, rank_tol);
        for (double m : grid_moduli(a)) {
            if (m <= thresh) return false;
        }
        return true;
    }
    SpectralData s = compute_svd(a, rank_tol);
    return s.numerical_rank == std::min(a.space().rows(), a.space().cols());
}

double m_q(const MatrixElement& a, double rank_tol) {
    if (!has_full_support(a, rank_tol)) return 0.0;
    // sqrt(gamma^q(a)) = min S_a, taken directly off the spectrum so that
    // downstream subtractions sigma - m_q cancel exactly
    return triple_spectrum(a, rank_tol).front();
}

}  // namespace jbt
