#include "jbt/space.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <sstream>

namespace jbt {

TripleSpace TripleSpace::rectangular(Index rows, Index cols) {
    if (rows < 1 || cols < 1) {
        throw ShapeMismatch("rectangular factor needs positive dimensions");
    }
    return TripleSpace(Kind::RectangularFactor, rows, cols, {});
}

TripleSpace TripleSpace::grid(std::vector<double> points) {
    if (points.size() < 2 || points.front() != 0.0) {
        throw ShapeMismatch("grid needs point 0 plus at least one nonzero point");
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i] > points[i - 1])) {
            throw ShapeMismatch("grid points must be strictly increasing");
        }
    }
    const Index n = static_cast<Index>(points.size());
    return TripleSpace(Kind::CommutativeGrid, n, 1, std::move(points));
}

Index TripleSpace::degrees_of_freedom() const {
    if (is_rectangular()) return std::min(rows_, cols_);
    return rows_ - 1;  // nonzero points
}

const std::vector<double>& TripleSpace::points() const {
    if (!is_grid()) throw ShapeMismatch("points() is only defined on a grid space");
    return points_;
}

bool operator==(const TripleSpace& a, const TripleSpace& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.is_rectangular()) return a.rows_ == b.rows_ && a.cols_ == b.cols_;
    return a.points_ == b.points_;
}

MatrixElement::MatrixElement(TripleSpace space, Matrix entries)
    : space_(std::move(space)), entries_(std::move(entries)) {
    if (entries_.rows() != space_.rows() || entries_.cols() != space_.cols()) {
        std::ostringstream msg;
        msg << "entries " << entries_.rows() << "x" << entries_.cols()
            << " do not match space " << space_.rows() << "x" << space_.cols();
        throw ShapeMismatch(msg.str());
    }
    if (space_.is_grid() && entries_(0, 0) != Complex(0.0, 0.0)) {
        throw ShapeMismatch("grid entry at point 0 must be exactly 0");
    }
}

MatrixElement MatrixElement::zero(const TripleSpace& space) {
    return MatrixElement(space, Matrix::Zero(space.rows(), space.cols()));
}

double MatrixElement::norm() const {
    if (space_.is_grid()) {
        return entries_.cwiseAbs().maxCoeff();
    }
    if (entries_.isZero(0.0)) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(entries_);
    return svd.singularValues()(0);
}

MatrixElement MatrixElement::adjoint() const {
    if (!space_.is_rectangular()) {
        throw ShapeMismatch("adjoint is only defined on the rectangular factor");
    }
    return MatrixElement(TripleSpace::rectangular(space_.cols(), space_.rows()),
                         entries_.adjoint());
}

MatrixElement operator+(const MatrixElement& a, const MatrixElement& b) {
    require_same_space(a, b);
    return MatrixElement(a.space_, a.entries_ + b.entries_);
}

MatrixElement operator-(const MatrixElement& a, const MatrixElement& b) {
    require_same_space(a, b);
    return MatrixElement(a.space_, a.entries_ - b.entries_);
}

MatrixElement operator*(Complex c, const MatrixElement& a) {
    return MatrixElement(a.space_, c * a.entries_);
}

MatrixElement operator*(double c, const MatrixElement& a) {
    return MatrixElement(a.space_, c * a.entries_);
}

void require_same_space(const MatrixElement& a, const MatrixElement& b) {
    if (a.space() != b.space()) {
        throw ShapeMismatch("elements live in different triple spaces");
    }
}

void for_each_basis_element(const TripleSpace& space,
                            const std::function<void(const MatrixElement&)>& visit) {
    if (space.is_rectangular()) {
        for (Index i = 0; i < space.rows(); ++i) {
            for (Index j = 0; j < space.cols(); ++j) {
                Matrix unit = Matrix::Zero(space.rows(), space.cols());
                unit(i, j) = 1.0;
                visit(MatrixElement(space, std::move(unit)));
            }
        }
        return;
    }
    for (Index i = 1; i < space.rows(); ++i) {
        Matrix unit = Matrix::Zero(space.rows(), 1);
        unit(i, 0) = 1.0;
        visit(MatrixElement(space, std::move(unit)));
    }
}

double max_basis_residual(const TripleSpace& space,
                          const std::function<MatrixElement(const MatrixElement&)>& lhs,
                          const std::function<MatrixElement(const MatrixElement&)>& rhs) {
    double worst = 0.0;
    for_each_basis_element(space, [&](const MatrixElement& b) {
        worst = std::max(worst, (lhs(b) - rhs(b)).norm());
    });
    return worst;
}

}  // namespace jbt
