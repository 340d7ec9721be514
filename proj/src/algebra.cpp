#include "jbt/algebra.hpp"

#include <cmath>

namespace jbt {

MatrixElement triple_product(const MatrixElement& x, const MatrixElement& y,
                             const MatrixElement& z) {
    require_same_space(x, y);
    require_same_space(x, z);
    if (x.space().is_grid()) {
        Matrix out = x.entries().array() * y.entries().array().conjugate() *
                     z.entries().array();
        return MatrixElement(x.space(), std::move(out));
    }
    const Matrix& a = x.entries();
    const Matrix& b = y.entries();
    const Matrix& c = z.entries();
    Matrix out = 0.5 * (a * b.adjoint() * c + c * b.adjoint() * a);
    return MatrixElement(x.space(), std::move(out));
}

MatrixElement apply_L(const MatrixElement& x, const MatrixElement& y,
                      const MatrixElement& z) {
    return triple_product(x, y, z);
}

MatrixElement apply_Q(const MatrixElement& x, const MatrixElement& y) {
    return triple_product(x, y, x);
}

MatrixElement bergmann_apply(const MatrixElement& x, const MatrixElement& y,
                             const MatrixElement& z) {
    MatrixElement qq = apply_Q(x, apply_Q(y, z));
    return z - 2.0 * triple_product(x, y, z) + qq;
}

bool is_tripotent(const MatrixElement& e, double tol) {
    if (tol <= 0.0) throw PreconditionViolated("tolerance must be positive");
    return (triple_product(e, e, e) - e).norm() <= tol;
}

Tripotent classify_tripotent(const MatrixElement& e, double tol) {
    if (!is_tripotent(e, tol)) {
        throw NotATripotent("||{e,e,e} - e|| exceeds the validation tolerance");
    }
    bool complete = false;
    bool unitary = false;
    if (e.space().is_grid()) {
        complete = true;
        for (Index i = 1; i < e.space().rows(); ++i) {
            if (std::abs(std::abs(e.entries()(i, 0)) - 1.0) > tol) {
                complete = false;
                break;
            }
        }
        unitary = complete;  // L(e,e) = Id on the grid iff |e| = 1 at every point
    } else {
        const Matrix& m = e.entries();
        const Index rows = m.rows(), cols = m.cols();
        const bool left = (m * m.adjoint() - Matrix::Identity(rows, rows)).norm() <= tol;
        const bool right = (m.adjoint() * m - Matrix::Identity(cols, cols)).norm() <= tol;
        complete = left || right;
        unitary = left && right;
    }
    return Tripotent(e, complete, unitary, tol);
}

MatrixElement peirce_project(const Tripotent& e, int k, const MatrixElement& x) {
    const MatrixElement& t = e.element();
    require_same_space(t, x);
    MatrixElement q2 = apply_Q(t, apply_Q(t, x));
    switch (k) {
        case 2:
            return q2;
        case 1:
            return 2.0 * (triple_product(t, t, x) - q2);
        case 0:
            return x - 2.0 * triple_product(t, t, x) + q2;
        default:
            throw PreconditionViolated("Peirce index must be 0, 1 or 2");
    }
}

bool are_orthogonal(const MatrixElement& a, const MatrixElement& b, double tol) {
    require_same_space(a, b);
    const double na = a.norm();
    const double nb = b.norm();
    if (na == 0.0 || nb == 0.0) return true;
    return triple_product(a, a, b).norm() <= tol * na * na * nb;
}

}  // namespace jbt
