#pragma once

#include <Eigen/Core>

#include <complex>
#include <functional>
#include <vector>

#include "jbt/errors.hpp"

namespace jbt {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// Ambient model of the triple. Two concrete models are supported:
///  - RectangularFactor: the complex m-by-n matrices with the spectral norm
///    and product {x,y,z} = (x y* z + z y* x) / 2;
///  - CommutativeGrid: complex functions on a finite grid of non-negative
///    points that vanish at the mandatory point 0, with the sup norm and the
///    pointwise product x * conj(y) * z.
class TripleSpace {
public:
    enum class Kind { RectangularFactor, CommutativeGrid };

    static TripleSpace rectangular(Index rows, Index cols);

    /// Points must be strictly increasing and start at 0; at least one
    /// nonzero point is required (the grid samples C_0(S + {0}) with S
    /// nonempty).
    static TripleSpace grid(std::vector<double> points);

    Kind kind() const { return kind_; }
    bool is_rectangular() const { return kind_ == Kind::RectangularFactor; }
    bool is_grid() const { return kind_ == Kind::CommutativeGrid; }

    /// Shape of the entry array: rows x cols for matrices, #points x 1 for
    /// grid elements.
    Index rows() const { return rows_; }
    Index cols() const { return cols_; }

    /// min(m, n) for matrices; the number of nonzero points for a grid.
    Index degrees_of_freedom() const;

    const std::vector<double>& points() const;

    friend bool operator==(const TripleSpace& a, const TripleSpace& b);
    friend bool operator!=(const TripleSpace& a, const TripleSpace& b) { return !(a == b); }

private:
    TripleSpace(Kind kind, Index rows, Index cols, std::vector<double> points)
        : kind_(kind), rows_(rows), cols_(cols), points_(std::move(points)) {}

    Kind kind_;
    Index rows_;
    Index cols_;
    std::vector<double> points_;
};

/// An element of a triple space: a complex array of the space's shape.
/// Immutable after construction; all operations return fresh values.
class MatrixElement {
public:
    MatrixElement(TripleSpace space, Matrix entries);

    static MatrixElement zero(const TripleSpace& space);

    const TripleSpace& space() const { return space_; }
    const Matrix& entries() const { return entries_; }

    /// Operator norm: largest singular value for matrices, maximum modulus
    /// for grid elements. Computed on demand.
    double norm() const;

    bool is_zero() const { return entries_.isZero(0.0); }

    /// Conjugate transpose, an element of the swapped rectangular factor.
    MatrixElement adjoint() const;

    friend MatrixElement operator+(const MatrixElement& a, const MatrixElement& b);
    friend MatrixElement operator-(const MatrixElement& a, const MatrixElement& b);
    friend MatrixElement operator*(Complex c, const MatrixElement& a);
    friend MatrixElement operator*(double c, const MatrixElement& a);

private:
    TripleSpace space_;
    Matrix entries_;
};

/// Throws ShapeMismatch unless both elements share one space.
void require_same_space(const MatrixElement& a, const MatrixElement& b);

/// Visits the canonical basis of the space: matrix units E_ij, or the
/// indicator of each nonzero grid point.
void for_each_basis_element(const TripleSpace& space,
                            const std::function<void(const MatrixElement&)>& visit);

/// max over basis elements b of ||lhs(b) - rhs(b)||; compares two linear
/// (or conjugate-linear) operators on the space.
double max_basis_residual(const TripleSpace& space,
                          const std::function<MatrixElement(const MatrixElement&)>& lhs,
                          const std::function<MatrixElement(const MatrixElement&)>& rhs);

}  // namespace jbt
