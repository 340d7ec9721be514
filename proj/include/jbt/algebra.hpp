#pragma once

#include "jbt/space.hpp"

namespace jbt {

/// Default absolute tolerance for algebraic residuals on unit-norm inputs.
inline constexpr double kDefaultTol = 1e-9;

/// Jordan triple product {x,y,z}; linear in x and z, conjugate-linear in y.
/// Matrices: (x y* z + z y* x) / 2. Grid: pointwise x * conj(y) * z.
MatrixElement triple_product(const MatrixElement& x, const MatrixElement& y,
                             const MatrixElement& z);

/// L(x,y) z = {x,y,z}.
MatrixElement apply_L(const MatrixElement& x, const MatrixElement& y,
                      const MatrixElement& z);

/// Q(x) y = {x,y,x}; conjugate-linear in y.
MatrixElement apply_Q(const MatrixElement& x, const MatrixElement& y);

/// Bergmann operator B(x,y) z = z - 2{x,y,z} + Q(x)Q(y) z.
MatrixElement bergmann_apply(const MatrixElement& x, const MatrixElement& y,
                             const MatrixElement& z);

/// True iff ||{e,e,e} - e|| <= tol. Matrix tripotents are partial isometries.
bool is_tripotent(const MatrixElement& e, double tol = kDefaultTol);

/// A validated tripotent together with its Peirce-0 classification.
/// complete: trivial Peirce-0 space (e e* = I_m or e* e = I_n for matrices;
/// every nonzero grid point carries a unimodular entry). unitary: L(e,e) is
/// the identity on the whole space; implies complete.
class Tripotent {
public:
    const MatrixElement& element() const { return element_; }
    bool is_complete() const { return complete_; }
    bool is_unitary() const { return unitary_; }
    double validation_tol() const { return tol_; }

private:
    friend Tripotent classify_tripotent(const MatrixElement&, double);
    Tripotent(MatrixElement e, bool complete, bool unitary, double tol)
        : element_(std::move(e)), complete_(complete), unitary_(unitary), tol_(tol) {}

    MatrixElement element_;
    bool complete_;
    bool unitary_;
    double tol_;
};

/// Validates and classifies e; throws NotATripotent when ||{e,e,e}-e|| > tol.
Tripotent classify_tripotent(const MatrixElement& e, double tol = kDefaultTol);

/// Peirce k-projection of x with respect to e, for k in {0,1,2}:
///   P_2 = Q(e)^2,  P_1 = 2(L(e,e) - Q(e)^2),  P_0 = Id - 2 L(e,e) + Q(e)^2.
MatrixElement peirce_project(const Tripotent& e, int k, const MatrixElement& x);

/// Scale-aware orthogonality test: ||{a,a,b}|| <= tol * ||a||^2 ||b||.
/// For matrices this is equivalent to a b* = 0 and b* a = 0.
bool are_orthogonal(const MatrixElement& a, const MatrixElement& b,
                    double tol = kDefaultTol);

}  // namespace jbt
