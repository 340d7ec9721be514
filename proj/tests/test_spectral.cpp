#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "jbt/oracle.hpp"
#include "jbt/spectral.hpp"

using namespace jbt;

namespace {

MatrixElement diag(std::initializer_list<Complex> values) {
    const Index n = static_cast<Index>(values.size());
    Matrix m = Matrix::Zero(n, n);
    Index i = 0;
    for (Complex v : values) m(i, i) = v, ++i;
    return MatrixElement(TripleSpace::rectangular(n, n), std::move(m));
}

MatrixElement scalar(Complex v) {
    Matrix m(1, 1);
    m(0, 0) = v;
    return MatrixElement(TripleSpace::rectangular(1, 1), std::move(m));
}

const Complex I(0.0, 1.0);

}  // namespace

TEST_CASE("compute_svd of the zero matrix") {
    const SpectralData s = compute_svd(MatrixElement::zero(TripleSpace::rectangular(2, 3)));
    CHECK(s.numerical_rank == 0);
    CHECK(s.triple_spectrum.empty());
    CHECK(s.norm == 0.0);
    CHECK(s.sigma.maxCoeff() == 0.0);
}

TEST_CASE("compute_svd of a diagonal matrix") {
    const SpectralData s = compute_svd(diag({3.0, 1.0, 0.0}));
    CHECK(s.numerical_rank == 2);
    REQUIRE(s.triple_spectrum.size() == 2);
    CHECK(s.triple_spectrum[0] == doctest::Approx(1.0));
    CHECK(s.triple_spectrum[1] == doctest::Approx(3.0));
}

TEST_CASE("compute_svd reconstructs and keeps frames orthonormal") {
    OracleConfig cfg;
    cfg.seed = 21;
    const MatrixElement a =
        random_element(TripleSpace::rectangular(4, 6), cfg, 2.0, 5);
    const SpectralData s = compute_svd(a);
    const Matrix rebuilt = s.left_vectors *
                           Eigen::VectorXd(s.sigma).asDiagonal() *
                           s.right_vectors.adjoint();
    CHECK((a.entries() - rebuilt).norm() <= 1e-10 * a.norm());
    const Index k = s.left_vectors.cols();
    CHECK((s.left_vectors.adjoint() * s.left_vectors - Matrix::Identity(k, k)).norm() <=
          1e-10);
    CHECK((s.right_vectors.adjoint() * s.right_vectors - Matrix::Identity(k, k)).norm() <=
          1e-10);
}

TEST_CASE("triple spectrum of a nilpotent-looking unit") {
    Matrix m(2, 2);
    m << 0.0, 2.0, 0.0, 0.0;
    const MatrixElement a(TripleSpace::rectangular(2, 2), std::move(m));
    const std::vector<double> s = triple_spectrum(a);
    REQUIRE(s.size() == 1);
    CHECK(s[0] == doctest::Approx(2.0));
}

TEST_CASE("triple spectrum basics") {
    CHECK(triple_spectrum(diag({1.0, 1.0})) == std::vector<double>{1.0});
    const std::vector<double> s = triple_spectrum(diag({0.5, 1.0}));
    REQUIRE(s.size() == 2);
    CHECK(s[0] == doctest::Approx(0.5));
    CHECK(s[1] == doctest::Approx(1.0));
    CHECK(triple_spectrum(scalar(2.0 * I)).back() == doctest::Approx(2.0));

    OracleConfig cfg;
    cfg.seed = 4;
    const MatrixElement a = random_element(TripleSpace::rectangular(3, 5), cfg, 1.7, 0);
    CHECK(triple_spectrum(a).back() == doctest::Approx(a.norm()));
}

TEST_CASE("odd calculus with the identity returns the element") {
    OracleConfig cfg;
    cfg.seed = 9;
    const MatrixElement a = random_element(TripleSpace::rectangular(3, 2), cfg, 1.0, 1);
    const MatrixElement same = odd_calculus(a, [](double s) { return s; });
    CHECK((a - same).norm() <= 1e-12);
}

TEST_CASE("odd calculus applies cube roots to singular values") {
    const MatrixElement out = odd_calculus(diag({8.0, 1.0}), [](double s) {
        return std::cbrt(s);
    });
    CHECK(out.entries()(0, 0).real() == doctest::Approx(2.0));
    CHECK(out.entries()(1, 1).real() == doctest::Approx(1.0));
}

TEST_CASE("iterated odd roots converge to the range tripotent") {
    MatrixElement x = scalar(2.0 * I);
    for (int n = 0; n < 40; ++n) {
        x = odd_calculus(x, [](double s) { return std::cbrt(s); });
    }
    CHECK(std::abs(x.entries()(0, 0) - I) <= 1e-9);
    CHECK(std::abs(range_tripotent(scalar(2.0 * I)).element().entries()(0, 0) - I) <=
          1e-12);
}

TEST_CASE("range tripotent is the polar factor on the support") {
    const MatrixElement r = range_tripotent(diag({3.0, 0.0})).element();
    CHECK(r.entries()(0, 0).real() == doctest::Approx(1.0));
    CHECK(std::abs(r.entries()(1, 1)) <= 1e-12);

    OracleConfig cfg;
    cfg.seed = 13;
    const MatrixElement a = random_element(TripleSpace::rectangular(2, 3), cfg, 2.0, 2);
    const Tripotent rt = range_tripotent(a);
    CHECK(rt.is_complete());
    const Matrix& e = rt.element().entries();
    CHECK((e * e.adjoint() - Matrix::Identity(2, 2)).norm() <= 1e-10);

    CHECK_THROWS_AS(range_tripotent(MatrixElement::zero(a.space())), ZeroElement);
}

TEST_CASE("generalized inverse on diagonals, scalars and tripotents") {
    const MatrixElement inv = generalized_inverse(diag({2.0, 4.0}));
    CHECK(inv.entries()(0, 0).real() == doctest::Approx(0.5));
    CHECK(inv.entries()(1, 1).real() == doctest::Approx(0.25));

    CHECK(std::abs(generalized_inverse(scalar(2.0 * I)).entries()(0, 0) -
                   Complex(0.0, 0.5)) <= 1e-12);

    const MatrixElement e = diag({1.0, 1.0});
    CHECK((generalized_inverse(e) - e).norm() <= 1e-12);

    CHECK_THROWS_AS(generalized_inverse(MatrixElement::zero(e.space())), ZeroElement);
}

TEST_CASE("generalized inverse satisfies the defining relations") {
    OracleConfig cfg;
    cfg.seed = 17;
    const MatrixElement a = random_element(TripleSpace::rectangular(3, 4), cfg, 2.0, 3);
    const MatrixElement b = generalized_inverse(a);
    CHECK((apply_Q(a, b) - a).norm() <= 1e-10 * a.norm());
    CHECK((apply_Q(b, a) - b).norm() <= 1e-10 * b.norm());
}

TEST_CASE("quadratic conorm") {
    CHECK(quadratic_conorm(diag({0.5, 1.0})).value() == doctest::Approx(0.25));
    CHECK(quadratic_conorm(MatrixElement::zero(TripleSpace::rectangular(2, 2)))
              .is_infinite());
    CHECK(quadratic_conorm(diag({1.0, 1.0})).value() == doctest::Approx(1.0));
    // rank-deficient but nonzero: the conorm sees only the nonzero spectrum
    CHECK(quadratic_conorm(diag({1.0, 0.0})).value() == doctest::Approx(1.0));
}

TEST_CASE("m_q vanishes off the quasi-invertibles and is sigma_min on them") {
    CHECK(m_q(diag({1.0, 0.0})) == 0.0);
    CHECK(m_q(diag({0.5, 1.0})) == doctest::Approx(0.5));
    OracleConfig cfg;
    cfg.seed = 29;
    const MatrixElement a = random_element(TripleSpace::rectangular(3, 3), cfg, 2.0, 4);
    CHECK(m_q(3.0 * a) == doctest::Approx(3.0 * m_q(a)));
}

TEST_CASE("grid spectral operations act pointwise") {
    const TripleSpace grid = TripleSpace::grid({0.0, 1.0, 2.0, 3.0});
    Matrix vs = Matrix::Zero(4, 1);
    vs(1, 0) = Complex(0.0, 2.0);
    vs(2, 0) = -0.5;
    vs(3, 0) = 1.0;
    const MatrixElement v(grid, vs);

    const std::vector<double> s = triple_spectrum(v);
    REQUIRE(s.size() == 3);
    CHECK(s[0] == doctest::Approx(0.5));
    CHECK(s[2] == doctest::Approx(2.0));

    CHECK_FALSE(has_full_support(MatrixElement::zero(grid)));
    CHECK(has_full_support(v));
    CHECK(m_q(v) == doctest::Approx(0.5));

    const MatrixElement inv = generalized_inverse(v);
    CHECK(std::abs(inv.entries()(1, 0) - Complex(0.0, 0.5)) <= 1e-12);
    CHECK(inv.entries()(2, 0).real() == doctest::Approx(-2.0));

    const Tripotent r = range_tripotent(v);
    CHECK(r.is_complete());
    CHECK(std::abs(r.element().entries()(1, 0) - Complex(0.0, 1.0)) <= 1e-12);

    Matrix ws = vs;
    ws(2, 0) = 0.0;
    const MatrixElement w(grid, ws);
    CHECK(m_q(w) == 0.0);
    CHECK_FALSE(has_full_support(w));
}

TEST_CASE("compute_svd rejects grid elements") {
    const TripleSpace grid = TripleSpace::grid({0.0, 1.0});
    CHECK_THROWS_AS(compute_svd(MatrixElement::zero(grid)), ShapeMismatch);
}
