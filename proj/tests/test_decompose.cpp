#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "jbt/decompose.hpp"
#include "jbt/oracle.hpp"

using namespace jbt;

namespace {

MatrixElement diag(std::initializer_list<Complex> values) {
    const Index n = static_cast<Index>(values.size());
    Matrix m = Matrix::Zero(n, n);
    Index i = 0;
    for (Complex v : values) m(i, i) = v, ++i;
    return MatrixElement(TripleSpace::rectangular(n, n), std::move(m));
}

const Complex I(0.0, 1.0);

}  // namespace

TEST_CASE("scalar circle split at the endpoints") {
    const auto [a1, a2] = scalar_circle_split(1.0, 0.75);
    CHECK(std::abs(a1 - Complex(1.0)) <= 1e-12);
    CHECK(std::abs(a2 - Complex(1.0)) <= 1e-12);

    const auto [b1, b2] = scalar_circle_split(0.0, 0.5);
    CHECK(std::abs(b1 - I) <= 1e-12);
    CHECK(std::abs(b2 + I) <= 1e-12);
}

TEST_CASE("scalar circle split stays on the circle and reconstructs") {
    const auto [u1, u2] = scalar_circle_split(0.5, 0.5);
    CHECK(std::abs(u1) == doctest::Approx(1.0));
    CHECK(std::abs(u2) == doctest::Approx(1.0));
    CHECK(std::abs(0.5 * u1 + 0.5 * u2 - Complex(0.5)) <= 1e-12);
    CHECK(u1.real() == doctest::Approx(0.5));
    CHECK(u1.imag() == doctest::Approx(std::sqrt(0.1875) * 2.0).epsilon(1e-9));

    for (double t : {0.05, 0.3, 0.6, 0.95}) {
        for (double lambda : {0.5, 0.51, (1.0 + t) / 2.0}) {
            const auto [v1, v2] = scalar_circle_split(t, lambda);
            CHECK(std::abs(v1) == doctest::Approx(1.0));
            CHECK(std::abs(v2) == doctest::Approx(1.0));
            CHECK(std::abs(lambda * v1 + (1.0 - lambda) * v2 - Complex(t)) <= 1e-12);
        }
    }
}

TEST_CASE("scalar circle split rejects infeasible weights") {
    CHECK_THROWS_AS(scalar_circle_split(0.4, 0.75), InfeasibleSplit);
    CHECK_THROWS_AS(scalar_circle_split(0.0, 0.6), InfeasibleSplit);
    CHECK_THROWS_AS(scalar_circle_split(0.5, 0.3), PreconditionViolated);
}

TEST_CASE("lambda decomposition at the feasibility boundary of diag(0.5, 1)") {
    const MatrixElement a = diag({0.5, 1.0});
    const DecompositionCertificate cert = lambda_decompose(a, 0.75);
    CHECK(cert.reconstruction_residual <= 1e-12);
    CHECK(cert.e.is_complete());
    CHECK(cert.u.is_complete());
    // the closed-form split at the boundary gives e = diag(1,1), u = diag(-1,1)
    CHECK(std::abs(cert.e.element().entries()(0, 0) - Complex(1.0)) <= 1e-9);
    CHECK(std::abs(cert.e.element().entries()(1, 1) - Complex(1.0)) <= 1e-9);
    CHECK(std::abs(cert.u.element().entries()(0, 0) + Complex(1.0)) <= 1e-9);
    CHECK(std::abs(cert.u.element().entries()(1, 1) - Complex(1.0)) <= 1e-9);
}

TEST_CASE("lambda decomposition of a complete tripotent at weight 1") {
    OracleConfig cfg;
    cfg.seed = 23;
    const TripleSpace space = TripleSpace::rectangular(2, 3);
    const MatrixElement e0 = random_tripotent(space, cfg, true, 0).element();
    const DecompositionCertificate cert = lambda_decompose(e0, 1.0);
    CHECK(cert.reconstruction_residual <= 1e-10);
    CHECK((cert.e.element() - e0).norm() <= 1e-10);
    CHECK((cert.u.element() - e0).norm() <= 1e-10);
}

TEST_CASE("weights beyond the bound are rejected with the bound named") {
    const MatrixElement a = diag({0.5, 1.0});
    CHECK_THROWS_AS(lambda_decompose(a, 0.76), LambdaTooLarge);
    CHECK_THROWS_WITH_AS(lambda_decompose(a, 0.9),
                         doctest::Contains("(1 + m_q)/2"), LambdaTooLarge);
    CHECK_THROWS_AS(lambda_decompose(diag({1.0, 0.0}), 0.5), NotQuasiInvertible);
    CHECK_THROWS_AS(lambda_decompose(diag({2.0, 1.0}), 0.5), NormExceedsOne);
    CHECK_THROWS_AS(lambda_decompose(a, 0.3), PreconditionViolated);
}

TEST_CASE("lambda decomposition across shapes and weights") {
    OracleConfig cfg;
    cfg.seed = 37;
    for (auto [rows, cols] : {std::pair<int, int>{3, 2}, {2, 5}, {4, 4}}) {
        const TripleSpace space = TripleSpace::rectangular(rows, cols);
        const MatrixElement a =
            random_element(space, cfg, 1.0, static_cast<std::uint64_t>(rows * 10 + cols));
        if (!has_full_support(a)) continue;
        const double bound = (1.0 + m_q(a)) / 2.0;
        for (double lambda : {0.5, 0.5 + (bound - 0.5) / 2.0, bound}) {
            const DecompositionCertificate cert = lambda_decompose(a, lambda);
            CHECK(cert.reconstruction_residual <= 1e-10);
            CHECK(cert.e.is_complete());
            CHECK(cert.u.is_complete());
            CHECK(cert.tripotency_residuals.first <= 1e-10);
            CHECK(cert.tripotency_residuals.second <= 1e-10);
        }
    }
}

TEST_CASE("mean of two extremals across ranks") {
    const TripleSpace m2 = TripleSpace::rectangular(2, 2);
    const DecompositionCertificate zero_cert =
        mean_of_two_extremals(MatrixElement::zero(m2));
    CHECK(zero_cert.lambda == 0.5);
    CHECK(zero_cert.reconstruction_residual <= 1e-12);
    CHECK(zero_cert.e.is_complete());
    CHECK(zero_cert.u.is_complete());
    CHECK((zero_cert.e.element() + zero_cert.u.element()).norm() <= 1e-12);

    const DecompositionCertificate cert = mean_of_two_extremals(diag({1.0, 0.0}));
    CHECK(cert.reconstruction_residual <= 1e-12);
    CHECK(std::abs(cert.e.element().entries()(0, 0) - Complex(1.0)) <= 1e-9);
    CHECK(std::abs(cert.e.element().entries()(1, 1) - I) <= 1e-9);
    CHECK(std::abs(cert.u.element().entries()(1, 1) + I) <= 1e-9);

    Matrix wide = Matrix::Zero(2, 3);
    wide(0, 0) = 0.6;
    const MatrixElement w(TripleSpace::rectangular(2, 3), std::move(wide));
    const DecompositionCertificate wide_cert = mean_of_two_extremals(w);
    CHECK(wide_cert.reconstruction_residual <= 1e-12);
    CHECK(wide_cert.e.is_complete());
    CHECK(wide_cert.u.is_complete());

    CHECK_THROWS_AS(mean_of_two_extremals(diag({2.0, 0.0})), NormExceedsOne);
}

TEST_CASE("perturbation toward the quasi-invertibles") {
    const MatrixElement a = diag({1.0, 0.0});
    const MatrixElement b = diag({1.0, 0.1});
    const PerturbationResult result = perturb_to_quasi_invertible(a, b, 0.2);
    CHECK(result.z.entries()(0, 0).real() == doctest::Approx(1.2));
    CHECK(result.z.entries()(1, 1).real() == doctest::Approx(0.2));
    CHECK(result.certificate.z_quasi_invertible);
    CHECK(result.certificate.m_q_z == doctest::Approx(0.2));
    CHECK(result.certificate.m_q_z >= result.certificate.m_q_lower_bound - 1e-12);
    CHECK(result.certificate.peirce_invertible);
    CHECK(result.certificate.all_hold);
}

TEST_CASE("perturbing an element by its own range tripotent shifts every sigma") {
    OracleConfig cfg;
    cfg.seed = 47;
    const MatrixElement b = random_element(TripleSpace::rectangular(3, 3), cfg, 1.0, 0);
    REQUIRE(has_full_support(b));
    const double beta = 0.25;
    const PerturbationResult result = perturb_to_quasi_invertible(b, b, beta);
    CHECK(result.certificate.m_q_z == doctest::Approx(m_q(b) + beta));
    CHECK(result.certificate.all_hold);
}

TEST_CASE("perturbation preconditions") {
    const MatrixElement a = diag({1.0, 0.0});
    CHECK_THROWS_AS(perturb_to_quasi_invertible(a, diag({1.0, 0.0}), 0.2),
                    PreconditionViolated);  // b rank-deficient
    CHECK_THROWS_AS(perturb_to_quasi_invertible(a, diag({1.0, 0.1}), 0.05),
                    PreconditionViolated);  // ||a - b|| >= beta
}

TEST_CASE("grid decompositions work pointwise") {
    const TripleSpace grid = TripleSpace::grid({0.0, 1.0, 2.0});
    Matrix vs = Matrix::Zero(3, 1);
    vs(1, 0) = 0.5 * I;
    vs(2, 0) = -1.0;
    const MatrixElement v(grid, vs);
    const DecompositionCertificate cert = lambda_decompose(v, 0.75);
    CHECK(cert.reconstruction_residual <= 1e-12);
    CHECK(cert.e.is_complete());
    CHECK(cert.u.is_complete());
    CHECK(cert.e.element().entries()(0, 0) == Complex(0.0));

    Matrix ws = vs;
    ws(1, 0) = 0.0;
    const DecompositionCertificate mean = mean_of_two_extremals(MatrixElement(grid, ws));
    CHECK(mean.reconstruction_residual <= 1e-12);
    CHECK(mean.e.is_complete());
}
