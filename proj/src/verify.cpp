#include "jbt/verify.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace jbt {

namespace {

constexpr double kTiny = 1e-300;

// Accumulates per-trial observations into a SuiteResult.
class Recorder {
public:
    Recorder(std::string name, int trials) {
        result_.suite = std::move(name);
        result_.trials = trials;
    }

    void observe(double residual, double tol, std::uint64_t counter,
                 const char* what) {
        track(residual);
        if (!(residual <= tol)) fail(counter, what, residual);
    }

    void track(double residual) {
        result_.worst_residual = std::max(result_.worst_residual, residual);
    }

    void require(bool ok, std::uint64_t counter, const char* what) {
        if (!ok) fail(counter, what, std::nullopt);
    }

    SuiteResult take() { return std::move(result_); }

private:
    void fail(std::uint64_t counter, const char* what, std::optional<double> residual) {
        ++result_.failures;
        if (!result_.first_failing_counter) {
            result_.first_failing_counter = counter;
            std::ostringstream note;
            note << what << " (trial " << counter;
            if (residual) note << ", residual " << *residual;
            note << ")";
            result_.note = note.str();
        }
    }

    SuiteResult result_;
};

TripleSpace random_space(std::mt19937_64& rng, const VerifyConfig& cfg,
                         int cap_rows = 0, int cap_cols = 0) {
    const int max_r = cap_rows > 0 ? std::min(cfg.max_rows, cap_rows) : cfg.max_rows;
    const int max_c = cap_cols > 0 ? std::min(cfg.max_cols, cap_cols) : cfg.max_cols;
    std::uniform_int_distribution<int> rows(1, std::max(1, max_r));
    std::uniform_int_distribution<int> cols(1, std::max(1, max_c));
    return TripleSpace::rectangular(rows(rng), cols(rng));
}

OracleConfig oracle_config(const VerifyConfig& cfg, int samples) {
    OracleConfig ocfg;
    ocfg.seed = cfg.seed ^ 0x0fac1eULL;
    ocfg.trials = samples;
    ocfg.tol = std::min(cfg.tol, 1e-9);
    return ocfg;
}

MatrixElement draw(const VerifyConfig& cfg, const TripleSpace& space,
                   std::optional<double> cap, std::uint64_t counter) {
    OracleConfig ocfg;
    ocfg.seed = cfg.seed;
    return random_element(space, ocfg, cap, counter);
}

Tripotent draw_tripotent(const VerifyConfig& cfg, const TripleSpace& space,
                         bool complete, std::uint64_t counter) {
    OracleConfig ocfg;
    ocfg.seed = cfg.seed;
    return random_tripotent(space, ocfg, complete, counter);
}

// Zeroes the trailing `drops` singular values (at least one).
MatrixElement force_rank_deficient(const MatrixElement& a, int drops = 1) {
    Eigen::JacobiSVD<Matrix> svd(a.entries(), Eigen::ComputeThinU | Eigen::ComputeThinV);
    Eigen::VectorXd sigma = svd.singularValues();
    for (Index i = std::max<Index>(0, sigma.size() - drops); i < sigma.size(); ++i) {
        sigma(i) = 0.0;
    }
    return MatrixElement(a.space(),
                         svd.matrixU() * sigma.asDiagonal() * svd.matrixV().adjoint());
}

}  // namespace

SuiteResult suite_fundamental_identity(const VerifyConfig& cfg) {
    Recorder rec("fundamental-identity", cfg.trials);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        const TripleSpace space = random_space(rng, cfg);
        const MatrixElement x = draw(cfg, space, 2.0, 16ULL * t + 1);
        const MatrixElement y = draw(cfg, space, 2.0, 16ULL * t + 2);
        const MatrixElement z = draw(cfg, space, 2.0, 16ULL * t + 3);
        const MatrixElement lhs = apply_Q(x, apply_Q(y, apply_Q(x, z)));
        const MatrixElement rhs = apply_Q(apply_Q(x, y), z);
        const double scale = std::pow(x.norm(), 4) * std::pow(y.norm(), 2) * z.norm();
        rec.observe((lhs - rhs).norm() / std::max(scale, kTiny), cfg.tol, t,
                    "Q(x)Q(y)Q(x) = Q(Q(x)y)");
    }
    return rec.take();
}

SuiteResult suite_cube_identity(const VerifyConfig& cfg) {
    Recorder rec("cube-identity", cfg.trials);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        const TripleSpace space = random_space(rng, cfg);
        const MatrixElement x = draw(cfg, space, 2.0, 16ULL * t + 1);
        const double cube = std::pow(x.norm(), 3);
        const double residual = std::abs(triple_product(x, x, x).norm() - cube);
        rec.observe(residual / std::max(cube, kTiny), cfg.tol, t,
                    "||{x,x,x}|| = ||x||^3");
    }
    return rec.take();
}

SuiteResult suite_jordan_identity(const VerifyConfig& cfg) {
    Recorder rec("jordan-identity", cfg.trials);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        const TripleSpace space = random_space(rng, cfg);
        const MatrixElement x = draw(cfg, space, 2.0, 16ULL * t + 1);
        const MatrixElement y = draw(cfg, space, 2.0, 16ULL * t + 2);
        const MatrixElement a = draw(cfg, space, 2.0, 16ULL * t + 3);
        const MatrixElement b = draw(cfg, space, 2.0, 16ULL * t + 4);
        const MatrixElement c = draw(cfg, space, 2.0, 16ULL * t + 5);
        const MatrixElement lhs = apply_L(x, y, triple_product(a, b, c));
        const MatrixElement rhs = triple_product(apply_L(x, y, a), b, c) -
                                  triple_product(a, apply_L(y, x, b), c) +
                                  triple_product(a, b, apply_L(x, y, c));
        const double scale = x.norm() * y.norm() * a.norm() * b.norm() * c.norm();
        rec.observe((lhs - rhs).norm() / std::max(scale, kTiny), cfg.tol, t,
                    "L(x,y){a,b,c} = {L(x,y)a,b,c} - {a,L(y,x)b,c} + {a,b,L(x,y)c}");
    }
    return rec.take();
}

SuiteResult suite_peirce_projections(const VerifyConfig& cfg) {
    Recorder rec("peirce-projections", cfg.trials);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        const TripleSpace space = random_space(rng, cfg);
        const Tripotent e = draw_tripotent(cfg, space, t % 2 == 0, 16ULL * t + 1);
        const MatrixElement x = draw(cfg, space, 2.0, 16ULL * t + 2);
        const double nx = std::max(x.norm(), kTiny);

        MatrixElement parts[3] = {peirce_project(e, 0, x), peirce_project(e, 1, x),
                                  peirce_project(e, 2, x)};
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                const MatrixElement pj_pk = peirce_project(e, j, parts[k]);
                const double residual =
                    j == k ? (pj_pk - parts[k]).norm() / nx : pj_pk.norm() / nx;
                rec.observe(residual, cfg.tol, t,
                            "P_j P_k = delta_jk P_j");
            }
            rec.observe(std::max(0.0, parts[j].norm() / nx - 1.0), cfg.tol, t,
                        "||P_k(e)x|| <= ||x||");
        }
        rec.observe((parts[0] + parts[1] + parts[2] - x).norm() / nx, cfg.tol, t,
                    "P_0 + P_1 + P_2 = Id");
        rec.observe((bergmann_apply(e.element(), e.element(), x) - parts[0]).norm() / nx,
                    cfg.tol, t, "B(e,e) = P_0(e)");
    }
    return rec.take();
}

SuiteResult suite_peirce_multiplication_rules(const VerifyConfig& cfg) {
    Recorder rec("peirce-multiplication-rules", cfg.trials);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        const TripleSpace space = random_space(rng, cfg);
        const Tripotent e = draw_tripotent(cfg, space, t % 3 == 0, 16ULL * t + 1);
        const MatrixElement x = draw(cfg, space, 2.0, 16ULL * t + 2);
        const MatrixElement y = draw(cfg, space, 2.0, 16ULL * t + 3);
        const MatrixElement z = draw(cfg, space, 2.0, 16ULL * t + 4);
        const MatrixElement x2 = peirce_project(e, 2, x);
        const MatrixElement y0 = peirce_project(e, 0, y);
        const double scale = std::max(x.norm() * y.norm() * z.norm(), kTiny);
        rec.observe(triple_product(x2, y0, z).norm() / scale, cfg.tol, t,
                    "{P_2(e)E, P_0(e)E, E} = 0");
        rec.observe(triple_product(y0, x2, z).norm() / scale, cfg.tol, t,
                    "{P_0(e)E, P_2(e)E, E} = 0");
    }
    return rec.take();
}

SuiteResult suite_orthogonality_symmetry(const VerifyConfig& cfg) {
    Recorder rec("orthogonality-symmetry", cfg.trials);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        TripleSpace space = random_space(rng, cfg);
        const bool build_orthogonal = (t % 2 == 0) && space.degrees_of_freedom() >= 2;
        MatrixElement a = draw(cfg, space, 2.0, 16ULL * t + 1);
        MatrixElement b = draw(cfg, space, 2.0, 16ULL * t + 2);
        if (build_orthogonal) {
            // split the singular frames of a sample between a and b
            const MatrixElement sample = draw(cfg, space, 1.0, 16ULL * t + 3);
            Eigen::JacobiSVD<Matrix> svd(sample.entries(),
                                         Eigen::ComputeThinU | Eigen::ComputeThinV);
            std::uniform_int_distribution<Index> cut(1, space.degrees_of_freedom() - 1);
            const Index s = cut(rng);
            Eigen::VectorXd da = Eigen::VectorXd::Zero(space.degrees_of_freedom());
            Eigen::VectorXd db = Eigen::VectorXd::Zero(space.degrees_of_freedom());
            std::uniform_real_distribution<double> unif(0.1, 2.0);
            for (Index i = 0; i < s; ++i) da(i) = unif(rng);
            for (Index i = s; i < space.degrees_of_freedom(); ++i) db(i) = unif(rng);
            a = MatrixElement(space, svd.matrixU() * da.asDiagonal() *
                                         svd.matrixV().adjoint());
            b = MatrixElement(space, svd.matrixU() * db.asDiagonal() *
                                         svd.matrixV().adjoint());
        }
        const bool aab = are_orthogonal(a, b, cfg.tol);
        const bool bba = are_orthogonal(b, a, cfg.tol);
        rec.require(aab == bba, t, "{a,a,b} = 0 iff {b,b,a} = 0");
        if (space.is_rectangular()) {
            const Matrix& am = a.entries();
            const Matrix& bm = b.entries();
            const double scale = std::max(a.norm() * b.norm(), kTiny);
            const bool products_vanish =
                (am * bm.adjoint()).norm() / scale <= cfg.tol &&
                (bm.adjoint() * am).norm() / scale <= cfg.tol;
            rec.require(aab == products_vanish, t,
                        "{a,a,b} = 0 iff a b* = 0 and b* a = 0");
        }
        if (build_orthogonal) rec.require(aab, t, "constructed pair is orthogonal");
    }
    return rec.take();
}

SuiteResult suite_generalized_inverse(const VerifyConfig& cfg) {
    Recorder rec("generalized-inverse", cfg.trials);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        const TripleSpace space = random_space(rng, cfg);
        MatrixElement a = draw(cfg, space, 2.0, 16ULL * t + 1);
        if (t % 4 == 0 && space.degrees_of_freedom() >= 2) a = force_rank_deficient(a);
        const MatrixElement b = generalized_inverse(a);
        rec.observe((apply_Q(a, b) - a).norm() / std::max(a.norm(), kTiny), cfg.tol, t,
                    "Q(a) a^dag = a");
        rec.observe((apply_Q(b, a) - b).norm() / std::max(b.norm(), kTiny), cfg.tol, t,
                    "Q(a^dag) a = a^dag");
        const double commutator = max_basis_residual(
            space,
            [&](const MatrixElement& u) { return apply_Q(a, apply_Q(b, u)); },
            [&](const MatrixElement& u) { return apply_Q(b, apply_Q(a, u)); });
        rec.observe(commutator, cfg.tol, t, "[Q(a), Q(a^dag)] = 0");
    }
    return rec.take();
}

SuiteResult suite_inverse_operator_identities(const VerifyConfig& cfg) {
    Recorder rec("inverse-operator-identities", cfg.trials);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        const TripleSpace space = random_space(rng, cfg);
        MatrixElement a = draw(cfg, space, 2.0, 16ULL * t + 1);
        if (t % 4 == 0 && space.degrees_of_freedom() >= 2) a = force_rank_deficient(a);
        const MatrixElement b = generalized_inverse(a);
        const Tripotent r = range_tripotent(a);
        const double p2_gap = max_basis_residual(
            space,
            [&](const MatrixElement& u) { return apply_Q(a, apply_Q(b, u)); },
            [&](const MatrixElement& u) { return peirce_project(r, 2, u); });
        rec.observe(p2_gap, cfg.tol, t, "Q(a) Q(a^dag) = P_2(r(a))");
        const double l_gap = max_basis_residual(
            space,
            [&](const MatrixElement& u) { return apply_L(a, b, u); },
            [&](const MatrixElement& u) {
                return apply_L(r.element(), r.element(), u);
            });
        rec.observe(l_gap, cfg.tol, t, "L(a, a^dag) = L(r(a), r(a))");
    }
    return rec.take();
}

SuiteResult suite_mq_homogeneity(const VerifyConfig& cfg, double rel_tol) {
    Recorder rec("mq-homogeneity", cfg.trials);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        const TripleSpace space = random_space(rng, cfg);
        MatrixElement a = draw(cfg, space, 2.0, 16ULL * t + 1);
        if (t % 5 == 0 && space.degrees_of_freedom() >= 2) a = force_rank_deficient(a);
        std::uniform_real_distribution<double> modulus(0.1, 3.0);
        std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
        const Complex scale = std::polar(modulus(rng), angle(rng));
        const double lhs = m_q(scale * a);
        const double rhs = std::abs(scale) * m_q(a);
        rec.observe(std::abs(lhs - rhs) / std::max(rhs, kTiny), rel_tol, t,
                    "m_q(c a) = |c| m_q(a)");
    }
    return rec.take();
}

SuiteResult suite_mq_lipschitz(const VerifyConfig& cfg) {
    Recorder rec("mq-lipschitz", cfg.trials);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        const TripleSpace space = random_space(rng, cfg);
        const MatrixElement x = draw(cfg, space, 2.0, 16ULL * t + 1);
        MatrixElement y = draw(cfg, space, 2.0, 16ULL * t + 2);
        if (t % 2 == 0) {
            std::uniform_real_distribution<double> radius(0.0, 0.2);
            y = x + radius(rng) * draw(cfg, space, 1.0, 16ULL * t + 3);
        }
        const double gap = std::abs(m_q(x) - m_q(y));
        rec.observe(std::max(0.0, gap - (x - y).norm()), cfg.tol, t,
                    "|m_q(x) - m_q(y)| <= ||x - y||");
    }
    return rec.take();
}

SuiteResult suite_odd_calculus_spectrum(const VerifyConfig& cfg) {
    Recorder rec("odd-calculus-spectrum", cfg.trials);
    const std::vector<std::function<double(double)>> functions = {
        [](double s) { return std::cbrt(s); },
        [](double s) { return std::pow(s, 0.2); },
        [](double s) { return s * s * s; },
        [](double s) { return 2.0 * s; },
    };
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        const TripleSpace space = random_space(rng, cfg);
        MatrixElement a = draw(cfg, space, 2.0, 16ULL * t + 1);
        if (t % 4 == 0 && space.degrees_of_freedom() >= 2) a = force_rank_deficient(a);
        const auto& f = functions[static_cast<std::size_t>(t) % functions.size()];
        const std::vector<double> mapped_spectrum = triple_spectrum(odd_calculus(a, f));
        std::vector<double> expected;
        for (double s : triple_spectrum(a)) expected.push_back(f(s));
        if (mapped_spectrum.size() != expected.size()) {
            rec.require(false, t, "spectrum cardinality changed under odd calculus");
            continue;
        }
        double worst = 0.0;
        for (std::size_t i = 0; i < expected.size(); ++i) {
            worst = std::max(worst, std::abs(mapped_spectrum[i] - expected[i]));
        }
        rec.observe(worst / std::max(1.0, f(std::max(a.norm(), 0.0))), 1e-10, t,
                    "S(f_t(a)) = f(S(a))");
    }
    return rec.take();
}

SuiteResult suite_spectrum_embedding(const VerifyConfig& cfg) {
    Recorder rec("spectrum-embedding", cfg.trials);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        const TripleSpace space = random_space(rng, cfg);
        MatrixElement a = draw(cfg, space, 2.0, 16ULL * t + 1);
        if (t % 4 == 0 && space.degrees_of_freedom() >= 2) a = force_rank_deficient(a);
        const TripleSpace bigger =
            TripleSpace::rectangular(space.rows() + 1, space.cols() + 1);
        Matrix padded = Matrix::Zero(space.rows() + 1, space.cols() + 1);
        padded.topLeftCorner(space.rows(), space.cols()) = a.entries();
        const MatrixElement embedded(bigger, std::move(padded));
        const std::vector<double> sa = triple_spectrum(a);
        const std::vector<double> sb = triple_spectrum(embedded);
        if (sa.size() != sb.size()) {
            rec.require(false, t, "spectrum changed under zero-padding");
            continue;
        }
        double worst = 0.0;
        for (std::size_t i = 0; i < sa.size(); ++i) {
            worst = std::max(worst, std::abs(sa[i] - sb[i]));
        }
        rec.observe(worst / std::max(a.norm(), kTiny), 1e-10, t,
                    "S(a) is invariant under zero-padding");
    }
    return rec.take();
}

SuiteResult suite_rank_drop_distance(const VerifyConfig& cfg, double compare_tol,
                                     double witness_tol) {
    Recorder rec("rank-drop-distance", cfg.trials);
    const OracleConfig ocfg = oracle_config(cfg, 50);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        const TripleSpace space = random_space(rng, cfg);
        const MatrixElement a = draw(cfg, space, 2.0, 16ULL * t + 1);
        if (!has_full_support(a)) continue;  // complex gaussians: essentially never
        const double mq = m_q(a);
        const double oracle = oracle_dist_rank_deficient(a, ocfg);
        rec.observe(std::abs(mq - oracle), compare_tol, t,
                    "m_q = dist(a, non-quasi-invertibles)");
        const RankDropDistance result = dist_to_non_quasi_invertible(a);
        rec.require(!has_full_support(result.witness), t,
                    "witness a - m_q r(a) is rank-deficient");
        rec.observe(std::abs((a - result.witness).norm() - mq), witness_tol, t,
                    "witness sits at distance exactly m_q");
    }
    return rec.take();
}

SuiteResult suite_extremal_distance_quasi_invertible(const VerifyConfig& cfg,
                                                     double compare_tol) {
    Recorder rec("extremal-distance-quasi-invertible", cfg.trials);
    const OracleConfig ocfg = oracle_config(cfg, 120);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        const TripleSpace space = random_space(rng, cfg);
        const MatrixElement a = draw(cfg, space, 3.0, 16ULL * t + 1);
        if (!has_full_support(a)) continue;
        const DistanceResult dist = dist_to_extremals(a);
        rec.require(distance_is_exact(dist), t, "quasi-invertible distance is exact");
        const ExtremalDistanceEstimate est = oracle_dist_extremals(a, ocfg);
        rec.observe(std::abs(est.estimate - distance_lower_bound(dist)), compare_tol, t,
                    "dist(a, extremals) = max(1 - m_q, ||a|| - 1)");
        rec.require(est.lower_bound_pass, t, "search never beats the certified bound");
    }
    return rec.take();
}

SuiteResult suite_extremal_distance_rank_deficient(const VerifyConfig& cfg,
                                                   double compare_tol) {
    Recorder rec("extremal-distance-rank-deficient", cfg.trials);
    const OracleConfig ocfg = oracle_config(cfg, 120);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        const TripleSpace space = random_space(rng, cfg);
        const MatrixElement a = force_rank_deficient(draw(cfg, space, 1.0, 16ULL * t + 1));
        const DistanceResult dist = dist_to_extremals(a);
        rec.require(distance_is_exact(dist), t,
                    "rank-deficient unit-ball distance is exact");
        rec.observe(std::abs(distance_lower_bound(dist) - 1.0), 1e-12, t,
                    "distance value is 1");
        const ExtremalDistanceEstimate est = oracle_dist_extremals(a, ocfg);
        rec.observe(std::abs(est.estimate - 1.0), compare_tol, t,
                    "search confirms distance 1");
    }
    return rec.take();
}

SuiteResult suite_extremal_distance_bounds(const VerifyConfig& cfg) {
    Recorder rec("extremal-distance-bounds", cfg.trials);
    const OracleConfig ocfg = oracle_config(cfg, 120);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        const TripleSpace space = random_space(rng, cfg);
        const MatrixElement a = force_rank_deficient(draw(cfg, space, 3.0, 16ULL * t + 1));
        const DistanceResult dist = dist_to_extremals(a);
        const double lower = distance_lower_bound(dist);
        const double upper = distance_upper_bound(dist);
        const ExtremalDistanceEstimate est = oracle_dist_extremals(a, ocfg);
        rec.observe(std::max(0.0, lower - est.estimate), 1e-9, t,
                    "estimate >= max(1 + alpha_q, ||a|| - 1)");
        rec.observe(std::max(0.0, est.estimate - upper), 1e-9, t,
                    "estimate <= 1 + ||a||");
        // In the matrix factor the lower bound is attained by the polar
        // candidate, so the distance equals max(1 + alpha_q, ||a|| - 1).
        rec.observe(std::abs(est.estimate - lower), 1e-6, t,
                    "estimate attains the lower bound");
    }
    return rec.take();
}

SuiteResult suite_extreme_point_characterization(const VerifyConfig& cfg) {
    Recorder rec("extreme-point-characterization", cfg.trials);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        const TripleSpace space = random_space(rng, cfg);
        MatrixElement a = MatrixElement::zero(space);
        if (t % 2 == 0) {
            std::uniform_real_distribution<double> scale(0.1, 2.0);
            a = scale(rng) * draw_tripotent(cfg, space, true, 16ULL * t + 1).element();
        } else {
            a = draw(cfg, space, 2.0, 16ULL * t + 1);
            if (t % 4 == 1 && space.degrees_of_freedom() >= 2) {
                a = force_rank_deficient(a);
            }
        }
        if (a.is_zero()) continue;
        const double norm = a.norm();
        const bool lhs = m_q(a) > 0.0 && std::abs(norm - m_q(a)) <= 1e-8 * norm;
        const MatrixElement unit = (1.0 / norm) * a;
        const bool rhs =
            is_tripotent(unit, 1e-6) && classify_tripotent(unit, 1e-6).is_complete();
        rec.require(lhs == rhs, t,
                    "||a|| = m_q(a) > 0 iff a/||a|| is a complete tripotent");
    }
    return rec.take();
}

SuiteResult suite_near_extremal_quasi_invertibility(const VerifyConfig& cfg) {
    Recorder rec("near-extremal-quasi-invertibility", cfg.trials);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        const TripleSpace space = random_space(rng, cfg);
        const Tripotent e = draw_tripotent(cfg, space, true, 16ULL * t + 1);
        MatrixElement p = draw(cfg, space, 1.0, 16ULL * t + 2);
        std::uniform_real_distribution<double> radius(0.0, 0.95);
        const double rho = radius(rng);
        const double pn = p.norm();
        if (pn > 0.0) p = (rho / pn) * p;
        const MatrixElement a = e.element() + p;
        const QuasiInvertibilityReport report = is_bp_quasi_invertible(a);
        rec.require(report.is_bp_quasi_invertible, t,
                    "||a - e|| < 1 with e complete forces quasi-invertibility");
        if (report.is_bp_quasi_invertible) {
            rec.observe(report.witness_residual, cfg.tol, t,
                        "B(a, a^dag) vanishes on the basis");
            rec.require(report.range_tripotent_complete, t, "r(a) is complete");
        }
    }
    return rec.take();
}

SuiteResult suite_lambda_agreement(const VerifyConfig& cfg, double tol) {
    Recorder rec("lambda-agreement", cfg.trials);
    OracleConfig ocfg = oracle_config(cfg, 48);
    ocfg.search_grid = 100;
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        const TripleSpace space = random_space(rng, cfg, 3, 3);
        MatrixElement a = draw(cfg, space, 1.0, 16ULL * t + 1);
        if (t % 2 == 0 && space.degrees_of_freedom() >= 1) {
            a = force_rank_deficient(a);
        }
        const double lambda = lambda_value(a);
        const double searched = oracle_lambda_max(a, ocfg);
        rec.observe(std::abs(lambda - searched), tol, t,
                    "lambda(a) matches the direct search");
    }
    return rec.take();
}

SuiteResult suite_lambda_uniform_lower_bound(const VerifyConfig& cfg) {
    Recorder rec("lambda-uniform-lower-bound", cfg.trials);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        const TripleSpace space = random_space(rng, cfg);
        MatrixElement a = draw(cfg, space, 1.0, 16ULL * t + 1);
        if (t % 2 == 0 && space.degrees_of_freedom() >= 2) a = force_rank_deficient(a);
        const double lambda = lambda_value(a);
        rec.require(lambda >= 0.5, t, "lambda(a) >= 1/2 on the unit ball");
        if (!has_full_support(a)) {
            rec.require(lambda == 0.5, t,
                        "lambda(a) = (1 - alpha_q)/2 = 1/2 off the quasi-invertibles");
        }
        const DecompositionCertificate cert = mean_of_two_extremals(a);
        rec.require(cert.lambda == 0.5, t, "the mean decomposition attains 1/2");
    }
    return rec.take();
}

SuiteResult suite_lambda_decomposition(const VerifyConfig& cfg, double residual_tol) {
    Recorder rec("lambda-decomposition", cfg.trials);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        const TripleSpace space = random_space(rng, cfg);
        const MatrixElement a = draw(cfg, space, 1.0, 16ULL * t + 1);
        if (!has_full_support(a)) continue;
        const double bound = (1.0 + m_q(a)) / 2.0;
        for (int i = 0; i < 5; ++i) {
            const double lambda = 0.5 + (bound - 0.5) * i / 4.0;
            const DecompositionCertificate cert = lambda_decompose(a, lambda);
            rec.observe(cert.reconstruction_residual, residual_tol, t,
                        "a = lambda e + (1 - lambda) u reconstructs");
            rec.require(cert.e.is_complete() && cert.u.is_complete(), t,
                        "both factors are complete tripotents");
        }
        bool rejected = false;
        try {
            lambda_decompose(a, bound + 0.01);
        } catch (const LambdaTooLarge&) {
            rejected = true;
        }
        rec.require(rejected, t, "weights beyond (1 + m_q)/2 are rejected");
    }
    return rec.take();
}

SuiteResult suite_mean_of_two_extremals(const VerifyConfig& cfg, double residual_tol) {
    Recorder rec("mean-of-two-extremals", cfg.trials);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        const TripleSpace space = random_space(rng, cfg);
        MatrixElement a = draw(cfg, space, 1.0, 16ULL * t + 1);
        if (t % 2 == 0 && space.degrees_of_freedom() >= 1) a = force_rank_deficient(a);
        if (t % 10 == 0) a = MatrixElement::zero(space);
        const DecompositionCertificate cert = mean_of_two_extremals(a);
        rec.observe(cert.reconstruction_residual, residual_tol, t,
                    "a = (e_1 + e_2)/2 reconstructs");
        rec.require(cert.e.is_complete() && cert.u.is_complete(), t,
                    "both factors are complete tripotents");
        rec.require(cert.lambda == 0.5, t, "the weight is exactly 1/2");
    }
    return rec.take();
}

SuiteResult suite_convex_combination_characterization(const VerifyConfig& cfg) {
    Recorder rec("convex-combination-characterization", cfg.trials);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        const TripleSpace space = random_space(rng, cfg);
        if (t % 2 == 0) {
            // forward: every quasi-invertible unit-ball element splits with
            // strictly sub-half weight on one extremal
            const MatrixElement a = draw(cfg, space, 1.0, 16ULL * t + 1);
            if (!has_full_support(a)) continue;
            const double bound = (1.0 + m_q(a)) / 2.0;
            const double lambda = 0.5 * (0.5 + bound) + 0.25 * (bound - 0.5);
            const DecompositionCertificate cert = lambda_decompose(a, lambda);
            rec.require(1.0 - cert.lambda < 0.5, t,
                        "quasi-invertible a = alpha v1 + (1 - alpha) v2, alpha < 1/2");
            rec.observe(cert.reconstruction_residual, 1e-10, t, "the split reconstructs");
        } else {
            // backward: alpha < 1/2 on extremals forces quasi-invertibility
            const Tripotent v1 = draw_tripotent(cfg, space, true, 16ULL * t + 1);
            const Tripotent v2 = draw_tripotent(cfg, space, true, 16ULL * t + 2);
            std::uniform_real_distribution<double> weight(0.0, 0.49);
            const double alpha = weight(rng);
            const MatrixElement a =
                alpha * v1.element() + (1.0 - alpha) * v2.element();
            rec.require(is_bp_quasi_invertible(a).is_bp_quasi_invertible, t,
                        "alpha v1 + (1 - alpha) v2 with alpha < 1/2 is quasi-invertible");
        }
    }
    return rec.take();
}

SuiteResult suite_perturbation_certificates(const VerifyConfig& cfg) {
    Recorder rec("perturbation-certificates", cfg.trials);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        const TripleSpace space = random_space(rng, cfg);
        const MatrixElement b = draw(cfg, space, 1.5, 16ULL * t + 1);
        if (!has_full_support(b)) continue;
        std::uniform_real_distribution<double> beta_draw(0.05, 0.6);
        std::uniform_real_distribution<double> frac(0.0, 0.95);
        const double beta = beta_draw(rng);
        MatrixElement p = draw(cfg, space, 1.0, 16ULL * t + 2);
        const double pn = p.norm();
        if (pn > 0.0) p = (beta * frac(rng) / pn) * p;
        const MatrixElement a = b + p;
        const PerturbationResult result = perturb_to_quasi_invertible(a, b, beta);
        rec.require(result.certificate.z_quasi_invertible, t,
                    "a + beta r(b) is quasi-invertible");
        rec.observe(std::max(0.0, result.certificate.m_q_lower_bound -
                                      result.certificate.m_q_z),
                    cfg.tol, t, "m_q(a + beta r(b)) >= beta - ||b - a||");
        rec.require(result.certificate.peirce_invertible, t,
                    "P_2(r(b))(a) + beta r(b) is invertible in the Peirce-2 algebra");
        rec.require(result.certificate.all_hold, t, "certificate holds");
    }
    return rec.take();
}

SuiteResult suite_square_cstar_agreement(const VerifyConfig& cfg) {
    Recorder rec("square-cstar-agreement", cfg.trials);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        std::uniform_int_distribution<int> dim(1, std::min(cfg.max_rows, cfg.max_cols));
        const int n = dim(rng);
        const TripleSpace space = TripleSpace::rectangular(n, n);
        MatrixElement a = draw(cfg, space, 1.0, 16ULL * t + 1);
        if (t % 3 == 0 && n >= 2) a = force_rank_deficient(a);
        // direct route: plain singular values, no triple machinery
        Eigen::JacobiSVD<Matrix> svd(a.entries());
        const Eigen::VectorXd& sigma = svd.singularValues();
        const double smax = sigma(0);
        const double smin = sigma(sigma.size() - 1);
        const bool invertible = smax > 0.0 && smin > 1e-9 * smax;
        const double expected_lambda = invertible ? (1.0 + smin) / 2.0 : 0.5;
        rec.observe(std::abs(lambda_value(a) - expected_lambda), 1e-10, t,
                    "lambda agrees with the square-matrix formula");
        if (invertible) {
            const double expected_dist = std::max(1.0 - smin, smax - 1.0);
            const DistanceResult dist = dist_to_extremals(a);
            rec.require(distance_is_exact(dist), t, "distance is exact on invertibles");
            rec.observe(std::abs(distance_lower_bound(dist) - expected_dist), 1e-10, t,
                        "distance agrees with the square-matrix formula");
        }
    }
    return rec.take();
}

SuiteResult suite_commutative_crosscheck(const VerifyConfig& cfg) {
    Recorder rec("commutative-crosscheck", cfg.trials);
    const OracleConfig ocfg = oracle_config(cfg, 80);
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = rng_for(cfg.seed, 16ULL * t);
        std::uniform_int_distribution<int> len(1, 6);
        std::normal_distribution<double> normal(0.0, 1.0);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const int k = len(rng);
        Eigen::VectorXcd entries(k);
        for (int i = 0; i < k; ++i) entries(i) = Complex(normal(rng), normal(rng));
        // four interleaved classes: {rank-deficient, full-support} x
        // {norm in (0,2], norm in (1,2]}
        const double target = (t % 4 >= 2) ? 1.0 + unif(rng) : 2.0 * (1.0 - unif(rng));
        const double current = entries.cwiseAbs().maxCoeff();
        if (current > 0.0) entries *= target / current;
        if (t % 2 == 0) entries(static_cast<Index>(t / 2) % k) = 0.0;
        const CrosscheckReport report = commutative_crosscheck(entries, ocfg);
        rec.track(report.worst_discrepancy);
        rec.require(report.passed, t,
                    report.mismatches.empty() ? "cross-model agreement"
                                              : report.mismatches.front().c_str());
    }
    return rec.take();
}

std::vector<SuiteResult> run_all_suites(const VerifyConfig& cfg) {
    std::vector<SuiteResult> results;
    results.push_back(suite_fundamental_identity(cfg));
    results.push_back(suite_cube_identity(cfg));
    results.push_back(suite_jordan_identity(cfg));
    results.push_back(suite_peirce_projections(cfg));
    results.push_back(suite_peirce_multiplication_rules(cfg));
    results.push_back(suite_orthogonality_symmetry(cfg));
    results.push_back(suite_generalized_inverse(cfg));
    results.push_back(suite_inverse_operator_identities(cfg));
    results.push_back(suite_mq_homogeneity(cfg));
    results.push_back(suite_mq_lipschitz(cfg));
    results.push_back(suite_odd_calculus_spectrum(cfg));
    results.push_back(suite_spectrum_embedding(cfg));
    results.push_back(suite_rank_drop_distance(cfg));
    results.push_back(suite_extremal_distance_quasi_invertible(cfg));
    results.push_back(suite_extremal_distance_rank_deficient(cfg));
    results.push_back(suite_extremal_distance_bounds(cfg));
    results.push_back(suite_extreme_point_characterization(cfg));
    results.push_back(suite_near_extremal_quasi_invertibility(cfg));
    results.push_back(suite_lambda_agreement(cfg));
    results.push_back(suite_lambda_uniform_lower_bound(cfg));
    results.push_back(suite_lambda_decomposition(cfg));
    results.push_back(suite_mean_of_two_extremals(cfg));
    results.push_back(suite_convex_combination_characterization(cfg));
    results.push_back(suite_perturbation_certificates(cfg));
    results.push_back(suite_square_cstar_agreement(cfg));
    results.push_back(suite_commutative_crosscheck(cfg));
    return results;
}

}  // namespace jbt
