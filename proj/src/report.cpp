#include "jbt/report.hpp"

#include <fstream>
#include <sstream>

namespace jbt {

Json element_to_json(const MatrixElement& a) {
    Json j;
    j["shape"] = {a.space().rows(), a.space().cols()};
    Json rows = Json::array();
    for (Index i = 0; i < a.space().rows(); ++i) {
        Json row = Json::array();
        for (Index k = 0; k < a.space().cols(); ++k) {
            const Complex v = a.entries()(i, k);
            row.push_back({v.real(), v.imag()});
        }
        rows.push_back(std::move(row));
    }
    j["data"] = std::move(rows);
    return j;
}

MatrixElement element_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("data")) {
        throw ShapeMismatch("expected an object with \"shape\" and \"data\"");
    }
    const auto& shape = j.at("shape");
    if (!shape.is_array() || shape.size() != 2) {
        throw ShapeMismatch("\"shape\" must be [rows, cols]");
    }
    const Index rows = shape.at(0).get<Index>();
    const Index cols = shape.at(1).get<Index>();
    if (rows < 1 || cols < 1) throw ShapeMismatch("dimensions must be positive");
    const auto& data = j.at("data");
    if (!data.is_array() || static_cast<Index>(data.size()) != rows) {
        throw ShapeMismatch("\"data\" must hold one array per row");
    }
    Matrix entries(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        const auto& row = data.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
            throw ShapeMismatch("row length does not match \"shape\"");
        }
        for (Index k = 0; k < cols; ++k) {
            const auto& cell = row.at(static_cast<std::size_t>(k));
            if (!cell.is_array() || cell.size() != 2) {
                throw ShapeMismatch("complex entries must be [re, im] pairs");
            }
            entries(i, k) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
        }
    }
    return MatrixElement(TripleSpace::rectangular(rows, cols), std::move(entries));
}

MatrixElement read_element(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::runtime_error(std::string("invalid JSON: ") + e.what());
    }
    return element_from_json(j);
}

namespace {

Json distance_to_json(const DistanceResult& dist) {
    Json j;
    if (const auto* exact = std::get_if<ExactDistance>(&dist)) {
        j["kind"] = "exact";
        j["value"] = exact->value;
        j["theorem_tag"] = exact->theorem_tag;
    } else {
        const auto& interval = std::get<DistanceInterval>(dist);
        j["kind"] = "interval";
        j["lower"] = interval.lower;
        j["upper"] = interval.upper;
        j["conjectured"] = interval.conjectured;
        j["theorem_tag"] = interval.theorem_tag;
    }
    return j;
}

}  // namespace

Json analyze_element(const MatrixElement& a, const AnalysisOptions& opts) {
    Json j;
    j["shape"] = {a.space().rows(), a.space().cols()};
    j["operator_norm"] = a.norm();
    j["triple_spectrum"] = triple_spectrum(a, opts.rank_tol);
    const SpectralData svd = compute_svd(a, opts.rank_tol);
    j["numerical_rank"] = svd.numerical_rank;

    const QuasiInvertibilityReport qi = is_bp_quasi_invertible(a, opts.rank_tol);
    j["bp_quasi_invertible"] = qi.is_bp_quasi_invertible;
    j["m_q"] = qi.m_q;
    const ExtendedReal conorm = quadratic_conorm(a, opts.rank_tol);
    if (conorm.is_infinite()) {
        j["gamma_q"] = "inf";
    } else {
        j["gamma_q"] = conorm.value();
    }
    j["alpha_q"] = qi.alpha_q;
    if (a.norm() <= 1.0 + opts.tol) {
        j["lambda_value"] = lambda_value(a, opts.tol, opts.rank_tol);
    }
    j["dist_to_extremals"] = distance_to_json(dist_to_extremals(a, opts.rank_tol));
    if (opts.emit_matrices) {
        if (a.is_zero()) {
            j["range_tripotent"] = nullptr;
            j["generalized_inverse"] = nullptr;
        } else {
            j["range_tripotent"] =
                element_to_json(range_tripotent(a, opts.rank_tol).element());
            j["generalized_inverse"] =
                element_to_json(generalized_inverse(a, opts.rank_tol));
        }
    }
    Json tols;
    tols["tol"] = opts.tol;
    tols["rank_tol"] = opts.rank_tol;
    if (opts.env_tol_override) tols["env_tol_override"] = *opts.env_tol_override;
    j["tolerances"] = std::move(tols);
    return j;
}

Json certificate_to_json(const DecompositionCertificate& cert) {
    Json j;
    j["lambda"] = cert.lambda;
    j["e"] = element_to_json(cert.e.element());
    j["u"] = element_to_json(cert.u.element());
    j["e_complete"] = cert.e.is_complete();
    j["u_complete"] = cert.u.is_complete();
    j["reconstruction_residual"] = cert.reconstruction_residual;
    j["tripotency_residuals"] = {cert.tripotency_residuals.first,
                                 cert.tripotency_residuals.second};
    j["tol"] = cert.tol;
    return j;
}

Json suites_to_json(const VerifyConfig& cfg, const std::vector<SuiteResult>& results,
                    const std::optional<double>& env_tol_override) {
    Json j;
    j["seed"] = cfg.seed;
    j["trials"] = cfg.trials;
    j["max_rows"] = cfg.max_rows;
    j["max_cols"] = cfg.max_cols;
    j["tol"] = cfg.tol;
    if (env_tol_override) j["env_tol_override"] = *env_tol_override;
    Json suites = Json::array();
    bool all = true;
    for (const SuiteResult& r : results) {
        Json s;
        s["suite"] = r.suite;
        s["trials"] = r.trials;
        s["failures"] = r.failures;
        s["worst_residual"] = r.worst_residual;
        if (r.first_failing_counter) {
            s["first_failing_counter"] = *r.first_failing_counter;
            s["note"] = r.note;
        }
        suites.push_back(std::move(s));
        all = all && r.passed();
    }
    j["suites"] = std::move(suites);
    j["all_passed"] = all;
    return j;
}

namespace {

void render_value(std::ostream& out, const Json& v, int indent);

void render_object(std::ostream& out, const Json& obj, int indent) {
    for (const auto& [key, value] : obj.items()) {
        out << std::string(static_cast<std::size_t>(indent), ' ') << key << ": ";
        if (value.is_object() || value.is_array()) {
            out << "\n";
            render_value(out, value, indent + 2);
        } else {
            out << value.dump() << "\n";
        }
    }
}

void render_value(std::ostream& out, const Json& v, int indent) {
    if (v.is_object()) {
        render_object(out, v, indent);
    } else if (v.is_array()) {
        bool flat = true;
        for (const auto& item : v) {
            if (item.is_object() || item.is_array()) flat = false;
        }
        if (flat) {
            out << std::string(static_cast<std::size_t>(indent), ' ') << v.dump() << "\n";
        } else {
            for (const auto& item : v) {
                render_value(out, item, indent);
                out << "\n";
            }
        }
    } else {
        out << std::string(static_cast<std::size_t>(indent), ' ') << v.dump() << "\n";
    }
}

}  // namespace

std::string render_text(const Json& j) {
    std::ostringstream out;
    render_value(out, j, 0);
    return out.str();
}

}  // namespace jbt
