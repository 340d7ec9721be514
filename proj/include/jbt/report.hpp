#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "jbt/decompose.hpp"
#include "jbt/verify.hpp"

namespace jbt {

using Json = nlohmann::ordered_json;

/// Matrix wire schema: {"shape":[m,n], "data":[[[re,im],...],...]} with
/// row-major data and complex values always as [re, im] pairs.
Json element_to_json(const MatrixElement& a);
MatrixElement element_from_json(const Json& j);

/// Reads and parses an element from a file; throws TripleError subclasses on
/// schema violations and std::runtime_error on I/O failures.
MatrixElement read_element(const std::string& path);

struct AnalysisOptions {
    double tol = kDefaultTol;
    double rank_tol = kDefaultRankTol;
    bool emit_matrices = false;
    std::optional<double> env_tol_override;  ///< echoed when JBLAB_TOL was used
};

/// Full analysis of one element: norms, spectrum, quasi-invertibility, the
/// distance to the extreme points, and the lambda-function value when the
/// element lies in the unit ball. Scalar fields carry the exact doubles the
/// modules produced.
Json analyze_element(const MatrixElement& a, const AnalysisOptions& opts);

Json certificate_to_json(const DecompositionCertificate& cert);

Json suites_to_json(const VerifyConfig& cfg, const std::vector<SuiteResult>& results,
                    const std::optional<double>& env_tol_override);

/// Plain-text rendering of any report produced above (--text mode).
std::string render_text(const Json& j);

}  // namespace jbt
