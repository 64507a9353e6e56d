#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "semedge/constraints.hpp"
#include "semedge/intervene.hpp"

namespace semedge {

using json = nlohmann::json;

// Graph document: {"vertices": [...], "directed": [[tail, head], ...],
// "bidirected": [[u, v], ...]} (bidirected order-insensitive).
json to_json(const Admg& g);
Admg admg_from_json(const json& j);

// Parameters: {"lambda": {"a->b": x, ...}, "omega": {"v": x, "u<->v": x, ...}}.
json to_json(const SemParameters& p);
SemParameters params_from_json(const json& j, const Admg& g);

// Covariance: {"labels": [...], "values": [[row], ...]} (full square matrix).
json to_json(const CovMatrix& s);
CovMatrix cov_from_json(const json& j);

json to_json(const IdReport& r);
json to_json(const InterventionResult& r);
json to_json(const RemovalPlan& p);
json to_json(const ConstraintSet& cs);

// Comma-delimited text with a header row of vertex labels.
std::string to_csv(const Dataset& d);
Dataset dataset_from_csv(const std::string& text);

// Edge designations: "a->b" or "a<->b".
struct EdgeSpec {
    Vertex a, b;
    bool bidirected;
};
EdgeSpec parse_edge(const std::string& text);

// Column-wise centering and scaling to unit variance; `inverse` undoes it.
struct Standardization {
    Eigen::RowVectorXd mean;
    Eigen::RowVectorXd sd;
};
Standardization standardize(Dataset& d);
void unstandardize(Dataset& d, const Standardization& st);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace semedge
