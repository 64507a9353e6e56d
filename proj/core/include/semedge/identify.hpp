#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semedge/graph.hpp"

namespace semedge {

enum class IdStatus {
    regression_identifiable,
    generically_identifiable,
    not_identified,  // "not identified by these methods"
    unknown,
};

std::string to_string(IdStatus s);

// One regression step: the coefficient beta_{from,to . adjust}.
struct RegStep {
    Vertex from;
    Vertex to;
    VertexSet adjust;
};

struct IdReport {
    std::string target;  // e.g. "lambda 3->4", "path-sum 2=>6", "omega 2<->4", "Sigma*"
    IdStatus status = IdStatus::not_identified;
    std::optional<VertexSet> adjustment;  // present iff regression-identifiable single step
    std::vector<RegStep> recipe;          // chained steps for cut-vertex factorizations
    std::string reason;                   // failure witness / explanation

    bool ok() const { return status == IdStatus::regression_identifiable; }
};

// lambda_ab as a single regression coefficient (a -> b must be an edge).
IdReport identify_lambda(const Admg& g, const Vertex& a, const Vertex& b);

// sigma(D_bc) as a single regression coefficient (c must be a proper descendant of b).
IdReport identify_path_sum(const Admg& g, const Vertex& b, const Vertex& c);

// sigma(D_bc) as a product of regressions chained through cut vertices.
IdReport identify_path_sum_cutvertex(const Admg& g, const Vertex& b, const Vertex& c);

// omega_ab as a conditional covariance (a <-> b must be an edge).
IdReport identify_omega(const Admg& g, const Vertex& a, const Vertex& b);

// Orientation convention for a bidirected edge: returns (a*, b) with a* a
// non-descendant of b; when neither descends from the other, a* is the
// topologically earlier endpoint.
std::pair<Vertex, Vertex> orient_bidirected(const Admg& g, const Vertex& a, const Vertex& b);

// Composite predicates gating the interventions.
IdReport check_remove_directed(const Admg& g, const Vertex& a, const Vertex& b);
IdReport check_add_directed(const Admg& g, const Vertex& a, const Vertex& b);
IdReport check_remove_bidirected(const Admg& g, const Vertex& a, const Vertex& b);

// Whole-model generic identifiability for simple graphs; otherwise unknown.
IdReport check_simple_generic(const Admg& g);

}  // namespace semedge
