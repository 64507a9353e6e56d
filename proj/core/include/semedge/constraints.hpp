#pragma once

#include <string>
#include <vector>

#include "semedge/intervene.hpp"

namespace semedge {

enum class RemovalTarget { directed_only, all_edges };

struct RemovalStep {
    Vertex tail;
    Vertex head;  // for bidirected steps, (tail, head) is the canonical pair
    bool bidirected = false;
    IdReport report;
};

struct RemovalPlan {
    std::vector<RemovalStep> steps;
    Admg terminal;
};

struct ConstraintSet {
    RemovalPlan plan;
    std::vector<std::pair<Vertex, Vertex>> pairs;  // non-trivial vanishing entries
};

struct Residual {
    std::pair<Vertex, Vertex> pair;
    double value;
    double scale;  // largest |entry| touched during the replay
};

// Depth-first search with backtracking for an order in which every edge of the
// requested kind(s) can be removed; candidates sorted by (head, tail) label.
RemovalPlan plan_removals(const Admg& g, RemovalTarget target);

// Replay the plan's covariance updates on an arbitrary covariance over the
// graph's labels. Adjustment sets come from the intermediate graphs, so the
// replay is a fixed rational function of the input entries.
CovMatrix replay_plan(const CovMatrix& s, const Admg& g, const RemovalPlan& plan,
                      double* scale = nullptr);

ConstraintSet derive_constraints(const Admg& g, const RemovalPlan& plan);

std::vector<Residual> residual_of_plan(const CovMatrix& s, const Admg& g,
                                       const ConstraintSet& cs);

// The 8-term quartic constraint of the 4-vertex graph with directed edges
// 1->2, 2->3, 3->4, 1->3 and bidirected edge 2<->4 (labels "1".."4").
double eval_verma(const CovMatrix& s);

}  // namespace semedge
