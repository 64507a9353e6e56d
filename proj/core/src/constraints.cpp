#include "semedge/constraints.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace semedge {

namespace {

struct Candidate {
    Vertex tail, head;
    bool bidirected;
};

std::vector<Candidate> candidates(const Admg& g, RemovalTarget target) {
    std::vector<Candidate> out;
    for (const auto& [t, h] : g.directed()) out.push_back({t, h, false});
    if (target == RemovalTarget::all_edges)
        for (const auto& [u, v] : g.bidirected()) {
            auto [astar, b] = orient_bidirected(g, u, v);
            out.push_back({astar, b, true});
        }
    // Descending (head, tail): edges deepest in the order go first, which is the
    // natural peeling order (sinks are more often fixable before their ancestors).
    std::sort(out.begin(), out.end(), [](const Candidate& x, const Candidate& y) {
        return std::tie(x.head, x.tail, x.bidirected) > std::tie(y.head, y.tail, y.bidirected);
    });
    return out;
}

bool done(const Admg& g, RemovalTarget target) {
    if (!g.directed().empty()) return false;
    return target == RemovalTarget::directed_only || g.bidirected().empty();
}

std::string graph_key(const Admg& g) {
    std::ostringstream os;
    for (const auto& [a, b] : g.directed()) os << a << ">" << b << ";";
    os << "|";
    for (const auto& [a, b] : g.bidirected()) os << a << "~" << b << ";";
    return os.str();
}

bool dfs(const Admg& g, RemovalTarget target, std::vector<RemovalStep>& steps,
         std::vector<RemovalStep>& best, Admg& best_graph, std::set<std::string>& dead) {
    if (done(g, target)) return true;
    if (dead.count(graph_key(g))) return false;
    if (steps.size() > best.size()) {
        best = steps;
        best_graph = g;
    }
    for (const auto& c : candidates(g, target)) {
        IdReport rep = c.bidirected ? check_remove_bidirected(g, c.tail, c.head)
                                    : check_remove_directed(g, c.tail, c.head);
        if (!rep.ok()) continue;
        Admg next = c.bidirected ? g.without_bidirected(c.tail, c.head)
                                 : g.without_directed(c.tail, c.head);
        steps.push_back({c.tail, c.head, c.bidirected, rep});
        if (dfs(next, target, steps, best, best_graph, dead)) return true;
        steps.pop_back();
    }
    dead.insert(graph_key(g));
    return false;
}

}  // namespace

RemovalPlan plan_removals(const Admg& g, RemovalTarget target) {
    std::vector<RemovalStep> steps, best;
    Admg best_graph = g;
    std::set<std::string> dead;
    if (!dfs(g, target, steps, best, best_graph, dead)) {
        std::string msg = "no removal plan found; best prefix:";
        for (const auto& st : best)
            msg += " " + (st.bidirected ? bi_name(st.tail, st.head) : dir_name(st.tail, st.head));
        fail(errc::no_plan_found, msg);
    }
    RemovalPlan plan;
    plan.steps = std::move(steps);
    Admg terminal = g;
    for (const auto& st : plan.steps)
        terminal = st.bidirected ? terminal.without_bidirected(st.tail, st.head)
                                 : terminal.without_directed(st.tail, st.head);
    plan.terminal = std::move(terminal);
    return plan;
}

CovMatrix replay_plan(const CovMatrix& s, const Admg& g, const RemovalPlan& plan, double* scale) {
    Admg cur = g;
    CovMatrix cov = s;
    double sc = cov.values().cwiseAbs().maxCoeff();
    for (const auto& st : plan.steps) {
        if (st.bidirected) {
            if (!cur.has_bidirected(st.tail, st.head))
                fail(errc::plan_invalid, "plan step edge missing: " + bi_name(st.tail, st.head));
            InterventionResult r = remove_bidirected(cov, cur, st.tail, st.head);
            cur = r.new_graph;
            cov = r.new_cov;
        } else {
            if (!cur.has_directed(st.tail, st.head))
                fail(errc::plan_invalid, "plan step edge missing: " + dir_name(st.tail, st.head));
            InterventionResult r = remove_directed(cov, cur, st.tail, st.head,
                                                   SigmaDMethod::regression);
            cur = r.new_graph;
            cov = r.new_cov;
        }
        sc = std::max(sc, cov.values().cwiseAbs().maxCoeff());
    }
    if (scale) *scale = sc;
    return cov;
}

ConstraintSet derive_constraints(const Admg& g, const RemovalPlan& plan) {
    ConstraintSet cs;
    cs.plan = plan;
    const auto& vs = g.vertices();
    const int n = static_cast<int>(vs.size());

    std::vector<std::pair<Vertex, Vertex>> trek_free_pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!has_trek(plan.terminal, vs[i], vs[j])) trek_free_pairs.emplace_back(vs[i], vs[j]);

    // A vanishing entry is a real constraint only when the replayed rational
    // function is not identically zero: probe with generic SPD inputs.
    std::mt19937_64 rng(20240611);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<CovMatrix> probes;
    for (int k = 0; k < 5; ++k) {
        Eigen::MatrixXd A(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) A(i, j) = normal(rng);
        Eigen::MatrixXd S = A * A.transpose() + double(n) * Eigen::MatrixXd::Identity(n, n);
        probes.emplace_back(vs, S);
    }
    for (const auto& pr : trek_free_pairs) {
        bool generic_zero = true;
        for (const auto& probe : probes) {
            double sc = 0;
            CovMatrix term = replay_plan(probe, g, plan, &sc);
            if (std::abs(term(pr.first, pr.second)) > 1e-9 * std::max(1.0, sc)) {
                generic_zero = false;
                break;
            }
        }
        if (!generic_zero) cs.pairs.push_back(pr);
    }
    return cs;
}

std::vector<Residual> residual_of_plan(const CovMatrix& s, const Admg& g,
                                       const ConstraintSet& cs) {
    double sc = 0;
    CovMatrix term = replay_plan(s, g, cs.plan, &sc);
    std::vector<Residual> out;
    for (const auto& pr : cs.pairs) out.push_back({pr, term(pr.first, pr.second), sc});
    return out;
}

double eval_verma(const CovMatrix& s) {
    if (s.size() != 4) fail(errc::wrong_dimension, "constraint needs a 4x4 covariance");
    const auto& L = s.labels();
    auto v = [&](int i, int j) { return s(L[i - 1], L[j - 1]); };
    return v(1, 1) * v(1, 3) * v(2, 2) * v(3, 4) - v(1, 2) * v(1, 2) * v(1, 3) * v(3, 4) -
           v(1, 1) * v(1, 4) * v(2, 2) * v(3, 3) + v(1, 2) * v(1, 2) * v(1, 4) * v(3, 3) -
           v(1, 1) * v(1, 3) * v(2, 3) * v(2, 4) + v(1, 1) * v(1, 4) * v(2, 3) * v(2, 3) +
           v(1, 2) * v(1, 3) * v(1, 3) * v(2, 4) - v(1, 2) * v(1, 3) * v(1, 4) * v(2, 3);
}

}  // namespace semedge
