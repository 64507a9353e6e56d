#include "semedge/intervene.hpp"

namespace semedge {

namespace {

double eval_steps(const CovMatrix& s, const std::vector<RegStep>& steps) {
    double out = 1.0;
    for (const auto& st : steps) out *= regression_coef(s, st.from, st.to, st.adjust);
    return out;
}

void require_labels(const CovMatrix& s, const Admg& g) {
    if (s.labels().size() != g.vertices().size())
        fail(errc::label_mismatch, "covariance labels do not match the graph");
    for (const auto& v : g.vertices()) s.index(v);
}

}  // namespace

double sigma_d_from_cov(const CovMatrix& s, const Admg& g, const Vertex& b, const Vertex& c,
                        SigmaDMethod method, std::vector<RegStep>* steps) {
    if (c == b) return 1.0;
    if (!g.descendants(b).count(c)) return 0.0;
    IdReport r = method == SigmaDMethod::regression ? identify_path_sum(g, b, c)
                                                    : identify_path_sum_cutvertex(g, b, c);
    if (!r.ok()) fail(errc::not_identifiable, r.target + ": " + r.reason);
    if (steps) *steps = r.recipe;
    return eval_steps(s, r.recipe);
}

InterventionResult remove_directed(const CovMatrix& s, const Admg& g, const Vertex& a,
                                   const Vertex& b, SigmaDMethod method) {
    if (!g.has_directed(a, b)) fail(errc::no_such_edge, "no directed edge " + dir_name(a, b));
    require_labels(s, g);
    if (method == SigmaDMethod::regression) {
        IdReport chk = check_remove_directed(g, a, b);
        if (!chk.ok()) fail(errc::not_identifiable, chk.target + ": " + chk.reason);
    }
    IdReport lam_rep = identify_lambda(g, a, b);
    if (!lam_rep.ok()) fail(errc::not_identifiable, lam_rep.target + ": " + lam_rep.reason);

    InterventionResult res;
    res.new_graph = g.without_directed(a, b);
    double lam = eval_steps(s, lam_rep.recipe);
    res.used["lambda " + dir_name(a, b)] = lam;
    res.recipes["lambda " + dir_name(a, b)] = lam_rep.recipe;

    VertexSet A = g.nondescendants(b);
    VertexSet C = g.descendants(b);
    C.erase(b);
    std::map<Vertex, double> sd;
    for (const auto& c : C) {
        std::vector<RegStep> steps;
        sd[c] = sigma_d_from_cov(s, g, b, c, method, &steps);
        res.used["sigmaD " + b + "=>" + c] = sd[c];
        res.recipes["sigmaD " + b + "=>" + c] = steps;
    }

    CovMatrix out = s;  // Sigma*_AA = Sigma_AA, copied
    for (const auto& x : A)
        out.set(x, b, s(x, b) - s(x, a) * lam);
    out.set(b, b, s(b, b) - 2 * lam * s(a, b) + lam * lam * s(a, a));
    for (const auto& c : C) {
        out.set(b, c, s(b, c) - lam * s(a, c) - lam * s(a, b) * sd[c] +
                          lam * lam * s(a, a) * sd[c]);
        for (const auto& x : A)
            out.set(x, c, s(x, c) - s(x, a) * lam * sd[c]);
        for (const auto& c2 : C) {
            if (c2 < c) continue;
            out.set(c, c2, s(c, c2) - lam * s(a, c) * sd[c2] - lam * s(a, c2) * sd[c] +
                               lam * lam * s(a, a) * sd[c] * sd[c2]);
        }
    }
    res.pd_ok = out.is_positive_definite(&res.pd_margin);
    res.new_cov = std::move(out);
    return res;
}

InterventionResult add_directed(const CovMatrix& s, const Admg& g, const Vertex& a,
                                const Vertex& b, double lam, SigmaDMethod method) {
    require_labels(s, g);
    IdReport chk = check_add_directed(g, a, b);  // throws EdgeExists / WouldCreateCycle
    if (!chk.ok() && method == SigmaDMethod::regression)
        fail(errc::not_identifiable, chk.target + ": " + chk.reason);

    InterventionResult res;
    res.new_graph = g.with_directed(a, b);
    res.used["lambda " + dir_name(a, b)] = lam;

    VertexSet A = g.nondescendants(b);
    VertexSet C = g.descendants(b);
    C.erase(b);
    std::map<Vertex, double> sd;  // path sums do not use the new edge: compute in g
    for (const auto& c : C) {
        std::vector<RegStep> steps;
        sd[c] = sigma_d_from_cov(s, g, b, c, method, &steps);
        res.used["sigmaD " + b + "=>" + c] = sd[c];
        res.recipes["sigmaD " + b + "=>" + c] = steps;
    }

    CovMatrix out = s;
    for (const auto& x : A)
        out.set(x, b, s(x, b) + s(x, a) * lam);
    out.set(b, b, s(b, b) + 2 * lam * s(a, b) + lam * lam * s(a, a));
    for (const auto& c : C) {
        out.set(b, c, s(b, c) + lam * s(a, c) + lam * s(a, b) * sd[c] +
                          lam * lam * s(a, a) * sd[c]);
        for (const auto& x : A)
            out.set(x, c, s(x, c) + s(x, a) * lam * sd[c]);
        for (const auto& c2 : C) {
            if (c2 < c) continue;
            out.set(c, c2, s(c, c2) + lam * s(a, c) * sd[c2] + lam * s(a, c2) * sd[c] +
                               lam * lam * s(a, a) * sd[c] * sd[c2]);
        }
    }
    res.pd_ok = out.is_positive_definite(&res.pd_margin);
    res.new_cov = std::move(out);
    return res;
}

namespace {

InterventionResult apply_remove_bidirected(const CovMatrix& s, const Admg& g, const Vertex& astar,
                                           const Vertex& b, double w,
                                           const std::map<Vertex, double>& sda,
                                           const std::map<Vertex, double>& sdb) {
    InterventionResult res;
    res.new_graph = g.without_bidirected(astar, b);
    res.used["omega " + bi_name(astar, b)] = w;

    VertexSet A = g.nondescendants(b);
    VertexSet C = g.descendants(b);
    C.erase(b);
    auto da = [&](const Vertex& v) { return sda.count(v) ? sda.at(v) : 0.0; };
    auto db = [&](const Vertex& c) { return sdb.count(c) ? sdb.at(c) : 0.0; };

    CovMatrix out = s;  // Sigma*_AA = Sigma_AA by assumption
    for (const auto& x : A)
        out.set(x, b, s(x, b) - da(x) * w);
    out.set(b, b, s(b, b) - 2 * da(b) * w);
    for (const auto& c : C) {
        out.set(b, c, s(b, c) - w * da(c) - da(b) * w * db(c));
        for (const auto& x : A)
            out.set(x, c, s(x, c) - da(x) * w * db(c));
        for (const auto& c2 : C) {
            if (c2 < c) continue;
            out.set(c, c2, s(c, c2) - da(c) * w * db(c2) - da(c2) * w * db(c));
        }
    }
    res.pd_ok = out.is_positive_definite(&res.pd_margin);
    res.new_cov = std::move(out);
    return res;
}

}  // namespace

InterventionResult remove_bidirected(const CovMatrix& s, const Admg& g, const Vertex& a,
                                     const Vertex& b) {
    require_labels(s, g);
    IdReport chk = check_remove_bidirected(g, a, b);
    if (!chk.ok()) fail(errc::not_identifiable, chk.target + ": " + chk.reason);
    auto [astar, head] = orient_bidirected(g, a, b);

    IdReport om = identify_omega(g, a, b);
    double w = conditional_cov(s, astar, head, *om.adjustment);

    std::map<Vertex, double> sda, sdb;
    std::map<std::string, std::vector<RegStep>> recipes;
    for (const auto& v : g.descendants(astar)) {
        if (v == astar) continue;
        std::vector<RegStep> steps;
        sda[v] = sigma_d_from_cov(s, g, astar, v, SigmaDMethod::cutvertex, &steps);
        recipes["sigmaD " + astar + "=>" + v] = steps;
    }
    sda[astar] = 1.0;
    for (const auto& c : g.descendants(head)) {
        if (c == head) continue;
        std::vector<RegStep> steps;
        sdb[c] = sigma_d_from_cov(s, g, head, c, SigmaDMethod::cutvertex, &steps);
        recipes["sigmaD " + head + "=>" + c] = steps;
    }

    InterventionResult res = apply_remove_bidirected(s, g, astar, head, w, sda, sdb);
    res.recipes = std::move(recipes);
    res.recipes["omega " + bi_name(a, b)] = om.recipe;
    for (const auto& [v, x] : sda)
        if (v != astar) res.used["sigmaD " + astar + "=>" + v] = x;
    for (const auto& [c, x] : sdb) res.used["sigmaD " + head + "=>" + c] = x;
    return res;
}

InterventionResult remove_bidirected_forced(const CovMatrix& s, const Admg& g, const Vertex& a,
                                            const Vertex& b, double omega,
                                            const std::map<Vertex, double>& sigma_d_a,
                                            const std::map<Vertex, double>& sigma_d_b) {
    require_labels(s, g);
    auto [astar, head] = orient_bidirected(g, a, b);
    return apply_remove_bidirected(s, g, astar, head, omega, sigma_d_a, sigma_d_b);
}

namespace {

Eigen::MatrixXd transform_matrix(const CovMatrix& s, const Admg& g_for_paths, const Admg& g_full,
                                 const Vertex& a, const Vertex& b, double lam, double sign,
                                 SigmaDMethod method) {
    const int n = s.size();
    Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
    d(s.index(b)) = 1.0;
    for (const auto& c : g_for_paths.descendants(b)) {
        if (c == b) continue;
        d(s.index(c)) = sigma_d_from_cov(s, g_for_paths, b, c, method, nullptr);
    }
    Eigen::MatrixXd M = Eigen::MatrixXd::Identity(n, n);
    M.col(s.index(a)) += sign * lam * d;
    (void)g_full;
    return M;
}

}  // namespace

Eigen::MatrixXd transform_matrix_remove(const CovMatrix& s, const Admg& g, const Vertex& a,
                                        const Vertex& b, SigmaDMethod method) {
    if (!g.has_directed(a, b)) fail(errc::no_such_edge, "no directed edge " + dir_name(a, b));
    require_labels(s, g);
    if (method == SigmaDMethod::regression) {
        IdReport chk = check_remove_directed(g, a, b);
        if (!chk.ok()) fail(errc::not_identifiable, chk.target + ": " + chk.reason);
    }
    IdReport lam_rep = identify_lambda(g, a, b);
    if (!lam_rep.ok()) fail(errc::not_identifiable, lam_rep.target + ": " + lam_rep.reason);
    double lam = eval_steps(s, lam_rep.recipe);
    return transform_matrix(s, g, g, a, b, lam, -1.0, method);
}

Eigen::MatrixXd transform_matrix_add(const CovMatrix& s, const Admg& g, const Vertex& a,
                                     const Vertex& b, double lam, SigmaDMethod method) {
    require_labels(s, g);
    IdReport chk = check_add_directed(g, a, b);
    if (!chk.ok() && method == SigmaDMethod::regression)
        fail(errc::not_identifiable, chk.target + ": " + chk.reason);
    return transform_matrix(s, g, g.with_directed(a, b), a, b, lam, +1.0, method);
}

namespace {

Dataset apply_rowwise(const Dataset& d, const CovMatrix& s, const Eigen::MatrixXd& M) {
    if (d.labels != s.labels()) fail(errc::label_mismatch, "dataset labels do not match covariance");
    Dataset out;
    out.labels = d.labels;
    out.rows = d.rows * M.transpose();
    return out;
}

}  // namespace

Dataset transform_data_remove(const Dataset& d, const CovMatrix& s, const Admg& g,
                              const Vertex& a, const Vertex& b, SigmaDMethod method) {
    return apply_rowwise(d, s, transform_matrix_remove(s, g, a, b, method));
}

Dataset transform_data_add(const Dataset& d, const CovMatrix& s, const Admg& g, const Vertex& a,
                           const Vertex& b, double lam, SigmaDMethod method) {
    return apply_rowwise(d, s, transform_matrix_add(s, g, a, b, lam, method));
}

}  // namespace semedge
