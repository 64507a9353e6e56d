#include "semedge/random.hpp"

#include <algorithm>
#include <numeric>

namespace semedge {

Admg random_admg(int n_vertices, int n_directed, int n_bidirected, std::mt19937_64& rng) {
    if (n_vertices < 1) fail(errc::bad_argument, "need at least one vertex");
    std::vector<Vertex> vs;
    for (int i = 1; i <= n_vertices; ++i) vs.push_back(std::to_string(i));
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n_vertices; ++i)
        for (int j = i + 1; j < n_vertices; ++j) pairs.emplace_back(i, j);
    auto pick = [&](int k) {
        std::vector<int> ix(pairs.size());
        std::iota(ix.begin(), ix.end(), 0);
        std::shuffle(ix.begin(), ix.end(), rng);
        ix.resize(std::min<size_t>(k, ix.size()));
        return ix;
    };
    std::set<DirEdge> d;
    for (int i : pick(n_directed)) d.insert({vs[pairs[i].first], vs[pairs[i].second]});
    std::set<BiEdge> b;
    for (int i : pick(n_bidirected)) b.insert(make_bi(vs[pairs[i].first], vs[pairs[i].second]));
    return Admg(vs, d, b);
}

SemParameters random_params(const Admg& g, std::mt19937_64& rng, int max_retries) {
    std::uniform_real_distribution<double> lam(-0.4, 0.4), diag(1.0, 2.0), off(-0.4, 0.4);
    SemParameters p;
    p.graph = g;
    for (const auto& e : g.directed()) p.lambda[e] = lam(rng);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        p.omega_diag.clear();
        p.omega_off.clear();
        for (const auto& v : g.vertices()) p.omega_diag[v] = diag(rng);
        for (const auto& e : g.bidirected()) p.omega_off[e] = off(rng);
        Eigen::MatrixXd O = p.omega_matrix();
        Eigen::LDLT<Eigen::MatrixXd> ldlt(O);
        if (ldlt.info() == Eigen::Success &&
            ldlt.vectorD().minCoeff() > 1e-6 * O.diagonal().maxCoeff())
            return p;
    }
    fail(errc::generation_failed, "could not draw a positive definite Omega");
}

}  // namespace semedge
