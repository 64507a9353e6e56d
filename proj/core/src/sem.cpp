#include "semedge/sem.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace semedge {

CovMatrix::CovMatrix(std::vector<Vertex> labels, const Eigen::MatrixXd& values)
    : labels_(std::move(labels)) {
    const int n = static_cast<int>(labels_.size());
    if (values.rows() != n || values.cols() != n)
        fail(errc::wrong_dimension, "covariance dimension does not match label count");
    for (int i = 0; i < n; ++i) {
        if (!index_.emplace(labels_[i], i).second)
            fail(errc::duplicate_edge, "duplicate label: " + labels_[i]);
    }
    // symmetry within 1e-12 relative, then rebuild exactly from the lower triangle
    double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (std::abs(values(i, j) - values(j, i)) > 1e-12 * scale)
                fail(errc::wrong_dimension, "matrix is not symmetric at (" + labels_[i] + "," +
                                                labels_[j] + ")");
    values_ = values;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) values_(j, i) = values_(i, j);
}

int CovMatrix::index(const Vertex& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) fail(errc::unknown_vertex, "unknown label: " + v);
    return it->second;
}

double CovMatrix::operator()(const Vertex& v, const Vertex& w) const {
    return values_(index(v), index(w));
}

void CovMatrix::set(const Vertex& v, const Vertex& w, double x) {
    int i = index(v), j = index(w);
    values_(i, j) = x;
    values_(j, i) = x;
}

bool CovMatrix::is_positive_definite(double* margin) const {
    if (values_.rows() == 0) return true;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(values_);
    double maxdiag = values_.diagonal().maxCoeff();
    double minpivot = ldlt.vectorD().minCoeff();
    if (margin) *margin = minpivot;
    return ldlt.info() == Eigen::Success && minpivot > 1e-10 * maxdiag;
}

void CovMatrix::require_positive_definite() const {
    if (!is_positive_definite()) fail(errc::not_positive_definite, "matrix is not positive definite");
}

CovMatrix CovMatrix::reordered(const std::vector<Vertex>& labels) const {
    if (labels.size() != labels_.size()) fail(errc::label_mismatch, "label count differs");
    const int n = size();
    Eigen::MatrixXd out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = values_(index(labels[i]), index(labels[j]));
    return CovMatrix(labels, out);
}

void SemParameters::validate() const {
    for (const auto& e : graph.directed())
        if (!lambda.count(e)) fail(errc::bad_argument, "missing lambda for " + dir_name(e.first, e.second));
    for (const auto& [e, v] : lambda)
        if (!graph.has_directed(e.first, e.second))
            fail(errc::no_such_edge, "lambda key is not an edge: " + dir_name(e.first, e.second));
    for (const auto& v : graph.vertices()) {
        auto it = omega_diag.find(v);
        if (it == omega_diag.end()) fail(errc::bad_argument, "missing omega for vertex " + v);
        if (it->second <= 0) fail(errc::bad_argument, "omega_" + v + v + " must be positive");
    }
    for (const auto& [v, x] : omega_diag) graph.require_vertex(v);
    for (const auto& e : graph.bidirected())
        if (!omega_off.count(e)) fail(errc::bad_argument, "missing omega for " + bi_name(e.first, e.second));
    for (const auto& [e, v] : omega_off)
        if (!graph.has_bidirected(e.first, e.second))
            fail(errc::no_such_edge, "omega key is not an edge: " + bi_name(e.first, e.second));
    Eigen::LDLT<Eigen::MatrixXd> ldlt(omega_matrix());
    Eigen::MatrixXd om = omega_matrix();
    if (ldlt.info() != Eigen::Success || ldlt.vectorD().minCoeff() <= 1e-10 * om.diagonal().maxCoeff())
        fail(errc::not_positive_definite, "Omega is not positive definite");
}

Eigen::MatrixXd SemParameters::lambda_matrix() const {
    const auto& vs = graph.vertices();
    const int n = static_cast<int>(vs.size());
    std::map<Vertex, int> ix;
    for (int i = 0; i < n; ++i) ix[vs[i]] = i;
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [e, v] : lambda) L(ix.at(e.first), ix.at(e.second)) = v;
    return L;
}

Eigen::MatrixXd SemParameters::omega_matrix() const {
    const auto& vs = graph.vertices();
    const int n = static_cast<int>(vs.size());
    std::map<Vertex, int> ix;
    for (int i = 0; i < n; ++i) ix[vs[i]] = i;
    Eigen::MatrixXd O = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [v, x] : omega_diag) O(ix.at(v), ix.at(v)) = x;
    for (const auto& [e, x] : omega_off) {
        O(ix.at(e.first), ix.at(e.second)) = x;
        O(ix.at(e.second), ix.at(e.first)) = x;
    }
    return O;
}

CovMatrix covariance_from_params(const SemParameters& p) {
    p.validate();
    const int n = static_cast<int>(p.graph.vertices().size());
    Eigen::MatrixXd L = p.lambda_matrix();
    Eigen::MatrixXd O = p.omega_matrix();
    Eigen::MatrixXd M = (Eigen::MatrixXd::Identity(n, n) - L).inverse();
    Eigen::MatrixXd S = M.transpose() * O * M;
    return CovMatrix(p.graph.vertices(), 0.5 * (S + S.transpose()));
}

double Trek::monomial(const SemParameters& p) const {
    double m = source_left == source_right ? p.omega_diag.at(source_left)
                                           : p.omega_off.at(make_bi(source_left, source_right));
    for (size_t i = 0; i + 1 < left.size(); ++i) m *= p.lambda.at({left[i], left[i + 1]});
    for (size_t i = 0; i + 1 < right.size(); ++i) m *= p.lambda.at({right[i], right[i + 1]});
    return m;
}

namespace {

// All directed paths s -> ... -> t, lexicographic by vertex sequence.
void directed_paths(const Admg& g, const Vertex& s, const Vertex& t,
                    std::vector<Vertex>& cur, std::vector<std::vector<Vertex>>& out) {
    if (cur.back() == t) {
        out.push_back(cur);
        return;
    }
    for (const auto& c : g.children(cur.back())) {
        cur.push_back(c);
        directed_paths(g, s, t, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<Vertex>> directed_paths(const Admg& g, const Vertex& s, const Vertex& t) {
    std::vector<std::vector<Vertex>> out;
    if (!g.descendants(s).count(t)) return out;
    std::vector<Vertex> cur{s};
    directed_paths(g, s, t, cur, out);
    return out;
}

}  // namespace

std::vector<Trek> enumerate_treks(const Admg& g, const Vertex& v, const Vertex& w,
                                  std::int64_t cap) {
    g.require_vertex(v);
    g.require_vertex(w);
    std::vector<Trek> out;
    std::int64_t count = 0;
    auto add_pairs = [&](const Vertex& s, const Vertex& t) {
        auto ls = directed_paths(g, s, v);
        if (ls.empty()) return;
        auto rs = directed_paths(g, t, w);
        if (rs.empty()) return;
        count += static_cast<std::int64_t>(ls.size()) * static_cast<std::int64_t>(rs.size());
        if (count > cap) fail(errc::trek_explosion, "trek count exceeds cap");
        for (const auto& l : ls)
            for (const auto& r : rs) out.push_back(Trek{s, t, l, r});
    };
    // ordered source pairs (s, t) with a structurally nonzero omega entry
    for (const auto& s : g.vertices()) add_pairs(s, s);
    for (const auto& [a, b] : g.bidirected()) {
        add_pairs(a, b);
        add_pairs(b, a);
    }
    std::sort(out.begin(), out.end(), [](const Trek& x, const Trek& y) {
        return std::tie(x.left, x.right, x.source_left, x.source_right) <
               std::tie(y.left, y.right, y.source_left, y.source_right);
    });
    return out;
}

CovMatrix covariance_via_treks(const SemParameters& p, std::int64_t cap) {
    p.validate();
    const auto& vs = p.graph.vertices();
    const int n = static_cast<int>(vs.size());
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double total = 0;
            for (const auto& t : enumerate_treks(p.graph, vs[i], vs[j], cap)) total += t.monomial(p);
            S(i, j) = total;
            S(j, i) = total;
        }
    return CovMatrix(vs, S);
}

bool has_trek(const Admg& g, const Vertex& v, const Vertex& w) {
    VertexSet anv = g.ancestors(v), anw = g.ancestors(w);
    for (const auto& s : anv)
        if (anw.count(s)) return true;
    for (const auto& [a, b] : g.bidirected()) {
        if ((anv.count(a) && anw.count(b)) || (anv.count(b) && anw.count(a))) return true;
    }
    return false;
}

double path_sum(const SemParameters& p, const Vertex& b, const Vertex& c) {
    p.graph.require_vertex(b);
    p.graph.require_vertex(c);
    const int n = static_cast<int>(p.graph.vertices().size());
    Eigen::MatrixXd M = (Eigen::MatrixXd::Identity(n, n) - p.lambda_matrix()).inverse();
    std::map<Vertex, int> ix;
    for (int i = 0; i < n; ++i) ix[p.graph.vertices()[i]] = i;
    return M(ix.at(b), ix.at(c));
}

double conditional_cov(const CovMatrix& s, const Vertex& v, const Vertex& w,
                       const VertexSet& cond) {
    if (cond.count(v) || cond.count(w))
        fail(errc::bad_argument, "conditioning set contains an endpoint");
    if (cond.empty()) return s(v, w);
    const int k = static_cast<int>(cond.size());
    Eigen::MatrixXd Scc(k, k);
    Eigen::VectorXd sv(k), sw(k);
    int i = 0;
    for (const auto& a : cond) {
        int j = 0;
        for (const auto& b : cond) Scc(i, j++) = s(a, b);
        sv(i) = s(v, a);
        sw(i) = s(a, w);
        ++i;
    }
    Eigen::LDLT<Eigen::MatrixXd> ldlt(Scc);
    if (ldlt.info() != Eigen::Success ||
        ldlt.vectorD().minCoeff() <= 1e-12 * std::max(1.0, Scc.diagonal().maxCoeff()))
        fail(errc::singular_block, "conditioning block is singular");
    return s(v, w) - sv.dot(ldlt.solve(sw));
}

double regression_coef(const CovMatrix& s, const Vertex& v, const Vertex& w,
                       const VertexSet& cond) {
    double den = conditional_cov(s, v, v, cond);
    if (den <= 0) fail(errc::singular_block, "vanishing conditional variance of " + v);
    return conditional_cov(s, v, w, cond) / den;
}

Dataset simulate(const CovMatrix& s, std::int64_t n, std::uint64_t seed) {
    if (n < 1) fail(errc::bad_argument, "sample count must be >= 1");
    s.require_positive_definite();
    Eigen::LLT<Eigen::MatrixXd> llt(s.values());
    if (llt.info() != Eigen::Success) fail(errc::not_positive_definite, "Cholesky failed");
    Eigen::MatrixXd L = llt.matrixL();
    const int p = s.size();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXd Z(n, p);
    for (std::int64_t i = 0; i < n; ++i)
        for (int j = 0; j < p; ++j) Z(i, j) = normal(rng);
    Dataset d;
    d.labels = s.labels();
    d.rows = Z * L.transpose();
    return d;
}

CovMatrix sample_cov(const Dataset& d, bool centered) {
    const auto n = d.rows.rows();
    if (n < 2) fail(errc::too_few_rows, "need at least 2 rows");
    Eigen::MatrixXd X = d.rows;
    Eigen::MatrixXd S;
    if (centered) {
        Eigen::RowVectorXd mean = X.colwise().mean();
        X.rowwise() -= mean;
        S = X.transpose() * X / double(n - 1);
    } else {
        S = X.transpose() * X / double(n);
    }
    return CovMatrix(d.labels, 0.5 * (S + S.transpose()));
}

}  // namespace semedge
