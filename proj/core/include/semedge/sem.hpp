#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semedge/graph.hpp"

namespace semedge {

// Symmetric covariance matrix indexed by vertex labels. Stored as the full
// matrix but assembled from one triangle, so symmetry is exact.
class CovMatrix {
  public:
    CovMatrix() = default;
    CovMatrix(std::vector<Vertex> labels, const Eigen::MatrixXd& values);

    const std::vector<Vertex>& labels() const { return labels_; }
    const Eigen::MatrixXd& values() const { return values_; }
    int size() const { return static_cast<int>(labels_.size()); }
    int index(const Vertex& v) const;
    double operator()(const Vertex& v, const Vertex& w) const;
    void set(const Vertex& v, const Vertex& w, double x);  // writes both triangles

    // Factorization-based check: smallest LDLT pivot > 1e-10 * largest diagonal.
    bool is_positive_definite(double* margin = nullptr) const;
    void require_positive_definite() const;

    CovMatrix reordered(const std::vector<Vertex>& labels) const;

  private:
    std::vector<Vertex> labels_;
    std::map<Vertex, int> index_;
    Eigen::MatrixXd values_;
};

struct SemParameters {
    Admg graph;
    std::map<DirEdge, double> lambda;     // keys exactly the directed edges
    std::map<Vertex, double> omega_diag;  // keys exactly the vertices, values > 0
    std::map<BiEdge, double> omega_off;   // keys exactly the bidirected edges

    void validate() const;  // key coverage + Omega positive definite
    Eigen::MatrixXd lambda_matrix() const;
    Eigen::MatrixXd omega_matrix() const;
};

// A trek: directed path to the left endpoint, directed path to the right
// endpoint, both starting at a source (single vertex or bidirected pair).
struct Trek {
    Vertex source_left;          // left side starts here
    Vertex source_right;         // equals source_left unless the source is a bidirected edge
    std::vector<Vertex> left;    // source_left ... v (inclusive)
    std::vector<Vertex> right;   // source_right ... w (inclusive)
    double monomial(const SemParameters& p) const;
};

struct Dataset {
    std::vector<Vertex> labels;
    Eigen::MatrixXd rows;  // n x |V|
};

CovMatrix covariance_from_params(const SemParameters& p);

constexpr std::int64_t kDefaultTrekCap = 1000000;
std::vector<Trek> enumerate_treks(const Admg& g, const Vertex& v, const Vertex& w,
                                  std::int64_t cap = kDefaultTrekCap);
CovMatrix covariance_via_treks(const SemParameters& p, std::int64_t cap = kDefaultTrekCap);

// Structural: does any trek between v and w exist?
bool has_trek(const Admg& g, const Vertex& v, const Vertex& w);

// Sum over directed paths b -> ... -> c of the lambda products;
// equals entry (b, c) of (I - Lambda)^{-1}.
double path_sum(const SemParameters& p, const Vertex& b, const Vertex& c);

// sigma_vw.S via Schur complement; empty S returns sigma_vw.
double conditional_cov(const CovMatrix& s, const Vertex& v, const Vertex& w,
                       const VertexSet& cond);
double regression_coef(const CovMatrix& s, const Vertex& v, const Vertex& w,
                       const VertexSet& cond);

Dataset simulate(const CovMatrix& s, std::int64_t n, std::uint64_t seed);
CovMatrix sample_cov(const Dataset& d, bool centered = true);

}  // namespace semedge
