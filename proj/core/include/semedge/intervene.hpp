#pragma once

#include <map>
#include <string>

#include "semedge/identify.hpp"
#include "semedge/sem.hpp"

namespace semedge {

enum class SigmaDMethod {
    regression,  // single-regression path sums only
    cutvertex,   // single regression first, cut-vertex factorization as fallback
};

struct InterventionResult {
    Admg new_graph;
    CovMatrix new_cov;
    std::map<std::string, double> used;                    // identified quantities by name
    std::map<std::string, std::vector<RegStep>> recipes;   // how each quantity was obtained
    bool pd_ok = true;
    double pd_margin = 0.0;
};

// sigma(D_bc) recovered from the observed covariance via the identifiability
// module; returns 1 for c == b and 0 for non-descendants.
double sigma_d_from_cov(const CovMatrix& s, const Admg& g, const Vertex& b, const Vertex& c,
                        SigmaDMethod method, std::vector<RegStep>* steps = nullptr);

InterventionResult remove_directed(const CovMatrix& s, const Admg& g, const Vertex& a,
                                   const Vertex& b, SigmaDMethod method = SigmaDMethod::cutvertex);

InterventionResult add_directed(const CovMatrix& s, const Admg& g, const Vertex& a,
                                const Vertex& b, double lam,
                                SigmaDMethod method = SigmaDMethod::cutvertex);

InterventionResult remove_bidirected(const CovMatrix& s, const Admg& g, const Vertex& a,
                                     const Vertex& b);

// Like remove_bidirected but with all identified quantities supplied by the
// caller; used to inspect the update formulas outside the identifiable domain.
InterventionResult remove_bidirected_forced(const CovMatrix& s, const Admg& g, const Vertex& a,
                                            const Vertex& b, double omega,
                                            const std::map<Vertex, double>& sigma_d_a,
                                            const std::map<Vertex, double>& sigma_d_b);

// The linear map M with M Sigma M^T = Sigma* for the data transforms
// (rows transform as x -> M x when x is a column in label order).
Eigen::MatrixXd transform_matrix_remove(const CovMatrix& s, const Admg& g, const Vertex& a,
                                        const Vertex& b,
                                        SigmaDMethod method = SigmaDMethod::cutvertex);
Eigen::MatrixXd transform_matrix_add(const CovMatrix& s, const Admg& g, const Vertex& a,
                                     const Vertex& b, double lam,
                                     SigmaDMethod method = SigmaDMethod::cutvertex);

Dataset transform_data_remove(const Dataset& d, const CovMatrix& s, const Admg& g,
                              const Vertex& a, const Vertex& b,
                              SigmaDMethod method = SigmaDMethod::cutvertex);
Dataset transform_data_add(const Dataset& d, const CovMatrix& s, const Admg& g, const Vertex& a,
                           const Vertex& b, double lam,
                           SigmaDMethod method = SigmaDMethod::cutvertex);

}  // namespace semedge
