#pragma once

#include <random>

#include "semedge/random.hpp"
#include "semedge/sem.hpp"

namespace fixtures {

using namespace semedge;

// 1 -> 2 -> 3 -> 4 with 1 -> 3 and 2 <-> 4: the classic Verma-constraint graph.
inline Admg verma() {
    return Admg({"1", "2", "3", "4"},
                {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "3"}},
                {{"2", "4"}});
}

// instrumental variable model: 1 -> 2 -> 3 with 2 <-> 3
inline Admg iv() {
    return Admg({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}}, {{"2", "3"}});
}

// 4-vertex graph whose single constraint is a quartic not reachable by
// conditional-independence reasoning.
inline Admg gadget() {
    return Admg({"1", "2", "3", "4"},
                {{"1", "3"}, {"2", "4"}},
                {{"1", "2"}, {"1", "4"}, {"2", "3"}});
}

// 6-vertex chain with shortcuts and crossing confounding; the stock example
// for cut-vertex path-sum factorization.
inline Admg chain6() {
    return Admg({"1", "2", "3", "4", "5", "6"},
                {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}, {"4", "6"}},
                {{"1", "4"}, {"1", "3"}, {"2", "5"}, {"2", "6"}});
}

// Verma graph extended upstream by vertex 0 confounded with 2, 3, 4.
inline Admg double_verma() {
    return Admg({"0", "1", "2", "3", "4"},
                {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "3"}},
                {{"2", "4"}, {"0", "2"}, {"0", "3"}, {"0", "4"}});
}

// purely bidirected triangle
inline Admg triangle() {
    return Admg({"1", "2", "3"}, {}, {{"1", "2"}, {"2", "3"}, {"1", "3"}});
}

// double-treatment graph: both a directed and a bidirected edge on pair (2,4)
inline Admg double_treatment() {
    return Admg({"1", "2", "3", "4"},
                {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "3"}, {"2", "4"}, {"1", "4"}},
                {{"2", "4"}});
}

// MACS cohort model (published 5-variable example) and its published
// (3-decimal) covariance before and after removing 1 -> 4.
inline Admg macs_graph() {
    return Admg({"1", "2", "3", "4", "5"},
                {{"1", "2"}, {"2", "3"}, {"1", "4"}, {"2", "5"}, {"4", "2"}, {"5", "3"}},
                {{"1", "3"}, {"1", "2"}, {"2", "3"}});
}

inline CovMatrix macs_sigma() {
    Eigen::MatrixXd S(5, 5);
    S << 1.000, 0.835, 0.794, -0.025, -0.004,
         0.835, 1.000, 0.853, -0.039, -0.029,
         0.794, 0.853, 1.000, -0.058, -0.051,
        -0.025, -0.039, -0.058, 1.000, 0.891,
        -0.004, -0.029, -0.051, 0.891, 1.000;
    return CovMatrix({"1", "2", "3", "4", "5"}, S);
}

inline CovMatrix macs_sigma_star() {
    Eigen::MatrixXd S(5, 5);
    S << 1.000, 0.835, 0.793, -0.025, 0.018,
         0.835, 0.999, 0.852, -0.018, -0.010,
         0.793, 0.852, 0.999, -0.038, -0.033,
        -0.025, -0.018, -0.038, 0.999, 0.891,
         0.018, -0.010, -0.033, 0.891, 1.000;
    return CovMatrix({"1", "2", "3", "4", "5"}, S);
}

inline SemParameters draw(const Admg& g, std::mt19937_64& rng) { return random_params(g, rng); }

inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::max({1.0, std::abs(got), std::abs(want)});
}

inline double max_rel_err(const CovMatrix& got, const CovMatrix& want) {
    double m = 0;
    for (const auto& v : got.labels())
        for (const auto& w : got.labels()) m = std::max(m, rel_err(got(v, w), want(v, w)));
    return m;
}

}  // namespace fixtures
