#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "semedge/identify.hpp"
#include "semedge/intervene.hpp"
#include "semedge/random.hpp"

using namespace semedge;
using fixtures::max_rel_err;
using fixtures::rel_err;

namespace {

// ground truth: re-solve the structural model with the edge parameter changed
CovMatrix truth_without_directed(const SemParameters& p, const Vertex& a, const Vertex& b) {
    SemParameters q = p;
    q.graph = p.graph.without_directed(a, b);
    q.lambda.erase({a, b});
    return covariance_from_params(q);
}

CovMatrix truth_with_directed(const SemParameters& p, const Vertex& a, const Vertex& b,
                              double lam) {
    SemParameters q = p;
    q.graph = p.graph.with_directed(a, b);
    q.lambda[{a, b}] = lam;
    return covariance_from_params(q);
}

CovMatrix truth_without_bidirected(const SemParameters& p, const Vertex& a, const Vertex& b) {
    SemParameters q = p;
    q.graph = p.graph.without_bidirected(a, b);
    q.omega_off.erase(make_bi(a, b));
    return covariance_from_params(q);
}

}  // namespace

TEST_CASE("directed-edge removal matches the re-solved model") {
    std::mt19937_64 rng(41);
    int hits = 0;
    for (int t = 0; t < 120 && hits < 60; ++t) {
        Admg g = random_admg(6, 6, 3, rng);
        SemParameters p = random_params(g, rng);
        CovMatrix s = covariance_from_params(p);
        for (const auto& [a, b] : g.directed()) {
            InterventionResult res;
            try {
                res = remove_directed(s, g, a, b, SigmaDMethod::cutvertex);
            } catch (const Error&) {
                continue;
            }
            CHECK(max_rel_err(res.new_cov, truth_without_directed(p, a, b)) < 1e-8);
            CHECK_FALSE(res.new_graph.has_directed(a, b));
            ++hits;
        }
    }
    CHECK(hits >= 60);
}

TEST_CASE("directed-edge addition matches the re-solved model") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> lam_d(-0.4, 0.4);
    int hits = 0;
    for (int t = 0; t < 150 && hits < 60; ++t) {
        Admg g = random_admg(6, 5, 3, rng);
        SemParameters p = random_params(g, rng);
        CovMatrix s = covariance_from_params(p);
        for (const auto& a : g.vertices())
            for (const auto& b : g.vertices()) {
                if (a == b || g.has_directed(a, b) || g.descendants(b).count(a)) continue;
                double lam = lam_d(rng);
                InterventionResult res;
                try {
                    res = add_directed(s, g, a, b, lam, SigmaDMethod::cutvertex);
                } catch (const Error&) {
                    continue;
                }
                CHECK(max_rel_err(res.new_cov, truth_with_directed(p, a, b, lam)) < 1e-8);
                ++hits;
            }
    }
    CHECK(hits >= 60);
}

TEST_CASE("removal then addition of the same edge restores the covariance") {
    std::mt19937_64 rng(43);
    int hits = 0;
    for (int t = 0; t < 120 && hits < 40; ++t) {
        Admg g = random_admg(5, 5, 3, rng);
        SemParameters p = random_params(g, rng);
        CovMatrix s = covariance_from_params(p);
        for (const auto& [a, b] : g.directed()) {
            InterventionResult rem;
            try {
                rem = remove_directed(s, g, a, b, SigmaDMethod::cutvertex);
            } catch (const Error&) {
                continue;
            }
            double lam = rem.used.at("lambda " + dir_name(a, b));
            InterventionResult back =
                add_directed(rem.new_cov, rem.new_graph, a, b, lam, SigmaDMethod::cutvertex);
            CHECK(max_rel_err(back.new_cov, s) < 1e-8);
            ++hits;
        }
    }
    CHECK(hits >= 40);
}

TEST_CASE("bidirected-edge removal matches the re-solved model") {
    std::mt19937_64 rng(44);
    int hits = 0;
    for (int t = 0; t < 250 && hits < 40; ++t) {
        Admg g = random_admg(6, 6, 4, rng);
        SemParameters p = random_params(g, rng);
        CovMatrix s = covariance_from_params(p);
        for (const auto& e : g.bidirected()) {
            InterventionResult res;
            try {
                res = remove_bidirected(s, g, e.first, e.second);
            } catch (const Error&) {
                continue;
            }
            CHECK(max_rel_err(res.new_cov, truth_without_bidirected(p, e.first, e.second)) <
                  1e-8);
            ++hits;
        }
    }
    CHECK(hits >= 40);
}

TEST_CASE("regression method refuses what the composite gate refuses") {
    Admg g = fixtures::verma();
    std::mt19937_64 rng(45);
    SemParameters p = random_params(g, rng);
    CovMatrix s = covariance_from_params(p);
    try {
        remove_directed(s, g, "1", "2", SigmaDMethod::regression);
        FAIL("gate bypassed");
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_identifiable);
        CHECK(std::string(e.what()).find("b not fixable") != std::string::npos);
    }
    // 3 -> 4 passes both methods and they agree
    InterventionResult r1 = remove_directed(s, g, "3", "4", SigmaDMethod::regression);
    InterventionResult r2 = remove_directed(s, g, "3", "4", SigmaDMethod::cutvertex);
    CHECK(max_rel_err(r1.new_cov, r2.new_cov) < 1e-12);
}

TEST_CASE("published cohort example: removing the treatment edge") {
    Admg g = fixtures::macs_graph();
    CovMatrix s = fixtures::macs_sigma();
    CovMatrix want = fixtures::macs_sigma_star();
    InterventionResult res = remove_directed(s, g, "1", "4", SigmaDMethod::cutvertex);
    double lam = res.used.at("lambda 1->4");
    CHECK(lam == doctest::Approx(-0.025).epsilon(0.02));
    // after removing 1 -> 4 the endpoints have no remaining trek, so the
    // replayed entry (1,4) is exactly zero; the published table kept the old
    // value -0.025 there, so that single entry is excluded from the comparison
    CHECK(res.new_cov("1", "4") == doctest::Approx(0.0));
    double worst = 0;
    for (const auto& v : s.labels())
        for (const auto& w : s.labels()) {
            if ((v == "1" && w == "4") || (v == "4" && w == "1")) continue;
            worst = std::max(worst, std::abs(res.new_cov(v, w) - want(v, w)));
        }
    CHECK(worst <= 0.0015);
    CHECK(res.pd_ok);
}

TEST_CASE("forced bidirected removal can leave the positive-definite cone") {
    Admg g = fixtures::triangle();
    Eigen::MatrixXd om(3, 3);
    om << 1.0, 0.75, 0.9, 0.75, 1.0, 0.75, 0.9, 0.75, 1.0;
    CovMatrix s({"1", "2", "3"}, om);
    REQUIRE(s.is_positive_definite());
    InterventionResult res = remove_bidirected(s, g, "1", "3");
    CHECK(res.new_cov("1", "3") == doctest::Approx(0.0));
    CHECK_FALSE(res.pd_ok);
    CHECK(res.pd_margin <= 0.0);
}

TEST_CASE("transform matrices reproduce the covariance updates") {
    std::mt19937_64 rng(46);
    int hits = 0;
    for (int t = 0; t < 100 && hits < 40; ++t) {
        Admg g = random_admg(5, 5, 3, rng);
        SemParameters p = random_params(g, rng);
        CovMatrix s = covariance_from_params(p);
        for (const auto& [a, b] : g.directed()) {
            Eigen::MatrixXd M;
            InterventionResult res;
            try {
                M = transform_matrix_remove(s, g, a, b);
                res = remove_directed(s, g, a, b);
            } catch (const Error&) {
                continue;
            }
            Eigen::MatrixXd pushed = M * s.values() * M.transpose();
            CHECK((pushed - res.new_cov.values()).cwiseAbs().maxCoeff() < 1e-8);
            // addition transform with the removed coefficient inverts M
            double lam = res.used.at("lambda " + dir_name(a, b));
            Eigen::MatrixXd Madd =
                transform_matrix_add(res.new_cov, res.new_graph, a, b, lam);
            CHECK((Madd * M - Eigen::MatrixXd::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-8);
            ++hits;
        }
    }
    CHECK(hits >= 40);
}

TEST_CASE("row-wise data transform matches the matrix transform") {
    Admg g = fixtures::verma();
    std::mt19937_64 rng(47);
    SemParameters p = random_params(g, rng);
    CovMatrix s = covariance_from_params(p);
    Dataset d = simulate(s, 5000, 99);
    Dataset td = transform_data_remove(d, s, g, "3", "4");
    Eigen::MatrixXd M = transform_matrix_remove(s, g, "3", "4");
    CHECK((td.rows - d.rows * M.transpose()).cwiseAbs().maxCoeff() == 0.0);
    // the transformed sample covariance tracks the updated model covariance
    InterventionResult res = remove_directed(s, g, "3", "4");
    CovMatrix est = sample_cov(td);
    CHECK(max_rel_err(est, res.new_cov) < 3.0 / std::sqrt(5000.0));
    Dataset wrong = d;
    wrong.labels = {"4", "3", "2", "1"};
    CHECK_THROWS_AS(transform_data_remove(wrong, s, g, "3", "4"), Error);
}

TEST_CASE("label/graph mismatches are rejected") {
    Admg g = fixtures::verma();
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(3, 3);
    CovMatrix small({"1", "2", "3"}, m);
    CHECK_THROWS_AS(remove_directed(small, g, "3", "4"), Error);
}
