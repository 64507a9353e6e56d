#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "semedge/graph.hpp"
#include "semedge/random.hpp"

using namespace semedge;
using fixtures::chain6;
using fixtures::double_verma;
using fixtures::gadget;
using fixtures::triangle;
using fixtures::verma;

TEST_CASE("construction validates input") {
    CHECK_THROWS_WITH_AS(Admg({"1"}, {{"1", "1"}}, {}), doctest::Contains("loop"), Error);
    CHECK_THROWS_AS(Admg({"1", "2"}, {{"1", "3"}}, {}), Error);
    CHECK_THROWS_AS(Admg({"1", "2"}, {}, {{"1", "3"}}), Error);
    // directed cycle
    try {
        Admg({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"3", "1"}}, {});
        FAIL("cycle accepted");
    } catch (const Error& e) {
        CHECK(e.code() == errc::cycle_detected);
    }
    // duplicate vertex label
    CHECK_THROWS_AS(Admg({"1", "1"}, {}, {}), Error);
    // bidirected edge stored canonically, duplicates collapse in a std::set but
    // both orders must compare equal through has_bidirected
    Admg g({"1", "2"}, {}, {make_bi("2", "1")});
    CHECK(g.has_bidirected("1", "2"));
    CHECK(g.has_bidirected("2", "1"));
}

TEST_CASE("parents, children, ancestors, descendants on the Verma graph") {
    Admg g = verma();
    CHECK(g.parents("3") == VertexSet{"1", "2"});
    CHECK(g.children("1") == VertexSet{"2", "3"});
    CHECK(g.ancestors("4") == VertexSet{"1", "2", "3", "4"});
    CHECK(g.descendants("2") == VertexSet{"2", "3", "4"});
    CHECK(g.ancestors("1") == VertexSet{"1"});
    CHECK(g.nondescendants("3") == VertexSet{"1", "2"});
    CHECK(g.nondescendants("1") == VertexSet{});
}

TEST_CASE("an and de are mutually consistent") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        Admg g = random_admg(6, 7, 4, rng);
        for (const auto& v : g.vertices())
            for (const auto& w : g.vertices()) {
                bool v_anc_w = g.ancestors(w).count(v) > 0;
                bool w_desc_v = g.descendants(v).count(w) > 0;
                CHECK(v_anc_w == w_desc_v);
            }
    }
}

TEST_CASE("districts partition the vertices and are symmetric") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 50; ++t) {
        Admg g = random_admg(7, 6, 6, rng);
        for (const auto& v : g.vertices()) {
            VertexSet dv = g.district(v);
            CHECK(dv.count(v) == 1);
            for (const auto& w : dv) CHECK(g.district(w) == dv);
        }
    }
}

TEST_CASE("district of 1 in the six-vertex chain graph") {
    // bidirected part: 1<->4, 1<->3, 2<->5, 2<->6
    Admg g = chain6();
    CHECK(g.district("1") == VertexSet{"1", "3", "4"});
    CHECK(g.district("2") == VertexSet{"2", "5", "6"});
}

TEST_CASE("markov blanket") {
    Admg g = verma();
    // dis(4) = {2, 4}; pa({2,4}) = {1, 3}
    CHECK(g.markov_blanket("4") == VertexSet{"1", "2", "3"});
    // restricted to an(3) = {1,2,3}: dis(3) = {3}, pa = {1,2}
    CHECK(g.markov_blanket("3", g.ancestors("3")) == VertexSet{"1", "2"});
}

TEST_CASE("fixability") {
    Admg g = verma();
    CHECK(g.is_fixable("3"));
    CHECK(g.is_fixable("4"));
    CHECK_FALSE(g.is_fixable("2"));  // 4 in de(2) n dis(2)
    CHECK(g.is_fixable("2", g.ancestors("3")));
}

TEST_CASE("fixability agrees with its set definition on random graphs") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        Admg g = random_admg(6, 6, 5, rng);
        for (const auto& v : g.vertices()) {
            VertexSet de = g.descendants(v), dis = g.district(v), both;
            std::set_intersection(de.begin(), de.end(), dis.begin(), dis.end(),
                                  std::inserter(both, both.begin()));
            CHECK(g.is_fixable(v) == (both == VertexSet{v}));
        }
    }
}

TEST_CASE("induced subgraph is idempotent and edge-correct") {
    Admg g = double_verma();
    VertexSet s{"1", "2", "3"};
    Admg h = g.induced_subgraph(s);
    CHECK(h.vertex_set() == s);
    CHECK(h.directed() == std::set<DirEdge>{{"1", "2"}, {"2", "3"}, {"1", "3"}});
    CHECK(h.bidirected().empty());
    Admg hh = h.induced_subgraph(s);
    CHECK(hh.directed() == h.directed());
    CHECK(hh.bidirected() == h.bidirected());
}

TEST_CASE("edge addition and removal") {
    Admg g = verma();
    Admg h = g.without_directed("1", "3");
    CHECK_FALSE(h.has_directed("1", "3"));
    CHECK(h.directed().size() == 3);
    CHECK_THROWS_AS(g.without_directed("4", "1"), Error);
    CHECK_THROWS_AS(g.without_bidirected("1", "2"), Error);
    Admg k = g.with_directed("1", "4");
    CHECK(k.has_directed("1", "4"));
    try {
        g.with_directed("4", "1");
        FAIL("cycle accepted");
    } catch (const Error& e) {
        CHECK(e.code() == errc::would_create_cycle);
    }
    try {
        g.with_directed("1", "2");
        FAIL("duplicate accepted");
    } catch (const Error& e) {
        CHECK(e.code() == errc::edge_exists);
    }
}

TEST_CASE("topological order respects edges, ties by label") {
    Admg g = verma();
    auto order = g.topological_order();
    CHECK(order == std::vector<Vertex>{"1", "2", "3", "4"});
    std::mt19937_64 rng(14);
    for (int t = 0; t < 30; ++t) {
        Admg r = random_admg(7, 9, 0, rng);
        auto o = r.topological_order();
        std::map<Vertex, int> pos;
        for (int i = 0; i < (int)o.size(); ++i) pos[o[i]] = i;
        for (const auto& [a, b] : r.directed()) CHECK(pos[a] < pos[b]);
    }
}

TEST_CASE("cut vertices of the six-vertex chain graph") {
    Admg g = chain6();
    CHECK(g.cut_vertices("2", "6") == std::vector<Vertex>{"3", "4"});
    CHECK(g.cut_vertices("1", "6") == std::vector<Vertex>{"2", "3", "4"});
    CHECK(g.cut_vertices("4", "6") == std::vector<Vertex>{});
}

TEST_CASE("cut vertices agree with a deletion oracle") {
    // v is a cut vertex for (a, b) iff deleting v from the directed part of
    // the induced subgraph on an(b) n de(a) leaves a and b undirectedly
    // disconnected.
    auto connected_without = [](const Admg& g, const Vertex& a, const Vertex& b,
                                const Vertex& drop) {
        VertexSet region;
        VertexSet anb = g.ancestors(b), dea = g.descendants(a);
        std::set_intersection(anb.begin(), anb.end(), dea.begin(), dea.end(),
                              std::inserter(region, region.begin()));
        region.erase(drop);
        if (!region.count(a) || !region.count(b)) return false;
        std::map<Vertex, VertexSet> adj;
        for (const auto& [x, y] : g.directed())
            if (region.count(x) && region.count(y)) {
                adj[x].insert(y);
                adj[y].insert(x);
            }
        VertexSet seen{a};
        std::vector<Vertex> stack{a};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (const auto& w : adj[v])
                if (seen.insert(w).second) stack.push_back(w);
        }
        return seen.count(b) > 0;
    };
    std::mt19937_64 rng(15);
    int checked = 0;
    for (int t = 0; t < 60; ++t) {
        Admg g = random_admg(6, 8, 0, rng);
        for (const auto& a : g.vertices())
            for (const auto& b : g.vertices()) {
                if (a == b || !g.descendants(a).count(b)) continue;
                auto cuts = g.cut_vertices(a, b);
                VertexSet cut_set(cuts.begin(), cuts.end());
                VertexSet region;
                VertexSet anb = g.ancestors(b), dea = g.descendants(a);
                std::set_intersection(anb.begin(), anb.end(), dea.begin(), dea.end(),
                                      std::inserter(region, region.begin()));
                for (const auto& v : region) {
                    if (v == a || v == b) continue;
                    CHECK(cut_set.count(v) == (connected_without(g, a, b, v) ? 0u : 1u));
                    ++checked;
                }
            }
    }
    CHECK(checked > 100);
}

TEST_CASE("is_simple") {
    CHECK(fixtures::iv().is_simple() == false);  // 2->3 and 2<->3
    CHECK(verma().is_simple());
    CHECK(fixtures::double_treatment().is_simple() == false);
    CHECK(triangle().is_simple());
    CHECK(gadget().is_simple());
}
