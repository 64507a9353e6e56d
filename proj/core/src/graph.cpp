#include "semedge/graph.hpp"

#include <algorithm>
#include <map>

namespace semedge {

Admg::Admg(std::vector<Vertex> vertices, std::set<DirEdge> directed, std::set<BiEdge> bidirected)
    : vertices_(std::move(vertices)), directed_(std::move(directed)) {
    VertexSet seen;
    for (const auto& v : vertices_) {
        if (!seen.insert(v).second) fail(errc::duplicate_edge, "duplicate vertex: " + v);
    }
    for (const auto& [a, b] : directed_) {
        if (a == b) fail(errc::duplicate_edge, "loop not allowed: " + dir_name(a, b));
        if (!seen.count(a)) fail(errc::unknown_vertex, "unknown vertex: " + a);
        if (!seen.count(b)) fail(errc::unknown_vertex, "unknown vertex: " + b);
    }
    for (const auto& [a, b] : bidirected) {
        if (a == b) fail(errc::duplicate_edge, "loop not allowed: " + bi_name(a, b));
        if (!seen.count(a)) fail(errc::unknown_vertex, "unknown vertex: " + a);
        if (!seen.count(b)) fail(errc::unknown_vertex, "unknown vertex: " + b);
        if (!bidirected_.insert(make_bi(a, b)).second)
            fail(errc::duplicate_edge, "duplicate bidirected edge: " + bi_name(a, b));
    }
    topological_order();  // throws CycleDetected when the directed part has a cycle
}

bool Admg::has_vertex(const Vertex& v) const {
    return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

bool Admg::has_directed(const Vertex& a, const Vertex& b) const {
    return directed_.count({a, b}) > 0;
}

bool Admg::has_bidirected(const Vertex& a, const Vertex& b) const {
    return bidirected_.count(make_bi(a, b)) > 0;
}

void Admg::require_vertex(const Vertex& v) const {
    if (!has_vertex(v)) fail(errc::unknown_vertex, "unknown vertex: " + v);
}

VertexSet Admg::vertex_set() const { return VertexSet(vertices_.begin(), vertices_.end()); }

VertexSet Admg::parents(const Vertex& v) const {
    require_vertex(v);
    VertexSet out;
    for (const auto& [a, b] : directed_)
        if (b == v) out.insert(a);
    return out;
}

VertexSet Admg::children(const Vertex& v) const {
    require_vertex(v);
    VertexSet out;
    for (const auto& [a, b] : directed_)
        if (a == v) out.insert(b);
    return out;
}

VertexSet Admg::parents(const VertexSet& s) const {
    VertexSet out;
    for (const auto& v : s) {
        auto p = parents(v);
        out.insert(p.begin(), p.end());
    }
    return out;
}

VertexSet Admg::ancestors(const VertexSet& s) const {
    for (const auto& v : s) require_vertex(v);
    VertexSet out = s;
    std::vector<Vertex> stack(s.begin(), s.end());
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (const auto& p : parents(v))
            if (out.insert(p).second) stack.push_back(p);
    }
    return out;
}

VertexSet Admg::descendants(const VertexSet& s) const {
    for (const auto& v : s) require_vertex(v);
    VertexSet out = s;
    std::vector<Vertex> stack(s.begin(), s.end());
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (const auto& c : children(v))
            if (out.insert(c).second) stack.push_back(c);
    }
    return out;
}

VertexSet Admg::nondescendants(const Vertex& v) const {
    VertexSet de = descendants(v);
    VertexSet out;
    for (const auto& u : vertices_)
        if (!de.count(u)) out.insert(u);
    return out;
}

VertexSet Admg::district(const Vertex& v) const {
    require_vertex(v);
    VertexSet out{v};
    std::vector<Vertex> stack{v};
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (const auto& [a, b] : bidirected_) {
            if (a != u && b != u) continue;
            const Vertex& w = (a == u) ? b : a;
            if (out.insert(w).second) stack.push_back(w);
        }
    }
    return out;
}

VertexSet Admg::markov_blanket(const Vertex& v, const VertexSet& within) const {
    require_vertex(v);
    if (!within.count(v)) fail(errc::vertex_not_in_subset, "vertex " + v + " not in subset");
    Admg sub = induced_subgraph(within);
    VertexSet dis = sub.district(v);
    VertexSet out = sub.parents(dis);
    out.insert(dis.begin(), dis.end());
    out.erase(v);
    return out;
}

VertexSet Admg::markov_blanket(const Vertex& v) const { return markov_blanket(v, vertex_set()); }

bool Admg::is_fixable(const Vertex& v, const VertexSet& within) const {
    require_vertex(v);
    if (!within.count(v)) fail(errc::vertex_not_in_subset, "vertex " + v + " not in subset");
    Admg sub = induced_subgraph(within);
    VertexSet de = sub.descendants(v);
    VertexSet dis = sub.district(v);
    VertexSet both;
    std::set_intersection(de.begin(), de.end(), dis.begin(), dis.end(),
                          std::inserter(both, both.begin()));
    return both == VertexSet{v};
}

bool Admg::is_fixable(const Vertex& v) const { return is_fixable(v, vertex_set()); }

Admg Admg::induced_subgraph(const VertexSet& s) const {
    std::vector<Vertex> vs;
    for (const auto& v : vertices_) {
        if (!s.count(v)) continue;
        vs.push_back(v);
    }
    if (vs.size() != s.size())
        for (const auto& v : s) require_vertex(v);
    std::set<DirEdge> d;
    for (const auto& e : directed_)
        if (s.count(e.first) && s.count(e.second)) d.insert(e);
    std::set<BiEdge> b;
    for (const auto& e : bidirected_)
        if (s.count(e.first) && s.count(e.second)) b.insert(e);
    return Admg(std::move(vs), std::move(d), std::move(b));
}

Admg Admg::without_directed(const Vertex& a, const Vertex& b) const {
    if (!has_directed(a, b)) fail(errc::no_such_edge, "no directed edge " + dir_name(a, b));
    auto d = directed_;
    d.erase({a, b});
    return Admg(vertices_, std::move(d), bidirected_);
}

Admg Admg::without_bidirected(const Vertex& a, const Vertex& b) const {
    if (!has_bidirected(a, b)) fail(errc::no_such_edge, "no bidirected edge " + bi_name(a, b));
    auto bs = bidirected_;
    bs.erase(make_bi(a, b));
    return Admg(vertices_, directed_, std::move(bs));
}

Admg Admg::with_directed(const Vertex& a, const Vertex& b) const {
    require_vertex(a);
    require_vertex(b);
    if (has_directed(a, b)) fail(errc::edge_exists, "edge exists: " + dir_name(a, b));
    if (descendants(b).count(a))
        fail(errc::would_create_cycle, "adding " + dir_name(a, b) + " would create a cycle");
    auto d = directed_;
    d.insert({a, b});
    return Admg(vertices_, std::move(d), bidirected_);
}

std::vector<Vertex> Admg::topological_order() const {
    std::map<Vertex, int> indeg;
    for (const auto& v : vertices_) indeg[v] = 0;
    for (const auto& [a, b] : directed_) indeg[b]++;
    std::set<Vertex> ready;  // ordered: smallest label first
    for (const auto& [v, d] : indeg)
        if (d == 0) ready.insert(v);
    std::vector<Vertex> order;
    while (!ready.empty()) {
        Vertex v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (const auto& [a, b] : directed_) {
            if (a != v) continue;
            if (--indeg[b] == 0) ready.insert(b);
        }
    }
    if (order.size() != vertices_.size()) {
        // report one cycle: walk parents among the unresolved vertices until a repeat
        VertexSet left;
        for (const auto& [v, d] : indeg)
            if (d > 0) left.insert(v);
        Vertex v = *left.begin();
        std::vector<Vertex> walk{v};
        VertexSet seen{v};
        for (;;) {
            Vertex next;
            for (const auto& p : parents(walk.back()))
                if (left.count(p)) { next = p; break; }
            if (seen.count(next)) {
                std::string cyc = next;
                for (auto it = walk.rbegin(); it != walk.rend(); ++it) {
                    cyc += " -> " + *it;
                    if (*it == next) break;
                }
                fail(errc::cycle_detected, "directed cycle: " + cyc);
            }
            seen.insert(next);
            walk.push_back(next);
        }
    }
    return order;
}

std::vector<Vertex> Admg::cut_vertices(const Vertex& a, const Vertex& b) const {
    require_vertex(a);
    require_vertex(b);
    if (!descendants(a).count(b))
        fail(errc::not_a_descendant, b + " is not a descendant of " + a);
    VertexSet span;
    {
        VertexSet anb = ancestors(b), dea = descendants(a);
        std::set_intersection(anb.begin(), anb.end(), dea.begin(), dea.end(),
                              std::inserter(span, span.begin()));
    }
    Admg sub(std::vector<Vertex>(span.begin(), span.end()),
             [&] {
                 std::set<DirEdge> d;
                 for (const auto& e : directed_)
                     if (span.count(e.first) && span.count(e.second)) d.insert(e);
                 return d;
             }(),
             {});
    std::vector<Vertex> out;
    for (const auto& v : sub.topological_order()) {
        if (v == a || v == b) continue;
        // undirected connectivity of the directed-only subgraph minus v
        VertexSet rest = span;
        rest.erase(v);
        if (rest.size() < 2) continue;
        VertexSet seen{*rest.begin()};
        std::vector<Vertex> stack{*rest.begin()};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (const auto& [x, y] : sub.directed()) {
                if (x == v || y == v) continue;
                const Vertex* w = nullptr;
                if (x == u) w = &y;
                else if (y == u) w = &x;
                if (w && seen.insert(*w).second) stack.push_back(*w);
            }
        }
        if (seen.size() < rest.size()) out.push_back(v);
    }
    return out;
}

bool Admg::is_simple() const {
    std::set<BiEdge> pairs;
    for (const auto& [a, b] : directed_)
        if (!pairs.insert(make_bi(a, b)).second) return false;
    for (const auto& e : bidirected_)
        if (!pairs.insert(e).second) return false;
    return true;
}

}  // namespace semedge
