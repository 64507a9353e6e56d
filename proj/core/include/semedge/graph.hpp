#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semedge/errors.hpp"

namespace semedge {

using Vertex = std::string;
using VertexSet = std::set<Vertex>;
using DirEdge = std::pair<Vertex, Vertex>;  // (tail, head)
using BiEdge = std::pair<Vertex, Vertex>;   // canonical: first < second

inline BiEdge make_bi(const Vertex& u, const Vertex& v) {
    return u < v ? BiEdge{u, v} : BiEdge{v, u};
}

// Acyclic directed mixed graph: vertex labels, directed edges, bidirected edges.
// Immutable after construction; all derived-set operations are pure.
class Admg {
  public:
    Admg() = default;
    Admg(std::vector<Vertex> vertices, std::set<DirEdge> directed, std::set<BiEdge> bidirected);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::set<DirEdge>& directed() const { return directed_; }
    const std::set<BiEdge>& bidirected() const { return bidirected_; }

    bool has_vertex(const Vertex& v) const;
    bool has_directed(const Vertex& a, const Vertex& b) const;
    bool has_bidirected(const Vertex& a, const Vertex& b) const;
    void require_vertex(const Vertex& v) const;

    VertexSet vertex_set() const;
    VertexSet parents(const Vertex& v) const;
    VertexSet children(const Vertex& v) const;
    VertexSet parents(const VertexSet& s) const;

    // Reflexive-transitive closures: an(s) and de(s) both contain s.
    VertexSet ancestors(const VertexSet& s) const;
    VertexSet descendants(const VertexSet& s) const;
    VertexSet ancestors(const Vertex& v) const { return ancestors(VertexSet{v}); }
    VertexSet descendants(const Vertex& v) const { return descendants(VertexSet{v}); }
    VertexSet nondescendants(const Vertex& v) const;

    // Connected component of v in the bidirected part.
    VertexSet district(const Vertex& v) const;

    // mb(v) = pa(dis(v)) u (dis(v) \ {v}), evaluated in the induced subgraph on `within`.
    VertexSet markov_blanket(const Vertex& v, const VertexSet& within) const;
    VertexSet markov_blanket(const Vertex& v) const;

    // de(v) n dis(v) == {v}, evaluated in the induced subgraph on `within`.
    bool is_fixable(const Vertex& v, const VertexSet& within) const;
    bool is_fixable(const Vertex& v) const;

    Admg induced_subgraph(const VertexSet& s) const;
    Admg without_directed(const Vertex& a, const Vertex& b) const;
    Admg without_bidirected(const Vertex& a, const Vertex& b) const;
    Admg with_directed(const Vertex& a, const Vertex& b) const;

    // Directed edges earlier -> later; ties broken by ascending label.
    std::vector<Vertex> topological_order() const;

    // All interior vertices whose deletion disconnects (undirectedly) the
    // directed-only induced subgraph on an(b) n de(a); topological order.
    std::vector<Vertex> cut_vertices(const Vertex& a, const Vertex& b) const;

    bool is_simple() const;

  private:
    std::vector<Vertex> vertices_;
    std::set<DirEdge> directed_;
    std::set<BiEdge> bidirected_;
};

inline std::string dir_name(const Vertex& a, const Vertex& b) { return a + "->" + b; }
inline std::string bi_name(const Vertex& a, const Vertex& b) {
    auto e = make_bi(a, b);
    return e.first + "<->" + e.second;
}

}  // namespace semedge
