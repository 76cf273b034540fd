#ifndef OHBA_GRAPH_HPP
#define OHBA_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ohba/error.hpp"

namespace ohba {

using Vertex = int;

// Which part of a join K_p v K_{a,b} a vertex lies in.
enum class VertexClass { W, X, Y };

// The join of a clique on p vertices with the complete bipartite graph
// K_{a,b}.  Vertices are dense indices in the fixed order
// w_1..w_p, x_1..x_a, y_1..y_b, so class membership is an index-range test.
// Edges: all pairs inside W, all W-X and W-Y pairs, all X-Y pairs; X and Y
// are independent sets.  Immutable after construction.
class JoinGraph {
public:
    JoinGraph(int p, int a, int b);

    int p() const { return p_; }
    int a() const { return a_; }
    int b() const { return b_; }

    int vertex_count() const { return p_ + a_ + b_; }
    long long edge_count() const;

    VertexClass vertex_class(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;

    // First vertex of each class.
    Vertex w_begin() const { return 0; }
    Vertex x_begin() const { return p_; }
    Vertex y_begin() const { return p_ + a_; }

    // Human-readable id: "w1".."wp", "x1".."xa", "y1".."yb".
    std::string vertex_name(Vertex v) const;
    // Inverse of vertex_name; throws InputError on unknown ids.
    Vertex vertex_by_name(const std::string& name) const;

private:
    int p_, a_, b_;
};

// chi(K_p v K_{a,b}) = p + chi(K_{a,b}) = p + 2.  No search.
int chromatic_number(const JoinGraph& g);

// A small arbitrary graph for the naive oracle paths.  At most 64 vertices
// so a neighbourhood is one machine word.  Irreflexive and symmetric.
class GenericGraph {
public:
    explicit GenericGraph(int n);

    static constexpr int kMaxVertices = 64;

    int vertex_count() const { return n_; }
    long long edge_count() const;

    void add_edge(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const;
    std::uint64_t neighbors_mask(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const;

    std::string vertex_name(Vertex v) const { return std::to_string(v); }

private:
    int n_;
    std::vector<std::uint64_t> adj_;
};

// Materializes a join as a GenericGraph (vertex order preserved).
// Rejects joins with more than 64 vertices.
GenericGraph to_generic(const JoinGraph& g);

// The subgraph induced by W u X (it is K_{p+1} plus a-1 extra vertices
// adjacent exactly to W; vertex order w_1..w_p, x_1..x_a).
GenericGraph induced_wx(const JoinGraph& g);

GenericGraph make_complete(int n);
GenericGraph make_complete_bipartite(int a, int b);
// Star K_{1,s} with the center at vertex 0.
GenericGraph make_star(int s);

} // namespace ohba

#endif
