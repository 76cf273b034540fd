#include "ohba/graph.hpp"

#include <string>

namespace ohba {

JoinGraph::JoinGraph(int p, int a, int b) : p_(p), a_(a), b_(b) {
    if (p < 0) throw ParamError("join: p must be nonnegative, got p=" + std::to_string(p));
    if (a < 1) throw ParamError("join: a must be at least 1, got a=" + std::to_string(a));
    if (a > b)
        throw ParamError("join: requires a <= b, got a=" + std::to_string(a) +
                         ", b=" + std::to_string(b));
}

long long JoinGraph::edge_count() const {
    const long long p = p_, a = a_, b = b_;
    return p * (p - 1) / 2 + p * (a + b) + a * b;
}

VertexClass JoinGraph::vertex_class(Vertex v) const {
    if (v < p_) return VertexClass::W;
    if (v < p_ + a_) return VertexClass::X;
    return VertexClass::Y;
}

bool JoinGraph::adjacent(Vertex u, Vertex v) const {
    if (u == v) return false;
    const VertexClass cu = vertex_class(u), cv = vertex_class(v);
    if (cu == VertexClass::W || cv == VertexClass::W) return true;
    return cu != cv; // X-Y pairs only; X-X and Y-Y are independent
}

std::string JoinGraph::vertex_name(Vertex v) const {
    if (v < p_) return "w" + std::to_string(v + 1);
    if (v < p_ + a_) return "x" + std::to_string(v - p_ + 1);
    return "y" + std::to_string(v - p_ - a_ + 1);
}

Vertex JoinGraph::vertex_by_name(const std::string& name) const {
    if (name.size() < 2) throw InputError("bad vertex id '" + name + "'");
    int idx = 0;
    try {
        idx = std::stoi(name.substr(1));
    } catch (const std::exception&) {
        throw InputError("bad vertex id '" + name + "'");
    }
    const char cls = name[0];
    if (cls == 'w' && idx >= 1 && idx <= p_) return idx - 1;
    if (cls == 'x' && idx >= 1 && idx <= a_) return p_ + idx - 1;
    if (cls == 'y' && idx >= 1 && idx <= b_) return p_ + a_ + idx - 1;
    throw InputError("vertex id '" + name + "' out of range for join graph");
}

int chromatic_number(const JoinGraph& g) {
    return g.p() + 2;
}

GenericGraph::GenericGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices)
        throw ParamError("generic graph: vertex count must be in [0, 64], got " +
                         std::to_string(n));
}

long long GenericGraph::edge_count() const {
    long long twice = 0;
    for (Vertex v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

void GenericGraph::add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw ParamError("edge endpoint out of range");
    if (u == v) throw ParamError("self-loops are not allowed");
    adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

bool GenericGraph::adjacent(Vertex u, Vertex v) const {
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
}

int GenericGraph::degree(Vertex v) const {
    return __builtin_popcountll(adj_[static_cast<std::size_t>(v)]);
}

GenericGraph to_generic(const JoinGraph& g) {
    const int n = g.vertex_count();
    if (n > GenericGraph::kMaxVertices)
        throw ParamError("join graph has " + std::to_string(n) +
                         " vertices, too large for a generic graph (max 64)");
    GenericGraph out(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

GenericGraph induced_wx(const JoinGraph& g) {
    const int m = g.p() + g.a();
    if (m > GenericGraph::kMaxVertices)
        throw ParamError("W u X has " + std::to_string(m) + " vertices, max is 64");
    GenericGraph out(m);
    for (Vertex u = 0; u < m; ++u)
        for (Vertex v = u + 1; v < m; ++v)
            if (g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

GenericGraph make_complete(int n) {
    GenericGraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

GenericGraph make_complete_bipartite(int a, int b) {
    GenericGraph g(a + b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

GenericGraph make_star(int s) {
    GenericGraph g(s + 1);
    for (Vertex v = 1; v <= s; ++v) g.add_edge(0, v);
    return g;
}

} // namespace ohba
