#pragma once

#include <string>
#include <vector>

#include "grtoda/exppoly.hpp"

namespace grtoda {

// Gelfand-Zetlin graph on vertices {(n,j): 1 <= j <= n <= N} with the
// column-one down-arrows x_{n,1} -> x_{n-1,1} and the diagonal arrows
// x_{n,k} -> x_{n+1,k+1}.
struct GZGraph {
    int N = 0;
    std::vector<std::pair<int, int>> vertices;                          // (n,j)
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> arrows; // tail -> head

    std::string dot() const;
};

GZGraph build_gz_graph(int N);

// The Gr_{m,N} lattice: m columns of N-m interior vertices each (column k
// holds rows k..N-m+k-1), a distinguished source x_{N,1} and the sink 0.
// One arrow per exponential term of the action sum.
struct GrGraph {
    struct Node {
        enum class Kind { Interior, Source, Sink } kind;
        int n = 0, k = 0; // vertex indices when interior
        friend bool operator==(const Node&, const Node&) = default;
    };
    int m = 0, N = 0;
    std::vector<std::pair<int, int>> interior; // (n,k)
    std::vector<std::pair<Node, Node>> arrows; // tail -> head

    static Node source() { return {Node::Kind::Source}; }
    static Node sink() { return {Node::Kind::Sink}; }
    static Node at(int n, int k) { return {Node::Kind::Interior, n, k}; }

    // exponential e^{head - tail} attached to an arrow; the source stands
    // for the external coordinate x_{N,1}, the sink for 0
    ExpPoly arrow_exponential(const std::pair<Node, Node>& a) const;

    std::string dot() const;
};

GrGraph build_gr_graph(int m, int N);

// variable id hosting the distinguished source coordinate x_{N,1}
VarId gr_source_var(int N);

} // namespace grtoda
