#include "grtoda/graphs.hpp"

#include <sstream>
#include <stdexcept>

namespace grtoda {

GZGraph build_gz_graph(int N) {
    if (N < 1) throw std::invalid_argument("build_gz_graph: N >= 1 required");
    GZGraph g;
    g.N = N;
    for (int n = 1; n <= N; ++n)
        for (int j = 1; j <= n; ++j) g.vertices.push_back({n, j});
    for (int n = 2; n <= N; ++n) g.arrows.push_back({{n, 1}, {n - 1, 1}});
    for (int n = 1; n <= N - 1; ++n)
        for (int k = 1; k <= n; ++k) g.arrows.push_back({{n, k}, {n + 1, k + 1}});
    return g;
}

std::string GZGraph::dot() const {
    std::ostringstream os;
    os << "digraph gz {\n  rankdir=BT;\n";
    for (const auto& [n, j] : vertices)
        os << "  \"x" << n << "_" << j << "\" [label=\"x_{" << n << "," << j << "}\"];\n";
    for (const auto& [t, h] : arrows)
        os << "  \"x" << t.first << "_" << t.second << "\" -> \"x" << h.first << "_"
           << h.second << "\";\n";
    os << "}\n";
    return os.str();
}

GrGraph build_gr_graph(int m, int N) {
    if (!(1 <= m && m < N)) throw std::invalid_argument("build_gr_graph: need 1 <= m < N");
    GrGraph g;
    g.m = m;
    g.N = N;
    for (int k = 1; k <= m; ++k)
        for (int r = k; r <= N - m + k - 1; ++r) g.interior.push_back({r, k});
    // source arrow and sink arrow
    g.arrows.push_back({GrGraph::source(), GrGraph::at(N - m, 1)});
    g.arrows.push_back({GrGraph::at(m, m), GrGraph::sink()});
    // down-arrows within each column
    for (int k = 1; k <= m; ++k)
        for (int r = k + 1; r <= N - m + k - 1; ++r)
            g.arrows.push_back({GrGraph::at(r, k), GrGraph::at(r - 1, k)});
    // diagonal arrows between consecutive columns
    for (int k = 1; k <= m - 1; ++k)
        for (int r = k; r <= N - m + k - 1; ++r)
            g.arrows.push_back({GrGraph::at(r, k), GrGraph::at(r + 1, k + 1)});
    return g;
}

VarId gr_source_var(int N) { return VarId::gz(N, 1); }

ExpPoly GrGraph::arrow_exponential(const std::pair<Node, Node>& a) const {
    std::vector<std::pair<VarId, ExpExponent>> entries;
    auto var_of = [&](const Node& n) -> std::optional<VarId> {
        switch (n.kind) {
            case Node::Kind::Interior: return VarId::gz(n.n, n.k);
            case Node::Kind::Source: return gr_source_var(N);
            case Node::Kind::Sink: return std::nullopt;
        }
        return std::nullopt;
    };
    if (auto h = var_of(a.second)) entries.push_back({*h, ExpExponent(mpq_class(1))});
    if (auto t = var_of(a.first)) entries.push_back({*t, ExpExponent(mpq_class(-1))});
    return ExpPoly::exp_linear(entries);
}

std::string GrGraph::dot() const {
    std::ostringstream os;
    os << "digraph gr_" << m << "_" << N << " {\n";
    os << "  \"src\" [label=\"x_{" << N << ",1}\",shape=box];\n";
    os << "  \"snk\" [label=\"0\",shape=box];\n";
    for (const auto& [n, k] : interior)
        os << "  \"x" << n << "_" << k << "\" [label=\"x_{" << n << "," << k << "}\"];\n";
    auto name = [](const Node& n) -> std::string {
        switch (n.kind) {
            case Node::Kind::Interior:
                return "\"x" + std::to_string(n.n) + "_" + std::to_string(n.k) + "\"";
            case Node::Kind::Source: return "\"src\"";
            case Node::Kind::Sink: return "\"snk\"";
        }
        return "\"?\"";
    };
    for (const auto& [t, h] : arrows) os << "  " << name(t) << " -> " << name(h) << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace grtoda
