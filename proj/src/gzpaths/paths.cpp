#include "grtoda/paths.hpp"

#include <functional>
#include <sstream>

namespace grtoda {

namespace {
// exp(x_{r1,c1} - x_{r2,c2}) with x_{N,*} treated as 0
ExpPoly vertex_pair_exp(int N, int r1, int c1, int r2, int c2) {
    std::vector<std::pair<VarId, ExpExponent>> entries;
    if (r1 < N) entries.push_back({VarId::gz(r1, c1), ExpExponent(mpq_class(1))});
    if (r2 < N) entries.push_back({VarId::gz(r2, c2), ExpExponent(mpq_class(-1))});
    return ExpPoly::exp_linear(entries);
}
bool vertex_ok(int N, int r, int c) { return 1 <= c && c <= r && r <= N; }
} // namespace

std::optional<ExpPoly> down_arrow_exp(int N, int r, int c) {
    if (!vertex_ok(N, r, c) || !vertex_ok(N, r - 1, c)) return std::nullopt;
    return vertex_pair_exp(N, r - 1, c, r, c);
}

std::optional<ExpPoly> diag_arrow_exp(int N, int r, int c) {
    if (!vertex_ok(N, r, c) || r > N - 1 || !vertex_ok(N, r + 1, c + 1)) return std::nullopt;
    return vertex_pair_exp(N, r + 1, c + 1, r, c);
}

ExpPoly path_A(int N, int r, int n, int j) {
    if (r < 0) return ExpPoly();
    if (r == 0) return ExpPoly(1);
    ExpPoly total;
    // strict tuples 1 <= i_1 < ... < i_r, factor at alpha: down arrow at
    // (n + i_a - a + 1, j + i_a)
    std::function<void(int, int, ExpPoly)> rec = [&](int alpha, int prev, ExpPoly acc) {
        if (alpha > r) { total += acc; return; }
        for (int i = prev + 1; i <= N; ++i) {
            auto f = down_arrow_exp(N, n + i - alpha + 1, j + i);
            if (!f) continue;
            rec(alpha + 1, i, acc * *f);
        }
    };
    rec(1, 0, ExpPoly(1));
    return total;
}

ExpPoly path_B(int N, int n, int j, int k) {
    int p = k + j - n - 1;
    if (p < 0) return ExpPoly();
    ExpPoly total;
    // walks of p steps from (n,j), steps (+1,0) and (+2,+1); each visited
    // vertex (r,c) contributes the down arrow at (r+1,c)
    std::function<void(int, int, int, ExpPoly)> rec = [&](int step, int r, int c, ExpPoly acc) {
        auto f = down_arrow_exp(N, r + 1, c);
        if (!f) return;
        acc *= *f;
        if (step == p) { total += acc; return; }
        rec(step + 1, r + 1, c, acc);
        rec(step + 1, r + 2, c + 1, acc);
    };
    if (!vertex_ok(N, n, j)) return ExpPoly();
    rec(0, n, j, ExpPoly(1));
    return total;
}

ExpPoly path_At(int N, int r, int n, int j) {
    if (r < 0) return ExpPoly();
    if (r == 0) return ExpPoly(1);
    auto f0 = diag_arrow_exp(N, n, j);
    if (!f0) return ExpPoly();
    ExpPoly total;
    // pinned start at (n,j); then rows strictly increasing, one diagonal
    // arrow per column j+1, ..., j+r-1
    std::function<void(int, int, ExpPoly)> rec = [&](int alpha, int prevrow, ExpPoly acc) {
        if (alpha > r - 1) { total += acc; return; }
        for (int row = prevrow + 1; row <= N - 1; ++row) {
            auto f = diag_arrow_exp(N, row, j + alpha);
            if (!f) continue;
            rec(alpha + 1, row, acc * *f);
        }
    };
    rec(1, n, *f0);
    return total;
}

ExpPoly path_Bt(int N, int n, int j, int k) {
    if (k > j) return ExpPoly();
    if (k == j) return ExpPoly(1);
    ExpPoly total;
    // columns k..j-1, one diagonal arrow per column, rows weakly decreasing
    // as the column increases, with row >= n at column j-1
    std::function<void(int, int, ExpPoly)> rec = [&](int c, int minrow, ExpPoly acc) {
        if (c < k) { total += acc; return; }
        for (int row = minrow; row <= N - 1; ++row) {
            auto f = diag_arrow_exp(N, row, c);
            if (!f) continue;
            rec(c - 1, row, acc * *f);
        }
    };
    rec(j - 1, n, ExpPoly(1));
    return total;
}

ExpPoly path_P(int N, int r, int n, int j, int k) {
    return path_A(N, r + n - k - j, n, j) * path_B(N, n, j, k);
}

ExpPoly path_Pt(int N, int r, int n, int j, int k) {
    return path_At(N, r + k - j, n, j) * path_Bt(N, n, j, k);
}

ExpPoly path_function(const PathFamily& fam, const GZGraph& graph) {
    int N = graph.N;
    if (!vertex_ok(N, fam.n, fam.j))
        throw std::invalid_argument("path_function: invalid vertex index");
    switch (fam.tag) {
        case PathFamily::Tag::A: return path_A(N, fam.r, fam.n, fam.j);
        case PathFamily::Tag::B: return path_B(N, fam.n, fam.j, fam.k);
        case PathFamily::Tag::Atilde: return path_At(N, fam.r, fam.n, fam.j);
        case PathFamily::Tag::Btilde: return path_Bt(N, fam.n, fam.j, fam.k);
        case PathFamily::Tag::P: return path_P(N, fam.r, fam.n, fam.j, fam.k);
        case PathFamily::Tag::Ptilde: return path_Pt(N, fam.r, fam.n, fam.j, fam.k);
    }
    throw std::invalid_argument("path_function: bad tag");
}

RelationInstance make_instance(std::string id, std::string indices, const ExpPoly& residual) {
    return {std::move(id), std::move(indices), residual.is_zero() ? "" : residual.str()};
}

RelationInstance make_instance(std::string id, std::string indices, const DiffOperator& residual) {
    return {std::move(id), std::move(indices), residual.is_zero() ? "" : residual.str()};
}

namespace {
std::string idx_str(std::initializer_list<int> xs) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (int x : xs) {
        if (!first) os << ",";
        os << x;
        first = false;
    }
    os << ")";
    return os.str();
}
} // namespace

RelationReport verify_path_relations(int N) {
    if (N < 2) throw std::invalid_argument("verify_path_relations: N >= 2 required");
    RelationReport rep;
    for (int n = 1; n <= N - 1; ++n) {
        for (int j = 1; j <= n; ++j) {
            for (int r = 1; r <= N - 1; ++r) {
                // A^r_{n,j} = A^r_{n+1,j+1} + A^{r-1}_{n,j+1} e^{x_{n,j+1}-x_{n+1,j+1}}
                ExpPoly lhs = path_A(N, r, n, j);
                ExpPoly rhs = path_A(N, r, n + 1, j + 1);
                if (auto f = down_arrow_exp(N, n + 1, j + 1))
                    rhs += path_A(N, r - 1, n, j + 1) * *f;
                rep.instances.push_back(make_instance("path-relation-A", idx_str({n, j, r}), lhs - rhs));
            }
            for (int k = 1; k <= N; ++k) {
                // B_{n,j}(k) e^{x_{n+1,j}-x_{n,j}} = B_{n+1,j}(k) + B_{n+2,j+1}(k), p >= 1
                if (k + j - n - 1 < 1) continue;
                ExpPoly lhs = path_B(N, n, j, k) * vertex_pair_exp(N, n + 1, j, n, j);
                ExpPoly rhs = path_B(N, n + 1, j, k) + path_B(N, n + 2, j + 1, k);
                rep.instances.push_back(make_instance("path-relation-B", idx_str({n, j, k}), lhs - rhs));
            }
            for (int r = 2; r <= N - 1; ++r) {
                // At^r_{n,j} e^{x_{n,j}-x_{n+1,j+1}} = At^{r-1}_{n+1,j+1}
                //   + At^r_{n+1,j} e^{x_{n+1,j}-x_{n+2,j+1}}
                if (!diag_arrow_exp(N, n, j)) continue;
                ExpPoly lhs = path_At(N, r, n, j) * vertex_pair_exp(N, n, j, n + 1, j + 1);
                ExpPoly rhs = path_At(N, r - 1, n + 1, j + 1);
                if (vertex_ok(N, n + 1, j) && vertex_ok(N, n + 2, j + 1))
                    rhs += path_At(N, r, n + 1, j) * vertex_pair_exp(N, n + 1, j, n + 2, j + 1);
                rep.instances.push_back(make_instance("path-relation-At", idx_str({n, j, r}), lhs - rhs));
            }
            for (int k = 1; k <= j; ++k) {
                // Bt_{n,j}(k) = Bt_{n+1,j}(k) + Bt_{n,j-1}(k) e^{x_{n+1,j}-x_{n,j-1}}
                ExpPoly lhs = path_Bt(N, n, j, k);
                ExpPoly rhs = path_Bt(N, n + 1, j, k);
                if (vertex_ok(N, n + 1, j) && vertex_ok(N, n, j - 1))
                    rhs += path_Bt(N, n, j - 1, k) * vertex_pair_exp(N, n + 1, j, n, j - 1);
                rep.instances.push_back(make_instance("path-relation-Bt", idx_str({n, j, k}), lhs - rhs));
            }
        }
    }
    return rep;
}

ExpPoly phase_from_graph(const GrGraph& g) {
    ExpPoly total;
    for (const auto& a : g.arrows) total += g.arrow_exponential(a);
    return total;
}

ExpPoly phase_from_graph(int m, int N) { return phase_from_graph(build_gr_graph(m, N)); }

ExpPoly cycle_product(const GrGraph& g) {
    // source -> (N-m,1) -> down column 1 -> (1,1) -> diagonal -> (m,m) -> sink
    int m = g.m, N = g.N;
    ExpPoly prod = g.arrow_exponential({GrGraph::source(), GrGraph::at(N - m, 1)});
    for (int r = N - m; r >= 2; --r)
        prod *= g.arrow_exponential({GrGraph::at(r, 1), GrGraph::at(r - 1, 1)});
    for (int k = 1; k <= m - 1; ++k)
        prod *= g.arrow_exponential({GrGraph::at(k, k), GrGraph::at(k + 1, k + 1)});
    prod *= g.arrow_exponential({GrGraph::at(m, m), GrGraph::sink()});
    return prod;
}

RelationReport verify_box_relations(int m, int N) {
    if (!(1 <= m && m < N)) throw std::invalid_argument("verify_box_relations: need 1 <= m < N");
    GrGraph g = build_gr_graph(m, N);
    RelationReport rep;
    // unit squares: a_{r,i} b_{r-1,i} = b_{r,i} a_{r+1,i+1}
    // with a_{r,i} the down arrow out of (r,i), b_{r,i} the diagonal arrow
    for (int i = 1; i <= m - 1; ++i) {
        for (int r = i + 1; r <= N - m + i - 1; ++r) {
            ExpPoly lhs = g.arrow_exponential({GrGraph::at(r, i), GrGraph::at(r - 1, i)}) *
                          g.arrow_exponential({GrGraph::at(r - 1, i), GrGraph::at(r, i + 1)});
            ExpPoly rhs = g.arrow_exponential({GrGraph::at(r, i), GrGraph::at(r + 1, i + 1)}) *
                          g.arrow_exponential({GrGraph::at(r + 1, i + 1), GrGraph::at(r, i + 1)});
            rep.instances.push_back(make_instance("box-relation", idx_str({r, i}), lhs - rhs));
        }
    }
    // cycle: product along the full source-to-sink path equals e^{-x_{N,1}}
    ExpPoly cyc = cycle_product(g);
    ExpPoly q = ExpPoly::exp_of(gr_source_var(N), ExpExponent(mpq_class(-1)));
    rep.instances.push_back(make_instance("box-cycle", idx_str({m, N}), cyc - q));
    return rep;
}

} // namespace grtoda
