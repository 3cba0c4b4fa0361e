#include "grtoda/integral.hpp"

#include <cmath>

namespace grtoda {

namespace {
std::vector<VarId> measure_vars(int m, int N) {
    // prod_{n=1}^{N-m} prod_{k=1}^{min(n,m)} dx_{n,k}
    //   * prod_{n=1}^{m-1} prod_{i=n+1}^{min(N-m+n,m)} dx_{N-m+n,i}
    std::vector<VarId> v;
    for (int n = 1; n <= N - m; ++n)
        for (int k = 1; k <= std::min(n, m); ++k) v.push_back(VarId::gz(n, k));
    for (int n = 1; n <= m - 1; ++n)
        for (int i = n + 1; i <= std::min(N - m + n, m); ++i) v.push_back(VarId::gz(N - m + n, i));
    return v;
}

// the four exponential term groups of the action sum, as (vertex pairs);
// the source x_{N,1} enters through its numeric value
struct RawTerm {
    // exp( x_{r1,c1} - x_{r2,c2} ), either row may be the source (r = N)
    int r1, c1, r2, c2;
    bool has_upper = true, has_lower = true;
};

std::vector<RawTerm> raw_terms(int m, int N) {
    std::vector<RawTerm> t;
    t.push_back({0, 0, m, m, false, true});              // e^{-x_{mm}}
    t.push_back({N - m, 1, N, 1, true, true});           // e^{x_{N-m,1} - x_{N,1}}
    for (int k = 1; k <= m; ++k)
        for (int i = 1; i <= N - 1 - m; ++i)
            t.push_back({i + k - 1, k, i + k, k, true, true});
    for (int k = 1; k <= N - m; ++k)
        for (int i = 1; i <= m - 1; ++i)
            t.push_back({k + i, i + 1, k + i - 1, i, true, true});
    return t;
}
} // namespace

ExpPoly action_exponential_part(int m, int N) {
    if (!(1 <= m && m < N)) throw std::invalid_argument("action_exponential_part: need 1 <= m < N");
    ExpPoly total;
    for (const auto& t : raw_terms(m, N)) {
        std::vector<std::pair<VarId, ExpExponent>> entries;
        if (t.has_upper) entries.push_back({VarId::gz(t.r1, t.c1), ExpExponent(mpq_class(1))});
        if (t.has_lower) entries.push_back({VarId::gz(t.r2, t.c2), ExpExponent(mpq_class(-1))});
        total += ExpPoly::exp_linear(entries);
    }
    return total;
}

PhaseData build_phase(int m, int N, const std::vector<double>& lambda, double hbar, double x) {
    if (!(1 <= m && m < N)) throw std::invalid_argument("build_phase: need 1 <= m < N");
    if (lambda.size() != static_cast<size_t>(N))
        throw std::invalid_argument("build_phase: lambda must have length N");
    if (!(hbar > 0)) throw std::invalid_argument("build_phase: hbar must be positive");
    PhaseData p;
    p.m = m;
    p.N = N;
    p.vars = measure_vars(m, N);
    p.lambda = lambda;
    p.hbar = hbar;
    p.x = x;
    p.linear.assign(p.vars.size(), {0.0, 0.0});
    auto idx = [&](int n, int k) -> int {
        for (size_t i = 0; i < p.vars.size(); ++i)
            if (p.vars[i] == VarId::gz(n, k)) return static_cast<int>(i);
        return -1;
    };
    // i (sum_{k=1}^{m} lambda_{N-m+k}) x_{N,1}
    double lsum = 0.0;
    for (int k = 1; k <= m; ++k) lsum += lambda[N - m + k - 1];
    p.linear_const = std::complex<double>(0.0, lsum * x);
    // i sum_{n=1}^{N-m} (lambda_n - lambda_{n+1}) sum_{i=1}^{min(m,n)} x_{n,i}
    for (int n = 1; n <= N - m; ++n)
        for (int i = 1; i <= std::min(m, n); ++i)
            p.linear[idx(n, i)] += std::complex<double>(0.0, lambda[n - 1] - lambda[n]);
    // i sum_{n=1}^{m-1} (lambda_{N-m+n} - lambda_{N-m+n+1}) sum_{i=n+1}^{min(N-m+n,m)} x_{N-m+n,i}
    for (int n = 1; n <= m - 1; ++n)
        for (int i = n + 1; i <= std::min(N - m + n, m); ++i)
            p.linear[idx(N - m + n, i)] +=
                std::complex<double>(0.0, lambda[N - m + n - 1] - lambda[N - m + n]);
    // exponential terms
    for (const auto& t : raw_terms(m, N)) {
        PhaseData::ExpTerm e;
        e.exponent.assign(p.vars.size(), 0);
        if (t.has_upper) {
            if (t.r1 == N) e.shift += x;
            else e.exponent[idx(t.r1, t.c1)] += 1;
        }
        if (t.has_lower) {
            if (t.r2 == N) e.shift -= x;
            else e.exponent[idx(t.r2, t.c2)] -= 1;
        }
        p.terms.push_back(std::move(e));
    }
    return p;
}

std::complex<double> PhaseData::eval(const std::vector<double>& t) const {
    std::complex<double> F = linear_const;
    for (size_t i = 0; i < vars.size(); ++i) F += linear[i] * t[i];
    double decay = 0.0;
    for (const auto& term : terms) {
        double a = term.shift;
        for (size_t i = 0; i < vars.size(); ++i)
            if (term.exponent[i]) a += term.exponent[i] * t[i];
        decay += std::exp(a);
    }
    return F - decay / hbar;
}

std::complex<double> PhaseData::eval_shifted(const std::vector<double>& t,
                                             const std::vector<double>& imag_shift) const {
    std::complex<double> F = linear_const;
    for (size_t i = 0; i < vars.size(); ++i)
        F += linear[i] * std::complex<double>(t[i], imag_shift[i]);
    std::complex<double> decay = 0.0;
    for (const auto& term : terms) {
        std::complex<double> a(term.shift, 0.0);
        for (size_t i = 0; i < vars.size(); ++i)
            if (term.exponent[i]) a += std::complex<double>(t[i], imag_shift[i]) *
                                       static_cast<double>(term.exponent[i]);
        decay += std::exp(a);
    }
    return F - decay / hbar;
}

ContourSpec ContourSpec::validated(const PhaseData& phase, std::vector<double> half_width,
                                   std::vector<double> imag_shift) {
    size_t d = phase.vars.size();
    if (half_width.size() != d || imag_shift.size() != d)
        throw std::invalid_argument("ContourSpec: dimension mismatch");
    for (const auto& term : phase.terms) {
        double theta = 0.0;
        for (size_t i = 0; i < d; ++i) theta += term.exponent[i] * imag_shift[i];
        if (std::abs(theta) >= M_PI / 2)
            throw std::invalid_argument("ContourSpec: imaginary shift destroys decay");
    }
    return {std::move(half_width), std::move(imag_shift)};
}

DecayCertificate decay_certificate(int m, int N) {
    GrGraph g = build_gr_graph(m, N);
    int d = static_cast<int>(g.interior.size());
    auto vidx = [&](const GrGraph::Node& n) -> int {
        if (n.kind != GrGraph::Node::Kind::Interior) return -1;
        for (int i = 0; i < d; ++i)
            if (g.interior[i] == std::make_pair(n.n, n.k)) return i;
        return -1;
    };
    std::vector<std::vector<long>> vecs;
    for (const auto& [tail, head] : g.arrows) {
        std::vector<long> v(d, 0);
        int hi = vidx(head), ti = vidx(tail);
        if (hi >= 0) v[hi] += 1;
        if (ti >= 0) v[ti] -= 1;
        vecs.push_back(std::move(v));
    }
    DecayCertificate cert;
    cert.coordinate_rays_ok = true;
    for (int i = 0; i < d; ++i) {
        bool plus = false, minus = false;
        for (const auto& v : vecs) {
            if (v[i] > 0) plus = true;
            if (v[i] < 0) minus = true;
        }
        if (!plus || !minus) cert.coordinate_rays_ok = false;
    }
    // positive circulation via source-to-sink path counts through each arrow
    std::map<std::pair<int, int>, long> to_sink, from_src;
    std::function<long(const GrGraph::Node&)> npaths_to = [&](const GrGraph::Node& n) -> long {
        if (n.kind == GrGraph::Node::Kind::Sink) return 1;
        if (n.kind == GrGraph::Node::Kind::Interior) {
            auto it = to_sink.find({n.n, n.k});
            if (it != to_sink.end()) return it->second;
        }
        long total = 0;
        for (const auto& [t, h] : g.arrows)
            if (t == n) total += npaths_to(h);
        if (n.kind == GrGraph::Node::Kind::Interior) to_sink[{n.n, n.k}] = total;
        return total;
    };
    std::function<long(const GrGraph::Node&)> npaths_from = [&](const GrGraph::Node& n) -> long {
        if (n.kind == GrGraph::Node::Kind::Source) return 1;
        if (n.kind == GrGraph::Node::Kind::Interior) {
            auto it = from_src.find({n.n, n.k});
            if (it != from_src.end()) return it->second;
        }
        long total = 0;
        for (const auto& [t, h] : g.arrows)
            if (h == n) total += npaths_from(t);
        if (n.kind == GrGraph::Node::Kind::Interior) from_src[{n.n, n.k}] = total;
        return total;
    };
    cert.circulation_ok = true;
    std::vector<long> comb(d, 0);
    for (size_t j = 0; j < g.arrows.size(); ++j) {
        long w = npaths_from(g.arrows[j].first) * npaths_to(g.arrows[j].second);
        cert.weights.push_back(w);
        if (w <= 0) cert.circulation_ok = false;
        for (int i = 0; i < d; ++i) comb[i] += w * vecs[j][i];
    }
    for (int i = 0; i < d; ++i)
        if (comb[i] != 0) cert.circulation_ok = false;
    // rank over the rationals
    std::vector<std::vector<mpq_class>> M;
    for (const auto& v : vecs) {
        std::vector<mpq_class> row(d);
        for (int i = 0; i < d; ++i) row[i] = v[i];
        M.push_back(std::move(row));
    }
    int rank = 0;
    for (int col = 0; col < d; ++col) {
        int piv = -1;
        for (size_t r = rank; r < M.size(); ++r)
            if (M[r][col] != 0) { piv = static_cast<int>(r); break; }
        if (piv < 0) continue;
        std::swap(M[piv], M[rank]);
        for (size_t r = 0; r < M.size(); ++r) {
            if (static_cast<int>(r) == rank || M[r][col] == 0) continue;
            mpq_class f = M[r][col] / M[rank][col];
            for (int cc = col; cc < d; ++cc) M[r][cc] -= f * M[rank][cc];
        }
        ++rank;
    }
    cert.full_rank = (rank == d);
    return cert;
}

} // namespace grtoda
