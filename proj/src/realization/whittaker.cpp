#include "grtoda/realization.hpp"

namespace grtoda {

namespace {
bool vertex_ok(int N, int r, int c) { return 1 <= c && c <= r && r <= N; }

// exp(x_{r1,c1} - x_{r2,c2}) with x_{N,*} = 0
ExpPoly pair_exp(int N, int r1, int c1, int r2, int c2) {
    std::vector<std::pair<VarId, ExpExponent>> entries;
    if (r1 < N) entries.push_back({VarId::gz(r1, c1), ExpExponent(mpq_class(1))});
    if (r2 < N) entries.push_back({VarId::gz(r2, c2), ExpExponent(mpq_class(-1))});
    return ExpPoly::exp_linear(entries);
}

void add_linear(std::map<VarId, ParamScalar>& lin, VarId v, const ParamScalar& c) {
    auto it = lin.find(v);
    if (it == lin.end()) lin.emplace(v, c);
    else it->second += c;
}
} // namespace

WhittakerVector build_whittaker_vector(Side side, int m, int N) {
    if (!(1 <= m && m < N)) throw std::invalid_argument("build_whittaker_vector: need 1 <= m < N");
    std::map<VarId, ParamScalar> lin;
    ExpPoly exps; // the bracket multiplying -h in the exponential phase
    if (side == Side::L) {
        // -sum_{n=1}^{N-1} (mu_n - mu_{n+1}) sum_{i=1}^{n} x_{n,i}
        //   + sum_{k=1}^{m-1} mu_{N-k} x_{N-k,1}
        // (index reading of the second sum fixed by the Cartan annihilation
        //  E_{kk} psi_L = 0, k = 2..m; see docs/conventions.md)
        for (int n = 1; n <= N - 1; ++n) {
            ParamScalar c = -(ParamScalar::mu(n, N) - ParamScalar::mu(n + 1, N));
            for (int i = 1; i <= n; ++i) add_linear(lin, VarId::gz(n, i), c);
        }
        for (int k = 1; k <= m - 1; ++k)
            add_linear(lin, VarId::gz(N - k, 1), ParamScalar::mu(N - k, N));
        // e^{x_{N-m,1}} + sum_{k=1}^{m} sum_{i=1}^{N-m-1} e^{x_{i+k-1,k}-x_{i+k,k}}
        //   + sum_{k=m+1}^{N-1} [ e^{x_{N-1,k}} + sum_{i=1}^{N-k-1} e^{x_{i+k-1,k}-x_{i+k,k}} ]
        exps += ExpPoly::exp_of(VarId::gz(N - m, 1), ExpExponent(mpq_class(1)));
        for (int k = 1; k <= m; ++k)
            for (int i = 1; i <= N - m - 1; ++i) exps += pair_exp(N, i + k - 1, k, i + k, k);
        for (int k = m + 1; k <= N - 1; ++k) {
            exps += ExpPoly::exp_of(VarId::gz(N - 1, k), ExpExponent(mpq_class(1)));
            for (int i = 1; i <= N - k - 1; ++i) exps += pair_exp(N, i + k - 1, k, i + k, k);
        }
    } else {
        // -sum_{k=m+1}^{N-1} mu_k x_{kk}
        for (int k = m + 1; k <= N - 1; ++k)
            add_linear(lin, VarId::gz(k, k), -ParamScalar::mu(k, N));
        // e^{-x_{mm}} + sum_{k=1}^{N-m} sum_{i=1}^{m-1} e^{x_{k+i,i+1}-x_{k+i-1,i}}
        //   + sum_{k=1}^{m-1} [ e^{-x_{N-1,k}} + sum_{i=1}^{k-1} e^{x_{N-k+i,i+1}-x_{N-k+i-1,i}} ]
        exps += ExpPoly::exp_of(VarId::gz(m, m), ExpExponent(mpq_class(-1)));
        for (int k = 1; k <= N - m; ++k)
            for (int i = 1; i <= m - 1; ++i) exps += pair_exp(N, k + i, i + 1, k + i - 1, i);
        for (int k = 1; k <= m - 1; ++k) {
            exps += ExpPoly::exp_of(VarId::gz(N - 1, k), ExpExponent(mpq_class(-1)));
            for (int i = 1; i <= k - 1; ++i) exps += pair_exp(N, N - k + i, i + 1, N - k + i - 1, i);
        }
    }
    ExpPoly phase_exp = exps;
    phase_exp *= -ParamScalar::h();
    for (auto it = lin.begin(); it != lin.end();) {
        if (it->second.is_zero()) it = lin.erase(it);
        else ++it;
    }

    WhittakerVector w;
    w.side = side;
    w.m = m;
    w.N = N;
    w.value = ExpFunction(ExpPoly(1), std::move(lin), std::move(phase_exp));
    // C^L = prod_{N-m+1 <= i < j <= N} hbar^{rho_i - nu_j} Gamma(-nu_j - rho_i)
    // C^R = prod_{m+1 <= i < j <= N}   hbar^{nu_j - rho_i} Gamma(rho_i - nu_j)
    // with rho_i = i - (N+1)/2 as it appears in the spectral parameters
    int lo = (side == Side::L) ? N - m + 1 : m + 1;
    for (int i = lo; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            ParamScalar rho_i = ParamScalar::rational(mpq_class(2 * i - (N + 1), 2));
            GammaFactor f;
            if (side == Side::L) {
                f.hbar_exponent = rho_i - ParamScalar::nu(j);
                f.gamma_argument = -ParamScalar::nu(j) - rho_i;
            } else {
                f.hbar_exponent = ParamScalar::nu(j) - rho_i;
                f.gamma_argument = rho_i - ParamScalar::nu(j);
            }
            w.normalization.push_back(std::move(f));
        }
    }
    return w;
}

std::vector<std::pair<int, int>> nminus_generators(int m, int N) {
    std::vector<std::pair<int, int>> g;
    g.push_back({m + 1, 1});
    for (int i = 2; i <= m; ++i)
        for (int k = i; k <= N; ++k) g.push_back({k, i});
    for (int j = m + 1; j <= N - 1; ++j) g.push_back({j + 1, j});
    return g;
}

std::vector<std::pair<int, int>> nplus_generators(int m, int N) {
    std::vector<std::pair<int, int>> g;
    for (int i = 2; i <= m; ++i) g.push_back({i - 1, i});
    g.push_back({m, N});
    for (int j = m + 1; j <= N - 1; ++j)
        for (int k = 1; k <= j; ++k) g.push_back({k, j});
    return g;
}

ParamScalar char_minus(int m, int N, int a, int b, bool printed) {
    (void)N;
    if (a == m + 1 && b == 1) return printed ? ParamScalar::h() : -ParamScalar::h();
    if (b >= m + 1 && a == b + 1) return printed ? ParamScalar::h() : -ParamScalar::h();
    return ParamScalar();
}

ParamScalar char_plus(int m, int N, int a, int b, bool printed) {
    if (b <= m && a == b - 1) return -ParamScalar::h();
    if (a == m && b == N) return printed ? ParamScalar::vs() * ParamScalar::h() : -ParamScalar::h();
    return ParamScalar();
}

CharacterTable verify_whittaker(int m, int N) {
    if (!(1 <= m && m < N)) throw std::invalid_argument("verify_whittaker: need 1 <= m < N");
    GeneratorTable g(N);
    CharacterTable table;
    table.m = m;
    table.N = N;
    WhittakerVector psiL = build_whittaker_vector(Side::L, m, N);
    WhittakerVector psiR = build_whittaker_vector(Side::R, m, N);
    for (auto [a, b] : nminus_generators(m, N)) {
        CharacterEntry e;
        e.generator = {a, b};
        e.side = Side::L;
        e.printed = char_minus(m, N, a, b, /*printed=*/true);
        ExpFunction r = g.E(a, b).apply(psiL.value);
        auto s = r.scalar_vs(psiL.value);
        e.scalar_action = s.has_value();
        if (s) e.realized = *s;
        e.match = e.scalar_action && e.realized == e.printed;
        table.entries.push_back(std::move(e));
    }
    for (auto [a, b] : nplus_generators(m, N)) {
        CharacterEntry e;
        e.generator = {a, b};
        e.side = Side::R;
        e.printed = char_plus(m, N, a, b, /*printed=*/true);
        ExpFunction r = g.E(a, b).apply(psiR.value);
        auto s = r.scalar_vs(psiR.value);
        e.scalar_action = s.has_value();
        if (s) e.realized = *s;
        e.match = e.scalar_action && e.realized == e.printed;
        table.entries.push_back(std::move(e));
    }
    return table;
}

} // namespace grtoda
