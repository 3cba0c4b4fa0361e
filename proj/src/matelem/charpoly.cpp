#include "grtoda/matelem.hpp"

#include <functional>
#include <sstream>

namespace grtoda {

PolyMatrix specialized_lax(int m, int N) {
    if (!(1 <= m && m < N)) throw std::invalid_argument("specialized_lax: need 1 <= m < N");
    PolyMatrix L(N, std::vector<ExpPoly>(N));
    auto P = [](int k) { return ExpPoly::var(VarId::p(k)); };
    for (int k = 1; k <= m; ++k) L[k - 1][0] = P(k);
    L[m][0] = ExpPoly(-1);
    for (int i = 1; i <= m - 1; ++i) L[i - 1][i] = ExpPoly(-1);
    for (int a = m + 1; a <= N - 1; ++a) {
        L[a][a - 1] = ExpPoly(-1);
        L[a - 1][N - 1] = -P(a);
    }
    ExpPoly q = ExpPoly::var(VarId::q());
    L[m - 1][N - 1] = -(ExpPoly(ParamScalar::vs()) * q);
    L[N - 1][N - 1] = P(N); // unlisted diagonal entry, fixed by the operator table at x_a = 0
    return L;
}

ExpPoly char_poly(const PolyMatrix& L) {
    int N = static_cast<int>(L.size());
    PolyMatrix M = L;
    ExpPoly lam = ExpPoly::var(VarId::lambda());
    for (int i = 0; i < N; ++i) M[i][i] += lam;
    // cofactor expansion along the first remaining column
    std::function<ExpPoly(std::vector<int>)> det = [&](std::vector<int> rows) -> ExpPoly {
        int col = N - static_cast<int>(rows.size());
        if (rows.empty()) return ExpPoly(1);
        ExpPoly acc;
        for (size_t r = 0; r < rows.size(); ++r) {
            const ExpPoly& e = M[rows[r]][col];
            if (e.is_zero()) continue;
            std::vector<int> rest;
            for (size_t s = 0; s < rows.size(); ++s)
                if (s != r) rest.push_back(rows[s]);
            ExpPoly sub = det(std::move(rest));
            sub *= e;
            if (r % 2 == 1) sub = -sub;
            acc += sub;
        }
        return acc;
    };
    std::vector<int> rows(N);
    for (int i = 0; i < N; ++i) rows[i] = i;
    return det(rows);
}

ExpPoly lambda_coefficient(const ExpPoly& p, int d) {
    ExpPoly out;
    for (const auto& [k, c] : p.terms()) {
        if (k.power_of(VarId::lambda()) != d) continue;
        MonoKey k2 = k;
        std::erase_if(k2.powers, [](const auto& e) { return e.first == VarId::lambda(); });
        out.add_term(std::move(k2), c);
    }
    return out;
}

QhPresentation qh_presentation(int m, int N) {
    if (!(1 <= m && m < N)) throw std::invalid_argument("qh_presentation: need 1 <= m < N");
    QhPresentation r;
    r.m = m;
    r.N = N;
    // Whitney recursion Y_k = s_1 Y_{k-1} - s_2 Y_{k-2} + ... + (-1)^{m-1} s_m Y_{k-m}
    r.Y.resize(N + 1);
    r.Y[0] = ExpPoly(1);
    for (int k = 1; k <= N; ++k) {
        ExpPoly acc;
        for (int i = 1; i <= m && i <= k; ++i) {
            ExpPoly t = ExpPoly::var(VarId::sigma(i)) * r.Y[k - i];
            if (i % 2 == 0) t = -t;
            acc += t;
        }
        r.Y[k] = std::move(acc);
    }
    for (int k = N - m + 1; k <= N - 1; ++k) r.relations.push_back(r.Y[k]);
    ExpPoly last = r.Y[N];
    ExpPoly q = ExpPoly::var(VarId::q());
    if ((m - 1) % 2 == 0) last -= q;
    else last += q;
    r.relations.push_back(std::move(last));
    return r;
}

namespace {
// substitute a power-only variable by a polynomial
ExpPoly subst_var(const ExpPoly& p, VarId v, const ExpPoly& value) {
    ExpPoly out;
    for (const auto& [k, c] : p.terms()) {
        int pw = k.power_of(v);
        MonoKey k2 = k;
        std::erase_if(k2.powers, [&](const auto& e) { return e.first == v; });
        ExpPoly t = ExpPoly::monomial(c, std::move(k2));
        for (int i = 0; i < pw; ++i) t *= value;
        out += t;
    }
    return out;
}

int weighted_degree(const MonoKey& k, int N) {
    int d = 0;
    for (const auto& [v, p] : k.powers) {
        if (v.kind == VarId::Kind::Sigma) d += v.a * p;
        else if (v.kind == VarId::Kind::Q) d += N * p;
        else throw std::logic_error("weighted_degree: unexpected variable " + v.str());
    }
    return d;
}

void enumerate_monomials(int m, int N, int degree, std::vector<MonoKey>& out) {
    // monomials in sigma_1..sigma_m, q of the given weighted degree
    MonoKey cur;
    std::function<void(int, int)> rec = [&](int var, int rem) {
        if (rem == 0) {
            MonoKey k = cur;
            out.push_back(std::move(k));
            return;
        }
        if (var > m + 1) return;
        int w = (var <= m) ? var : N;
        VarId v = (var <= m) ? VarId::sigma(var) : VarId::q();
        for (int p = 0; p * w <= rem; ++p) {
            if (p > 0) {
                cur.powers.push_back({v, p});
                std::sort(cur.powers.begin(), cur.powers.end());
            }
            rec(var + 1, rem - p * w);
            if (p > 0)
                std::erase_if(cur.powers, [&](const auto& e) { return e.first == v; });
        }
    };
    rec(1, degree);
}

GaussRat coeff_of(const ExpPoly& p, const MonoKey& k) {
    auto it = p.terms().find(k);
    if (it == p.terms().end()) return GaussRat(0);
    if (!it->second.is_constant()) throw std::logic_error("coeff_of: non-rational coefficient");
    return it->second.constant_value();
}
} // namespace

bool ideal_member(const ExpPoly& r, const std::vector<ExpPoly>& gens, int m, int N) {
    if (r.is_zero()) return true;
    int deg = -1;
    for (const auto& [k, c] : r.terms()) {
        int d = weighted_degree(k, N);
        if (deg == -1) deg = d;
        else if (deg != d) throw std::invalid_argument("ideal_member: not homogeneous");
    }
    // unknowns: coefficients of u_i over monomials of weight deg - deg(g_i)
    struct Unknown { size_t gen; MonoKey mono; };
    std::vector<Unknown> unknowns;
    std::vector<std::pair<size_t, MonoKey>> columns;
    std::map<MonoKey, size_t> rows; // target monomials of weight deg
    std::vector<MonoKey> degmonos;
    enumerate_monomials(m, N, deg, degmonos);
    for (const auto& k : degmonos) rows.emplace(k, rows.size());
    std::vector<std::vector<mpq_class>> A(rows.size());
    for (auto& row : A) row.assign(0, 0);
    std::vector<std::vector<mpq_class>> cols;
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        const ExpPoly& g = gens[gi];
        if (g.is_zero()) continue;
        int gdeg = weighted_degree(g.terms().begin()->first, N);
        if (gdeg > deg) continue;
        std::vector<MonoKey> umonos;
        enumerate_monomials(m, N, deg - gdeg, umonos);
        for (const auto& um : umonos) {
            std::vector<mpq_class> col(rows.size(), 0);
            ExpPoly prod = g * ExpPoly::monomial(ParamScalar(1), um);
            for (const auto& [k, c] : prod.terms()) {
                auto it = rows.find(k);
                if (it == rows.end()) throw std::logic_error("ideal_member: degree bookkeeping");
                if (!c.is_constant()) throw std::logic_error("ideal_member: non-rational");
                GaussRat g2 = c.constant_value();
                if (!g2.is_rational()) throw std::logic_error("ideal_member: complex coeff");
                col[it->second] = g2.re();
            }
            cols.push_back(std::move(col));
        }
    }
    std::vector<mpq_class> rhs(rows.size(), 0);
    for (const auto& [k, c] : r.terms()) {
        GaussRat g2 = c.constant_value();
        rhs[rows.at(k)] = g2.re();
    }
    // solve cols * u = rhs by Gaussian elimination over Q
    size_t nr = rows.size(), nc = cols.size();
    std::vector<std::vector<mpq_class>> Mx(nr, std::vector<mpq_class>(nc + 1, 0));
    for (size_t c = 0; c < nc; ++c)
        for (size_t rr = 0; rr < nr; ++rr) Mx[rr][c] = cols[c][rr];
    for (size_t rr = 0; rr < nr; ++rr) Mx[rr][nc] = rhs[rr];
    size_t rank = 0;
    for (size_t c = 0; c < nc && rank < nr; ++c) {
        size_t piv = rank;
        while (piv < nr && Mx[piv][c] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(Mx[piv], Mx[rank]);
        mpq_class d = Mx[rank][c];
        for (size_t j = c; j <= nc; ++j) Mx[rank][j] /= d;
        for (size_t rr2 = 0; rr2 < nr; ++rr2) {
            if (rr2 == rank) continue;
            mpq_class f = Mx[rr2][c];
            if (f == 0) continue;
            for (size_t j = c; j <= nc; ++j) Mx[rr2][j] -= f * Mx[rank][j];
        }
        ++rank;
    }
    for (size_t rr = rank; rr < nr; ++rr)
        if (Mx[rr][nc] != 0) return false;
    // also rows below rank with all-zero coefficients but nonzero rhs handled above;
    // rows among the first `rank` are consistent by construction
    for (size_t rr = 0; rr < nr; ++rr) {
        bool allzero = true;
        for (size_t j = 0; j < nc; ++j)
            if (Mx[rr][j] != 0) { allzero = false; break; }
        if (allzero && Mx[rr][nc] != 0) return false;
    }
    return true;
}

QhComparison compare_charpoly_qh(int m, int N) {
    ExpPoly cp = char_poly(specialized_lax(m, N));
    QhPresentation qh = qh_presentation(m, N);
    QhComparison best;
    for (int e1 : {1, -1})
        for (int e2 : {1, -1})
            for (int sv : {1, -1}) {
                ExpPoly c = cp.subst_vs(sv);
                // p_k -> e1 sigma_k (k <= m); p_N -> -e2 Y_1;
                // p_{N-j} -> e2 (-1)^j Y_{j+1} (1 <= j <= N-m-1)
                for (int k = 1; k <= m; ++k) {
                    ExpPoly v = ExpPoly::var(VarId::sigma(k));
                    if (e1 < 0) v = -v;
                    c = subst_var(c, VarId::p(k), v);
                }
                for (int a = m + 1; a <= N; ++a) {
                    int j = N - a;
                    ExpPoly v = qh.Y[N + 1 - a];
                    int sign = (j == 0) ? -1 : ((j % 2 == 0) ? 1 : -1);
                    sign *= e2;
                    if (sign < 0) v = -v;
                    c = subst_var(c, VarId::p(a), v);
                }
                std::vector<ExpPoly> coeffs;
                for (int dd = 0; dd < N; ++dd) {
                    ExpPoly cd = lambda_coefficient(c, dd);
                    if (!cd.is_zero()) coeffs.push_back(std::move(cd));
                }
                bool ok = true;
                for (const auto& cd : coeffs)
                    ok = ok && ideal_member(cd, qh.relations, m, N);
                for (const auto& g : qh.relations)
                    ok = ok && ideal_member(g, coeffs, m, N);
                if (ok) {
                    best.found = true;
                    best.e1 = e1;
                    best.e2 = e2;
                    best.vs_sign = sv;
                    std::ostringstream os;
                    os << "p_k -> " << (e1 > 0 ? "" : "-") << "sig[k] (k<=" << m << "), "
                       << "p_N -> " << (e2 > 0 ? "-" : "") << "Y_1, "
                       << "p_{N-j} -> " << (e2 > 0 ? "" : "-") << "(-1)^j Y_{j+1}, "
                       << "vs = " << sv;
                    best.substitution = os.str();
                    return best;
                }
            }
    return best;
}

} // namespace grtoda
