#include "grtoda/matelem.hpp"

#include <cmath>

namespace grtoda {

namespace {
std::vector<std::vector<double>> zeros(int N) {
    return std::vector<std::vector<double>>(N, std::vector<double>(N, 0.0));
}

std::vector<std::vector<double>> matmul(const std::vector<std::vector<double>>& A,
                                        const std::vector<std::vector<double>>& B) {
    int N = static_cast<int>(A.size());
    auto C = zeros(N);
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k) {
            double a = A[i][k];
            if (a == 0.0) continue;
            for (int j = 0; j < N; ++j) C[i][j] += a * B[k][j];
        }
    return C;
}

std::vector<std::vector<double>> identity(int N) {
    auto I = zeros(N);
    for (int i = 0; i < N; ++i) I[i][i] = 1.0;
    return I;
}

std::vector<std::vector<double>> inverse(std::vector<std::vector<double>> A) {
    int N = static_cast<int>(A.size());
    auto I = identity(N);
    for (int col = 0; col < N; ++col) {
        int piv = col;
        for (int r = col + 1; r < N; ++r)
            if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
        std::swap(A[piv], A[col]);
        std::swap(I[piv], I[col]);
        double d = A[col][col];
        if (d == 0.0) throw std::runtime_error("inverse: singular matrix");
        for (int j = 0; j < N; ++j) { A[col][j] /= d; I[col][j] /= d; }
        for (int r = 0; r < N; ++r) {
            if (r == col) continue;
            double f = A[r][col];
            if (f == 0.0) continue;
            for (int j = 0; j < N; ++j) { A[r][j] -= f * A[col][j]; I[r][j] -= f * I[col][j]; }
        }
    }
    return I;
}
} // namespace

std::vector<std::vector<std::vector<double>>> h_generator_matrices(int m, int N) {
    std::vector<std::vector<std::vector<double>>> H(N + 1, zeros(N));
    for (int i = 1; i <= m; ++i) H[1][i - 1][i - 1] = 1.0;
    for (int i = 2; i <= m; ++i) H[i][i - 1][0] = 1.0;
    for (int j = m + 1; j <= N - 1; ++j) H[j][j - 1][N - 1] = 1.0;
    for (int i = m + 1; i <= N; ++i) H[N][i - 1][i - 1] = 1.0;
    return H;
}

GroupElement make_group_element(int m, int N, std::vector<double> x) {
    if (!(1 <= m && m < N)) throw std::invalid_argument("make_group_element: need 1 <= m < N");
    if (x.size() != static_cast<size_t>(N))
        throw std::invalid_argument("make_group_element: x must have length N");
    return {m, N, std::move(x)};
}

std::vector<std::vector<double>> GroupElement::matrix() const {
    auto M = zeros(N);
    for (int i = 1; i <= N; ++i) M[i - 1][i - 1] = std::exp(i <= m ? x[0] : x[N - 1]);
    for (int k = 2; k <= m; ++k) M[k - 1][0] = x[k - 1] * std::exp(x[0]);
    for (int j = m + 1; j <= N - 1; ++j) M[j - 1][N - 1] = x[j - 1] * std::exp(x[N - 1]);
    return M;
}

std::vector<std::vector<double>> GroupElement::matrix_by_series(int scaling) const {
    auto H = h_generator_matrices(m, N);
    auto A = zeros(N);
    for (int i = 1; i <= N; ++i)
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) A[r][c] += x[i - 1] * H[i][r][c];
    double s = std::pow(2.0, scaling);
    for (auto& row : A)
        for (auto& v : row) v /= s;
    // Taylor series of exp(A/2^scaling)
    auto E = identity(N);
    auto term = identity(N);
    for (int k = 1; k <= 20; ++k) {
        term = matmul(term, A);
        for (auto& row : term)
            for (auto& v : row) v /= k;
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) E[r][c] += term[r][c];
    }
    for (int k = 0; k < scaling; ++k) E = matmul(E, E);
    return E;
}

namespace {
// symbolic matrices over ExpPoly for the closed form of g and g^{-1}
using SymMatrix = std::vector<std::vector<ExpPoly>>;

SymMatrix sym_zeros(int N) { return SymMatrix(N, std::vector<ExpPoly>(N)); }

SymMatrix sym_mul(const SymMatrix& A, const SymMatrix& B) {
    int N = static_cast<int>(A.size());
    auto C = sym_zeros(N);
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k) {
            if (A[i][k].is_zero()) continue;
            for (int j = 0; j < N; ++j) {
                if (B[k][j].is_zero()) continue;
                C[i][j] += A[i][k] * B[k][j];
            }
        }
    return C;
}

SymMatrix sym_group(int m, int N, bool inv) {
    auto M = sym_zeros(N);
    auto diag = [&](int i) {
        int sgn = inv ? -1 : 1;
        VarId v = (i <= m) ? VarId::tor(1) : VarId::tor(N);
        return ExpPoly::exp_of(v, ExpExponent(mpq_class(sgn)));
    };
    for (int i = 1; i <= N; ++i) M[i - 1][i - 1] = diag(i);
    // g = D (I + U + V);  g^{-1} = (I - U - V) D^{-1}
    for (int k = 2; k <= m; ++k) {
        ExpPoly e = ExpPoly::var(VarId::tor(k));
        if (inv) e = -e;
        M[k - 1][0] = inv ? e * diag(1) : e * diag(1);
    }
    for (int j = m + 1; j <= N - 1; ++j) {
        ExpPoly e = ExpPoly::var(VarId::tor(j));
        if (inv) e = -e;
        M[j - 1][N - 1] = e * diag(N);
    }
    return M;
}
} // namespace

UElement adjoint_action(int i, int j, int m, int N, bool inverse_conj) {
    if (!(1 <= m && m < N) || i < 1 || i > N || j < 1 || j > N)
        throw std::invalid_argument("adjoint_action: bad indices");
    SymMatrix L = sym_group(m, N, inverse_conj);
    SymMatrix R = sym_group(m, N, !inverse_conj);
    auto E = sym_zeros(N);
    E[i - 1][j - 1] = ExpPoly(1);
    SymMatrix M = sym_mul(sym_mul(L, E), R);
    UElement u;
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b)
            if (!M[a - 1][b - 1].is_zero()) u.add_term({{a, b}}, M[a - 1][b - 1]);
    return u;
}

double adjoint_numeric_residual(int i, int j, int m, int N, const std::vector<double>& x) {
    GroupElement g = make_group_element(m, N, x);
    auto G = g.matrix_by_series();
    auto Ginv = inverse(G);
    auto E = zeros(N);
    E[i - 1][j - 1] = 1.0;
    auto want = matmul(matmul(Ginv, E), G);

    UElement u = adjoint_action(i, j, m, N, /*inverse_conj=*/true);
    std::map<VarId, std::complex<double>> vals;
    for (int k = 1; k <= N; ++k) vals[VarId::tor(k)] = x[k - 1];
    auto got = zeros(N);
    for (const auto& [w, c] : u.terms()) {
        if (w.size() != 1) throw std::logic_error("adjoint_action: non-linear output");
        auto v = c.eval(vals, {}, 1.0, 1);
        got[w[0].first - 1][w[0].second - 1] += v.real();
    }
    double res = 0.0;
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) res = std::max(res, std::abs(got[r][c] - want[r][c]));
    return res;
}

std::vector<std::pair<GaussRat, Piece>> decompose_generator(int m, int N, int a, int b) {
    auto in_minus = [&](int r, int c) {
        if (c == 1 && r >= m + 1) return true;
        if (2 <= c && c <= m && r >= c) return true;
        if (m + 1 <= c && c <= N - 1 && r > c) return true;
        return false;
    };
    auto in_plus = [&](int r, int c) {
        if (r < c && c <= m) return true;
        if (m + 1 <= c && c <= N - 1 && r <= c) return true;
        if (c == N && r <= m) return true;
        return false;
    };
    std::vector<std::pair<GaussRat, Piece>> out;
    if (in_minus(a, b)) { out.push_back({GaussRat(1), {Zone::Minus, a, b}}); return out; }
    if (in_plus(a, b)) { out.push_back({GaussRat(1), {Zone::Plus, a, b}}); return out; }
    if (a == 1 && b == 1) {
        out.push_back({GaussRat(1), {Zone::H, 1, 0}});
        for (int k = 2; k <= m; ++k) out.push_back({GaussRat(-1), {Zone::Minus, k, k}});
        return out;
    }
    if (a == N && b == N) {
        out.push_back({GaussRat(1), {Zone::H, N, 0}});
        for (int k = m + 1; k <= N - 1; ++k) out.push_back({GaussRat(-1), {Zone::Plus, k, k}});
        return out;
    }
    if (b == 1 && 2 <= a && a <= m) { out.push_back({GaussRat(1), {Zone::H, a, 0}}); return out; }
    if (b == N && m + 1 <= a && a <= N - 1) {
        out.push_back({GaussRat(1), {Zone::H, a, 0}});
        return out;
    }
    throw std::logic_error("decompose_generator: uncovered index pair");
}

} // namespace grtoda
