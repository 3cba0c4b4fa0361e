#include "grtoda/matelem.hpp"

namespace grtoda {

namespace {
ExpPoly hbar(int p = 1) { return ExpPoly(ParamScalar::h(-p)); }
ExpPoly xv(int k) { return ExpPoly::var(VarId::tor(k)); }
DiffOperator d(int k) { return DiffOperator::deriv(VarId::tor(k)); }
ExpPoly exp_N1(int N) {
    return ExpPoly::exp_linear({{VarId::tor(N), ExpExponent(mpq_class(1))},
                                {VarId::tor(1), ExpExponent(mpq_class(-1))}});
}

DiffOperator conj_prefactor(int m, int N, const DiffOperator& D) {
    // e^{-c x_1} D e^{c x_1}, c = m(N-m)/2
    mpq_class c(static_cast<long>(m) * (N - m), 2);
    ExpPoly pre = ExpPoly::exp_of(VarId::tor(1), ExpExponent(mpq_class(-c)));
    ExpPoly post = ExpPoly::exp_of(VarId::tor(1), ExpExponent(c));
    return compose(DiffOperator(pre), compose(D, DiffOperator(post)));
}
} // namespace

HamiltonianResult hamiltonian(int k, int m, int N, const ReduceOptions& opts) {
    if (k != 1 && k != 2) throw std::invalid_argument("hamiltonian: k must be 1 or 2");
    UElement c = (k == 1) ? casimir1(N) : casimir2(N);
    HamiltonianResult r;
    r.unconjugated = reduce_matrix_element(c, m, N, opts);
    r.op = conj_prefactor(m, N, r.unconjugated);
    return r;
}

DiffOperator printed_H1(int m, int N) {
    (void)m;
    return (d(1) + d(N)).mul_coeff(hbar());
}

DiffOperator printed_H2(int m, int N) {
    // transcription of the printed quadratic Hamiltonian; factor products are
    // read as operator compositions, left factor applied after the right
    DiffOperator H;
    DiffOperator block;
    block += compose(d(1), d(N));
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j) {
            DiffOperator a = d(i).mul_coeff(i == 1 ? ExpPoly(1) : -xv(i));
            DiffOperator b = d(j).mul_coeff(xv(j));
            block += compose(a, b);
        }
    for (int i = m + 1; i <= N; ++i)
        for (int j = i; j <= N; ++j) {
            DiffOperator a = d(i).mul_coeff(xv(i));
            DiffOperator b = d(j).mul_coeff(j == N ? ExpPoly(1) : xv(j));
            block += compose(a, b);
        }
    for (int k = 1; k <= m; ++k)
        block -= d(k).mul_coeff(xv(k) * ExpPoly(k - 1));
    for (int k = m + 1; k <= N; ++k)
        block -= d(k).mul_coeff(xv(k) * ExpPoly(N + 1 - k));
    H += block.mul_coeff(hbar(2));

    DiffOperator linear;
    for (int i = 1; i <= m - 1; ++i)
        linear += d(i + 1).mul_coeff(i == 1 ? ExpPoly(1) : -xv(i));
    for (int j = m + 1; j <= N - 1; ++j)
        linear += d(j).mul_coeff(j == N - 1 ? ExpPoly(1) : xv(j + 1));
    H -= linear.mul_coeff(hbar(1));

    // (-1)^{delta_{m,N-1} + eps} x_m^{1-delta_{m,1}} x_{m+1}^{1-delta_{m,N-1}} e^{x_N-x_1}
    ExpPoly pot = ExpPoly(ParamScalar::vs());
    if (m == N - 1) pot = -pot;
    if (m != 1) pot *= xv(m);
    if (m != N - 1) pot *= xv(m + 1);
    pot *= exp_N1(N);
    H += DiffOperator(pot);

    // - hbar^2/24 (N-1)(N-2)(N-3)
    long c = static_cast<long>(N - 1) * (N - 2) * (N - 3);
    H -= DiffOperator(hbar(2) * ExpPoly(ParamScalar::rational(mpq_class(c, 24))));
    return H;
}

HamiltonianTrace hamiltonian_trace(int m, int N, const ReduceOptions& opts) {
    HamiltonianTrace t;
    auto rho = [N](int i) { return mpq_class(N + 1 - 2 * i, 2); };
    UElement upper, mixed, linear;
    mpq_class sigma2(0);
    for (int i = 1; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            upper += UElement::word({{i, i}, {j, j}});
            mixed += UElement::word({{j, i}, {i, j}});
            sigma2 += rho(i) * rho(j);
        }
        linear += UElement::word({{i, i}}, ExpPoly(ParamScalar::rational(rho(i))));
    }
    t.c_upper = reduce_matrix_element(upper, m, N, opts);
    t.c_mixed = reduce_matrix_element(mixed, m, N, opts);
    t.c_linear = reduce_matrix_element(linear, m, N, opts);
    t.constant = ParamScalar::rational(sigma2);
    return t;
}

} // namespace grtoda
