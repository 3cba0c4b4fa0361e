#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "grtoda/matelem.hpp"

using namespace grtoda;

namespace {
ExpPoly hbar(int p = 1) { return ExpPoly(ParamScalar::h(-p)); }
DiffOperator d(int k) { return DiffOperator::deriv(VarId::tor(k)); }
ExpPoly xv(int k) { return ExpPoly::var(VarId::tor(k)); }
ExpPoly exp_N1(int N) {
    return ExpPoly::exp_linear({{VarId::tor(N), ExpExponent(mpq_class(1))},
                                {VarId::tor(1), ExpExponent(mpq_class(-1))}});
}
} // namespace

TEST_CASE("uelement PBW normal form and centrality") {
    for (int N = 2; N <= 3; ++N) {
        UElement c2 = casimir2(N);
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) {
                INFO("N=", N, " E(", i, ",", j, ")");
                CHECK(c2.commutator_with(UElement::generator(i, j), N).is_zero());
            }
        CHECK(casimir1(N).commutator_with(UElement::generator(1, std::min(2, N)), N).is_zero());
    }
    // PBW reordering: E_12 E_21 = E_21 E_12 + E_11 - E_22 in U(gl_2)
    UElement lhs = UElement::word({{1, 2}, {2, 1}}).normalize(2);
    UElement rhs = UElement::word({{2, 1}, {1, 2}}) + UElement::generator(1, 1) -
                   UElement::generator(2, 2);
    CHECK(lhs == rhs.normalize(2));
}

TEST_CASE("adjoint action printed cases") {
    int m = 3, N = 5;
    // g^{-1} E_11 g = E_11 - sum_{k=2}^m x_k E_{k1}
    UElement got = adjoint_action(1, 1, m, N);
    UElement want = UElement::generator(1, 1);
    for (int k = 2; k <= m; ++k) want -= UElement::word({{k, 1}}, xv(k));
    CHECK(got == want);
    // g^{-1} E_ab g = E_ab + x_b E_aN for a,b in the upper-right commutative block
    for (int a = m + 1; a <= N - 1; ++a)
        for (int b = a; b <= N - 1; ++b) {
            UElement g2 = adjoint_action(a, b, m, N);
            UElement w2 = UElement::generator(a, b) + UElement::word({{a, N}}, xv(b));
            INFO("a=", a, " b=", b);
            CHECK(g2 == w2);
        }
    // g^{-1} E_{k,n} g = E_{k,n} + x_n E_{k,1}, k,n = 2..m
    for (int k = 2; k <= m; ++k)
        for (int n = 2; n <= m; ++n) {
            UElement g3 = adjoint_action(k, n, m, N);
            UElement w3 = UElement::generator(k, n) + UElement::word({{k, 1}}, xv(n));
            CHECK(g3 == w3);
        }
    // g^{-1} E_{1,a} g = e^{x_N-x_1} [E_{1a} + x_a E_{1N} - sum_k x_k (E_{ka} + x_a E_{kN})]
    for (int a = m + 1; a <= N - 1; ++a) {
        UElement g4 = adjoint_action(1, a, m, N);
        UElement w4 = UElement::generator(1, a) + UElement::word({{1, N}}, xv(a));
        for (int k = 2; k <= m; ++k) {
            w4 -= UElement::word({{k, a}}, xv(k));
            w4 -= UElement::word({{k, N}}, xv(k) * xv(a));
        }
        UElement scaled;
        for (const auto& [w, c] : w4.terms()) scaled.add_term(w, c * exp_N1(N));
        CHECK(g4 == scaled);
    }
}

TEST_CASE("adjoint action numeric cross-check") {
    std::mt19937 eng(2024);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int N = 2; N <= 5; ++N)
        for (int m = 1; m < N; ++m)
            for (int rep = 0; rep < 3; ++rep) {
                std::vector<double> x(N);
                for (auto& v : x) v = dist(eng);
                for (int trial = 0; trial < 4; ++trial) {
                    int i = 1 + eng() % N, j = 1 + eng() % N;
                    double r = adjoint_numeric_residual(i, j, m, N, x);
                    INFO("(m,N)=(", m, ",", N, ") E(", i, ",", j, ")");
                    CHECK(r <= 1e-10);
                }
            }
}

TEST_CASE("decompose_generator covers gl and respects zones") {
    for (int N = 2; N <= 6; ++N)
        for (int m = 1; m < N; ++m) {
            int minus = 0, plus = 0;
            for (int a = 1; a <= N; ++a)
                for (int b = 1; b <= N; ++b) {
                    auto pieces = decompose_generator(m, N, a, b);
                    CHECK(!pieces.empty());
                    for (const auto& [c, p] : pieces) {
                        if (p.zone == Zone::Minus && pieces.size() == 1) ++minus;
                        if (p.zone == Zone::Plus && pieces.size() == 1) ++plus;
                    }
                }
            // pure minus and pure plus spans have dimension N(N-1)/2 each
            CHECK(minus == N * (N - 1) / 2);
            CHECK(plus == N * (N - 1) / 2);
        }
}

TEST_CASE("reduce: matrix element basics") {
    for (int N = 2; N <= 4; ++N)
        for (int m = 1; m < N; ++m) {
            // <C_1 g> = hbar (d_1 + d_N), exactly
            DiffOperator r = reduce_matrix_element(casimir1(N), m, N);
            DiffOperator want = (d(1) + d(N)).mul_coeff(hbar());
            INFO("(m,N)=(", m, ",", N, ")");
            CHECK(r == want);
        }
    CHECK_THROWS_AS(
        reduce_matrix_element(UElement::word({{1, 1}, {1, 1}, {1, 1}}), 1, 2),
        std::invalid_argument);
}

TEST_CASE("reduce is consistent across word reorderings") {
    // <(E_ab E_cd) g> - <(E_cd E_ab) g> = <[E_ab,E_cd] g>, and the reduction
    // of a word equals the reduction of its PBW normal form
    for (int N = 2; N <= 4; ++N)
        for (int m = 1; m < N; ++m)
            for (int a = 1; a <= N; ++a)
                for (int b = 1; b <= N; ++b)
                    for (int c = 1; c <= N; ++c)
                        for (int dd = 1; dd <= N; ++dd) {
                            UElement xy = UElement::word({{a, b}, {c, dd}});
                            UElement yx = UElement::word({{c, dd}, {a, b}});
                            UElement br = xy.commutator_with(UElement(ExpPoly(1)), N); // zero
                            UElement bracket =
                                UElement::word({{a, b}}).commutator_with(
                                    UElement::word({{c, dd}}), N);
                            DiffOperator lhs = reduce_matrix_element(xy, m, N) -
                                               reduce_matrix_element(yx, m, N);
                            DiffOperator rhs = reduce_matrix_element(bracket, m, N);
                            INFO("(m,N)=(", m, ",", N, ") [E", a, b, ",E", c, dd, "]");
                            CHECK(lhs == rhs);
                            DiffOperator direct = reduce_matrix_element(xy, m, N);
                            DiffOperator via_pbw =
                                reduce_matrix_element(xy.normalize(N), m, N);
                            CHECK(direct == via_pbw);
                            (void)br;
                        }
}

TEST_CASE("lax operator (1,2)") {
    LaxMatrix L = lax_operator(1, 2);
    CHECK(L.entry[0][0] == d(1).mul_coeff(hbar()));
    CHECK(L.entry[1][1] == d(2).mul_coeff(hbar()));
    // realized L_21 = -h (printed -1: unit deviation only)
    CHECK(L.entry[1][0] == DiffOperator(ExpPoly(-ParamScalar::h())));
    // realized L_12 = vs h e^{x2-x1}
    ExpPoly want = ExpPoly(ParamScalar::vs() * ParamScalar::h()) * exp_N1(2);
    CHECK(L.entry[0][1] == DiffOperator(want));
    // printed table at (1,2): [[hbar d1, -vs e^{x2-x1}], [-1, hbar d2]]
    auto T = printed_lax_table(1, 2);
    CHECK(T[0][0].op == d(1).mul_coeff(hbar()));
    CHECK(T[0][1].op == DiffOperator(-(ExpPoly(ParamScalar::vs()) * exp_N1(2))));
    CHECK(T[1][0].op == DiffOperator(ExpPoly(-1)));
    CHECK(T[1][1].op == d(2).mul_coeff(hbar()));
}

TEST_CASE("lax conformance: zero pattern and unit-level agreement, N <= 4") {
    for (int N = 2; N <= 4; ++N)
        for (int m = 1; m < N; ++m) {
            auto conf = lax_conformance(m, N);
            for (const auto& e : conf) {
                INFO("(m,N)=(", m, ",", N, ") L[", e.i, ",", e.j, "]");
                CHECK(e.zero_ok);
                if (e.specified && !e.zero_required) {
                    CHECK(e.support_match);
                    CHECK(e.all_unit);
                }
            }
        }
}

TEST_CASE("printed lax specific entries") {
    auto T = printed_lax_table(2, 4);
    CHECK(T[2][0].op == DiffOperator(ExpPoly(-1)));   // L_{m+1,1} = -1
    CHECK(T[3][3].op == d(4).mul_coeff(hbar()) - d(3).mul_coeff(xv(3))); // L_NN
    CHECK(T[1][3].op == DiffOperator(-(ExpPoly(ParamScalar::vs()) * exp_N1(4)))); // L_{m,N}
}

TEST_CASE("hamiltonians: H1 exact, commutativity, H2 anchors") {
    for (int N = 2; N <= 4; ++N)
        for (int m = 1; m < N; ++m) {
            INFO("(m,N)=(", m, ",", N, ")");
            HamiltonianResult h1 = hamiltonian(1, m, N);
            CHECK(h1.unconjugated == (d(1) + d(N)).mul_coeff(hbar()));
            // conjugation adds the constant hbar m(N-m)/2
            ExpPoly cshift = hbar() * ExpPoly(ParamScalar::rational(
                                          mpq_class(static_cast<long>(m) * (N - m), 2)));
            CHECK(h1.op == h1.unconjugated + DiffOperator(cshift));

            HamiltonianResult h2 = hamiltonian(2, m, N);
            DiffOperator c = commutator(h1.op, h2.op);
            CHECK(c.is_zero());
            // realized-character branch commutes as well
            ReduceOptions real_opts{.printed_characters = false};
            HamiltonianResult h2r = hamiltonian(2, m, N, real_opts);
            CHECK(commutator(h1.op, h2r.op).is_zero());

            // d1 dN coefficient is hbar^2 in both realized and printed H2
            DiffOperator printed = printed_H2(m, N);
            DerivKey mixed{{VarId::tor(1), 1}, {VarId::tor(N), 1}};
            if (N == 2) mixed = DerivKey{{VarId::tor(1), 1}, {VarId::tor(2), 1}};
            CHECK(h2.op.coefficient(mixed) == hbar(2));
            CHECK(printed.coefficient(mixed) == hbar(2));
        }
}

TEST_CASE("H2 vs printed: potential term matches up to unit; discrepancies recorded") {
    for (int N = 2; N <= 4; ++N)
        for (int m = 1; m < N; ++m) {
            HamiltonianResult h2 = hamiltonian(2, m, N);
            DiffOperator printed = printed_H2(m, N);
            // potential skeleton x_m^{..} x_{m+1}^{..} e^{x_N-x_1}
            MonoKey pk;
            if (m != 1) pk.powers.push_back({VarId::tor(m), 1});
            if (m != N - 1) pk.powers.push_back({VarId::tor(m + 1), 1});
            std::sort(pk.powers.begin(), pk.powers.end());
            ExpExponent plus1(mpq_class(1)), minus1(mpq_class(-1));
            pk.exps.push_back({VarId::tor(1), minus1});
            pk.exps.push_back({VarId::tor(N), plus1});
            std::sort(pk.exps.begin(), pk.exps.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            auto get = [&](const DiffOperator& op) {
                ExpPoly c = op.coefficient({});
                auto it = c.terms().find(pk);
                return it == c.terms().end() ? ParamScalar() : it->second;
            };
            ParamScalar rp = get(h2.op), pp = get(printed);
            INFO("(m,N)=(", m, ",", N, ")");
            CHECK(!rp.is_zero());
            CHECK(!pp.is_zero());
            bool unit_found = false;
            for (int z = -4; z <= 4 && !unit_found; ++z)
                for (int e = 0; e <= 1 && !unit_found; ++e)
                    for (int s : {1, -1}) {
                        ParamScalar u = ParamScalar(GaussRat(s)) * ParamScalar::h(z);
                        if (e) u *= ParamScalar::vs();
                        if (rp == u * pp) { unit_found = true; break; }
                    }
            CHECK(unit_found);
            // printed constant term carries -(hbar^2/24)(N-1)(N-2)(N-3)
            ParamScalar cexp = ParamScalar::h(-2) *
                               ParamScalar::rational(
                                   mpq_class(-static_cast<long>(N - 1) * (N - 2) * (N - 3), 24));
            if ((N - 1) * (N - 2) * (N - 3) != 0) {
                ExpPoly c0 = printed.coefficient({});
                auto cterm = c0.terms().find(MonoKey{});
                REQUIRE(cterm != c0.terms().end());
                CHECK(cterm->second == cexp);
            }
            // the comparison itself is well-formed and records every skeleton
            EntryConformance cmp = compare_operators(h2.op, printed);
            CHECK(!cmp.ratios.empty());
        }
}

TEST_CASE("hamiltonian trace consistency") {
    // C_2 = upper - mixed - linear + sigma_2(rho) reassembles the reduction
    for (auto [m, N] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}}) {
        HamiltonianTrace t = hamiltonian_trace(m, N);
        DiffOperator sum = t.c_upper - t.c_mixed - t.c_linear + DiffOperator(ExpPoly(t.constant));
        DiffOperator c2 = reduce_matrix_element(casimir2(N), m, N);
        INFO("(m,N)=(", m, ",", N, ")");
        CHECK(sum == c2);
    }
}

TEST_CASE("specialized lax and characteristic polynomials") {
    ExpPoly lam = ExpPoly::var(VarId::lambda());
    ExpPoly q = ExpPoly::var(VarId::q());
    ExpPoly vs(ParamScalar::vs());
    auto P = [](int k) { return ExpPoly::var(VarId::p(k)); };

    // det(lambda I) = lambda^N
    PolyMatrix Z(3, std::vector<ExpPoly>(3));
    CHECK(char_poly(Z) == ExpPoly::var(VarId::lambda(), 3));

    // (1,2): (lam + p1)(lam + p2) - vs q
    ExpPoly cp12 = char_poly(specialized_lax(1, 2));
    ExpPoly want12 = (lam + P(1)) * (lam + P(2)) - vs * q;
    CHECK(cp12 == want12);

    // (2,4): (lam^2 + p1 lam + p2)(lam^2 + p4 lam - p3) - vs q
    ExpPoly cp24 = char_poly(specialized_lax(2, 4));
    ExpPoly want24 = (lam * lam + P(1) * lam + P(2)) * (lam * lam + P(4) * lam - P(3)) - vs * q;
    CHECK(cp24 == want24);

    // p = 0 specialization has exactly two monomials, lambda^N - vs q
    for (int N = 2; N <= 6; ++N)
        for (int m = 1; m < N; ++m) {
            ExpPoly cp = char_poly(specialized_lax(m, N));
            for (int k = 1; k <= N; ++k) cp = cp.subst_zero(VarId::p(k));
            INFO("(m,N)=(", m, ",", N, ")");
            CHECK(cp.size() == 2);
            CHECK(cp == ExpPoly::var(VarId::lambda(), N) - vs * q);
        }
}

TEST_CASE("quantum cohomology presentation") {
    // (1,2): sigma^2 = q; (1,3): sigma^3 = q
    QhPresentation q12 = qh_presentation(1, 2);
    REQUIRE(q12.relations.size() == 1);
    CHECK(q12.relations[0] ==
          ExpPoly::var(VarId::sigma(1), 2) - ExpPoly::var(VarId::q()));
    QhPresentation q13 = qh_presentation(1, 3);
    REQUIRE(q13.relations.size() == 1);
    CHECK(q13.relations[0] ==
          ExpPoly::var(VarId::sigma(1), 3) - ExpPoly::var(VarId::q()));
    // (2,4): Y_3 = s1^3 - 2 s1 s2, Y_4 = s1^4 - 3 s1^2 s2 + s2^2
    QhPresentation q24 = qh_presentation(2, 4);
    ExpPoly s1 = ExpPoly::var(VarId::sigma(1)), s2 = ExpPoly::var(VarId::sigma(2));
    CHECK(q24.Y[3] == s1 * s1 * s1 - ExpPoly(2) * s1 * s2);
    CHECK(q24.Y[4] == s1 * s1 * s1 * s1 - ExpPoly(3) * s1 * s1 * s2 + s2 * s2);
}

TEST_CASE("charpoly vs quantum cohomology") {
    for (auto [m, N, expect_vs] : std::vector<std::tuple<int, int, int>>{
             {1, 2, -1}, {1, 3, 1}, {2, 4, 1}, {2, 5, -1}}) {
        QhComparison c = compare_charpoly_qh(m, N);
        INFO("(m,N)=(", m, ",", N, ")");
        CHECK(c.found);
        CHECK(c.vs_sign == expect_vs); // vs = (-1)^{N-m}
    }
}

TEST_CASE("ideal membership solver") {
    // s1^2 - q is in (s1^2 - q); s1^3 is not in (s1^2 - q)... in weighted-homog
    // terms: s1^2 and q both have weight 2 for (1,2)
    ExpPoly s1 = ExpPoly::var(VarId::sigma(1));
    ExpPoly q = ExpPoly::var(VarId::q());
    ExpPoly g = s1 * s1 - q;
    CHECK(ideal_member(g, {g}, 1, 2));
    CHECK(ideal_member(s1 * g, {g}, 1, 2));
    CHECK_FALSE(ideal_member(s1 * s1, {g}, 1, 2));
    CHECK_FALSE(ideal_member(q, {g}, 1, 2));
}
