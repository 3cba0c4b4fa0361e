#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grtoda/realization.hpp"

using namespace grtoda;

namespace {
bool in_character_range(const ParamScalar& s) {
    // {0, +-h, +-vs*h}
    if (s.is_zero()) return true;
    ParamScalar h = ParamScalar::h();
    ParamScalar vsh = ParamScalar::vs() * ParamScalar::h();
    return s == h || s == -h || s == vsh || s == -vsh;
}
} // namespace

TEST_CASE("chevalley generators at N=2") {
    GeneratorTable g(2);
    // E_21 = e^{-x11} (mu1 - mu2 + d_{x11})
    ParamScalar mu12 = ParamScalar::mu(1, 2) - ParamScalar::mu(2, 2);
    ExpPoly em = ExpPoly::exp_of(VarId::gz(1, 1), ExpExponent(mpq_class(-1)));
    DiffOperator want = DiffOperator(em * mu12) + DiffOperator::term(em, {{VarId::gz(1, 1), 1}});
    CHECK(g.E(2, 1) == want);
    // E_11 + E_22 = mu_1 + mu_2 (all derivative terms cancel)
    DiffOperator sum = g.E(1, 1) + g.E(2, 2);
    CHECK(sum == DiffOperator(ExpPoly(ParamScalar::mu(1, 2) + ParamScalar::mu(2, 2))));
}

TEST_CASE("gl_3 relation [E12,E23] = E13") {
    GeneratorTable g(3);
    CHECK(commutator(g.E(1, 2), g.E(2, 3)) == g.E(1, 3));
}

TEST_CASE("chevalley relations hold for N <= 4") {
    for (int N = 2; N <= 4; ++N) {
        RelationReport rep = verify_chevalley_relations(N);
        INFO("N=", N);
        CHECK(rep.all_ok());
        if (!rep.all_ok())
            for (const auto& i : rep.instances)
                if (!i.ok()) MESSAGE(i.relation_id, i.indices, ": ", i.residual_text);
    }
}

TEST_CASE("commutator closure vs path-sum construction, N <= 4") {
    for (int N = 2; N <= 4; ++N) {
        GeneratorTable g(N);
        for (int n = 2; n <= N; ++n) {
            INFO("E_", n, ",1  N=", N);
            CHECK(GeneratorTable::path_E_n1(N, n) == g.E(n, 1));
        }
        for (int n = 1; n <= N - 1; ++n) {
            INFO("E_", n, ",", N, "  N=", N);
            CHECK(GeneratorTable::path_E_nN(N, n) == g.E(n, N));
        }
    }
}

TEST_CASE("whittaker vectors: printed small cases") {
    // psi_R^{(1,2)} = exp(-h e^{-x11})
    WhittakerVector r12 = build_whittaker_vector(Side::R, 1, 2);
    CHECK(r12.value.phase_linear().empty());
    ExpPoly want = ExpPoly::exp_of(VarId::gz(1, 1), ExpExponent(mpq_class(-1)));
    want *= -ParamScalar::h();
    CHECK(r12.value.phase_exp() == want);
    CHECK(r12.normalization.empty()); // C^R_{1,2} = 1 (empty product)

    // psi_L^{(1,2)} = exp(-(mu1-mu2) x11 - h e^{x11})
    WhittakerVector l12 = build_whittaker_vector(Side::L, 1, 2);
    REQUIRE(l12.value.phase_linear().size() == 1);
    ParamScalar mu12 = ParamScalar::mu(1, 2) - ParamScalar::mu(2, 2);
    CHECK(l12.value.phase_linear().at(VarId::gz(1, 1)) == -mu12);
    ExpPoly wantL = ExpPoly::exp_of(VarId::gz(1, 1), ExpExponent(mpq_class(1)));
    wantL *= -ParamScalar::h();
    CHECK(l12.value.phase_exp() == wantL);

    // C^R_{m,N} has one factor per pair m < i < j <= N
    WhittakerVector r24 = build_whittaker_vector(Side::R, 2, 4);
    CHECK(r24.normalization.size() == 1); // pairs (3,4)
    CHECK(r24.normalization[0].gamma_argument ==
          ParamScalar::rational(mpq_class(1, 2)) - ParamScalar::nu(4));
}

TEST_CASE("whittaker verification (1,2): signs recorded") {
    CharacterTable t = verify_whittaker(1, 2);
    REQUIRE(t.entries.size() == 2);
    CHECK(t.all_scalar());
    // E_21 psi_L = -h psi_L, printed +h: sign recorded, not a failure
    CHECK(t.entries[0].realized == -ParamScalar::h());
    CHECK(t.entries[0].printed == ParamScalar::h());
    CHECK_FALSE(t.entries[0].match);
    // E_12 psi_R = -h psi_R vs printed vs*h
    CHECK(t.entries[1].realized == -ParamScalar::h());
    CHECK(t.entries[1].printed == ParamScalar::vs() * ParamScalar::h());
}

TEST_CASE("whittaker scalar action and zero pattern, N <= 4") {
    for (int N = 2; N <= 4; ++N) {
        for (int m = 1; m < N; ++m) {
            CharacterTable t = verify_whittaker(m, N);
            INFO("(m,N)=(", m, ",", N, ")");
            CHECK(t.all_scalar());
            CHECK(t.zero_pattern_ok());
            for (const auto& e : t.entries) {
                CHECK(in_character_range(e.realized));
                // realized nonzero extremal characters all equal -h
                if (!e.realized.is_zero()) CHECK(e.realized == -ParamScalar::h());
            }
        }
    }
}

TEST_CASE("character property: commutators act by zero") {
    for (int N = 2; N <= 4; ++N) {
        for (int m = 1; m < N; ++m) {
            GeneratorTable g(N);
            WhittakerVector psiL = build_whittaker_vector(Side::L, m, N);
            WhittakerVector psiR = build_whittaker_vector(Side::R, m, N);
            auto gm = nminus_generators(m, N);
            for (size_t i = 0; i < gm.size(); ++i)
                for (size_t j = i + 1; j < gm.size(); ++j) {
                    DiffOperator c = commutator(g.E(gm[i].first, gm[i].second),
                                                g.E(gm[j].first, gm[j].second));
                    ExpFunction r = c.apply(psiL.value);
                    auto s = r.scalar_vs(psiL.value);
                    REQUIRE(s.has_value());
                    CHECK(s->is_zero());
                }
            auto gp = nplus_generators(m, N);
            for (size_t i = 0; i < gp.size(); ++i)
                for (size_t j = i + 1; j < gp.size(); ++j) {
                    DiffOperator c = commutator(g.E(gp[i].first, gp[i].second),
                                                g.E(gp[j].first, gp[j].second));
                    ExpFunction r = c.apply(psiR.value);
                    auto s = r.scalar_vs(psiR.value);
                    REQUIRE(s.has_value());
                    CHECK(s->is_zero());
                }
        }
    }
}

TEST_CASE("cartan annihilation") {
    for (int N = 3; N <= 4; ++N)
        for (int m = 1; m < N; ++m) {
            GeneratorTable g(N);
            WhittakerVector psiL = build_whittaker_vector(Side::L, m, N);
            WhittakerVector psiR = build_whittaker_vector(Side::R, m, N);
            for (int k = 2; k <= m; ++k) {
                auto s = g.E(k, k).apply(psiL.value).scalar_vs(psiL.value);
                REQUIRE(s.has_value());
                CHECK(s->is_zero());
            }
            for (int a = m + 1; a <= N - 1; ++a) {
                auto s = g.E(a, a).apply(psiR.value).scalar_vs(psiR.value);
                REQUIRE(s.has_value());
                CHECK(s->is_zero());
            }
        }
}
