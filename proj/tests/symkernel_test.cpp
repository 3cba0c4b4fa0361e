#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grtoda/serialize.hpp"
#include "testutil.hpp"

using namespace grtoda;

namespace {
VarId x11 = VarId::gz(1, 1);
VarId x21 = VarId::gz(2, 1);
VarId t1 = VarId::tor(1);

ExpPoly e_of(VarId v, long c) { return ExpPoly::exp_of(v, ExpExponent(mpq_class(c))); }
} // namespace

TEST_CASE("gaussian rational arithmetic") {
    GaussRat i = GaussRat::i();
    CHECK(i * i == GaussRat(-1));
    GaussRat a(mpq_class(1, 2), mpq_class(3));
    CHECK((a * GaussRat(2)).re() == 1);
    CHECK((a / a).is_one());
    CHECK(GaussRat::parse("(1/2+3*i)") == a);
}

TEST_CASE("paramscalar normal form") {
    ParamScalar s = ParamScalar::vs() * ParamScalar::vs();
    CHECK(s == ParamScalar(1));                      // vs^2 = 1
    ParamScalar t = ParamScalar::vs() * ParamScalar::vs() * ParamScalar::vs();
    CHECK(t == ParamScalar::vs());
    CHECK(ParamScalar::h(1) * ParamScalar::h(-1) == ParamScalar(1));
    ParamScalar mu12 = ParamScalar::mu(1, 2) - ParamScalar::mu(2, 2);
    CHECK(mu12 == ParamScalar::nu(1) - ParamScalar::nu(2) + ParamScalar(1));
}

TEST_CASE("normalize: cancellation and like terms") {
    ExpPoly p = e_of(x11, 1) - e_of(x11, 1);
    CHECK(p.is_zero()); // e^{x11} - e^{x11} -> 0

    ExpPoly q = e_of(x11, 1) * ParamScalar(2) + e_of(x11, 1) * ParamScalar(3);
    ExpPoly expect = e_of(x11, 1) * ParamScalar(5);
    CHECK(q == expect); // 2 e^{x11} + 3 e^{x11} -> 5 e^{x11}

    ExpPoly r = e_of(x21, 1);
    r *= ParamScalar::vs() * ParamScalar::vs();
    CHECK(r == e_of(x21, 1)); // vs^2 e^{x21} -> e^{x21}
}

TEST_CASE("normalize is idempotent on random polys") {
    testutil::Rng rng(12345);
    for (int it = 0; it < 200; ++it) {
        ExpPoly p = rng.poly(4);
        ExpPoly q;
        for (const auto& [k, c] : p.terms()) q.add_term(k, c);
        CHECK(p == q);
    }
}

TEST_CASE("diff_apply: chain rule") {
    // d_t applied to exp(-h e^{-t}) -> h e^{-t} exp(-h e^{-t})
    ExpPoly phase = -(ExpPoly::exp_of(t1, ExpExponent(mpq_class(-1))) * ParamScalar::h());
    ExpFunction f(ExpPoly(1), {}, phase);
    ExpFunction df = DiffOperator::deriv(t1).apply(f);
    ExpPoly expect = ExpPoly::exp_of(t1, ExpExponent(mpq_class(-1)));
    expect *= ParamScalar::h();
    CHECK(df.prefactor() == expect);
    CHECK(df.same_phase(f));

    // identity operator
    ExpFunction idf = DiffOperator::identity().apply(f);
    CHECK(idf == f);
}

TEST_CASE("diff_apply: E_21 on psi_L for (1,2)") {
    // (e^{-x11}(mu1-mu2+d_{x11})) exp(-(mu1-mu2)x11 - h e^{x11})
    //   = -h exp(-(mu1-mu2)x11 - h e^{x11})
    ParamScalar mu12 = ParamScalar::mu(1, 2) - ParamScalar::mu(2, 2);
    ExpPoly coeff = ExpPoly::exp_of(x11, ExpExponent(mpq_class(-1)));
    DiffOperator E21 = DiffOperator(coeff * mu12) +
                       DiffOperator::term(coeff, {{x11, 1}});
    ExpPoly phase_exp = -(ExpPoly::exp_of(x11, ExpExponent(mpq_class(1))) * ParamScalar::h());
    ExpFunction psiL(ExpPoly(1), {{x11, -mu12}}, phase_exp);
    ExpFunction r = E21.apply(psiL);
    auto s = r.scalar_vs(psiL);
    REQUIRE(s.has_value());
    CHECK(*s == -ParamScalar::h());
}

TEST_CASE("diff_compose basics") {
    // d_t o e^{t} = e^{t} + e^{t} d_t
    DiffOperator dt = DiffOperator::deriv(t1);
    DiffOperator et = DiffOperator(e_of(t1, 1));
    DiffOperator c = compose(dt, et);
    DiffOperator expect = DiffOperator(e_of(t1, 1)) + DiffOperator::term(e_of(t1, 1), {{t1, 1}});
    CHECK(c == expect);

    // d_t o d_t = d_t^2
    CHECK(compose(dt, dt) == DiffOperator::deriv(t1, 2));

    // (e^{-t} d_t) o (e^{t} d_t) = d_t + d_t^2
    DiffOperator a = DiffOperator::term(e_of(t1, -1), {{t1, 1}});
    DiffOperator b = DiffOperator::term(e_of(t1, 1), {{t1, 1}});
    CHECK(compose(a, b) == DiffOperator::deriv(t1) + DiffOperator::deriv(t1, 2));
}

TEST_CASE("diff_commutator basics") {
    DiffOperator dt = DiffOperator::deriv(t1);
    DiffOperator et = DiffOperator(e_of(t1, 1));
    CHECK(commutator(dt, et) == DiffOperator(e_of(t1, 1))); // [d_t, e^t] = e^t
    DiffOperator ds = DiffOperator::deriv(VarId::tor(2));
    CHECK(commutator(dt, ds).is_zero());
    // [d_t, t] = 1
    CHECK(commutator(dt, DiffOperator(ExpPoly::var(t1))) == DiffOperator::identity());
}

TEST_CASE("compose is associative; commutator antisymmetric (random)") {
    testutil::Rng rng(777);
    for (int it = 0; it < 40; ++it) {
        DiffOperator a = rng.op(), b = rng.op(), c = rng.op();
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(commutator(a, a).is_zero());
    }
}

TEST_CASE("diff_apply is linear and phase-preserving; oracle equivalence") {
    testutil::Rng rng(424242);
    for (int it = 0; it < 60; ++it) {
        // random first-order operator and random ExpFunction
        DiffOperator D = rng.op(2, 1);
        ExpPoly pre = rng.poly(2);
        std::map<VarId, ParamScalar> lin;
        lin[rng.var()] = rng.scalar();
        ExpPoly pe = rng.poly(2, /*rational_exps=*/true, /*with_powers=*/false);
        ExpPoly phase_exp;
        for (const auto& [k, c] : pe.terms()) {
            bool ok = k.powers.empty();
            for (const auto& [v, e] : k.exps) ok = ok && e.is_rational();
            if (ok) phase_exp.add_term(k, c);
        }
        ExpFunction f(pre, lin, phase_exp);
        ExpFunction Df = D.apply(f);
        CHECK(Df.same_phase(f));

        // independent term-by-term chain-rule oracle for the prefactor
        ExpPoly want;
        for (const auto& [k, c] : D.terms()) {
            if (k.empty()) { want += c * pre; continue; }
            REQUIRE(k.size() == 1);
            REQUIRE(k[0].second == 1);
            VarId v = k[0].first;
            ExpPoly dP = pre.diff(v);
            ExpPoly Lv;
            auto it = lin.find(v);
            if (it != lin.end()) Lv = ExpPoly(it->second);
            ExpPoly dE = phase_exp.diff(v);
            want += c * (dP + pre * Lv + pre * dE);
        }
        CHECK(Df.prefactor() == want);

        // linearity in the function argument
        ExpPoly pre2 = rng.poly(2);
        ExpFunction g(pre2, lin, phase_exp);
        ExpFunction sum = f.add_same_phase(g);
        CHECK(D.apply(sum).prefactor() == D.apply(f).prefactor() + D.apply(g).prefactor());
    }
}

TEST_CASE("serialization round-trips") {
    testutil::Rng rng(99);
    for (int it = 0; it < 150; ++it) {
        ExpPoly p = rng.poly(4);
        std::string s = to_text(p);
        ExpPoly q = parse_exppoly(s);
        CHECK(q == p);
        if (q != p) { MESSAGE(s); break; }
    }
    for (int it = 0; it < 80; ++it) {
        DiffOperator d = rng.op(3, 2);
        std::string s = to_text(d);
        DiffOperator e = parse_diffop(s);
        CHECK(e == d);
        if (e != d) { MESSAGE(s); break; }
    }
}

TEST_CASE("serialization is deterministic") {
    testutil::Rng rng(5);
    ExpPoly p = rng.poly(4);
    ExpPoly q = p;
    CHECK(to_text(p) == to_text(q));
    CHECK(to_text(parse_exppoly(to_text(p))) == to_text(p));
}

TEST_CASE("phase_exp rejects non-rational exponents") {
    ExpPoly bad = ExpPoly::exp_of(x11, ExpExponent::nu_term(1));
    CHECK_THROWS_AS(ExpFunction(ExpPoly(1), {}, bad), std::invalid_argument);
    ExpPoly bad2 = ExpPoly::var(x11);
    CHECK_THROWS_AS(ExpFunction(ExpPoly(1), {}, bad2), std::invalid_argument);
}

TEST_CASE("exppoly numeric eval") {
    ExpPoly p = e_of(t1, 1) + ExpPoly::var(t1, 2);
    std::map<VarId, std::complex<double>> vals{{t1, 0.5}};
    auto v = p.eval(vals, {}, 1.0, 1);
    CHECK(v.real() == doctest::Approx(std::exp(0.5) + 0.25));
}
