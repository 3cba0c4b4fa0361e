#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grtoda/paths.hpp"

using namespace grtoda;

TEST_CASE("gz graph structure") {
    CHECK_THROWS_AS(build_gz_graph(0), std::invalid_argument);
    GZGraph g2 = build_gz_graph(2);
    CHECK(g2.vertices.size() == 3); // N(N+1)/2
    // arrows {x21 -> x11, x11 -> x22}
    REQUIRE(g2.arrows.size() == 2);
    CHECK(g2.arrows[0] == std::make_pair(std::make_pair(2, 1), std::make_pair(1, 1)));
    CHECK(g2.arrows[1] == std::make_pair(std::make_pair(1, 1), std::make_pair(2, 2)));
    CHECK(build_gz_graph(4).vertices.size() == 10);

    // regenerated pattern oracle: independent enumeration of the arrow set
    for (int N = 1; N <= 8; ++N) {
        GZGraph g = build_gz_graph(N);
        CHECK(g.vertices.size() == static_cast<size_t>(N * (N + 1) / 2));
        std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> expect;
        for (const auto& [n, j] : g.vertices) {
            if (j == 1 && n >= 2) expect.insert({{n, 1}, {n - 1, 1}});
            if (n + 1 <= N) expect.insert({{n, j}, {n + 1, j + 1}});
        }
        std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> got(g.arrows.begin(),
                                                                          g.arrows.end());
        CHECK(got == expect);
    }
}

TEST_CASE("gr graph structure and counts") {
    CHECK_THROWS_AS(build_gr_graph(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_gr_graph(3, 3), std::invalid_argument);

    GrGraph g12 = build_gr_graph(1, 2);
    CHECK(g12.interior == std::vector<std::pair<int, int>>{{1, 1}});
    REQUIRE(g12.arrows.size() == 2); // x11 -> 0 and x21 -> x11

    GrGraph g13 = build_gr_graph(1, 3);
    CHECK(g13.interior.size() == 2);
    CHECK(g13.arrows.size() == 3);
    // arrow-exponential product over the full cycle = e^{-x31}
    ExpPoly cyc = cycle_product(g13);
    CHECK(cyc == ExpPoly::exp_of(VarId::gz(3, 1), ExpExponent(mpq_class(-1))));

    CHECK(build_gr_graph(2, 4).interior.size() == 4);

    for (int N = 2; N <= 8; ++N)
        for (int m = 1; m < N; ++m) {
            GrGraph g = build_gr_graph(m, N);
            CHECK(g.interior.size() == static_cast<size_t>(m * (N - m)));
            CHECK(g.arrows.size() ==
                  static_cast<size_t>(2 + m * (N - 1 - m) + (N - m) * (m - 1)));
        }
}

TEST_CASE("phase_from_graph small cases") {
    // (1,2): e^{-x11} + e^{x11 - x21}
    ExpPoly p12 = phase_from_graph(1, 2);
    ExpPoly want = ExpPoly::exp_of(VarId::gz(1, 1), ExpExponent(mpq_class(-1))) +
                   ExpPoly::exp_linear({{VarId::gz(1, 1), ExpExponent(mpq_class(1))},
                                        {VarId::gz(2, 1), ExpExponent(mpq_class(-1))}});
    CHECK(p12 == want);
    // term count = arrow count
    for (int N = 2; N <= 6; ++N)
        for (int m = 1; m < N; ++m) {
            GrGraph g = build_gr_graph(m, N);
            CHECK(phase_from_graph(g).size() == g.arrows.size());
        }
}

TEST_CASE("path functions: basic values") {
    int N = 3;
    CHECK(path_A(N, 0, 2, 1) == ExpPoly(1)); // empty product
    // A^1_{2,1} for N=3: single valid tuple -> e^{x22 - x32} = e^{x22}
    ExpPoly a121 = path_A(N, 1, 2, 1);
    CHECK(a121 == ExpPoly::exp_of(VarId::gz(2, 2), ExpExponent(mpq_class(1))));
    // P-factorization P^r_{n,j}(k) = A^{r+n-k-j}_{n,j} B_{n,j}(k)
    for (int r = 0; r <= 2; ++r)
        for (int k = 1; k <= 3; ++k)
            CHECK(path_P(N, r, 2, 1, k) == path_A(N, r + 2 - k - 1, 2, 1) * path_B(N, 2, 1, k));
}

TEST_CASE("path relations sweep") {
    for (int N = 2; N <= 5; ++N) {
        RelationReport rep = verify_path_relations(N);
        CHECK(rep.all_ok());
        if (!rep.all_ok()) {
            for (const auto& i : rep.instances)
                if (!i.ok()) MESSAGE(i.relation_id, i.indices, ": ", i.residual_text);
        }
        CHECK(rep.instances.size() > 0);
    }
}

TEST_CASE("box relations sweep") {
    for (int N = 2; N <= 6; ++N)
        for (int m = 1; m < N; ++m) {
            RelationReport rep = verify_box_relations(m, N);
            INFO("m=", m, " N=", N);
            CHECK(rep.all_ok());
        }
    // (1,2): cycle product = e^{-x21}
    ExpPoly c12 = cycle_product(build_gr_graph(1, 2));
    CHECK(c12 == ExpPoly::exp_of(VarId::gz(2, 1), ExpExponent(mpq_class(-1))));
}

TEST_CASE("dot export") {
    std::string d = build_gr_graph(2, 4).dot();
    CHECK(d.find("digraph") != std::string::npos);
    // one line per interior vertex
    size_t count = 0, pos = 0;
    while ((pos = d.find("x_{", pos)) != std::string::npos) { ++count; ++pos; }
    CHECK(count >= 5); // 4 interior + source label
    CHECK(build_gz_graph(3).dot().find("x_{3,1}") != std::string::npos);
}
