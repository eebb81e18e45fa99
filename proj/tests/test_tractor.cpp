#include "pwkt/tractor.hpp"

#include <map>

#include "doctest.h"
#include "test_util.hpp"

using namespace pwkt;

namespace {

const PositionBasis& conf_basis() {
    static const PositionBasis b = position_basis(Problem::conformal);
    return b;
}
const PositionBasis& proj_basis() {
    static const PositionBasis b = position_basis(Problem::projective);
    return b;
}
const CartanComponent& conf_cartan() {
    static const CartanComponent c = cartan_component(Problem::conformal);
    return c;
}
const CartanComponent& proj_cartan() {
    static const CartanComponent c = cartan_component(Problem::projective);
    return c;
}

using Relation = std::pair<int, std::vector<std::pair<int, Rational>>>;

// Dependent-variable relations of the conformal Cartan component. The w40
// right-hand side corrects a sign on w55 in the source table (the printed
// line duplicates w43; the wedge identity on {1,2,3,6} fixes the sign).
std::vector<Relation> conformal_relations() {
    return {
        {4, {{5, rat(-1, 2)}, {8, rat(-1, 2)}}},
        {19, {{15, rat(1)}, {29, rat(1)}}},
        {20, {{16, rat(1)}, {30, rat(-1)}, {37, rat(-1)}}},
        {21, {{28, rat(-1)}, {31, rat(-1)}, {38, rat(-1)}}},
        {22, {{27, rat(1)}, {32, rat(-1)}}},
        {23, {{14, rat(-1)}, {18, rat(1)}}},
        {24, {{13, rat(-1)}, {17, rat(-1)}, {35, rat(1)}}},
        {25, {{16, rat(1)}, {30, rat(1)}}},
        {26, {{15, rat(-1)}, {29, rat(1)}, {36, rat(1)}}},
        {39, {{62, rat(1, 2)}, {68, rat(1, 2)}}},
        {40, {{55, rat(-1, 2)}, {64, rat(-1, 2)}, {70, rat(1, 2)}}},
        {41, {{56, rat(-1, 2)}, {65, rat(-1, 2)}, {69, rat(-1, 2)}}},
        // The w57 coefficient corrects the source table's -1/4: the wedge
        // identity on {1,2,5,6} gives w42 - w51 = -w57, and w51 (printed with
        // +1/2 w57) is confirmed by the trace conditions.
        {42, {{57, rat(-1, 2)}, {61, rat(-1, 4)}, {73, rat(-1, 4)}, {77, rat(-1, 4)}}},
        {43, {{55, rat(1, 2)}, {64, rat(-1, 2)}, {70, rat(1, 2)}}},
        {44, {{61, rat(-1, 2)}, {72, rat(1)}, {73, rat(1, 2)}}},
        {45, {{58, rat(-1, 2)}, {71, rat(-1)}, {74, rat(1, 2)}}},
        {46, {{59, rat(-1, 2)}, {75, rat(-1, 2)}, {79, rat(-1, 2)}}},
        {47, {{56, rat(1, 2)}, {65, rat(-1, 2)}, {69, rat(-1, 2)}}},
        {48, {{58, rat(1, 2)}, {71, rat(-1)}, {74, rat(1, 2)}}},
        {49, {{72, rat(-1)}, {77, rat(1, 2)}}},
        {50, {{60, rat(-1, 2)}, {76, rat(-1, 2)}, {78, rat(1, 2)}}},
        {51, {{57, rat(1, 2)}, {61, rat(-1, 4)}, {73, rat(-1, 4)}, {77, rat(-1, 4)}}},
        {52, {{59, rat(1, 2)}, {75, rat(-1, 2)}, {79, rat(-1, 2)}}},
        {53, {{60, rat(1, 2)}, {76, rat(-1, 2)}, {78, rat(1, 2)}}},
        {54, {{80, rat(1, 2)}, {82, rat(1, 2)}}},
        {66, {{61, rat(1, 2)}, {72, rat(-1)}, {73, rat(-1, 2)}, {77, rat(1, 2)}}},
        {67, {{71, rat(1)}, {74, rat(-1)}}},
        {91, {{84, rat(-1)}, {89, rat(-1)}, {107, rat(-1)}}},
        {92, {{86, rat(1)}, {99, rat(1)}}},
        {93, {{90, rat(1)}, {103, rat(1)}}},
        {94, {{100, rat(-1)}, {105, rat(-1)}, {110, rat(1)}}},
        {95, {{85, rat(-1)}, {88, rat(1)}}},
        {96, {{90, rat(-1)}, {103, rat(1)}, {109, rat(1)}}},
        {97, {{86, rat(1)}, {99, rat(-1)}, {108, rat(-1)}}},
        {98, {{101, rat(1)}, {104, rat(-1)}}},
        {114, {{115, rat(-1, 2)}, {118, rat(-1, 2)}}},
    };
}

std::vector<Relation> projective_relations() {
    return {
        {22, {{32, rat(-1)}, {27, rat(1)}}},
        {23, {{18, rat(1)}, {14, rat(-1)}}},
        {29, {{19, rat(1)}, {15, rat(-1)}}},
        {30, {{25, rat(1)}, {16, rat(-1)}}},
        {44, {{47, rat(1)}, {40, rat(1)}}},
    };
}

void check_relations(const CartanComponent& cc, const std::vector<Relation>& rels) {
    for (const auto& [dep, terms] : rels) {
        CHECK(cc.free_col[dep] == -1);
        VecQ want(cc.dim);
        for (const auto& [w, coef] : terms) {
            REQUIRE(cc.free_col[w] >= 0);
            want[cc.free_col[w]] = coef;
        }
        CHECK(cc.embed.row(dep - 1) == want);
    }
}

std::vector<MatrixQ> algebra_basis(Problem problem) {
    std::vector<MatrixQ> basis;
    if (problem == Problem::conformal) {
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) {
                MatrixQ a(6, 6);
                a(i, j) = rat(1);
                a(j, i) = rat(-1);
                basis.push_back(a * so24_form());
            }
    } else {
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                if (i != j) {
                    MatrixQ m(5, 5);
                    m(i, j) = rat(1);
                    basis.push_back(m);
                }
        for (int i = 0; i < 4; ++i) {
            MatrixQ m(5, 5);
            m(i, i) = rat(1);
            m(i + 1, i + 1) = rat(-1);
            basis.push_back(m);
        }
    }
    return basis;
}

}  // namespace

TEST_SUITE("tractor") {

TEST_CASE("position counts, ordering and gradings") {
    const PositionBasis& c = conf_basis();
    CHECK(c.dim() == 120);
    CHECK(c.positions[110] == std::array<int, 4>{2, 6, 2, 6});  // w111
    CHECK(c.positions[0] == std::array<int, 4>{1, 2, 1, 2});
    CHECK(c.positions[34] == std::array<int, 4>{1, 2, 1, 6});   // w35
    CHECK(c.positions[38] == std::array<int, 4>{1, 2, 2, 6});   // w39
    CHECK(c.positions[54] == std::array<int, 4>{1, 6, 2, 3});   // w55
    CHECK(c.positions[61] == std::array<int, 4>{2, 3, 2, 3});   // w62
    CHECK(c.positions[82] == std::array<int, 4>{2, 3, 2, 6});   // w83
    CHECK(c.positions[106] == std::array<int, 4>{1, 6, 2, 6});  // w107
    std::map<int, int> hist;
    for (int g : c.grading) hist[g]++;
    CHECK(hist == std::map<int, int>{{0, 10}, {1, 28}, {2, 44}, {3, 28}, {4, 10}});

    const PositionBasis& p = proj_basis();
    CHECK(p.dim() == 55);
    CHECK(p.positions[0] == std::array<int, 4>{1, 2, 1, 2});
    CHECK(p.positions[34] == std::array<int, 4>{2, 3, 2, 3});  // w35
    std::map<int, int> phist;
    for (int g : p.grading) phist[g]++;
    CHECK(phist == std::map<int, int>{{0, 10}, {1, 24}, {2, 21}});
}

TEST_CASE("component resolver applies the tensor symmetries") {
    const PositionBasis& c = conf_basis();
    // (1,2,3,6) is w40.
    auto [i1, s1] = c.resolve(2, 1, 6, 3);  // both pairs flipped
    CHECK(i1 == 40 - 1);
    CHECK(s1 == rat(1));
    auto [i2, s2] = c.resolve(3, 6, 1, 2);  // pair swap
    CHECK(i2 == 40 - 1);
    CHECK(s2 == rat(1));
    auto [i3, s3] = c.resolve(1, 2, 6, 3);  // one flip
    CHECK(i3 == 40 - 1);
    CHECK(s3 == rat(-1));
    auto [i4, s4] = c.resolve(1, 1, 2, 3);
    CHECK(i4 == -1);
    CHECK(s4 == rat(0));
    // Non-canonical display tuple of group (viii): {(3,4),(2,6)} is w95.
    auto [i5, s5] = c.resolve(2, 6, 3, 4);
    CHECK(i5 == 95 - 1);
    CHECK(s5 == rat(1));
}

TEST_CASE("Cartan components have the right dimensions") {
    CHECK(kernel(cartan_conditions(conf_basis())).dim() == 84);
    CHECK(kernel(cartan_conditions(proj_basis())).dim() == 50);
    CHECK(conf_cartan().dim == 84);
    CHECK(proj_cartan().dim == 50);
    CHECK(conf_cartan().free_vars.size() == 84);
    CHECK(rref(conf_cartan().embed).second.size() == 84);
    CHECK(rref(proj_cartan().embed).second.size() == 50);
}

TEST_CASE("embedding reproduces the dependent-variable relations") {
    check_relations(conf_cartan(), conformal_relations());
    check_relations(proj_cartan(), projective_relations());
}

TEST_CASE("embedding spot values") {
    const CartanComponent& cc = conf_cartan();
    VecQ v(cc.dim);
    v[cc.free_col[5]] = rat(1);
    v[cc.free_col[8]] = rat(1);
    VecQ amb = cc.embed * v;
    CHECK(amb[4 - 1] == rat(-1));  // w4 = -1/2 (w5 + w8)

    const CartanComponent& pc = proj_cartan();
    VecQ u(pc.dim);
    u[pc.free_col[27]] = rat(1);
    VecQ pamb = pc.embed * u;
    CHECK(pamb[22 - 1] == rat(1));  // w22 = -w32 + w27
}

TEST_CASE("grading element acts diagonally by the grading label") {
    {
        MatrixQ e(6, 6);
        e(0, 0) = rat(1);
        e(5, 5) = rat(-1);
        REQUIRE(in_algebra(Problem::conformal, e));
        MatrixQ r = rho_ambient(conf_basis(), e);
        for (int t = 0; t < 120; ++t)
            for (int s = 0; s < 120; ++s)
                CHECK(r(t, s) == (t == s ? rat(conf_basis().grading[t] - 2) : rat(0)));
    }
    {
        MatrixQ e(5, 5);
        e(0, 0) = rat(4, 5);
        for (int i = 1; i < 5; ++i) e(i, i) = rat(-1, 5);
        REQUIRE(in_algebra(Problem::projective, e));
        MatrixQ r = rho_ambient(proj_basis(), e);
        for (int t = 0; t < 55; ++t)
            for (int s = 0; s < 55; ++s)
                CHECK(r(t, s) == (t == s ? rat(proj_basis().grading[t]) - rat(6, 5) : rat(0)));
    }
}

TEST_CASE("a raising element moves gradings up by one") {
    // X = E_15 - E_26 is in so(2,4) and raises the grading eigenvalue.
    MatrixQ x(6, 6);
    x(0, 4) = rat(1);
    x(1, 5) = rat(-1);
    REQUIRE(in_algebra(Problem::conformal, x));
    MatrixQ r = rho_ambient(conf_basis(), x);
    for (int t = 0; t < 120; ++t)
        for (int s = 0; s < 120; ++s)
            if (sgn(r(t, s)) != 0)
                CHECK(conf_basis().grading[t] == conf_basis().grading[s] + 1);
}

TEST_CASE("rho is a Lie algebra homomorphism") {
    for (Problem pr : {Problem::conformal, Problem::projective}) {
        const PositionBasis& basis = (pr == Problem::conformal) ? conf_basis() : proj_basis();
        auto gens = algebra_basis(pr);
        std::vector<MatrixQ> images;
        images.reserve(gens.size());
        for (const auto& g : gens) images.push_back(rho_ambient(basis, g));
        // Bilinearity makes the check on all generator pairs exhaustive.
        for (size_t i = 0; i < gens.size(); ++i)
            for (size_t j = i + 1; j < gens.size(); ++j)
                CHECK(rho_ambient(basis, commutator(gens[i], gens[j])) ==
                      commutator(images[i], images[j]));
    }
}

TEST_CASE("rho restricted to the Cartan component is a homomorphism") {
    auto rng = testutil::test_rng(41u);
    std::uniform_int_distribution<int> pick(0, 14);
    auto gens = algebra_basis(Problem::conformal);
    const auto& basis = conf_basis();
    const auto& cc = conf_cartan();
    for (int trial = 0; trial < 10; ++trial) {
        const MatrixQ& m = gens[pick(rng)];
        const MatrixQ& n = gens[pick(rng)];
        CHECK(rho(basis, cc, commutator(m, n)) ==
              commutator(rho(basis, cc, m), rho(basis, cc, n)));
    }
}

TEST_CASE("the Cartan component is invariant under random algebra elements") {
    auto rng = testutil::test_rng(43u);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (Problem pr : {Problem::conformal, Problem::projective}) {
        const PositionBasis& basis = (pr == Problem::conformal) ? conf_basis() : proj_basis();
        const CartanComponent& cc = (pr == Problem::conformal) ? conf_cartan() : proj_cartan();
        for (int trial = 0; trial < 25; ++trial) {
            MatrixQ x;
            if (pr == Problem::conformal) {
                MatrixQ a(6, 6);
                for (int i = 0; i < 6; ++i)
                    for (int j = i + 1; j < 6; ++j) {
                        a(i, j) = rat(entry(rng));
                        a(j, i) = -a(i, j);
                    }
                x = a * so24_form();
            } else {
                x = MatrixQ(5, 5);
                Rational tr;
                for (int i = 0; i < 5; ++i)
                    for (int j = 0; j < 5; ++j) x(i, j) = rat(entry(rng));
                for (int i = 0; i < 5; ++i) tr += x(i, i);
                for (int i = 0; i < 5; ++i) x(i, i) -= tr / 5;
            }
            REQUIRE(in_algebra(pr, x));
            CHECK_NOTHROW((void)rho(basis, cc, x));  // throws on closure failure
        }
    }
}

TEST_CASE("rho of zero is zero") {
    CHECK(rho(conf_basis(), conf_cartan(), MatrixQ(6, 6)).is_zero());
    CHECK(rho(proj_basis(), proj_cartan(), MatrixQ(5, 5)).is_zero());
}

TEST_CASE("projection to the frame tensor") {
    const auto& cb = conf_basis();
    const auto& cc = conf_cartan();
    VecQ v(cc.dim);
    v[cc.free_col[111]] = rat(1);
    auto f = project_pi(cb, cc, v);
    for (int p = 1; p <= 4; ++p)
        for (int q = 1; q <= 4; ++q)
            CHECK(f[p][q] == (p == 1 && q == 1 ? rat(1) : rat(0)));

    const auto& pb = proj_basis();
    const auto& pc = proj_cartan();
    VecQ u(pc.dim);
    u[pc.free_col[4]] = rat(1);  // w4 = (1,2,1,5) -> component (1,4)
    auto g = project_pi(pb, pc, u);
    CHECK(g[1][4] == rat(1));
    CHECK(g[4][1] == rat(1));
    CHECK(g[1][1] == rat(0));
    CHECK(g[2][3] == rat(0));

    auto z = project_pi(cb, cc, VecQ(cc.dim));
    for (int p = 1; p <= 4; ++p)
        for (int q = 1; q <= 4; ++q) CHECK(z[p][q] == rat(0));
}

TEST_CASE("conformal projections are trace-free against the frame metric") {
    const auto& cc = conf_cartan();
    auto rng = testutil::test_rng(47u);
    for (int trial = 0; trial < 10; ++trial) {
        VecQ v(cc.dim);
        for (auto& x : v) x = testutil::random_rational(rng);
        VecQ amb = cc.embed * v;
        CHECK(2 * amb[114 - 1] + amb[115 - 1] + amb[118 - 1] == 0);
    }
}

}  // TEST_SUITE
