#include "pwkt/exactlin.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace pwkt;

namespace {

MatrixQ from_init(std::initializer_list<std::initializer_list<long>> rows) {
    MatrixQ m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (long v : r) m(i, j++) = rat(v);
        ++i;
    }
    return m;
}

VecQ vec(std::initializer_list<long> xs) {
    VecQ v;
    for (long x : xs) v.push_back(rat(x));
    return v;
}

}  // namespace

TEST_SUITE("exactlin") {

TEST_CASE("rat_parse accepts integers and fractions") {
    CHECK(rat_parse("3/4") == rat(3, 4));
    CHECK(rat_parse("-7/2") == rat(-7, 2));
    CHECK(rat_parse("5") == rat(5));
    CHECK(rat_parse("-19") == rat(-19));
    CHECK(rat_parse("6/4") == rat(3, 2));
}

TEST_CASE("rat_parse rejects decimals and malformed input") {
    CHECK_THROWS_AS(rat_parse("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("1e3"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("3/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("1/2x"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("1/2/3"), std::invalid_argument);
}

TEST_CASE("rref handles identity, zero and rank-deficient matrices") {
    auto [r1, p1] = rref(MatrixQ::identity(3));
    CHECK(r1 == MatrixQ::identity(3));
    CHECK(p1 == std::vector<int>{0, 1, 2});

    auto [r2, p2] = rref(MatrixQ(2, 4));
    CHECK(r2.rows() == 0);
    CHECK(p2.empty());

    auto [r3, p3] = rref(from_init({{2, 4}, {1, 2}}));
    CHECK(r3 == from_init({{1, 2}}));
    CHECK(p3 == std::vector<int>{0});
}

TEST_CASE("rref is idempotent on random matrices") {
    auto rng = testutil::test_rng();
    std::uniform_int_distribution<int> size(1, 20);
    for (int trial = 0; trial < 25; ++trial) {
        MatrixQ m = testutil::random_matrix(rng, size(rng), size(rng));
        auto [r, p] = rref(m);
        auto [rr, pp] = rref(r);
        CHECK(rr == r);
        CHECK(pp == p);
    }
}

TEST_CASE("kernel basics") {
    CHECK(kernel(MatrixQ(3, 3)).dim() == 3);
    CHECK(kernel(MatrixQ::identity(4)).dim() == 0);

    SubspaceQ k = kernel(from_init({{1, 1, 0}}));
    CHECK(k.dim() == 2);
    CHECK(k.contains(vec({1, -1, 0})));
    CHECK_FALSE(k.contains(vec({1, 1, 0})));
}

TEST_CASE("kernel vectors are annihilated exactly") {
    auto rng = testutil::test_rng(7u);
    for (int trial = 0; trial < 20; ++trial) {
        MatrixQ m = testutil::random_matrix(rng, 5, 8);
        SubspaceQ k = kernel(m);
        CHECK(k.dim() + static_cast<int>(rref(m).second.size()) == 8);
        for (int i = 0; i < k.dim(); ++i) {
            VecQ mv = m * k.basis().row(i);
            for (const Rational& c : mv) CHECK(c == 0);
        }
    }
}

TEST_CASE("subspace equality is basis-independent") {
    SubspaceQ a = SubspaceQ::from_rows(from_init({{1, 0}, {0, 1}}));
    SubspaceQ b = SubspaceQ::from_rows(from_init({{1, 1}, {1, -1}}));
    CHECK(a == b);
    CHECK(a == SubspaceQ::full(2));
}

TEST_CASE("intersect and contains basics") {
    SubspaceQ x = SubspaceQ::from_rows(from_init({{1, 0}}));
    SubspaceQ y = SubspaceQ::from_rows(from_init({{0, 1}}));
    CHECK(intersect(x, x) == x);
    CHECK(intersect(x, y) == SubspaceQ::zero(2));
    CHECK(SubspaceQ::from_rows(from_init({{1, 1}})).contains(vec({2, 2})));
}

TEST_CASE("dimension formula on random subspaces") {
    auto rng = testutil::test_rng(11u);
    for (int trial = 0; trial < 20; ++trial) {
        SubspaceQ s1 = SubspaceQ::from_rows(testutil::random_matrix(rng, 3, 6));
        SubspaceQ s2 = SubspaceQ::from_rows(testutil::random_matrix(rng, 4, 6));
        CHECK(intersect(s1, s2).dim() + subspace_sum(s1, s2).dim() == s1.dim() + s2.dim());
        CHECK(s1.contains(intersect(s1, s2)));
        CHECK(subspace_sum(s1, s2).contains(s1));
    }
}

TEST_CASE("refine basics") {
    SubspaceQ s = SubspaceQ::from_rows(from_init({{1, 0}}));
    CHECK(refine({MatrixQ::identity(2)}, s) == s);
    CHECK(refine({MatrixQ(2, 2)}, s) == s);

    MatrixQ rot = from_init({{0, -1}, {1, 0}});
    CHECK(refine({rot}, s) == SubspaceQ::zero(2));
    CHECK(refine({rot}, SubspaceQ::full(2)) == SubspaceQ::full(2));
}

TEST_CASE("refine is contractive and idempotent") {
    auto rng = testutil::test_rng(13u);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<MatrixQ> maps = {testutil::random_matrix(rng, 5, 5),
                                     testutil::random_matrix(rng, 5, 5)};
        SubspaceQ s = SubspaceQ::from_rows(testutil::random_matrix(rng, 3, 5));
        SubspaceQ r = refine(maps, s);
        CHECK(s.contains(r));
        CHECK(refine(maps, r) == refine(maps, refine(maps, r)));
    }
}

TEST_CASE("polynomial arithmetic and calculus") {
    Poly4 x2sq = Poly4::var(2, 2);
    CHECK(poly_diff(x2sq, 2) == Poly4::var(2) * rat(2));
    CHECK(poly_diff(Poly4::constant(rat(9)), 3).is_zero());

    Poly4 p = Poly4::var(1) * Poly4::var(4) + Poly4::constant(rat(3));
    CHECK(poly_eval(p, {rat(1), rat(0), rat(0), rat(2)}) == rat(5));
    CHECK(poly_eval_d(p, {1.0, 0.0, 0.0, 2.0}) == doctest::Approx(5.0));
}

TEST_CASE("central differences converge to poly_diff") {
    auto rng = testutil::test_rng(17u);
    for (int trial = 0; trial < 10; ++trial) {
        Poly4 p = testutil::random_poly(rng);
        std::array<Rational, 4> x = {testutil::random_rational(rng), testutil::random_rational(rng),
                                     testutil::random_rational(rng), testutil::random_rational(rng)};
        for (int var = 1; var <= 4; ++var) {
            Rational exact = poly_eval(poly_diff(p, var), x);
            auto central = [&](const Rational& h) -> Rational {
                auto xp = x, xm = x;
                xp[var - 1] += h;
                xm[var - 1] -= h;
                return (poly_eval(p, xp) - poly_eval(p, xm)) / (2 * h);
            };
            Rational e1 = central(rat(1, 10)) - exact;
            Rational e2 = central(rat(1, 20)) - exact;
            // Central differences have error O(h^2); exact arithmetic lets us
            // check the halving bound directly.
            CHECK(abs(e2) * 2 <= abs(e1) + rat(1, 1000000));
        }
    }
}

TEST_CASE("central differences are exact for quadratics") {
    Poly4 q = Poly4::var(3, 2) * rat(5) + Poly4::var(3) * rat(-2) + Poly4::constant(rat(7));
    std::array<Rational, 4> x = {rat(1), rat(2), rat(3, 2), rat(-1)};
    Rational h = rat(1, 3);
    auto xp = x, xm = x;
    xp[2] += h;
    xm[2] -= h;
    Rational fd = (poly_eval(q, xp) - poly_eval(q, xm)) / (2 * h);
    CHECK(fd == poly_eval(poly_diff(q, 3), x));
}

}  // TEST_SUITE
