#include "pwkt/planewave.hpp"

#include <cmath>

#include "doctest.h"
#include "test_util.hpp"

using namespace pwkt;

namespace {

using Mat4 = std::array<std::array<double, 4>, 4>;

const std::vector<Params> kSampleParams = {
    Params(0, rat(1), rat(2), rat(1)),
    Params(1, rat(3, 4), rat(-2, 5), rat(7, 3)),
    Params(0, rat(-8, 3), rat(2, 3), rat(0)),
    Params(1, rat(0), rat(3, 4), rat(2)),
};

Mat4 pullback(const Mat4& g_target, const Mat4& jac) {
    Mat4 p{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int mu = 0; mu < 4; ++mu)
                for (int nu = 0; nu < 4; ++nu) p[i][j] += jac[mu][i] * g_target[mu][nu] * jac[nu][j];
    return p;
}

Mat4 exponential_metric_at(const MetricData& md, const std::array<double, 4>& x) {
    Mat4 g{};
    for (int mu = 1; mu <= 4; ++mu)
        for (int nu = 1; nu <= 4; ++nu) g[mu - 1][nu - 1] = poly_eval_d(md.g[mu][nu], x);
    return g;
}

}  // namespace

TEST_SUITE("planewave") {

TEST_CASE("bracket table matches the structure constant list") {
    for (const Params& p : kSampleParams) {
        BracketTable t = bracket_table(p);
        // [k2,k5] = -k4 and [k3,k6] = -k4 independently of parameters.
        for (int m = 1; m <= 6; ++m) {
            CHECK(t.c[2][5][m] == (m == 4 ? rat(-1) : rat(0)));
            CHECK(t.c[3][6][m] == (m == 4 ? rat(-1) : rat(0)));
        }
        // [k1,k4] = -eps k4.
        for (int m = 1; m <= 6; ++m)
            CHECK(t.c[1][4][m] == (m == 4 ? -p.eps_q() : rat(0)));
        // [k4, anything in k2..k6] = 0.
        for (int j = 2; j <= 6; ++j)
            for (int m = 1; m <= 6; ++m)
                if (j != 4) CHECK(t.c[4][j][m] == 0);
    }
}

TEST_CASE("Jacobi identity holds for all 20 basis triples") {
    for (const Params& p : kSampleParams) {
        BracketTable t = bracket_table(p);
        for (int a = 1; a <= 6; ++a)
            for (int b = a + 1; b <= 6; ++b)
                for (int c = b + 1; c <= 6; ++c)
                    for (int m = 1; m <= 6; ++m) {
                        Rational s;
                        for (int n = 1; n <= 6; ++n)
                            s += t.c[b][c][n] * t.c[a][n][m] + t.c[c][a][n] * t.c[b][n][m] +
                                 t.c[a][b][n] * t.c[c][n][m];
                        CHECK(s == 0);
                    }
    }
}

TEST_CASE("ad(k1) matrix") {
    for (const Params& p : kSampleParams) {
        MatrixQ m = bracket_table(p).ad(1);
        MatrixQ want(6, 6);
        want(1, 2) = -p.gamma;
        want(1, 4) = rat(1);
        want(2, 1) = p.gamma;
        want(2, 5) = rat(1);
        want(3, 3) = -p.eps_q();
        want(4, 1) = p.a1;
        want(4, 4) = -p.eps_q();
        want(4, 5) = -p.gamma;
        want(5, 2) = p.a2;
        want(5, 4) = p.gamma;
        want(5, 5) = -p.eps_q();
        CHECK(m == want);
    }
}

TEST_CASE("frame and coframe match the left-invariant expressions") {
    FrameData f = frame_data(Params(0, rat(1), rat(2), rat(1)));
    CHECK(f.frame[1][1] == Poly4::constant(rat(1)));
    CHECK(f.frame[1][2] == Poly4::var(3));
    CHECK(f.frame[1][3] == -Poly4::var(2));
    CHECK(f.frame[1][4] == -(Poly4::var(2, 2) * rat(1, 2) + Poly4::var(3, 2)));
    for (int mu = 1; mu <= 4; ++mu) {
        CHECK(f.frame[4][mu] == (mu == 4 ? Poly4::constant(rat(1)) : Poly4()));
        CHECK(f.frame[2][mu] == (mu == 2 ? Poly4::constant(rat(1)) : Poly4()));
    }
}

TEST_CASE("frame/coframe duality is an exact polynomial identity") {
    for (const Params& p : kSampleParams) {
        FrameData f = frame_data(p);
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                Poly4 pairing;
                for (int mu = 1; mu <= 4; ++mu) pairing += f.coframe[i][mu] * f.frame[j][mu];
                CHECK(pairing == (i == j ? Poly4::constant(rat(1)) : Poly4()));
            }
    }
}

TEST_CASE("metric entries in exponential coordinates") {
    MetricData md = metric_data(Params(0, rat(1), rat(2), rat(1)));
    CHECK(md.g[1][1] == Poly4::var(2, 2) * rat(2) + Poly4::var(3, 2) * rat(3));
    CHECK(md.g[1][2] == -Poly4::var(3));
    CHECK(md.g[1][3] == Poly4::var(2));
    CHECK(md.g[1][4] == Poly4::constant(rat(1)));
    CHECK(md.g[2][2] == Poly4::constant(rat(1)));
    CHECK(md.g[3][3] == Poly4::constant(rat(1)));
    CHECK(md.g[2][3].is_zero());
    CHECK(md.g[4][4].is_zero());

    MetricData md1 = metric_data(Params(1, rat(1), rat(2), rat(1)));
    CHECK(md1.g[1][1] ==
          Poly4::var(2, 2) * rat(2) + Poly4::var(3, 2) * rat(3) - Poly4::var(4) * rat(2));
}

TEST_CASE("flat parameters give vanishing Christoffels") {
    MetricData md = metric_data(Params(0, rat(0), rat(0), rat(0)));
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c) CHECK(md.christoffel[a][b][c].is_zero());
}

TEST_CASE("metric inverse and Levi-Civita compatibility are exact") {
    for (const Params& p : kSampleParams) {
        MetricData md = metric_data(p);
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                Poly4 s;
                for (int k = 1; k <= 4; ++k) s += md.g[i][k] * md.ginv[k][j];
                CHECK(s == (i == j ? Poly4::constant(rat(1)) : Poly4()));
                CHECK(md.g[i][j] == md.g[j][i]);
            }
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b)
                for (int c = 1; c <= 4; ++c) {
                    CHECK(md.christoffel[a][b][c] == md.christoffel[a][c][b]);
                    Poly4 nabla = poly_diff(md.g[b][c], a);
                    for (int d = 1; d <= 4; ++d)
                        nabla -= md.christoffel[d][a][b] * md.g[d][c] +
                                 md.christoffel[d][a][c] * md.g[b][d];
                    CHECK(nabla.is_zero());
                }
    }
}

TEST_CASE("brinkmann_map special values") {
    Params flat(0, rat(1), rat(2), rat(0));
    std::array<double, 4> pt = {0.3, -1.2, 0.8, 2.5};
    auto img = brinkmann_map(flat, MapDir::to_exponential, pt);
    for (int i = 0; i < 4; ++i) CHECK(img[i] == doctest::Approx(pt[i]).epsilon(1e-14));

    Params p1(1, rat(3, 4), rat(3, 4), rat(2));
    auto img1 = brinkmann_map(p1, MapDir::to_exponential, {1.0, 0.3, -0.7, 2.5});
    CHECK(img1[0] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(img1[3] == doctest::Approx(2.5).epsilon(1e-14));

    CHECK_THROWS_AS(brinkmann_map(p1, MapDir::to_exponential, {-1.0, 0.0, 0.0, 0.0}),
                    std::domain_error);
}

TEST_CASE("brinkmann_map round trip") {
    auto rng = testutil::test_rng(23u);
    std::uniform_real_distribution<double> coord(-2.0, 2.0), pos(0.2, 3.0);
    for (const Params& p : kSampleParams) {
        for (int trial = 0; trial < 10; ++trial) {
            std::array<double, 4> b = {p.epsilon == 1 ? pos(rng) : coord(rng), coord(rng),
                                       coord(rng), coord(rng)};
            auto e = brinkmann_map(p, MapDir::to_exponential, b);
            auto back = brinkmann_map(p, MapDir::to_brinkmann, e);
            for (int i = 0; i < 4; ++i) CHECK(std::abs(back[i] - b[i]) < 1e-12);
        }
    }
}

TEST_CASE("exponential metric pulls back to the Brinkmann form") {
    auto rng = testutil::test_rng(29u);
    std::uniform_real_distribution<double> coord(-2.0, 2.0), pos(0.2, 3.0);
    for (const Params& p : kSampleParams) {
        MetricData md = metric_data(p);
        for (int trial = 0; trial < 10; ++trial) {
            std::array<double, 4> b = {p.epsilon == 1 ? pos(rng) : coord(rng), coord(rng),
                                       coord(rng), coord(rng)};
            Mat4 got = pullback(exponential_metric_at(md, brinkmann_map(p, MapDir::to_exponential, b)),
                                brinkmann_jacobian(p, b));
            Mat4 want = brinkmann_metric(p, b);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) CHECK(std::abs(got[i][j] - want[i][j]) < 1e-9);
        }
    }
}

TEST_CASE("conformal shift is realized by a conformal coordinate map") {
    // Source: Brinkmann chart of g_{0,a1+1/4,a2+1/4,gamma}; target: Brinkmann
    // chart of g_{1,a1,a2,gamma}. The map below pulls the target metric back
    // to exp(x+) times the source metric.
    auto rng = testutil::test_rng(31u);
    std::uniform_real_distribution<double> coord(-1.5, 1.5);
    std::vector<Params> targets = {Params(1, rat(0), rat(3, 4), rat(0)),
                                   Params(1, rat(-3, 16), rat(-3, 16), rat(0)),
                                   Params(1, rat(1, 2), rat(-2, 3), rat(5, 4))};
    for (const Params& tgt : targets) {
        Params src(0, tgt.a1 + rat(1, 4), tgt.a2 + rat(1, 4), tgt.gamma);
        for (int trial = 0; trial < 10; ++trial) {
            double xp = coord(rng), z1 = coord(rng), z2 = coord(rng), xm = coord(rng);
            double ex = std::exp(xp), eh = std::exp(xp / 2);
            std::array<double, 4> image = {ex, eh * z1, eh * z2, xm - (z1 * z1 + z2 * z2) / 4};
            Mat4 jac{};
            jac[0][0] = ex;
            jac[1][0] = eh * z1 / 2;
            jac[1][1] = eh;
            jac[2][0] = eh * z2 / 2;
            jac[2][2] = eh;
            jac[3][0] = 0.0;
            jac[3][1] = -z1 / 2;
            jac[3][2] = -z2 / 2;
            jac[3][3] = 1.0;
            Mat4 got = pullback(brinkmann_metric(tgt, image), jac);
            Mat4 base = brinkmann_metric(src, {xp, z1, z2, xm});
            // got[0][3] = c * base[0][3] with base[0][3] = 1 fixes the factor.
            double c = got[0][3];
            CHECK(c > 0.0);
            CHECK(c == doctest::Approx(ex).epsilon(1e-9));
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    CHECK(std::abs(got[i][j] - c * base[i][j]) < 1e-9 * std::max(1.0, c));
        }
    }
}

TEST_CASE("param_isometries emits scalings, swaps and the conformal shift") {
    auto has = [](const std::vector<ParamImage>& v, const Params& q, const std::string& prefix) {
        for (const auto& im : v)
            if (im.params == q && im.kind.rfind(prefix, 0) == 0) return true;
        return false;
    };

    auto v1 = param_isometries(Params(0, rat(8, 3), rat(2, 3), rat(0)), {rat(1, 2)});
    CHECK(has(v1, Params(0, rat(2, 3), rat(1, 6), rat(0)), "isometry-scaling"));

    auto v2 = param_isometries(Params(0, rat(1), rat(2), rat(1)));
    CHECK(has(v2, Params(0, rat(2), rat(1), rat(1)), "isometry-swap"));

    auto v3 = param_isometries(Params(1, rat(0), rat(3, 4), rat(0)));
    CHECK(has(v3, Params(0, rat(1, 4), rat(1), rat(0)), "conformal-shift"));
    CHECK(has(v3, Params(1, rat(3, 4), rat(0), rat(0)), "isometry-swap"));
}

}  // TEST_SUITE
