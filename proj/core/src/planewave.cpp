#include "pwkt/planewave.hpp"

#include <cmath>
#include <stdexcept>

namespace pwkt {

Params::Params(int eps, Rational a1_, Rational a2_, Rational gamma_)
    : epsilon(eps), a1(std::move(a1_)), a2(std::move(a2_)), gamma(std::move(gamma_)) {
    if (eps != 0 && eps != 1)
        throw std::invalid_argument("Params: epsilon must be 0 or 1");
}

std::string Params::str() const {
    return "(" + std::to_string(epsilon) + ", " + rat_str(a1) + ", " + rat_str(a2) + ", " +
           rat_str(gamma) + ")";
}

MatrixQ BracketTable::ad(int j) const {
    MatrixQ m(6, 6);
    for (int col = 1; col <= 6; ++col)
        for (int row = 1; row <= 6; ++row) m(row - 1, col - 1) = c[j][col][row];
    return m;
}

BracketTable bracket_table(const Params& p) {
    BracketTable t;
    auto set = [&t](int i, int j, int m, const Rational& v) {
        t.c[i][j][m] = v;
        t.c[j][i][m] = -v;
    };
    const Rational eps = p.eps_q();
    set(1, 2, 3, p.gamma);
    set(1, 2, 5, p.a1);
    set(1, 3, 2, -p.gamma);
    set(1, 3, 6, p.a2);
    set(1, 4, 4, -eps);
    set(1, 5, 2, rat(1));
    set(1, 5, 5, -eps);
    set(1, 5, 6, p.gamma);
    set(1, 6, 3, rat(1));
    set(1, 6, 5, -p.gamma);
    set(1, 6, 6, -eps);
    set(2, 5, 4, rat(-1));
    set(3, 6, 4, rat(-1));
    return t;
}

FrameData frame_data(const Params& p) {
    FrameData f;
    const Poly4 x2 = Poly4::var(2), x3 = Poly4::var(3), x4 = Poly4::var(4);
    const Poly4 one = Poly4::constant(rat(1));
    // q = a1*x2^2/2 + a2*x3^2/2 - eps*x4, the only nonlinear coefficient.
    Poly4 q = Poly4::var(2, 2) * rat(1, 2) * p.a1 + Poly4::var(3, 2) * rat(1, 2) * p.a2 -
              x4 * p.eps_q();

    f.frame[1][1] = one;
    f.frame[1][2] = x3 * p.gamma;
    f.frame[1][3] = -(x2 * p.gamma);
    f.frame[1][4] = -q;
    f.frame[2][2] = one;
    f.frame[3][3] = one;
    f.frame[4][4] = one;

    f.coframe[1][1] = one;
    f.coframe[2][1] = -(x3 * p.gamma);
    f.coframe[2][2] = one;
    f.coframe[3][1] = x2 * p.gamma;
    f.coframe[3][3] = one;
    f.coframe[4][1] = q;
    f.coframe[4][4] = one;
    return f;
}

namespace {

// Determinant of a 4x4 polynomial matrix (1-based) by cofactor expansion.
Poly4 det3(const Poly4 m[5][5], const int r[3], const int c[3]) {
    Poly4 d;
    d += m[r[0]][c[0]] * (m[r[1]][c[1]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[1]]);
    d -= m[r[0]][c[1]] * (m[r[1]][c[0]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[0]]);
    d += m[r[0]][c[2]] * (m[r[1]][c[0]] * m[r[2]][c[1]] - m[r[1]][c[1]] * m[r[2]][c[0]]);
    return d;
}

}  // namespace

MetricData metric_data(const Params& p) {
    const FrameData f = frame_data(p);
    MetricData md;

    // g = e*1 (x) e*4 + e*4 (x) e*1 + e*2 (x) e*2 + e*3 (x) e*3.
    for (int mu = 1; mu <= 4; ++mu)
        for (int nu = 1; nu <= 4; ++nu) {
            Poly4 s = f.coframe[1][mu] * f.coframe[4][nu] + f.coframe[4][mu] * f.coframe[1][nu] +
                      f.coframe[2][mu] * f.coframe[2][nu] + f.coframe[3][mu] * f.coframe[3][nu];
            md.g[mu][nu] = s;
        }

    // det(g) = -1, so the inverse is minus the adjugate (polynomial entries).
    Poly4 det;
    {
        const int rows[4][3] = {{2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}};
        for (int j = 1; j <= 4; ++j) {
            const int cols[3] = {j == 1 ? 2 : 1, j <= 2 ? 3 : 2, j <= 3 ? 4 : 3};
            Poly4 minor = det3(md.g, rows[0], cols);
            Poly4 term = md.g[1][j] * minor;
            if (j % 2 == 0) det -= term;
            else det += term;
        }
        if (!(det == Poly4::constant(rat(-1))))
            throw ConsistencyError("metric_data: det(g) != -1");
    }
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            int rows[3], cols[3], ri = 0, ci = 0;
            for (int k = 1; k <= 4; ++k) {
                if (k != j) rows[ri++] = k;
                if (k != i) cols[ci++] = k;
            }
            Poly4 cof = det3(md.g, rows, cols);
            if ((i + j) % 2 == 1) cof = -cof;
            md.ginv[i][j] = -cof;  // adj/det with det = -1
        }
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            Poly4 s;
            for (int k = 1; k <= 4; ++k) s += md.g[i][k] * md.ginv[k][j];
            Poly4 want = (i == j) ? Poly4::constant(rat(1)) : Poly4();
            if (!(s == want)) throw ConsistencyError("metric_data: g * ginv != I");
        }

    Poly4 dg[5][5][5];  // dg[m][i][j] = d g_{ij} / d x_m
    for (int m = 1; m <= 4; ++m)
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) dg[m][i][j] = poly_diff(md.g[i][j], m);
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c) {
                Poly4 s;
                for (int d = 1; d <= 4; ++d)
                    s += md.ginv[a][d] * (dg[b][d][c] + dg[c][b][d] - dg[d][b][c]);
                md.christoffel[a][b][c] = s * rat(1, 2);
            }
    return md;
}

std::array<double, 4> brinkmann_map(const Params& p, MapDir dir, const std::array<double, 4>& pt) {
    const double gamma = mpq_get_d(p.gamma.get_mpq_t());
    if (dir == MapDir::to_exponential) {
        const double xp = pt[0], z1 = pt[1], z2 = pt[2], xm = pt[3];
        double x1, theta, x4;
        if (p.epsilon == 0) {
            x1 = xp;
            theta = gamma * xp;
            x4 = xm;
        } else {
            if (!(xp > 0.0)) throw std::domain_error("brinkmann_map: epsilon=1 needs x+ > 0");
            x1 = std::log(xp);
            theta = gamma * x1;
            x4 = xp * xm;
        }
        const double c = std::cos(theta), s = std::sin(theta);
        return {x1, c * z1 + s * z2, -s * z1 + c * z2, x4};
    }
    const double x1 = pt[0], x2 = pt[1], x3 = pt[2], x4 = pt[3];
    const double theta = gamma * x1;
    const double c = std::cos(theta), s = std::sin(theta);
    const double z1 = c * x2 - s * x3, z2 = s * x2 + c * x3;
    if (p.epsilon == 0) return {x1, z1, z2, x4};
    return {std::exp(x1), z1, z2, x4 * std::exp(-x1)};
}

std::array<std::array<double, 4>, 4> brinkmann_jacobian(const Params& p,
                                                        const std::array<double, 4>& bpt) {
    const double gamma = mpq_get_d(p.gamma.get_mpq_t());
    const double xp = bpt[0], z1 = bpt[1], z2 = bpt[2], xm = bpt[3];
    std::array<std::array<double, 4>, 4> j{};
    double theta, dtheta;  // dtheta = d(theta)/d(x+)
    if (p.epsilon == 0) {
        theta = gamma * xp;
        dtheta = gamma;
        j[0][0] = 1.0;
        j[3][3] = 1.0;
    } else {
        if (!(xp > 0.0)) throw std::domain_error("brinkmann_jacobian: epsilon=1 needs x+ > 0");
        theta = gamma * std::log(xp);
        dtheta = gamma / xp;
        j[0][0] = 1.0 / xp;
        j[3][0] = xm;
        j[3][3] = xp;
    }
    const double c = std::cos(theta), s = std::sin(theta);
    const double x2 = c * z1 + s * z2, x3 = -s * z1 + c * z2;
    j[1][0] = dtheta * x3;
    j[1][1] = c;
    j[1][2] = s;
    j[2][0] = -dtheta * x2;
    j[2][1] = -s;
    j[2][2] = c;
    return j;
}

double brinkmann_H(const Params& p, const std::array<double, 4>& bpt) {
    const double gamma = mpq_get_d(p.gamma.get_mpq_t());
    const double a1 = mpq_get_d(p.a1.get_mpq_t()), a2 = mpq_get_d(p.a2.get_mpq_t());
    const double xp = bpt[0], z1 = bpt[1], z2 = bpt[2];
    double theta, scale;
    if (p.epsilon == 0) {
        theta = gamma * xp;
        scale = 1.0;
    } else {
        if (!(xp > 0.0)) throw std::domain_error("brinkmann_H: epsilon=1 needs x+ > 0");
        theta = gamma * std::log(xp);
        scale = 1.0 / (xp * xp);
    }
    const double c = std::cos(theta), s = std::sin(theta);
    const double w1 = c * z1 + s * z2, w2 = -s * z1 + c * z2;
    return scale * (a1 * w1 * w1 + a2 * w2 * w2);
}

std::array<std::array<double, 4>, 4> brinkmann_metric(const Params& p,
                                                      const std::array<double, 4>& bpt) {
    std::array<std::array<double, 4>, 4> g{};
    g[0][0] = brinkmann_H(p, bpt);
    g[0][3] = g[3][0] = 1.0;
    g[1][1] = g[2][2] = 1.0;
    return g;
}

std::vector<ParamImage> param_isometries(const Params& p, const std::vector<Rational>& lambdas) {
    std::vector<ParamImage> out;
    if (p.epsilon == 0) {
        for (const Rational& l : lambdas) {
            if (sgn(l) == 0) throw std::invalid_argument("param_isometries: lambda must be nonzero");
            out.push_back({Params(0, l * l * p.a1, l * l * p.a2, l * p.gamma),
                           "isometry-scaling(" + rat_str(l) + ")"});
        }
        out.push_back({Params(0, p.a2, p.a1, p.gamma), "isometry-swap"});
    } else {
        if (sgn(p.gamma) == 0)
            out.push_back({Params(1, p.a2, p.a1, p.gamma), "isometry-swap"});
        out.push_back({Params(0, p.a1 + rat(1, 4), p.a2 + rat(1, 4), p.gamma), "conformal-shift"});
    }
    return out;
}

}  // namespace pwkt
