#include "pwkt/fieldeval.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "pwkt/tractor.hpp"

namespace pwkt {

namespace {

double to_d(const Rational& q) { return mpq_get_d(q.get_mpq_t()); }

Eigen::MatrixXd to_eigen(const MatrixQ& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = to_d(m(i, j));
    return out;
}

Eigen::VectorXd to_eigen(const VecQ& v) {
    Eigen::VectorXd out(static_cast<int>(v.size()));
    for (int i = 0; i < out.size(); ++i) out(i) = to_d(v[(size_t)i]);
    return out;
}

}  // namespace

Eigen::MatrixXd expm(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("expm: matrix must be square");
    const int n = static_cast<int>(m.rows());
    const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();  // induced inf-norm

    int squarings = 0;
    double scaled = norm;
    while (scaled >= 0.5) {
        scaled /= 2.0;
        ++squarings;
        if (squarings > 64) throw EvaluationError("expm: norm too large to scale");
    }
    const Eigen::MatrixXd a = m / std::pow(2.0, squarings);

    Eigen::MatrixXd sum = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
    const double tol = std::numeric_limits<double>::epsilon();
    bool converged = false;
    for (int k = 1; k <= 40; ++k) {
        term = (term * a) / static_cast<double>(k);
        sum += term;
        const double tnorm = term.cwiseAbs().rowwise().sum().maxCoeff();
        const double snorm = sum.cwiseAbs().rowwise().sum().maxCoeff();
        if (tnorm <= tol * snorm) {
            converged = true;
            break;
        }
    }
    if (!converged) throw EvaluationError("expm: series did not converge within the term bound");

    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

SolutionEvaluator::SolutionEvaluator(Problem problem, const Params& p) : problem_(problem) {
    PhiFamily fam = phi_family(problem, p);
    params_ = fam.params;
    const CartanComponent& cc = cartan_component_of(problem);
    const PositionBasis& basis = position_basis_of(problem);
    dim_ = cc.dim;
    for (int i = 1; i <= 4; ++i) phi_[(size_t)i] = to_eigen(fam.phi[(size_t)i]);
    pi_ = to_eigen(pi_matrix(basis, cc));
    FrameData fd = frame_data(params_);
    raise_ = (problem == Problem::projective);
    for (int i = 1; i <= 4; ++i)
        for (int mu = 1; mu <= 4; ++mu)
            contract_[i][mu] = raise_ ? fd.coframe[i][mu] : fd.frame[i][mu];
    if (raise_) {
        MetricData md = metric_data(params_);
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b) ginv_[a][b] = md.ginv[a][b];
    }
}

std::vector<TensorSample> SolutionEvaluator::eval_matrix(const Eigen::MatrixXd& v,
                                                         const PointR4& pt) const {
    const Eigen::MatrixXd e1 = expm(-pt[0] * phi_[1]);
    const Eigen::MatrixXd e23 = expm(-(pt[1] * phi_[2] + pt[2] * phi_[3]));
    const Eigen::MatrixXd e4 = expm(-pt[3] * phi_[4]);
    const Eigen::MatrixXd f = pi_ * (e4 * (e23 * (e1 * v)));  // 10 x k

    // Contraction coefficients at pt: frame vectors (conformal) or coframe
    // covectors (projective), E[i][mu] against coordinate index mu.
    double E[5][5];
    for (int i = 1; i <= 4; ++i)
        for (int mu = 1; mu <= 4; ++mu) E[i][mu] = poly_eval_d(contract_[i][mu], pt);
    double G[5][5];
    if (raise_)
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b) G[a][b] = poly_eval_d(ginv_[a][b], pt);

    std::vector<TensorSample> out(static_cast<size_t>(f.cols()));
    for (int c = 0; c < f.cols(); ++c) {
        // Symmetric frame matrix F[p][q] from the 10 projected components.
        double F[5][5] = {};
        int row = 0;
        for (int p = 1; p <= 4; ++p)
            for (int q = p; q <= 4; ++q) {
                F[p][q] = f(row, c);
                F[q][p] = f(row, c);
                ++row;
            }
        TensorSample& ts = out[(size_t)c];
        ts.point = pt;
        double K[5][5];  // 1-based coordinate components
        for (int mu = 1; mu <= 4; ++mu)
            for (int nu = mu; nu <= 4; ++nu) {
                double s = 0.0;
                for (int p = 1; p <= 4; ++p)
                    for (int q = 1; q <= 4; ++q) s += F[p][q] * E[p][mu] * E[q][nu];
                K[mu][nu] = s;
                K[nu][mu] = s;
            }
        if (raise_) {
            // K currently holds covariant components; raise both indices.
            double up[5][5];
            for (int mu = 1; mu <= 4; ++mu)
                for (int nu = mu; nu <= 4; ++nu) {
                    double s = 0.0;
                    for (int a = 1; a <= 4; ++a)
                        for (int b = 1; b <= 4; ++b) s += G[mu][a] * G[nu][b] * K[a][b];
                    up[mu][nu] = s;
                    up[nu][mu] = s;
                }
            for (int mu = 1; mu <= 4; ++mu)
                for (int nu = 1; nu <= 4; ++nu) K[mu][nu] = up[mu][nu];
        }
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) ts.k[(size_t)mu][(size_t)nu] = K[mu + 1][nu + 1];
    }
    return out;
}

TensorSample SolutionEvaluator::evaluate(const VecQ& v, const PointR4& pt) const {
    if (static_cast<int>(v.size()) != dim_)
        throw std::invalid_argument("SolutionEvaluator: vector length != dim");
    return eval_matrix(to_eigen(v), pt)[0];
}

std::vector<TensorSample> SolutionEvaluator::evaluate_basis(const std::vector<VecQ>& vs,
                                                            const PointR4& pt) const {
    Eigen::MatrixXd m(dim_, static_cast<int>(vs.size()));
    for (size_t c = 0; c < vs.size(); ++c) {
        if (static_cast<int>(vs[c].size()) != dim_)
            throw std::invalid_argument("SolutionEvaluator: vector length != dim");
        m.col(static_cast<int>(c)) = to_eigen(vs[c]);
    }
    return eval_matrix(m, pt);
}

TensorField SolutionEvaluator::field(const VecQ& v) const {
    auto self = *this;  // value copy keeps the field self-contained
    Eigen::VectorXd vd = to_eigen(v);
    if (vd.size() != dim_) throw std::invalid_argument("SolutionEvaluator: vector length != dim");
    return [self = std::move(self), vd](const PointR4& pt) {
        return self.eval_matrix(vd, pt)[0];
    };
}

MultiTensorField SolutionEvaluator::fields(const std::vector<VecQ>& vs) const {
    auto self = *this;
    Eigen::MatrixXd m(dim_, static_cast<int>(vs.size()));
    for (size_t c = 0; c < vs.size(); ++c) {
        if (static_cast<int>(vs[c].size()) != dim_)
            throw std::invalid_argument("SolutionEvaluator: vector length != dim");
        m.col(static_cast<int>(c)) = to_eigen(vs[c]);
    }
    return [self = std::move(self), m](const PointR4& pt) { return self.eval_matrix(m, pt); };
}

TensorSample evaluate_solution(Problem problem, const Params& p, const VecQ& v,
                               const PointR4& pt) {
    return SolutionEvaluator(problem, p).evaluate(v, pt);
}

std::array<VectorFieldSample, 6> killing_fields(const Params& p, const PointR4& pt) {
    BracketTable bt = bracket_table(p);
    Eigen::MatrixXd ad1 = to_eigen(bt.ad(1));
    Eigen::MatrixXd ad2 = to_eigen(bt.ad(2));
    Eigen::MatrixXd ad3 = to_eigen(bt.ad(3));
    Eigen::MatrixXd ad4 = to_eigen(bt.ad(4));
    Eigen::MatrixXd a = expm(-pt[3] * ad4) * (expm(-(pt[1] * ad2 + pt[2] * ad3)) *
                                              expm(-pt[0] * ad1));

    FrameData fd = frame_data(p);
    double E[5][5];
    for (int i = 1; i <= 4; ++i)
        for (int mu = 1; mu <= 4; ++mu) E[i][mu] = poly_eval_d(fd.frame[i][mu], pt);

    std::array<VectorFieldSample, 6> out{};
    for (int j = 1; j <= 6; ++j) {
        VectorFieldSample& s = out[(size_t)(j - 1)];
        s.point = pt;
        for (int mu = 0; mu < 4; ++mu) {
            double val = 0.0;
            for (int i = 1; i <= 4; ++i) val += a(i - 1, j - 1) * E[i][mu + 1];
            s.v[(size_t)mu] = val;
        }
    }
    return out;
}

VectorFieldSample homothety_field(const PointR4& pt) {
    VectorFieldSample s;
    s.point = pt;
    s.v = {0.0, -pt[1], -pt[2], -2.0 * pt[3]};
    return s;
}

namespace {

// Exact metric data evaluated to doubles at sample points.
struct MetricEval {
    MetricData md;

    explicit MetricEval(const Params& p) : md(metric_data(p)) {}

    void g_at(const PointR4& pt, double g[4][4]) const {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) g[i][j] = poly_eval_d(md.g[i + 1][j + 1], pt);
    }
    void ginv_at(const PointR4& pt, double gi[4][4]) const {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) gi[i][j] = poly_eval_d(md.ginv[i + 1][j + 1], pt);
    }
    void gamma_at(const PointR4& pt, double gam[4][4][4]) const {
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c)
                    gam[a][b][c] = poly_eval_d(md.christoffel[a + 1][b + 1][c + 1], pt);
    }
};

using Lowered = std::array<std::array<double, 4>, 4>;

// K with indices lowered by the metric at the sample's own point.
Lowered lower(const MetricEval& me, const TensorSample& ts) {
    double g[4][4];
    me.g_at(ts.point, g);
    Lowered out{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            double s = 0.0;
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d)
                    s += g[a][c] * g[b][d] * ts.k[(size_t)c][(size_t)d];
            out[(size_t)a][(size_t)b] = s;
        }
    return out;
}

struct SymmetrizedDerivative {
    // T[a][b][c] = nabla_(a K_bc), fully symmetrized.
    double t[4][4][4];
};

// One Richardson-extrapolated symmetrized covariant derivative for each
// field in the family.
std::vector<SymmetrizedDerivative> symmetrized_nabla(const Params& p,
                                                     const MultiTensorField& fields,
                                                     const PointR4& pt, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("residual: step h must be positive");
    MetricEval me(p);
    double gam[4][4][4];
    me.gamma_at(pt, gam);

    const std::vector<TensorSample> center = fields(pt);
    const size_t nf = center.size();
    std::vector<Lowered> kc(nf);
    for (size_t f = 0; f < nf; ++f) kc[f] = lower(me, center[f]);

    // dk[step][a][f] = lowered K at pt +/- offsets; step 0 -> h, step 1 -> h/2.
    std::vector<Lowered> dplus[2][4], dminus[2][4];
    for (int step = 0; step < 2; ++step) {
        const double hh = (step == 0) ? h : h / 2.0;
        for (int a = 0; a < 4; ++a) {
            PointR4 pp = pt, pm = pt;
            pp[(size_t)a] += hh;
            pm[(size_t)a] -= hh;
            const std::vector<TensorSample> sp = fields(pp);
            const std::vector<TensorSample> sm = fields(pm);
            if (sp.size() != nf || sm.size() != nf)
                throw std::invalid_argument("residual: family size changed between points");
            dplus[step][a].resize(nf);
            dminus[step][a].resize(nf);
            for (size_t f = 0; f < nf; ++f) {
                dplus[step][a][f] = lower(me, sp[f]);
                dminus[step][a][f] = lower(me, sm[f]);
            }
        }
    }

    std::vector<SymmetrizedDerivative> out(nf);
    for (size_t f = 0; f < nf; ++f) {
        double nab[2][4][4][4];
        for (int step = 0; step < 2; ++step) {
            const double hh = (step == 0) ? h : h / 2.0;
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    for (int c = 0; c < 4; ++c) {
                        double deriv = (dplus[step][a][f][(size_t)b][(size_t)c] -
                                        dminus[step][a][f][(size_t)b][(size_t)c]) /
                                       (2.0 * hh);
                        double corr = 0.0;
                        for (int d = 0; d < 4; ++d)
                            corr += gam[d][a][b] * kc[f][(size_t)d][(size_t)c] +
                                    gam[d][a][c] * kc[f][(size_t)b][(size_t)d];
                        nab[step][a][b][c] = deriv - corr;
                    }
        }
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c) {
                    const double rich =
                        (4.0 * nab[1][a][b][c] - nab[0][a][b][c]) / 3.0;
                    out[f].t[a][b][c] = rich;  // symmetrized below
                }
        double sym[4][4][4];
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c)
                    sym[a][b][c] = (out[f].t[a][b][c] + out[f].t[b][c][a] + out[f].t[c][a][b]) / 3.0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c) out[f].t[a][b][c] = sym[a][b][c];
    }
    return out;
}

double max_abs(const SymmetrizedDerivative& t) {
    double m = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) m = std::max(m, std::abs(t.t[a][b][c]));
    return m;
}

}  // namespace

std::vector<double> residual_killing_multi(const Params& p, const MultiTensorField& fields,
                                           const PointR4& pt, double h) {
    const std::vector<SymmetrizedDerivative> ts = symmetrized_nabla(p, fields, pt, h);
    std::vector<double> out(ts.size());
    for (size_t f = 0; f < ts.size(); ++f) out[f] = max_abs(ts[f]);
    return out;
}

std::vector<double> residual_conformal_multi(const Params& p, const MultiTensorField& fields,
                                             const PointR4& pt, double h) {
    // Conformal solutions of an epsilon = 1 metric live in the chart of its
    // normalized epsilon = 0 representative; measure them there.
    const Params q = normalized_params(Problem::conformal, p);
    MetricEval me(q);
    double g[4][4], gi[4][4];
    me.g_at(pt, g);
    me.ginv_at(pt, gi);

    // Trace-free precondition, checked at the evaluation point.
    const std::vector<TensorSample> center = fields(pt);
    for (const TensorSample& ts : center) {
        double tr = 0.0, scale = 1.0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                tr += g[a][b] * ts.k[(size_t)a][(size_t)b];
                scale = std::max(scale, std::abs(ts.k[(size_t)a][(size_t)b]));
            }
        if (std::abs(tr) > 1e-8 * scale)
            throw std::invalid_argument("residual_conformal: field is not trace-free");
    }

    const std::vector<SymmetrizedDerivative> ts = symmetrized_nabla(q, fields, pt, h);
    std::vector<double> out(ts.size());
    for (size_t f = 0; f < ts.size(); ++f) {
        double lam[4];
        for (int c = 0; c < 4; ++c) {
            double s = 0.0;
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) s += gi[a][b] * ts[f].t[a][b][c];
            lam[c] = 0.5 * s;
        }
        double m = 0.0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c) {
                    const double trace_part =
                        (g[a][b] * lam[c] + g[b][c] * lam[a] + g[c][a] * lam[b]) / 3.0;
                    m = std::max(m, std::abs(ts[f].t[a][b][c] - trace_part));
                }
        out[f] = m;
    }
    return out;
}

namespace {

MultiTensorField single(const TensorField& field) {
    return [field](const PointR4& pt) { return std::vector<TensorSample>{field(pt)}; };
}

}  // namespace

double residual_killing(const Params& p, const TensorField& field, const PointR4& pt, double h) {
    return residual_killing_multi(p, single(field), pt, h)[0];
}

double residual_conformal(const Params& p, const TensorField& field, const PointR4& pt, double h) {
    return residual_conformal_multi(p, single(field), pt, h)[0];
}

namespace {

// ---- closed-form solutions in Brinkmann coordinates ------------------------
//
// A formula like (z1 dz1 + 2 x- dx-) dx- is read as a polynomial in commuting
// symbols d/dx: the product V W of two vector fields contributes the
// symmetrized tensor V^(a W^b), and a mixed second-order term  c * da db
// (a != b) contributes c/2 to K^{ab}. This matches the source convention
// k_(a k'_b) for products and makes the displayed metric-inverse summand a
// literal multiple of g^{-1}.

// Brinkmann coordinate order: 0 = x+, 1 = z1, 2 = z2, 3 = x-.
struct BrinkmannSym {
    double m[4][4] = {};

    void add_pair(int a, int b, double c) {
        if (a == b) {
            m[a][a] += c;
        } else {
            m[a][b] += c / 2.0;
            m[b][a] += c / 2.0;
        }
    }
    void add_product(const std::array<double, 4>& v, const std::array<double, 4>& w, double c) {
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                m[a][b] += c * 0.5 * (v[(size_t)a] * w[(size_t)b] + v[(size_t)b] * w[(size_t)a]);
    }
    void add_ginv(const Params& p, const std::array<double, 4>& bpt, double c) {
        // inverse of 2 dx+ dx- + dz1^2 + dz2^2 + H dx+^2
        m[0][3] += c;
        m[3][0] += c;
        m[1][1] += c;
        m[2][2] += c;
        m[3][3] -= c * brinkmann_H(p, bpt);
    }
};

// Transport a Brinkmann-coordinate contravariant field to the exponential
// chart of the same parameters.
TensorField transported(const Params& p,
                        std::function<BrinkmannSym(const Params&, const std::array<double, 4>&)>
                            bfield) {
    return [p, bfield = std::move(bfield)](const PointR4& pt) {
        const std::array<double, 4> b = brinkmann_map(p, MapDir::to_brinkmann, pt);
        const std::array<std::array<double, 4>, 4> j = brinkmann_jacobian(p, b);
        const BrinkmannSym kb = bfield(p, b);
        TensorSample out;
        out.point = pt;
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) {
                double s = 0.0;
                for (int a = 0; a < 4; ++a)
                    for (int bi = 0; bi < 4; ++bi)
                        s += j[(size_t)mu][(size_t)a] * j[(size_t)nu][(size_t)bi] * kb.m[a][bi];
                out.k[(size_t)mu][(size_t)nu] = s;
            }
        return out;
    };
}

// (z1 dz1 + z2 dz2 + 2 x- dx-) dx-  -  x+ g^{-1}
BrinkmannSym dilation_column(const Params& p, const std::array<double, 4>& b) {
    BrinkmannSym k;
    k.add_product({0.0, b[1], b[2], 2.0 * b[3]}, {0.0, 0.0, 0.0, 1.0}, 1.0);
    k.add_ginv(p, b, -b[0]);
    return k;
}

// (z1 dz1 + z2 dz2 + 2 x- dx-) dz1  -  z1 g^{-1}
BrinkmannSym dilation_z1_column(const Params& p, const std::array<double, 4>& b) {
    BrinkmannSym k;
    k.add_product({0.0, b[1], b[2], 2.0 * b[3]}, {0.0, 1.0, 0.0, 0.0}, 1.0);
    k.add_ginv(p, b, -b[1]);
    return k;
}

// z2 dz1 dz2 - z1 dz2^2 - sgn * (2/3) z1 z2^2 dx-^2, the second Killing
// tensor on the a = (+-8/3, +-2/3) rays; sgn = +1 on the + ray, -1 on the -
// ray. The source displays the last coefficient as -(+-)2/3; the sign here
// is the one that passes the residual probe on both rays (the flipped sign
// fails by ~12 orders of magnitude).
BrinkmannSym rotation_column(const Params&, const std::array<double, 4>& b, double sgn) {
    BrinkmannSym k;
    k.add_pair(1, 2, b[2]);
    k.add_pair(2, 2, -b[1]);
    k.add_pair(3, 3, -sgn * (2.0 / 3.0) * b[1] * b[2] * b[2]);
    return k;
}

// Conformal c4 slice on the same rays:
// 2 z2 dz1 dz2 - 2 z1 dz2^2 - sgn * (4/3) z1 z2^2 dx-^2 + (1/2) z1 g^{-1}.
BrinkmannSym conformal_c4(const Params& p, const std::array<double, 4>& b, double sgn) {
    BrinkmannSym k;
    k.add_pair(1, 2, 2.0 * b[2]);
    k.add_pair(2, 2, -2.0 * b[1]);
    k.add_pair(3, 3, -sgn * (4.0 / 3.0) * b[1] * b[2] * b[2]);
    k.add_ginv(p, b, 0.5 * b[1]);
    return k;
}

// epsilon = 1 conformally flat case (a = 3/4):
// (z1 dz1 + z2 dz2 + 4 x- dx- - 2 x+ dx+) W - ((z1^2+z2^2)/x+^2 - 4 x-/x+) g^{-1}
// with W = (z1 dz1 + z2 dz2 - 2 x+ dx+)/x+^2 + ((z1^2+z2^2)/x+^3) dx-.
BrinkmannSym eps1_flat34(const Params& p, const std::array<double, 4>& b) {
    const double xp = b[0], z1 = b[1], z2 = b[2], xm = b[3];
    const double r2 = z1 * z1 + z2 * z2;
    BrinkmannSym k;
    k.add_product({-2.0 * xp, z1, z2, 4.0 * xm},
                  {-2.0 / xp, z1 / (xp * xp), z2 / (xp * xp), r2 / (xp * xp * xp)}, 1.0);
    k.add_ginv(p, b, -(r2 / (xp * xp) - 4.0 * xm / xp));
    return k;
}

// epsilon = 1 family on a1 = 4 a2 + 3/4:
// 2 sqrt(x+) z2 dz1 dz2 - (z2^2/sqrt(x+)) dz1 dx- - 2 sqrt(x+) z1 dz2^2
// + (z1 z2/sqrt(x+)) dz2 dx- - ((4 a2 + 1) z1 z2^2 / (2 x+^{3/2})) dx-^2.
BrinkmannSym eps1_linked(const Params& p, const std::array<double, 4>& b) {
    const double xp = b[0], z1 = b[1], z2 = b[2];
    const double sq = std::sqrt(xp);
    const double a2 = to_d(p.a2);
    BrinkmannSym k;
    k.add_pair(1, 2, 2.0 * sq * z2);
    k.add_pair(1, 3, -z2 * z2 / sq);
    k.add_pair(2, 2, -2.0 * sq * z1);
    k.add_pair(2, 3, z1 * z2 / sq);
    k.add_pair(3, 3, -(4.0 * a2 + 1.0) * z1 * z2 * z2 / (2.0 * sq * sq * sq));
    return k;
}

ExplicitTensor make(std::string label, Problem problem, Params params,
                    std::function<BrinkmannSym(const Params&, const std::array<double, 4>&)> f) {
    TensorField field = transported(params, std::move(f));
    return ExplicitTensor{std::move(label), problem, std::move(params), std::move(field)};
}

std::vector<ExplicitTensor> build_explicit_tensors() {
    using A = std::array<double, 4>;
    const Rational z(0), one(1);
    std::vector<ExplicitTensor> out;

    // Killing, generic epsilon = 0 representative point.
    out.push_back(make("killing-dilation(0,1,2,1)", Problem::projective, Params(0, 1, 2, 1),
                       dilation_column));
    // Killing on a = (0, +-2): the extra z1-column tensor plus the dilation
    // column (the two-parameter family's coordinate slices).
    for (int s : {+1, -1}) {
        Params pa(0, 0, Rational(2 * s), 0);
        out.push_back(make("killing-z1-column(0,0," + std::to_string(2 * s) + ",0)",
                           Problem::projective, pa, dilation_z1_column));
        out.push_back(make("killing-dilation(0,0," + std::to_string(2 * s) + ",0)",
                           Problem::projective, pa, dilation_column));
    }
    // Killing on the (+-8/3, +-2/3) rays: dilation column and rotation column.
    for (int s : {+1, -1}) {
        Params pa(0, Rational(8 * s, 3), Rational(2 * s, 3), 0);
        const double sgn = static_cast<double>(s);
        std::string tag = (s > 0) ? "(0,8/3,2/3,0)" : "(0,-8/3,-2/3,0)";
        out.push_back(make("killing-dilation" + tag, Problem::projective, pa, dilation_column));
        out.push_back(make("killing-rotation" + tag, Problem::projective, pa,
                           [sgn](const Params& pp, const A& b) { return rotation_column(pp, b, sgn); }));
        out.push_back(make("conformal-c4" + tag, Problem::conformal, pa,
                           [sgn](const Params& pp, const A& b) { return conformal_c4(pp, b, sgn); }));
    }
    // Conformally flat Killing cases.
    for (int s : {+1, -1}) {
        Params pa(0, Rational(s), Rational(s), 0);
        std::string tag = (s > 0) ? "(0,1,1,0)" : "(0,-1,-1,0)";
        out.push_back(make("killing-dilation" + tag, Problem::projective, pa, dilation_column));
    }
    out.push_back(make("killing-eps1(1,3/4,3/4,0)", Problem::projective,
                       Params(1, Rational(3, 4), Rational(3, 4), 0), eps1_flat34));
    // epsilon = 1 linked family a1 = 4 a2 + 3/4 at a2 = 1.
    out.push_back(make("killing-eps1(1,19/4,1,0)", Problem::projective,
                       Params(1, Rational(19, 4), one, z), eps1_linked));
    return out;
}

}  // namespace

const std::vector<ExplicitTensor>& explicit_tensors() {
    static const std::vector<ExplicitTensor> tensors = build_explicit_tensors();
    return tensors;
}

}  // namespace pwkt
