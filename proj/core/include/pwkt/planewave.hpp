#ifndef PWKT_PLANEWAVE_HPP
#define PWKT_PLANEWAVE_HPP

#include <array>
#include <string>
#include <vector>

#include "pwkt/exactlin.hpp"

namespace pwkt {

// Parameters (epsilon, a1, a2, gamma) of the homogeneous plane wave
// g_{epsilon,a1,a2,gamma}; epsilon selects the family and is 0 or 1.
struct Params {
    int epsilon = 0;
    Rational a1, a2, gamma;

    Params() = default;
    Params(int eps, Rational a1_, Rational a2_, Rational gamma_);

    Rational eps_q() const { return Rational(epsilon); }
    bool operator==(const Params& o) const {
        return epsilon == o.epsilon && a1 == o.a1 && a2 == o.a2 && gamma == o.gamma;
    }
    std::string str() const;  // "(eps, a1, a2, gamma)" with exact rationals
};

// Structure constants [k^i,k^j] = sum_m c[i][j][m] k^m, indices 1..6.
struct BracketTable {
    Rational c[7][7][7];

    // 6x6 matrix of ad(k^j): column m holds [k^j, k^m] in the k-basis.
    MatrixQ ad(int j) const;
};

BracketTable bracket_table(const Params& p);

// Left-invariant frame e^1..e^4 and coframe e*_1..e*_4 in exponential
// coordinates; frame[i][mu] is the coefficient of d/dx_mu in e^i, and
// coframe[i][mu] the coefficient of dx_mu in e*_i (1-based).
struct FrameData {
    Poly4 frame[5][5];
    Poly4 coframe[5][5];
};

FrameData frame_data(const Params& p);

// Metric, inverse and Christoffel symbols Gamma^a_{bc} as exact polynomials
// in the exponential coordinates. det(g) = -1, so ginv is polynomial.
struct MetricData {
    Poly4 g[5][5];
    Poly4 ginv[5][5];
    Poly4 christoffel[5][5][5];
};

MetricData metric_data(const Params& p);

enum class MapDir { to_exponential, to_brinkmann };

// Coordinate map between Brinkmann (x+, z1, z2, x-) and exponential
// coordinates. For epsilon=1 the Brinkmann chart needs x+ > 0.
std::array<double, 4> brinkmann_map(const Params& p, MapDir dir, const std::array<double, 4>& pt);

// Jacobian d(exponential)/d(Brinkmann) at a Brinkmann point.
std::array<std::array<double, 4>, 4> brinkmann_jacobian(const Params& p, const std::array<double, 4>& bpt);

// Brinkmann-form metric matrix at a Brinkmann point, coordinate order
// (x+, z1, z2, x-).
std::array<std::array<double, 4>, 4> brinkmann_metric(const Params& p, const std::array<double, 4>& bpt);
double brinkmann_H(const Params& p, const std::array<double, 4>& bpt);

struct ParamImage {
    Params params;
    std::string kind;  // "isometry-scaling", "isometry-swap", "conformal-shift"
};

// Parameter-level equivalences: lambda-scalings (epsilon=0),
// the a1<->a2 swap, and for epsilon=1 the conformal shift to
// (0, a1+1/4, a2+1/4, gamma). The swap for epsilon=1 is emitted only at
// gamma=0, where relabeling z1<->z2 realizes it.
std::vector<ParamImage> param_isometries(const Params& p, const std::vector<Rational>& lambdas = {});

}  // namespace pwkt

#endif
