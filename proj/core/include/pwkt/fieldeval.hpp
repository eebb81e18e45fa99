#ifndef PWKT_FIELDEVAL_HPP
#define PWKT_FIELDEVAL_HPP

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pwkt/exactlin.hpp"
#include "pwkt/planewave.hpp"
#include "pwkt/prolongation.hpp"

namespace pwkt {

// Exponential coordinates (x1, x2, x3, x4), 0-based storage.
using PointR4 = std::array<double, 4>;

// Contravariant symmetric 2-tensor components K^{mu nu} at a point,
// coordinate indices 0..3 for x1..x4.
struct TensorSample {
    PointR4 point{};
    std::array<std::array<double, 4>, 4> k{};
};

// Vector field components v^mu at a point.
struct VectorFieldSample {
    PointR4 point{};
    std::array<double, 4> v{};
};

using TensorField = std::function<TensorSample(const PointR4&)>;
// Evaluates a whole family of tensor fields at one point (shared setup).
using MultiTensorField = std::function<std::vector<TensorSample>(const PointR4&)>;

struct EvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix exponential: scaling-and-squaring with a truncated Taylor series,
// scale chosen so the scaled norm is < 1/2, series summed to machine
// tolerance. Throws EvaluationError if the series fails to converge within
// the configured term bound.
Eigen::MatrixXd expm(const Eigen::MatrixXd& m);

// Numeric evaluator for solutions of one prolonged family: precomputes
// double-precision Phi matrices, the frame-component projection and the
// coordinate frame once, then evaluates solution vectors as coordinate
// tensor fields via
//   x -> pi(exp(-Phi(x4 k^4)) exp(-Phi(x2 k^2 + x3 k^3)) exp(-Phi(x1 k^1)) v).
// The grading-zero slot of the conformal module carries contravariant frame
// components (the module is built from the standard representation), so the
// projected matrix contracts directly against the frame vectors.  The
// projective module is built from the dual representation, its projected
// matrix holds covariant components in the coframe, and the evaluator raises
// both indices with the exact inverse metric afterwards.
// For the conformal problem with epsilon = 1 all work happens at the
// normalized parameters (see normalized_params); the returned fields live in
// the exponential chart of that representative.
class SolutionEvaluator {
  public:
    SolutionEvaluator(Problem problem, const Params& p);

    Problem problem() const { return problem_; }
    // Parameters actually evaluated at (normalized for conformal epsilon=1).
    const Params& params() const { return params_; }
    int dim() const { return dim_; }

    // v has dim() entries in the free-variable coordinates of V (the same
    // coordinates SolutionSpace bases are expressed in).
    TensorSample evaluate(const VecQ& v, const PointR4& pt) const;
    std::vector<TensorSample> evaluate_basis(const std::vector<VecQ>& vs, const PointR4& pt) const;

    TensorField field(const VecQ& v) const;
    MultiTensorField fields(const std::vector<VecQ>& vs) const;

  private:
    std::vector<TensorSample> eval_matrix(const Eigen::MatrixXd& v, const PointR4& pt) const;

    Problem problem_;
    Params params_;
    int dim_ = 0;
    std::array<Eigen::MatrixXd, 5> phi_;  // 1-based, Phi(k^1)..Phi(k^4)
    Eigen::MatrixXd pi_;                  // 10 x dim, rows (1,1),(1,2),...,(4,4)
    // Contraction data, 1-based: the frame vectors for the conformal problem,
    // the coframe for the projective one (see the class comment).
    Poly4 contract_[5][5];
    bool raise_ = false;   // projective: raise both indices with ginv_
    Poly4 ginv_[5][5];     // populated only when raise_ is set
};

// One-off convenience wrapper around SolutionEvaluator.
TensorSample evaluate_solution(Problem problem, const Params& p, const VecQ& v, const PointR4& pt);

// The six Killing vector fields k^1..k^6 at a point: frame components are
// the c-part of Ad(s(x)^{-1}) k^j computed from the 6x6 ad matrices, then
// converted to coordinates through the frame.
std::array<VectorFieldSample, 6> killing_fields(const Params& p, const PointR4& pt);

// The homothety k^7 = -x2 d/dx2 - x3 d/dx3 - 2 x4 d/dx4 (defined for
// a1 != a2).
VectorFieldSample homothety_field(const PointR4& pt);

// Max-norm of the full symmetrization nabla_(a K_bc) at pt: indices lowered
// with the exact metric, the partial derivatives taken by central
// differences of step h with one Richardson extrapolation, the Christoffel
// terms evaluated from exact polynomials.
double residual_killing(const Params& p, const TensorField& field, const PointR4& pt,
                        double h = 1e-3);

// Same, for the trace-free equation: T_abc = nabla_(a K_bc) minus its trace
// part sym(g (x) lambda) with lambda_c = 1/2 g^{ab} T_abc. The input field
// must be pointwise g-trace-free (checked at pt, tolerance 1e-8 relative);
// otherwise std::invalid_argument. For epsilon = 1 parameters the residual
// is measured in the normalized epsilon = 0 representative's chart (where
// conformal solutions live).
double residual_conformal(const Params& p, const TensorField& field, const PointR4& pt,
                          double h = 1e-3);

// Batched variants: one geometry setup and one set of sample points shared
// by the whole family (order matches the family's output order).
std::vector<double> residual_killing_multi(const Params& p, const MultiTensorField& fields,
                                           const PointR4& pt, double h = 1e-3);
std::vector<double> residual_conformal_multi(const Params& p, const MultiTensorField& fields,
                                             const PointR4& pt, double h = 1e-3);

// A hard-coded closed-form solution bound to its parameter point. The
// formulas are stated in Brinkmann coordinates and transported to the
// exponential chart through brinkmann_map, so the field plugs directly into
// residual_killing / residual_conformal.
struct ExplicitTensor {
    std::string label;
    Problem problem;  // conformal -> residual_conformal, projective -> residual_killing
    Params params;
    TensorField field;
};

// The documented verification subset of the closed-form solution families.
const std::vector<ExplicitTensor>& explicit_tensors();

}  // namespace pwkt

#endif
