#pragma once

#include <array>
#include <functional>

#include "pwkt/exactlin.hpp"
#include "pwkt/planewave.hpp"
#include "pwkt/tractor.hpp"

namespace pwkt {

// Inclusions of the transvection algebra spanned by k^1..k^6 into the ambient
// algebras, one matrix per generator: alpha(p, i) lands in so(2,4) (6x6),
// beta(p, i) in sl(5) (5x5).  Neither is a Lie algebra homomorphism; the
// failure is what the curvature of the prolongation connection measures.
MatrixQ alpha(const Params& p, int i);
MatrixQ beta(const Params& p, int i);

// Correction term Psi_i of the prolongation connection, as an endomorphism of
// the free coordinates of the solution bundle V.  Psi extends by zero on the
// isotropy directions, so psi(problem, p, i) is the zero matrix for i in
// {5, 6}.  The entries come from literal data tables; see psi_tables.cpp.
MatrixQ psi(Problem problem, const Params& p, int i);

// The separate data table for the rotationally symmetric projective case
// a1 == a2.  The general projective table specialises to this one; both are
// kept so they can be cross-validated against each other.  Requires
// p.a1 == p.a2.
MatrixQ psi_projective_equal_parameters(const Params& p, int i);

// Parameters the prolongation connection is actually built at: the conformal
// problem at epsilon = 1 is handled at the conformally equivalent epsilon = 0
// parameters (0, a1 + 1/4, a2 + 1/4, gamma), matching the conformal-shift
// image of param_isometries; all other inputs pass through unchanged.
Params normalized_params(Problem problem, const Params& p);

// Prolongation connection Phi_i = rho(alpha(k^i)) + Psi_i (conformal) or
// rho(beta(k^i)) + Psi_i (projective), acting on free coordinates of V.
// The stored params field holds normalized_params(problem, p).
struct PhiFamily {
    Problem problem = Problem::conformal;
    Params params;
    std::array<MatrixQ, 7> phi;  // 1-based: phi[1]..phi[6]; phi[0] unused

    const MatrixQ& operator()(int i) const { return phi.at(static_cast<size_t>(i)); }
};

PhiFamily phi_family(Problem problem, const Params& p);

// Curvature of the prolongation connection:
//   R(i, j) = [Phi_i, Phi_j] - sum_m c^m_{ij} Phi_m,
// with c the structure constants of the transvection algebra.  Entries are
// stored for the 15 pairs 1 <= i < j <= 6; R is antisymmetric in (i, j) by
// definition.
struct CurvatureTable {
    Problem problem = Problem::conformal;
    Params params;
    std::array<std::array<MatrixQ, 7>, 7> entry;  // entry[i][j] valid for i < j

    // Requires 1 <= i < j <= 6.
    const MatrixQ& operator()(int i, int j) const {
        return entry.at(static_cast<size_t>(i)).at(static_cast<size_t>(j));
    }
};

CurvatureTable curvature(const PhiFamily& fam);

namespace detail {

// Shared loader interface for the Psi data tables.  Each table emitter calls
// add(generator, out_w, in_w, coefficient) once per term, where out_w / in_w
// are 1-based coordinate labels of the ambient representation and the
// coefficient is a rational expression in the parameters.  Output labels are
// always free coordinates of V.
using PsiAdder = std::function<void(int gen, int out_w, int in_w, const Rational& coef)>;

void conformal_psi_table(const Params& p, const PsiAdder& add);
void projective_psi_table(const Params& p, const PsiAdder& add);
void projective_equal_psi_table(const Params& p, const PsiAdder& add);

}  // namespace detail

}  // namespace pwkt
