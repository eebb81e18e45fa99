#ifndef PWKT_TRACTOR_HPP
#define PWKT_TRACTOR_HPP

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "pwkt/exactlin.hpp"

namespace pwkt {

// conformal: S^2 so(2,4) on index range 1..6 (ambient dim 120, Cartan 84);
// projective: S^2 Lambda^2 (R^5)* on 1..5 (ambient dim 55, Cartan 50).
enum class Problem { conformal, projective };

// Ordered position basis of the ambient representation. Position t (0-based)
// is the variable w_{t+1} with a display tuple (i,j,k,l): the component
// T^{ijkl} of a tensor antisymmetric in (i,j) and (k,l) and symmetric under
// swapping the pairs.
struct PositionBasis {
    Problem problem;
    int index_range = 0;                        // 6 or 5
    std::vector<std::array<int, 4>> positions;  // display tuples, 1-based entries
    std::vector<int> grading;                   // per-position grading label

    int dim() const { return static_cast<int>(positions.size()); }

    // Position index and sign of the component T^{abcd}; {-1, 0} when the
    // component vanishes identically (repeated index inside a pair).
    std::pair<int, Rational> resolve(int a, int b, int c, int d) const;

    std::map<std::array<int, 4>, int> canonical;  // sorted-pair tuple -> index
};

PositionBasis position_basis(Problem problem);

// Linear conditions cutting out the Cartan component: one wedge row per
// 4-element index subset, plus (conformal) the 21 trace rows against the
// invariant pairing 1<->6, 2<->5, 3<->3, 4<->4.
MatrixQ cartan_conditions(const PositionBasis& basis);

// The Cartan component V in the coordinates of the free-variable list, with
// the dependent variables eliminated. embed maps free coordinates to ambient
// coordinates; select reads the free coordinates back off.
struct CartanComponent {
    Problem problem;
    int ambient_dim = 0;
    int dim = 0;
    std::vector<int> free_vars;   // ascending 1-based w indices, size dim
    std::vector<int> free_col;    // 1-based w index -> column in embed, -1 if dependent
    MatrixQ embed;                // ambient_dim x dim
    MatrixQ select;               // dim x ambient_dim
};

CartanComponent cartan_component(Problem problem);

// Cached accessors: bases and Cartan components are parameter-free, so one
// instance per problem is shared (built thread-safely on first use).
const PositionBasis& position_basis_of(Problem problem);
const CartanComponent& cartan_component_of(Problem problem);

bool in_algebra(Problem problem, const MatrixQ& x);  // so(2,4) / sl(5) membership
MatrixQ so24_form();                                 // the invariant bilinear form J

// Derivation action of an algebra element on ambient coordinates (projective
// acts through -x^T per slot, the dual of the standard action).
MatrixQ rho_ambient(const PositionBasis& basis, const MatrixQ& x);

// Action restricted to V in free coordinates. Throws ConsistencyError if the
// ambient image leaves the embedded V, std::invalid_argument if x fails the
// algebra membership test.
MatrixQ rho(const PositionBasis& basis, const CartanComponent& cc, const MatrixQ& x);

// Projection to S^2 c as a 10 x ambient matrix; rows ordered
// (1,1),(1,2),(1,3),(1,4),(2,2),(2,3),(2,4),(3,3),(3,4),(4,4) in frame
// indices. Conformal reads positions (i,6,k,6), projective (1,j,1,l).
MatrixQ pi_matrix_ambient(const PositionBasis& basis);
MatrixQ pi_matrix(const PositionBasis& basis, const CartanComponent& cc);  // 10 x dim

// Symmetric frame tensor (1-based [p][q]) from a 10-vector in the row order
// of pi_matrix.
std::array<std::array<Rational, 5>, 5> sym4_from_coeffs(const VecQ& f);

std::array<std::array<Rational, 5>, 5> project_pi(const PositionBasis& basis,
                                                  const CartanComponent& cc, const VecQ& v_free);

}  // namespace pwkt

#endif
