#include "pwkt/prolongation.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace pwkt {

namespace {

// 1-based assignment helper so the inclusion matrices read like the data
// they were transcribed from.
void set1(MatrixQ& m, int r, int c, const Rational& v) { m(r - 1, c - 1) = v; }

}  // namespace

MatrixQ alpha(const Params& p, int i) {
    MatrixQ m(6, 6);
    const Rational half_sum = (p.a1 + p.a2) / 2;
    const Rational eps = p.eps_q();
    switch (i) {
        case 1:
            set1(m, 1, 2, half_sum);
            set1(m, 2, 1, rat(1));
            set1(m, 2, 2, eps);
            set1(m, 3, 4, -p.gamma);
            set1(m, 4, 3, p.gamma);
            set1(m, 5, 5, -eps);
            set1(m, 5, 6, -half_sum);
            set1(m, 6, 5, rat(-1));
            break;
        case 2:
            set1(m, 3, 1, rat(1));
            set1(m, 6, 3, rat(-1));
            break;
        case 3:
            set1(m, 4, 1, rat(1));
            set1(m, 6, 4, rat(-1));
            break;
        case 4:
            set1(m, 5, 1, rat(1));
            set1(m, 6, 2, rat(-1));
            break;
        case 5:
            set1(m, 3, 2, rat(-1));
            set1(m, 5, 3, rat(1));
            break;
        case 6:
            set1(m, 4, 2, rat(-1));
            set1(m, 5, 4, rat(1));
            break;
        default:
            throw std::invalid_argument("alpha: generator index must be in 1..6");
    }
    return m;
}

MatrixQ beta(const Params& p, int i) {
    MatrixQ m(5, 5);
    const Rational third_sum = (p.a1 + p.a2) / 3;
    const Rational eps = p.eps_q();
    switch (i) {
        case 1:
            set1(m, 1, 2, third_sum);
            set1(m, 2, 1, rat(1));
            set1(m, 2, 2, eps);
            set1(m, 3, 4, -p.gamma);
            set1(m, 4, 3, p.gamma);
            set1(m, 5, 5, -eps);
            break;
        case 2:
            set1(m, 3, 1, rat(1));
            break;
        case 3:
            set1(m, 4, 1, rat(1));
            break;
        case 4:
            set1(m, 5, 1, rat(1));
            break;
        case 5:
            set1(m, 3, 2, rat(-1));
            set1(m, 5, 3, rat(1));
            break;
        case 6:
            set1(m, 4, 2, rat(-1));
            set1(m, 5, 4, rat(1));
            break;
        default:
            throw std::invalid_argument("beta: generator index must be in 1..6");
    }
    return m;
}

namespace {

// Assemble the free x free matrix of one Psi_i from a table emitter: collect
// the generator-i rows of the table (free outputs x ambient inputs), then
// compose with the embedding of V.
MatrixQ assemble_psi(const CartanComponent& cc, int i,
                     const std::function<void(const detail::PsiAdder&)>& emit) {
    if (i < 1 || i > 6) throw std::invalid_argument("psi: generator index must be in 1..6");
    MatrixQ table(cc.dim, cc.ambient_dim);
    if (i <= 4) {
        detail::PsiAdder add = [&](int gen, int out_w, int in_w, const Rational& coef) {
            if (gen != i) return;
            if (out_w < 1 || out_w > cc.ambient_dim || in_w < 1 || in_w > cc.ambient_dim)
                throw ConsistencyError("psi table: coordinate label out of range");
            const int row = cc.free_col[static_cast<size_t>(out_w)];
            if (row < 0) throw ConsistencyError("psi table: output coordinate is not free");
            table(row, in_w - 1) += coef;
        };
        emit(add);
    }
    return table * cc.embed;
}

}  // namespace

MatrixQ psi(Problem problem, const Params& p, int i) {
    const CartanComponent& cc = cartan_component_of(problem);
    return assemble_psi(cc, i, [&](const detail::PsiAdder& add) {
        if (problem == Problem::conformal)
            detail::conformal_psi_table(p, add);
        else
            detail::projective_psi_table(p, add);
    });
}

MatrixQ psi_projective_equal_parameters(const Params& p, int i) {
    if (!(p.a1 == p.a2))
        throw std::invalid_argument("psi_projective_equal_parameters: requires a1 == a2");
    const CartanComponent& cc = cartan_component_of(Problem::projective);
    return assemble_psi(cc, i, [&](const detail::PsiAdder& add) {
        detail::projective_equal_psi_table(p, add);
    });
}

Params normalized_params(Problem problem, const Params& p) {
    if (problem == Problem::conformal && p.epsilon == 1)
        return Params(0, p.a1 + Rational(1, 4), p.a2 + Rational(1, 4), p.gamma);
    return p;
}

PhiFamily phi_family(Problem problem, const Params& p) {
    PhiFamily fam;
    fam.problem = problem;
    // The conformal correction table is stated in the epsilon = 0
    // normalization, so the conformal problem at epsilon = 1 is built at the
    // conformally equivalent epsilon = 0 parameters; conformal Killing tensors
    // and their dimensions transfer along the conformal equivalence.
    fam.params = normalized_params(problem, p);
    const Params& q = fam.params;
    const PositionBasis& basis = position_basis_of(problem);
    const CartanComponent& cc = cartan_component_of(problem);
    for (int i = 1; i <= 6; ++i) {
        const MatrixQ incl = problem == Problem::conformal ? alpha(q, i) : beta(q, i);
        MatrixQ r;
        try {
            r = rho(basis, cc, incl);
        } catch (const ConsistencyError& err) {
            throw ConsistencyError("phi_family: generator k^" + std::to_string(i) + ": " +
                                   err.what());
        }
        fam.phi[static_cast<size_t>(i)] = i <= 4 ? r + psi(problem, q, i) : std::move(r);
    }
    return fam;
}

CurvatureTable curvature(const PhiFamily& fam) {
    CurvatureTable table;
    table.problem = fam.problem;
    table.params = fam.params;
    const BracketTable brackets = bracket_table(fam.params);
    for (int i = 1; i <= 6; ++i) {
        for (int j = i + 1; j <= 6; ++j) {
            MatrixQ r = commutator(fam.phi[static_cast<size_t>(i)], fam.phi[static_cast<size_t>(j)]);
            for (int m = 1; m <= 6; ++m) {
                const Rational& c = brackets.c[i][j][m];
                if (c != 0) r = r - fam.phi[static_cast<size_t>(m)] * c;
            }
            table.entry[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(r);
        }
    }
    return table;
}

}  // namespace pwkt
