#include "pwkt/tractor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace pwkt {

namespace {

std::array<int, 4> canonical_tuple(int a, int b, int c, int d) {
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    if (std::make_pair(c, d) < std::make_pair(a, b)) {
        std::swap(a, c);
        std::swap(b, d);
    }
    return {a, b, c, d};
}

void add_position(PositionBasis& pb, int i, int j, int k, int l, int grading) {
    pb.positions.push_back({i, j, k, l});
    pb.grading.push_back(grading);
    pb.canonical[canonical_tuple(i, j, k, l)] = pb.dim() - 1;
}

// Pairs (i,j), 2 <= i < j <= 5, in lexicographic order.
const std::array<std::array<int, 2>, 6> kMidPairs = {
    {{2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}};

std::mt19937 sample_rng() { return std::mt19937(987654u); }

MatrixQ random_algebra_element(Problem problem, std::mt19937& rng) {
    std::uniform_int_distribution<int> entry(-4, 4);
    if (problem == Problem::conformal) {
        // A antisymmetric makes A*J a member of so(2,4) since J is symmetric.
        MatrixQ a(6, 6);
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) {
                a(i, j) = rat(entry(rng));
                a(j, i) = -a(i, j);
            }
        return a * so24_form();
    }
    MatrixQ m(5, 5);
    Rational tr;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) m(i, j) = rat(entry(rng));
    for (int i = 0; i < 5; ++i) tr += m(i, i);
    for (int i = 0; i < 5; ++i) m(i, i) -= tr / 5;
    return m;
}

}  // namespace

std::pair<int, Rational> PositionBasis::resolve(int a, int b, int c, int d) const {
    if (a == b || c == d) return {-1, rat(0)};
    Rational sign = rat(1);
    if (a > b) {
        std::swap(a, b);
        sign = -sign;
    }
    if (c > d) {
        std::swap(c, d);
        sign = -sign;
    }
    if (std::make_pair(c, d) < std::make_pair(a, b)) {
        std::swap(a, c);
        std::swap(b, d);
    }
    auto it = canonical.find({a, b, c, d});
    if (it == canonical.end())
        throw ConsistencyError("PositionBasis::resolve: tuple not enumerated");
    return {it->second, sign};
}

PositionBasis position_basis(Problem problem) {
    PositionBasis pb;
    pb.problem = problem;
    if (problem == Problem::conformal) {
        pb.index_range = 6;
        // (i) w1..w10, grading 4
        for (int j = 2; j <= 5; ++j)
            for (int l = j; l <= 5; ++l) add_position(pb, 1, j, 1, l, 4);
        // (ii) w11..w34, grading 3
        for (int j = 2; j <= 5; ++j)
            for (const auto& kl : kMidPairs) add_position(pb, 1, j, kl[0], kl[1], 3);
        // (iii) w35..w38, grading 3
        for (int j = 2; j <= 5; ++j) add_position(pb, 1, j, 1, 6, 3);
        // (iv) w39..w54, grading 2
        for (int j = 2; j <= 5; ++j)
            for (int k = 2; k <= 5; ++k) add_position(pb, 1, j, k, 6, 2);
        // (v) w55..w60, grading 2
        for (const auto& kl : kMidPairs) add_position(pb, 1, 6, kl[0], kl[1], 2);
        // (vi) w61, grading 2
        add_position(pb, 1, 6, 1, 6, 2);
        // (vii) w62..w82, grading 2
        for (size_t p = 0; p < kMidPairs.size(); ++p)
            for (size_t q = p; q < kMidPairs.size(); ++q)
                add_position(pb, kMidPairs[p][0], kMidPairs[p][1], kMidPairs[q][0],
                             kMidPairs[q][1], 2);
        // (viii) w83..w106, grading 1
        for (const auto& ij : kMidPairs)
            for (int k = 2; k <= 5; ++k) add_position(pb, ij[0], ij[1], k, 6, 1);
        // (ix) w107..w110, grading 1
        for (int k = 2; k <= 5; ++k) add_position(pb, 1, 6, k, 6, 1);
        // (x) w111..w120, grading 0
        for (int i = 2; i <= 5; ++i)
            for (int k = i; k <= 5; ++k) add_position(pb, i, 6, k, 6, 0);
        if (pb.dim() != 120) throw ConsistencyError("position_basis: conformal count != 120");
    } else {
        pb.index_range = 5;
        // (i) w1..w10, grading 0
        for (int j = 2; j <= 5; ++j)
            for (int l = j; l <= 5; ++l) add_position(pb, 1, j, 1, l, 0);
        // (ii) w11..w34, grading 1
        for (int j = 2; j <= 5; ++j)
            for (const auto& kl : kMidPairs) add_position(pb, 1, j, kl[0], kl[1], 1);
        // (iii) w35..w55, grading 2
        for (size_t p = 0; p < kMidPairs.size(); ++p)
            for (size_t q = p; q < kMidPairs.size(); ++q)
                add_position(pb, kMidPairs[p][0], kMidPairs[p][1], kMidPairs[q][0],
                             kMidPairs[q][1], 2);
        if (pb.dim() != 55) throw ConsistencyError("position_basis: projective count != 55");
    }
    return pb;
}

MatrixQ cartan_conditions(const PositionBasis& basis) {
    const int n = basis.dim();
    const int range = basis.index_range;
    std::vector<VecQ> rows;
    auto add = [&](VecQ& row, int a, int b, int c, int d, const Rational& coef) {
        auto [idx, sign] = basis.resolve(a, b, c, d);
        if (idx >= 0) row[idx] += coef * sign;
    };
    // Wedge conditions: the full antisymmetrization vanishes on S^2 Lambda^2.
    for (int p = 1; p <= range; ++p)
        for (int q = p + 1; q <= range; ++q)
            for (int r = q + 1; r <= range; ++r)
                for (int s = r + 1; s <= range; ++s) {
                    VecQ row(n);
                    add(row, p, q, r, s, rat(1));
                    add(row, p, r, q, s, rat(-1));
                    add(row, p, s, q, r, rat(1));
                    rows.push_back(std::move(row));
                }
    if (basis.problem == Problem::conformal) {
        const std::array<std::array<int, 2>, 6> jpairs = {
            {{1, 6}, {6, 1}, {2, 5}, {5, 2}, {3, 3}, {4, 4}}};
        for (int j = 1; j <= 6; ++j)
            for (int l = j; l <= 6; ++l) {
                VecQ row(n);
                for (const auto& ab : jpairs) add(row, ab[0], j, ab[1], l, rat(1));
                rows.push_back(std::move(row));
            }
    }
    MatrixQ c(static_cast<int>(rows.size()), n);
    for (int i = 0; i < c.rows(); ++i) c.set_row(i, rows[i]);
    return c;
}

CartanComponent cartan_component(Problem problem) {
    PositionBasis basis = position_basis(problem);
    const int n = basis.dim();

    std::vector<int> free_list;
    if (problem == Problem::conformal) {
        auto add_range = [&free_list](int lo, int hi) {
            for (int w = lo; w <= hi; ++w) free_list.push_back(w);
        };
        add_range(1, 3);
        add_range(5, 18);
        add_range(27, 38);
        add_range(55, 65);
        add_range(68, 90);
        add_range(99, 113);
        add_range(115, 120);
    } else {
        for (int w = 1; w <= 55; ++w)
            if (w != 22 && w != 23 && w != 29 && w != 30 && w != 44) free_list.push_back(w);
    }

    std::vector<int> dep_list;
    {
        std::vector<bool> is_free(n + 1, false);
        for (int w : free_list) is_free[w] = true;
        for (int w = 1; w <= n; ++w)
            if (!is_free[w]) dep_list.push_back(w);
    }
    const int nfree = static_cast<int>(free_list.size());
    const int ndep = static_cast<int>(dep_list.size());

    MatrixQ cond = cartan_conditions(basis);
    if (cond.rows() != ndep)
        throw ConsistencyError("cartan_component: condition count != dependent count");

    // Solve cond_D * x_D = -cond_F * x_F by row reduction of [cond_D | -cond_F].
    MatrixQ aug(ndep, ndep + nfree);
    for (int r = 0; r < ndep; ++r) {
        for (int c = 0; c < ndep; ++c) aug(r, c) = cond(r, dep_list[c] - 1);
        for (int c = 0; c < nfree; ++c) aug(r, ndep + c) = -cond(r, free_list[c] - 1);
    }
    auto [red, pivots] = rref(aug);
    if (static_cast<int>(pivots.size()) != ndep)
        throw ConsistencyError("cartan_component: dependent block is singular");
    for (int c = 0; c < ndep; ++c)
        if (pivots[c] != c) throw ConsistencyError("cartan_component: dependent block is singular");

    CartanComponent cc;
    cc.problem = problem;
    cc.ambient_dim = n;
    cc.dim = nfree;
    cc.free_vars = free_list;
    cc.free_col.assign(n + 1, -1);
    cc.embed = MatrixQ(n, nfree);
    cc.select = MatrixQ(nfree, n);
    for (int c = 0; c < nfree; ++c) {
        cc.free_col[free_list[c]] = c;
        cc.embed(free_list[c] - 1, c) = rat(1);
        cc.select(c, free_list[c] - 1) = rat(1);
    }
    for (int r = 0; r < ndep; ++r)
        for (int c = 0; c < nfree; ++c) cc.embed(dep_list[r] - 1, c) = red(r, ndep + c);

    if (!(cond * cc.embed).is_zero())
        throw ConsistencyError("cartan_component: embedding violates the conditions");

    // Invariance spot-check: the restricted action must close on V.
    auto rng = sample_rng();
    for (int trial = 0; trial < 5; ++trial)
        (void)rho(basis, cc, random_algebra_element(problem, rng));
    return cc;
}

const PositionBasis& position_basis_of(Problem problem) {
    static const PositionBasis conf = position_basis(Problem::conformal);
    static const PositionBasis proj = position_basis(Problem::projective);
    return problem == Problem::conformal ? conf : proj;
}

const CartanComponent& cartan_component_of(Problem problem) {
    static const CartanComponent conf = cartan_component(Problem::conformal);
    static const CartanComponent proj = cartan_component(Problem::projective);
    return problem == Problem::conformal ? conf : proj;
}

MatrixQ so24_form() {
    MatrixQ j(6, 6);
    j(0, 5) = j(5, 0) = rat(1);
    j(1, 4) = j(4, 1) = rat(1);
    j(2, 2) = j(3, 3) = rat(1);
    return j;
}

bool in_algebra(Problem problem, const MatrixQ& x) {
    if (problem == Problem::conformal) {
        if (x.rows() != 6 || x.cols() != 6) return false;
        MatrixQ j = so24_form();
        return (x.transpose() * j + j * x).is_zero();
    }
    if (x.rows() != 5 || x.cols() != 5) return false;
    Rational tr;
    for (int i = 0; i < 5; ++i) tr += x(i, i);
    return tr == 0;
}

MatrixQ rho_ambient(const PositionBasis& basis, const MatrixQ& x) {
    const int n = basis.dim();
    const int range = basis.index_range;
    // Slot action: standard for the conformal case, dual (-x^T) for the
    // projective case where positions live in (R^5)*.
    MatrixQ s = (basis.problem == Problem::conformal) ? x : -x.transpose();
    MatrixQ m(n, n);
    for (int t = 0; t < n; ++t) {
        std::array<int, 4> tup = basis.positions[t];
        for (int slot = 0; slot < 4; ++slot) {
            const int a = tup[slot];
            for (int p = 1; p <= range; ++p) {
                if (sgn(s(a - 1, p - 1)) == 0) continue;
                std::array<int, 4> src = tup;
                src[slot] = p;
                auto [idx, sign] = basis.resolve(src[0], src[1], src[2], src[3]);
                if (idx >= 0) m(t, idx) += s(a - 1, p - 1) * sign;
            }
        }
    }
    return m;
}

MatrixQ rho(const PositionBasis& basis, const CartanComponent& cc, const MatrixQ& x) {
    if (!in_algebra(basis.problem, x))
        throw std::invalid_argument("rho: element is not in the expected Lie algebra");
    MatrixQ image = rho_ambient(basis, x) * cc.embed;
    MatrixQ restricted = cc.select * image;
    if (!(cc.embed * restricted == image))
        throw ConsistencyError("rho: image leaves the Cartan component");
    return restricted;
}

MatrixQ pi_matrix_ambient(const PositionBasis& basis) {
    MatrixQ m(10, basis.dim());
    int row = 0;
    for (int p = 1; p <= 4; ++p)
        for (int q = p; q <= 4; ++q) {
            auto [idx, sign] = (basis.problem == Problem::conformal)
                                   ? basis.resolve(p + 1, 6, q + 1, 6)
                                   : basis.resolve(1, p + 1, 1, q + 1);
            m(row, idx) = sign;
            ++row;
        }
    return m;
}

MatrixQ pi_matrix(const PositionBasis& basis, const CartanComponent& cc) {
    return pi_matrix_ambient(basis) * cc.embed;
}

std::array<std::array<Rational, 5>, 5> sym4_from_coeffs(const VecQ& f) {
    if (f.size() != 10) throw std::invalid_argument("sym4_from_coeffs: need 10 coefficients");
    std::array<std::array<Rational, 5>, 5> m{};
    int row = 0;
    for (int p = 1; p <= 4; ++p)
        for (int q = p; q <= 4; ++q) {
            m[p][q] = f[row];
            m[q][p] = f[row];
            ++row;
        }
    return m;
}

std::array<std::array<Rational, 5>, 5> project_pi(const PositionBasis& basis,
                                                  const CartanComponent& cc, const VecQ& v_free) {
    return sym4_from_coeffs(pi_matrix(basis, cc) * v_free);
}

}  // namespace pwkt
