#ifndef PWKT_EXACTLIN_HPP
#define PWKT_EXACTLIN_HPP

#include <gmpxx.h>

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pwkt {

// Arbitrary-precision rational, always canonical (reduced, denominator > 0).
// mpq_class arithmetic keeps canonical form; the factories below canonicalize
// raw numerator/denominator pairs.
using Rational = mpq_class;

Rational rat(long num, long den = 1);

// Parses "p", "-p", or "p/q" with decimal digits only. Decimals, exponents
// and zero denominators are rejected with std::invalid_argument.
Rational rat_parse(const std::string& s);

std::string rat_str(const Rational& q);

// Raised when an internal mathematical invariant fails (closure of a
// representation, table cross-checks, ...). The CLI maps it to exit code 3.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

using VecQ = std::vector<Rational>;

class MatrixQ {
public:
    MatrixQ() = default;
    MatrixQ(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static MatrixQ identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    MatrixQ operator+(const MatrixQ& o) const;
    MatrixQ operator-(const MatrixQ& o) const;
    MatrixQ operator-() const;
    MatrixQ operator*(const MatrixQ& o) const;
    VecQ operator*(const VecQ& v) const;
    MatrixQ operator*(const Rational& s) const;

    MatrixQ transpose() const;
    bool is_zero() const;
    VecQ row(int i) const;
    void set_row(int i, const VecQ& v);

    bool operator==(const MatrixQ& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

    std::string str() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

inline MatrixQ operator*(const Rational& s, const MatrixQ& m) { return m * s; }

MatrixQ commutator(const MatrixQ& a, const MatrixQ& b);

// Reduced row-echelon form: leftmost pivots, pivot entries 1, full reduction
// above and below, zero rows dropped. The result is the canonical basis of
// the row space, so subspace equality is plain matrix equality.
std::pair<MatrixQ, std::vector<int>> rref(const MatrixQ& m);

class SubspaceQ {
public:
    SubspaceQ() = default;

    static SubspaceQ zero(int ambient);
    static SubspaceQ full(int ambient);
    static SubspaceQ from_rows(const MatrixQ& rows);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const MatrixQ& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Remainder of v after elimination by the RREF basis; zero iff v is in
    // the subspace.
    VecQ reduce(const VecQ& v) const;
    bool contains(const VecQ& v) const;
    bool contains(const SubspaceQ& other) const;

    bool operator==(const SubspaceQ& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

private:
    int ambient_ = 0;
    MatrixQ basis_;  // rows in RREF
    std::vector<int> pivots_;
};

SubspaceQ kernel(const MatrixQ& m);
SubspaceQ intersect(const SubspaceQ& s1, const SubspaceQ& s2);
SubspaceQ subspace_sum(const SubspaceQ& s1, const SubspaceQ& s2);

// {v in s : M*v in s for every map M}. One refinement step, not the fixpoint.
SubspaceQ refine(const std::vector<MatrixQ>& maps, const SubspaceQ& s);

// Sparse polynomial in x1..x4 over Q: exponent 4-tuple -> coefficient,
// zero coefficients never stored.
class Poly4 {
public:
    using Key = std::array<int, 4>;

    Poly4() = default;
    static Poly4 constant(const Rational& c);
    static Poly4 var(int i, int power = 1);  // x_i^power, i in 1..4

    Poly4 operator+(const Poly4& o) const;
    Poly4 operator-(const Poly4& o) const;
    Poly4 operator-() const;
    Poly4 operator*(const Poly4& o) const;
    Poly4 operator*(const Rational& s) const;
    Poly4& operator+=(const Poly4& o);
    Poly4& operator-=(const Poly4& o);

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const Poly4& o) const { return terms_ == o.terms_; }

    const std::map<Key, Rational>& terms() const { return terms_; }
    void add_term(const Key& k, const Rational& c);

    std::string str() const;

private:
    std::map<Key, Rational> terms_;
};

inline Poly4 operator*(const Rational& s, const Poly4& p) { return p * s; }

Poly4 poly_diff(const Poly4& p, int var);  // var in 1..4
Rational poly_eval(const Poly4& p, const std::array<Rational, 4>& x);
double poly_eval_d(const Poly4& p, const std::array<double, 4>& x);

}  // namespace pwkt

#endif
