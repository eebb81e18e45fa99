#include "pwkt/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pwkt {

Rational rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rat_parse(const std::string& s) {
    auto fail = [&]() -> void {
        throw std::invalid_argument("not an exact rational \"p\" or \"p/q\": '" + s + "'");
    };
    if (s.empty()) fail();
    size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') ++pos;
    size_t num_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == num_begin) fail();
    std::string num = s.substr(0, pos);
    std::string den = "1";
    if (pos < s.size()) {
        if (s[pos] != '/') fail();  // rejects decimals like "0.75"
        ++pos;
        size_t den_begin = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == den_begin || pos != s.size()) fail();
        den = s.substr(den_begin);
    }
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0) fail();
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) fail();
    q.canonicalize();
    return q;
}

std::string rat_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

MatrixQ MatrixQ::identity(int n) {
    MatrixQ m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

MatrixQ MatrixQ::operator+(const MatrixQ& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in +");
    MatrixQ r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

MatrixQ MatrixQ::operator-(const MatrixQ& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in -");
    MatrixQ r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

MatrixQ MatrixQ::operator-() const {
    MatrixQ r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
    return r;
}

MatrixQ MatrixQ::operator*(const MatrixQ& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in *");
    MatrixQ r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (sgn(a) == 0) continue;  // phi/rho matrices are sparse
            for (int j = 0; j < o.cols_; ++j) {
                const Rational& b = o(k, j);
                if (sgn(b) == 0) continue;
                r(i, j) += a * b;
            }
        }
    }
    return r;
}

VecQ MatrixQ::operator*(const VecQ& v) const {
    if (cols_ != static_cast<int>(v.size())) throw std::invalid_argument("matrix/vector shape mismatch");
    VecQ r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (sgn(a) != 0 && sgn(v[k]) != 0) r[i] += a * v[k];
        }
    return r;
}

MatrixQ MatrixQ::operator*(const Rational& s) const {
    MatrixQ r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
    return r;
}

MatrixQ MatrixQ::transpose() const {
    MatrixQ r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool MatrixQ::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

VecQ MatrixQ::row(int i) const {
    VecQ v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

void MatrixQ::set_row(int i, const VecQ& v) {
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

std::string MatrixQ::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << rat_str((*this)(i, j));
        os << "]\n";
    }
    return os.str();
}

MatrixQ commutator(const MatrixQ& a, const MatrixQ& b) { return a * b - b * a; }

std::pair<MatrixQ, std::vector<int>> rref(const MatrixQ& m) {
    MatrixQ a = m;
    const int rows = a.rows(), cols = a.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (sgn(a(i, c)) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = c; j < cols; ++j) swap(a(r, j), a(pr, j));
        Rational inv = 1 / a(r, c);
        for (int j = c; j < cols; ++j) a(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || sgn(a(i, c)) == 0) continue;
            Rational f = a(i, c);
            for (int j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    MatrixQ out(r, cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < cols; ++j) out(i, j) = a(i, j);
    return {out, pivots};
}

SubspaceQ SubspaceQ::zero(int ambient) {
    SubspaceQ s;
    s.ambient_ = ambient;
    s.basis_ = MatrixQ(0, ambient);
    return s;
}

SubspaceQ SubspaceQ::full(int ambient) { return from_rows(MatrixQ::identity(ambient)); }

SubspaceQ SubspaceQ::from_rows(const MatrixQ& rows) {
    SubspaceQ s;
    s.ambient_ = rows.cols();
    auto [b, p] = rref(rows);
    s.basis_ = std::move(b);
    s.pivots_ = std::move(p);
    return s;
}

VecQ SubspaceQ::reduce(const VecQ& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("ambient dim mismatch in reduce");
    VecQ r = v;
    for (int k = 0; k < basis_.rows(); ++k) {
        const Rational& c = r[pivots_[k]];
        if (sgn(c) == 0) continue;
        Rational f = c;
        for (int j = pivots_[k]; j < ambient_; ++j)
            if (sgn(basis_(k, j)) != 0) r[j] -= f * basis_(k, j);
    }
    return r;
}

bool SubspaceQ::contains(const VecQ& v) const {
    VecQ r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool SubspaceQ::contains(const SubspaceQ& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dim mismatch in contains");
    for (int i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

SubspaceQ kernel(const MatrixQ& m) {
    auto [r, piv] = rref(m);
    const int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int p : piv) is_pivot[p] = true;
    MatrixQ basis(cols - static_cast<int>(piv.size()), cols);
    int row = 0;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        basis(row, f) = 1;
        for (size_t k = 0; k < piv.size(); ++k) basis(row, piv[k]) = -r(static_cast<int>(k), f);
        ++row;
    }
    return SubspaceQ::from_rows(basis);
}

SubspaceQ intersect(const SubspaceQ& s1, const SubspaceQ& s2) {
    if (s1.ambient_dim() != s2.ambient_dim()) throw std::invalid_argument("ambient dim mismatch in intersect");
    const int n = s1.ambient_dim(), d1 = s1.dim(), d2 = s2.dim();
    if (d1 == 0 || d2 == 0) return SubspaceQ::zero(n);
    // x = B1^T u = B2^T w; solve [B1^T | -B2^T] (u,w) = 0 and read off x.
    MatrixQ sys(n, d1 + d2);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < d1; ++k) sys(i, k) = s1.basis()(k, i);
        for (int k = 0; k < d2; ++k) sys(i, d1 + k) = -s2.basis()(k, i);
    }
    SubspaceQ ker = kernel(sys);
    MatrixQ xs(ker.dim(), n);
    for (int r = 0; r < ker.dim(); ++r)
        for (int i = 0; i < n; ++i) {
            Rational acc;
            for (int k = 0; k < d1; ++k) acc += ker.basis()(r, k) * s1.basis()(k, i);
            xs(r, i) = acc;
        }
    return SubspaceQ::from_rows(xs);
}

SubspaceQ subspace_sum(const SubspaceQ& s1, const SubspaceQ& s2) {
    if (s1.ambient_dim() != s2.ambient_dim()) throw std::invalid_argument("ambient dim mismatch in sum");
    MatrixQ stack(s1.dim() + s2.dim(), s1.ambient_dim());
    for (int i = 0; i < s1.dim(); ++i) stack.set_row(i, s1.basis().row(i));
    for (int i = 0; i < s2.dim(); ++i) stack.set_row(s1.dim() + i, s2.basis().row(i));
    return SubspaceQ::from_rows(stack);
}

SubspaceQ refine(const std::vector<MatrixQ>& maps, const SubspaceQ& s) {
    const int n = s.ambient_dim(), d = s.dim();
    for (const MatrixQ& m : maps)
        if (m.rows() != n || m.cols() != n) throw std::invalid_argument("refine: map is not an endomorphism of the ambient space");
    if (d == 0) return s;
    // Conditions on coefficients c of v = sum c_k b_k: reduce(M b_k) stacked
    // over maps; each nonzero ambient coordinate is one linear condition.
    std::vector<VecQ> cond_rows;
    for (const MatrixQ& m : maps) {
        std::vector<VecQ> reduced(d);
        for (int k = 0; k < d; ++k) reduced[k] = s.reduce(m * s.basis().row(k));
        for (int coord = 0; coord < n; ++coord) {
            bool nonzero = false;
            for (int k = 0; k < d; ++k)
                if (sgn(reduced[k][coord]) != 0) {
                    nonzero = true;
                    break;
                }
            if (!nonzero) continue;
            VecQ row(d);
            for (int k = 0; k < d; ++k) row[k] = reduced[k][coord];
            cond_rows.push_back(std::move(row));
        }
    }
    if (cond_rows.empty()) return s;
    MatrixQ cond(static_cast<int>(cond_rows.size()), d);
    for (size_t i = 0; i < cond_rows.size(); ++i) cond.set_row(static_cast<int>(i), cond_rows[i]);
    SubspaceQ coeff = kernel(cond);
    MatrixQ rows(coeff.dim(), n);
    for (int r = 0; r < coeff.dim(); ++r)
        for (int j = 0; j < n; ++j) {
            Rational acc;
            for (int k = 0; k < d; ++k) acc += coeff.basis()(r, k) * s.basis()(k, j);
            rows(r, j) = acc;
        }
    return SubspaceQ::from_rows(rows);
}

Poly4 Poly4::constant(const Rational& c) {
    Poly4 p;
    p.add_term({0, 0, 0, 0}, c);
    return p;
}

Poly4 Poly4::var(int i, int power) {
    if (i < 1 || i > 4 || power < 0) throw std::invalid_argument("Poly4::var index");
    Poly4 p;
    Key k{0, 0, 0, 0};
    k[i - 1] = power;
    p.add_term(k, 1);
    return p;
}

void Poly4::add_term(const Key& k, const Rational& c) {
    if (sgn(c) == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Poly4 Poly4::operator+(const Poly4& o) const {
    Poly4 r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

Poly4 Poly4::operator-(const Poly4& o) const {
    Poly4 r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
}

Poly4 Poly4::operator-() const {
    Poly4 r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

Poly4 Poly4::operator*(const Poly4& o) const {
    Poly4 r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) {
            Key k{k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2], k1[3] + k2[3]};
            r.add_term(k, c1 * c2);
        }
    return r;
}

Poly4 Poly4::operator*(const Rational& s) const {
    Poly4 r;
    if (sgn(s) == 0) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
    return r;
}

Poly4& Poly4::operator+=(const Poly4& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

Poly4& Poly4::operator-=(const Poly4& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

std::string Poly4::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(c);
        for (int i = 0; i < 4; ++i)
            if (k[i] > 0) {
                os << "*x" << (i + 1);
                if (k[i] > 1) os << "^" << k[i];
            }
    }
    return os.str();
}

Poly4 poly_diff(const Poly4& p, int var) {
    if (var < 1 || var > 4) throw std::invalid_argument("poly_diff var index");
    Poly4 r;
    for (const auto& [k, c] : p.terms()) {
        if (k[var - 1] == 0) continue;
        Poly4::Key nk = k;
        nk[var - 1] -= 1;
        r.add_term(nk, c * k[var - 1]);
    }
    return r;
}

Rational poly_eval(const Poly4& p, const std::array<Rational, 4>& x) {
    Rational acc;
    for (const auto& [k, c] : p.terms()) {
        Rational t = c;
        for (int i = 0; i < 4; ++i)
            for (int e = 0; e < k[i]; ++e) t *= x[i];
        acc += t;
    }
    return acc;
}

double poly_eval_d(const Poly4& p, const std::array<double, 4>& x) {
    double acc = 0.0;
    for (const auto& [k, c] : p.terms()) {
        double t = mpq_get_d(c.get_mpq_t());
        for (int i = 0; i < 4; ++i)
            for (int e = 0; e < k[i]; ++e) t *= x[i];
        acc += t;
    }
    return acc;
}

}  // namespace pwkt
