#ifndef TVPM_LINALG_HPP
#define TVPM_LINALG_HPP

#include <tvpm/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tvpm {

class RVec {
public:
    RVec() = default;
    explicit RVec(std::size_t dim) : e_(dim) {}
    RVec(std::initializer_list<Rat> init) : e_(init) {}
    explicit RVec(std::vector<Rat> entries) : e_(std::move(entries)) {}

    std::size_t dim() const { return e_.size(); }
    std::size_t size() const { return e_.size(); }
    bool empty() const { return e_.empty(); }

    Rat& operator[](std::size_t i) { return e_[i]; }
    const Rat& operator[](std::size_t i) const { return e_[i]; }

    auto begin() { return e_.begin(); }
    auto end() { return e_.end(); }
    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }

    const std::vector<Rat>& entries() const { return e_; }

    bool is_zero() const {
        return std::all_of(e_.begin(), e_.end(), [](const Rat& x) { return x.is_zero(); });
    }

    RVec& operator+=(const RVec& o) {
        check_same(o);
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    RVec& operator-=(const RVec& o) {
        check_same(o);
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }
    RVec& operator*=(const Rat& s) {
        for (auto& x : e_) x *= s;
        return *this;
    }
    RVec& operator/=(const Rat& s) {
        for (auto& x : e_) x /= s;
        return *this;
    }

    friend RVec operator+(RVec a, const RVec& b) { return a += b; }
    friend RVec operator-(RVec a, const RVec& b) { return a -= b; }
    friend RVec operator*(RVec a, const Rat& s) { return a *= s; }
    friend RVec operator*(const Rat& s, RVec a) { return a *= s; }
    friend RVec operator/(RVec a, const Rat& s) { return a /= s; }
    RVec operator-() const {
        RVec r(*this);
        for (auto& x : r.e_) x = -x;
        return r;
    }

    friend bool operator==(const RVec& a, const RVec& b) { return a.e_ == b.e_; }

private:
    void check_same(const RVec& o) const {
        if (o.e_.size() != e_.size()) throw std::invalid_argument("RVec: dimension mismatch");
    }

    std::vector<Rat> e_;
};

inline Rat dot(const RVec& a, const RVec& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dot: dimension mismatch");
    Rat s;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat norm2(const RVec& a) { return dot(a, a); }

/// Flattened outer product: entry i*q + j is u_i * b_j.
inline RVec tensor(const RVec& u, const RVec& b) {
    RVec out(u.dim() * b.dim());
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = u[i] * b[j];
    return out;
}

class RMat {
public:
    RMat() = default;
    RMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    RMat(std::initializer_list<std::initializer_list<Rat>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        e_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw std::invalid_argument("RMat: ragged initializer");
            e_.insert(e_.end(), row.begin(), row.end());
        }
    }

    static RMat identity(std::size_t n) {
        RMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    const std::vector<Rat>& entries() const { return e_; }

    RVec row(std::size_t i) const {
        return RVec(std::vector<Rat>(e_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                     e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
    }
    RVec col(std::size_t j) const {
        RVec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    RMat transpose() const {
        RMat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// [this | v]
    RMat augmented(const RVec& v) const {
        if (v.dim() != rows_) throw std::invalid_argument("RMat::augmented: dimension mismatch");
        RMat a(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) a(i, j) = (*this)(i, j);
            a(i, cols_) = v[i];
        }
        return a;
    }

    friend RVec operator*(const RMat& m, const RVec& x) {
        if (x.dim() != m.cols_) throw std::invalid_argument("RMat*RVec: dimension mismatch");
        RVec y(m.rows_);
        for (std::size_t i = 0; i < m.rows_; ++i) {
            Rat s;
            for (std::size_t j = 0; j < m.cols_; ++j) s += m(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    friend bool operator==(const RMat& a, const RMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> e_;
};

namespace detail {

/*
 * Fraction-free (Bareiss) forward elimination.
 *
 * Each rational row is first scaled by the lcm of its denominators so the
 * working matrix is integral. After the elimination step at pivot k every
 * entry below and right of the pivot is a (k+1)-minor of the scaled matrix,
 * so the division by the previous pivot is exact and entries stay bounded
 * by Hadamard's bound instead of growing geometrically.
 */
struct Echelon {
    std::vector<std::vector<mpz_class>> a;
    std::vector<std::size_t> pivot_cols;  // pivot_cols[k] = column of pivot in row k
    int swap_sign = 1;
    mpz_class row_scale_product = 1;
    mpz_class last_pivot = 1;
};

inline Echelon bareiss_forward(const RMat& m) {
    Echelon ech;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    ech.a.assign(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            const mpz_class d = m(i, j).den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t j = 0; j < cols; ++j) {
            const mpq_class& q = m(i, j).value();
            ech.a[i][j] = q.get_num() * (l / q.get_den());
        }
        ech.row_scale_product *= l;
    }

    auto& a = ech.a;
    mpz_class prev = 1;
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t sel = rows;
        for (std::size_t i = pr; i < rows; ++i) {
            if (a[i][pc] != 0) {
                sel = i;
                break;
            }
        }
        if (sel == rows) continue;
        if (sel != pr) {
            std::swap(a[sel], a[pr]);
            ech.swap_sign = -ech.swap_sign;
        }
        const mpz_class& p = a[pr][pc];
        for (std::size_t i = pr + 1; i < rows; ++i) {
            for (std::size_t j = pc + 1; j < cols; ++j) {
                a[i][j] = p * a[i][j] - a[i][pc] * a[pr][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][pc] = 0;
        }
        prev = p;
        ech.pivot_cols.push_back(pc);
        ++pr;
    }
    ech.last_pivot = prev;
    return ech;
}

// Back substitution over the pivot rows; free variables are set to zero.
inline RVec back_substitute(const Echelon& ech, std::size_t n_vars, std::size_t rhs_col) {
    RVec x(n_vars);
    for (std::size_t k = ech.pivot_cols.size(); k-- > 0;) {
        const std::size_t pc = ech.pivot_cols[k];
        if (pc >= n_vars) continue;
        const auto& row = ech.a[k];
        mpq_class s(row[rhs_col]);
        for (std::size_t j = pc + 1; j < n_vars; ++j)
            if (row[j] != 0) s -= row[j] * x[j].value();
        s /= row[pc];
        x[pc] = Rat(s);
    }
    return x;
}

}  // namespace detail

inline std::size_t rank(const RMat& m) { return detail::bareiss_forward(m).pivot_cols.size(); }

inline Rat determinant(const RMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
    if (m.rows() == 0) return Rat(1);
    const auto ech = detail::bareiss_forward(m);
    if (ech.pivot_cols.size() < m.rows()) return Rat(0);
    return Rat(ech.swap_sign * ech.last_pivot, ech.row_scale_product);
}

struct UniqueSolution {
    RVec x;
    Rat det;  // nonzero
};

/// Solves a square system exactly; std::nullopt means the matrix is singular.
inline std::optional<UniqueSolution> solve_linear(const RMat& m, const RVec& rhs) {
    if (m.rows() != m.cols() || rhs.dim() != m.rows())
        throw std::invalid_argument("solve_linear: expected square matrix and matching rhs");
    const std::size_t n = m.rows();
    const auto ech = detail::bareiss_forward(m.augmented(rhs));
    const auto& pcs = ech.pivot_cols;
    if (pcs.size() < n || pcs[n - 1] != n - 1) return std::nullopt;
    // The n x n leading minor is the scaled determinant; row n-1 pivot holds it.
    Rat det(ech.swap_sign * ech.a[n - 1][n - 1], ech.row_scale_product);
    return UniqueSolution{detail::back_substitute(ech, n, n), std::move(det)};
}

enum class SystemKind { Unique, Inconsistent, Underdetermined };

struct SystemSolution {
    SystemKind kind;
    std::size_t rank = 0;      // rank of the coefficient matrix
    std::size_t rank_aug = 0;  // rank of [m | rhs]
    RVec x;                    // the solution when Unique, one particular solution when Underdetermined
};

/// Classifies and solves a possibly rectangular system by comparing rank m with rank [m | rhs].
inline SystemSolution solve_system(const RMat& m, const RVec& rhs) {
    if (rhs.dim() != m.rows()) throw std::invalid_argument("solve_system: rhs dimension mismatch");
    const std::size_t n = m.cols();
    const auto ech = detail::bareiss_forward(m.augmented(rhs));
    SystemSolution out;
    out.rank_aug = ech.pivot_cols.size();
    out.rank = static_cast<std::size_t>(
        std::count_if(ech.pivot_cols.begin(), ech.pivot_cols.end(), [n](std::size_t c) { return c < n; }));
    if (out.rank < out.rank_aug) {
        out.kind = SystemKind::Inconsistent;
        return out;
    }
    out.kind = out.rank == n ? SystemKind::Unique : SystemKind::Underdetermined;
    out.x = detail::back_substitute(ech, n, n);
    return out;
}

/// A basis of the right kernel {x : m x = 0}, one vector per free column.
inline std::vector<RVec> nullspace(const RMat& m) {
    const std::size_t n = m.cols();
    const auto ech = detail::bareiss_forward(m);
    const std::size_t rk = ech.pivot_cols.size();

    // Reduced row echelon form over Q from the integral echelon rows.
    std::vector<std::vector<mpq_class>> rref(rk, std::vector<mpq_class>(n));
    for (std::size_t k = 0; k < rk; ++k) {
        const mpz_class& p = ech.a[k][ech.pivot_cols[k]];
        for (std::size_t j = 0; j < n; ++j) {
            rref[k][j] = mpq_class(ech.a[k][j], p);
            rref[k][j].canonicalize();
        }
    }
    for (std::size_t k = rk; k-- > 0;) {
        const std::size_t pc = ech.pivot_cols[k];
        for (std::size_t i = 0; i < k; ++i) {
            const mpq_class f = rref[i][pc];
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) rref[i][j] -= f * rref[k][j];
        }
    }

    std::vector<bool> is_pivot(n, false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;
    std::vector<RVec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RVec v(n);
        v[f] = 1;
        for (std::size_t k = 0; k < rk; ++k) v[ech.pivot_cols[k]] = Rat(mpq_class(-rref[k][f]));
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::string to_string(const RVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

}  // namespace tvpm

#endif  // TVPM_LINALG_HPP
