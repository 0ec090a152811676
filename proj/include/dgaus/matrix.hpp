#ifndef DGAUS_MATRIX_HPP
#define DGAUS_MATRIX_HPP

#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "field.hpp"

namespace dgaus {

// Dense matrix over an exact scalar.  All kernels (rref, solve, kernel/image
// bases) are exact; there is no rounding anywhere in the library.
template <class K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n, const K& one) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }
    static Matrix zero(std::size_t r, std::size_t c) { return Matrix(r, c); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }
    const K& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (a_[i] != o.a_[i]) return false;
        return true;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_)
            throw std::invalid_argument("Matrix: dimension mismatch in product");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const K& x = (*this)(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const K& y = o(k, j);
                    if (!y.is_zero()) r(i, j) += x * y;
                }
            }
        return r;
    }
    Matrix scaled(const K& c) const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
        return r;
    }
    Matrix& operator+=(const Matrix& o) { *this = *this + o; return *this; }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
        std::vector<K> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Matrix r(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
        return r;
    }

    static Matrix hstack(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
        Matrix r(a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
        }
        return r;
    }
    static Matrix vstack(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.cols_) throw std::invalid_argument("vstack: col mismatch");
        Matrix r(a.rows_ + b.rows_, a.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r(a.rows_ + i, j) = b(i, j);
        return r;
    }
    // Block diagonal [a 0; 0 b].
    static Matrix diag_sum(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) r(a.rows_ + i, a.cols_ + j) = b(i, j);
        return r;
    }
    // Kronecker product.
    static Matrix kron(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                if (a(i, j).is_zero()) continue;
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l)
                        if (!b(k, l).is_zero())
                            r(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
            }
        return r;
    }

    static Matrix from_column(const std::vector<K>& v) {
        Matrix r(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) r(i, 0) = v[i];
        return r;
    }
    static Matrix from_columns(const std::vector<std::vector<K>>& cols, std::size_t nrows) {
        Matrix r(nrows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != nrows) throw std::invalid_argument("from_columns: size mismatch");
            for (std::size_t i = 0; i < nrows; ++i) r(i, j) = cols[j][i];
        }
        return r;
    }
    std::vector<K> column(std::size_t j) const {
        std::vector<K> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }
    std::size_t rows_, cols_;
    std::vector<K> a_;
};

// Row echelon data of a matrix: R = T * A with R reduced, pivot column list.
template <class K>
struct Echelon {
    Matrix<K> reduced;
    Matrix<K> transform;  // invertible, reduced = transform * original
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

// A "one" usable without field context; specialized per scalar.
template <class K>
K free_one();
template <>
inline Rat free_one<Rat>() { return Rat(1); }
template <>
inline Fp free_one<Fp>() { return Fp::one_unbound(); }

template <class K>
Echelon<K> echelon(const Matrix<K>& a) {
    Echelon<K> e;
    std::size_t m = a.rows(), n = a.cols();
    Matrix<K> r = a;
    Matrix<K> t = Matrix<K>::identity(m, free_one<K>());
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && r(piv, col).is_zero()) ++piv;
        if (piv == m) continue;
        if (piv != row) {
            for (std::size_t j = 0; j < n; ++j) std::swap(r(row, j), r(piv, j));
            for (std::size_t j = 0; j < m; ++j) std::swap(t(row, j), t(piv, j));
        }
        K inv = r(row, col).inv();
        for (std::size_t j = 0; j < n; ++j) r(row, j) = r(row, j) * inv;
        for (std::size_t j = 0; j < m; ++j) t(row, j) = t(row, j) * inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || r(i, col).is_zero()) continue;
            K c = r(i, col);
            for (std::size_t j = 0; j < n; ++j) r(i, j) = r(i, j) - c * r(row, j);
            for (std::size_t j = 0; j < m; ++j) t(i, j) = t(i, j) - c * t(row, j);
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.reduced = std::move(r);
    e.transform = std::move(t);
    return e;
}

template <class K>
std::size_t rank(const Matrix<K>& a) { return echelon(a).rank(); }

// Basis of the (right) null space, as columns of the returned matrix.
template <class K>
Matrix<K> kernel_basis(const Matrix<K>& a) {
    auto e = echelon(a);
    std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Matrix<K> ker(n, free_cols.size());
    for (std::size_t fc = 0; fc < free_cols.size(); ++fc) {
        std::size_t j = free_cols[fc];
        ker(j, fc) = free_one<K>();
        for (std::size_t pr = 0; pr < e.pivots.size(); ++pr)
            ker(e.pivots[pr], fc) = -e.reduced(pr, j);
    }
    return ker;
}

// Columns of a spanning a basis of the column space (subset of input columns).
template <class K>
Matrix<K> column_space_basis(const Matrix<K>& a) {
    auto e = echelon(a);
    Matrix<K> b(a.rows(), e.pivots.size());
    for (std::size_t j = 0; j < e.pivots.size(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) b(i, j) = a(i, e.pivots[j]);
    return b;
}

// Exact solve A x = b.  Returns either a solution or a left-kernel witness y
// with yA = 0 and yb != 0 (certificate of infeasibility).
template <class K>
struct SolveResult {
    std::optional<std::vector<K>> solution;
    std::optional<std::vector<K>> infeasibility_witness;
    bool ok() const { return solution.has_value(); }
};

template <class K>
SolveResult<K> solve_linear(const Matrix<K>& a, const std::vector<K>& b) {
    if (b.size() != a.rows())
        throw std::invalid_argument("solve_linear: dimension mismatch");
    auto e = echelon(a);
    std::vector<K> rb = e.transform.apply(b);
    SolveResult<K> res;
    for (std::size_t i = e.rank(); i < a.rows(); ++i) {
        if (!rb[i].is_zero()) {
            // row i of the transform is a left-kernel witness
            std::vector<K> y(a.rows());
            for (std::size_t j = 0; j < a.rows(); ++j) y[j] = e.transform(i, j);
            res.infeasibility_witness = std::move(y);
            return res;
        }
    }
    std::vector<K> x(a.cols());
    for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivots[r]] = rb[r];
    res.solution = std::move(x);
    return res;
}

// Solve A X = B column by column; nullopt if any column is infeasible.
template <class K>
std::optional<Matrix<K>> solve_matrix(const Matrix<K>& a, const Matrix<K>& b) {
    Matrix<K> x(a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto r = solve_linear(a, b.column(j));
        if (!r.ok()) return std::nullopt;
        for (std::size_t i = 0; i < a.cols(); ++i) x(i, j) = (*r.solution)[i];
    }
    return x;
}

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    auto e = echelon(a);
    if (e.rank() != a.rows()) return std::nullopt;
    return e.transform;
}

}  // namespace dgaus

#endif
