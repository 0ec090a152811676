#ifndef DGAUS_ALGEBRA_HPP
#define DGAUS_ALGEBRA_HPP

#include <string>

#include "dgcat.hpp"

namespace dgaus {

// Finite-dimensional associative unital algebra over an exact scalar, stored
// as structure constants: one left-multiplication matrix per basis element.
// Nothing is assumed; validate_algebra checks the axioms.
template <class K>
struct Algebra {
    FieldSpec field;
    std::vector<std::string> basis_names;
    std::vector<Matrix<K>> lmul;  // lmul[i] * coords(b) = coords(e_i * b)
    std::vector<K> unit;

    std::size_t dim() const { return lmul.size(); }

    std::vector<K> mul(const std::vector<K>& a, const std::vector<K>& b) const {
        std::vector<K> r(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (a[i].is_zero()) continue;
            auto t = lmul[i].apply(b);
            for (std::size_t j = 0; j < dim(); ++j) r[j] += a[i] * t[j];
        }
        return r;
    }
    std::vector<K> basis_elt(std::size_t i) const {
        std::vector<K> v(dim());
        v[i] = free_one<K>();
        return v;
    }
    // x |-> x * e_i as a matrix
    Matrix<K> rmul(std::size_t i) const {
        Matrix<K> m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            auto c = mul(basis_elt(j), basis_elt(i));
            for (std::size_t r = 0; r < dim(); ++r) m(r, j) = c[r];
        }
        return m;
    }
    // x |-> a * x as a matrix
    Matrix<K> lmul_by(const std::vector<K>& a) const {
        Matrix<K> m(dim(), dim());
        for (std::size_t i = 0; i < dim(); ++i)
            if (!a[i].is_zero())
                for (std::size_t r = 0; r < dim(); ++r)
                    for (std::size_t c = 0; c < dim(); ++c) m(r, c) += a[i] * lmul[i](r, c);
        return m;
    }
    bool is_zero_vec(const std::vector<K>& v) const {
        for (auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
};

template <class K>
ValidationReport validate_algebra(const Algebra<K>& a, bool require_commutative = false) {
    ValidationReport rep;
    auto note = [&](const char* ax, std::vector<std::size_t> idx) {
        rep.violations.push_back(Violation{ax, std::move(idx), {}, {}, ""});
    };
    std::size_t n = a.dim();
    if (a.unit.size() != n || a.basis_names.size() != n) {
        note("algebra_shape", {});
        return rep;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (a.lmul[i].rows() != n || a.lmul[i].cols() != n) {
            note("algebra_shape", {i});
            return rep;
        }
    for (std::size_t i = 0; i < n; ++i) {
        auto e = a.basis_elt(i);
        if (a.mul(a.unit, e) != e || a.mul(e, a.unit) != e) note("algebra_unit", {i});
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto ei = a.basis_elt(i), ej = a.basis_elt(j);
            if (require_commutative && a.mul(ei, ej) != a.mul(ej, ei))
                note("algebra_commutativity", {i, j});
            for (std::size_t k = 0; k < n; ++k) {
                auto ek = a.basis_elt(k);
                if (a.mul(a.mul(ei, ej), ek) != a.mul(ei, a.mul(ej, ek)))
                    note("algebra_associativity", {i, j, k});
            }
        }
    return rep;
}

// --- subspaces of an algebra ------------------------------------------------

// Span of the columns, reduced to a basis.
template <class K>
Matrix<K> reduced_span(const Matrix<K>& cols) { return column_space_basis(cols); }

// Is v in the column span of b?
template <class K>
bool in_span(const Matrix<K>& b, const std::vector<K>& v) {
    return solve_linear(b, v).ok();
}

template <class K>
bool span_contains(const Matrix<K>& big, const Matrix<K>& small) {
    for (std::size_t j = 0; j < small.cols(); ++j)
        if (!in_span(big, small.column(j))) return false;
    return true;
}

// Span of all products x*y with x a column of xs and y a column of ys.
template <class K>
Matrix<K> product_span(const Algebra<K>& a, const Matrix<K>& xs, const Matrix<K>& ys) {
    std::vector<std::vector<K>> cols;
    for (std::size_t i = 0; i < xs.cols(); ++i)
        for (std::size_t j = 0; j < ys.cols(); ++j)
            cols.push_back(a.mul(xs.column(i), ys.column(j)));
    if (cols.empty()) return Matrix<K>(a.dim(), 0);
    return reduced_span(Matrix<K>::from_columns(cols, a.dim()));
}

// Two-sided ideal generated by the columns.
template <class K>
Matrix<K> two_sided_ideal_span(const Algebra<K>& a, const Matrix<K>& gens) {
    std::vector<std::vector<K>> cols;
    for (std::size_t g = 0; g < gens.cols(); ++g)
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j)
                cols.push_back(a.mul(a.basis_elt(i), a.mul(gens.column(g), a.basis_elt(j))));
    if (cols.empty()) return Matrix<K>(a.dim(), 0);
    return reduced_span(Matrix<K>::from_columns(cols, a.dim()));
}

// --- quotient algebra -------------------------------------------------------

// Quotient of an algebra by a two-sided ideal (given as a closed subspace),
// with the section/projection pair for the chosen complement.
template <class K>
struct QuotientAlgebra {
    Algebra<K> alg;
    Matrix<K> proj;  // ambient coords -> quotient coords
    Matrix<K> lift;  // quotient coords -> ambient coords (complement section)
};

template <class K>
QuotientAlgebra<K> quotient_algebra(const Algebra<K>& a, const Matrix<K>& ideal) {
    QuotientAlgebra<K> q;
    std::size_t n = a.dim();
    auto rb = reduced_span(ideal);
    auto e = echelon(Matrix<K>::hstack(rb, Matrix<K>::identity(n, free_one<K>())));
    std::vector<std::size_t> comp;
    for (auto p : e.pivots)
        if (p >= rb.cols()) comp.push_back(p - rb.cols());
    q.lift = Matrix<K>(n, comp.size());
    for (std::size_t j = 0; j < comp.size(); ++j) q.lift(comp[j], j) = free_one<K>();
    auto full = inverse(Matrix<K>::hstack(rb, q.lift));
    if (!full) throw std::logic_error("quotient_algebra: complement failure");
    q.proj = full->submatrix(rb.cols(), 0, comp.size(), n);
    q.alg.field = a.field;
    for (auto c : comp) q.alg.basis_names.push_back(a.basis_names[c] + "~");
    q.alg.unit = q.proj.apply(a.unit);
    for (std::size_t i = 0; i < comp.size(); ++i) {
        Matrix<K> m(comp.size(), comp.size());
        for (std::size_t j = 0; j < comp.size(); ++j) {
            auto p = q.proj.apply(a.mul(q.lift.column(i), q.lift.column(j)));
            for (std::size_t r = 0; r < comp.size(); ++r) m(r, j) = p[r];
        }
        q.alg.lmul.push_back(std::move(m));
    }
    return q;
}

}  // namespace dgaus

#endif
