#ifndef DGAUS_ARTIN_HPP
#define DGAUS_ARTIN_HPP

#include <algorithm>
#include <map>

#include "algebra.hpp"

namespace dgaus {

// Commutative Artinian ring: an Algebra validated with the commutativity
// requirement.  All ring builders return plain Algebra data.
template <class K>
using ArtinRing = Algebra<K>;

template <class K>
ValidationReport validate_artin_ring(const ArtinRing<K>& r) {
    return validate_algebra(r, /*require_commutative=*/true);
}

// Build a ring from an explicit multiplication table mul(i, j) = coordinate
// vector of e_i * e_j; validated before returning.
template <class K>
ArtinRing<K> artin_from_table(const FieldSpec& fs, std::vector<std::string> names,
                              const std::vector<std::vector<std::vector<K>>>& table,
                              std::vector<K> unit) {
    ArtinRing<K> r;
    r.field = fs;
    r.basis_names = std::move(names);
    r.unit = std::move(unit);
    std::size_t n = r.basis_names.size();
    for (std::size_t i = 0; i < n; ++i) {
        Matrix<K> m(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t a = 0; a < n; ++a) m(a, j) = table[i][j][a];
        r.lmul.push_back(std::move(m));
    }
    auto rep = validate_artin_ring(r);
    if (!rep.ok())
        throw std::invalid_argument("artin_from_table: " +
                                    std::string(rep.violations.front().axiom));
    return r;
}

// Truncated polynomial ring k[x_0..x_{m-1}] / (monomial ideal).  The ideal is
// given by generator exponent vectors; every variable must have a pure-power
// generator (otherwise the quotient is not finite-dimensional) and that is
// reported as an error.  Basis: monomials not divisible by any generator.
using Monomial = std::vector<unsigned>;

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline std::string monomial_name(const Monomial& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

template <class K>
ArtinRing<K> truncated_polynomial_ring(const FieldSpec& fs, std::size_t nvars,
                                       const std::vector<Monomial>& gens) {
    for (auto& g : gens)
        if (g.size() != nvars)
            throw std::invalid_argument("truncated_polynomial_ring: generator arity mismatch");
    // each variable needs a pure-power generator for the quotient to be finite
    std::vector<unsigned> bound(nvars, 0);
    for (std::size_t v = 0; v < nvars; ++v) {
        for (auto& g : gens) {
            bool pure = g[v] > 0;
            for (std::size_t w = 0; w < nvars && pure; ++w)
                if (w != v && g[w] > 0) pure = false;
            if (pure && (bound[v] == 0 || g[v] < bound[v])) bound[v] = g[v];
        }
        if (bound[v] == 0)
            throw std::invalid_argument(
                "truncated_polynomial_ring: variable x" + std::to_string(v) +
                " has no pure-power relation; the quotient is not Artinian");
    }
    // enumerate the monomial basis
    std::vector<Monomial> basis;
    Monomial cur(nvars, 0);
    auto in_ideal = [&](const Monomial& e) {
        for (auto& g : gens)
            if (monomial_divides(g, e)) return true;
        return false;
    };
    while (true) {
        if (!in_ideal(cur)) basis.push_back(cur);
        std::size_t v = 0;
        while (v < nvars && cur[v] + 1 >= bound[v]) cur[v++] = 0;
        if (v == nvars) break;
        ++cur[v];
    }
    std::sort(basis.begin(), basis.end(), [](const Monomial& a, const Monomial& b) {
        unsigned da = 0, db = 0;
        for (auto x : a) da += x;
        for (auto x : b) db += x;
        return da != db ? da < db : a < b;
    });
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

    ArtinRing<K> r;
    r.field = fs;
    for (auto& e : basis) r.basis_names.push_back(monomial_name(e));
    r.unit.assign(basis.size(), K());
    r.unit[index.at(Monomial(nvars, 0))] = free_one<K>();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Matrix<K> m(basis.size(), basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Monomial p(nvars);
            for (std::size_t v = 0; v < nvars; ++v) p[v] = basis[i][v] + basis[j][v];
            if (!in_ideal(p)) m(index.at(p), j) = free_one<K>();
        }
        r.lmul.push_back(std::move(m));
    }
    return r;
}

// k[t]/t^n with r = (t): the workhorse example.
template <class K>
ArtinRing<K> truncated_line(const FieldSpec& fs, unsigned n) {
    return truncated_polynomial_ring<K>(fs, 1, {Monomial{n}});
}

// --- ideals -----------------------------------------------------------------

// Ideal of a commutative ring, stored as a reduced basis of its subspace.
// ideal_from_generators closes the span under ring multiplication.
template <class K>
struct Ideal {
    Matrix<K> basis;  // ambient-dim x k

    std::size_t dim() const { return basis.cols(); }
    bool is_zero() const { return basis.cols() == 0; }
};

template <class K>
Ideal<K> ideal_from_generators(const ArtinRing<K>& r, const Matrix<K>& gens) {
    std::vector<std::vector<K>> cols;
    for (std::size_t g = 0; g < gens.cols(); ++g)
        for (std::size_t i = 0; i < r.dim(); ++i)
            cols.push_back(r.mul(r.basis_elt(i), gens.column(g)));
    if (cols.empty()) return Ideal<K>{Matrix<K>(r.dim(), 0)};
    return Ideal<K>{reduced_span(Matrix<K>::from_columns(cols, r.dim()))};
}

template <class K>
Ideal<K> ideal_zero(const ArtinRing<K>& r) { return Ideal<K>{Matrix<K>(r.dim(), 0)}; }

template <class K>
Ideal<K> ideal_whole(const ArtinRing<K>& r) {
    return Ideal<K>{Matrix<K>::identity(r.dim(), free_one<K>())};
}

// principal ideal (x)
template <class K>
Ideal<K> ideal_principal(const ArtinRing<K>& r, const std::vector<K>& x) {
    return ideal_from_generators(r, Matrix<K>::from_column(x));
}

template <class K>
bool ideal_valid(const ArtinRing<K>& r, const Ideal<K>& i) {
    for (std::size_t b = 0; b < r.dim(); ++b)
        for (std::size_t j = 0; j < i.basis.cols(); ++j)
            if (!in_span(i.basis, r.mul(r.basis_elt(b), i.basis.column(j)))) return false;
    return true;
}

template <class K>
bool ideal_contains(const Ideal<K>& big, const Ideal<K>& small) {
    if (small.is_zero()) return true;
    return span_contains(big.basis, small.basis);
}

template <class K>
bool ideal_equal(const Ideal<K>& a, const Ideal<K>& b) {
    return ideal_contains(a, b) && ideal_contains(b, a);
}

template <class K>
Ideal<K> ideal_product(const ArtinRing<K>& r, const Ideal<K>& a, const Ideal<K>& b) {
    return Ideal<K>{product_span(r, a.basis, b.basis)};
}

template <class K>
Ideal<K> ideal_sum(const ArtinRing<K>& r, const Ideal<K>& a, const Ideal<K>& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return Ideal<K>{reduced_span(Matrix<K>::hstack(a.basis, b.basis))};
}

template <class K>
Ideal<K> ideal_power(const ArtinRing<K>& r, const Ideal<K>& i, unsigned a) {
    if (a == 0) return ideal_whole(r);
    auto p = i;
    for (unsigned k = 1; k < a; ++k) p = ideal_product(r, p, i);
    return p;
}

// colon ideal I : J = { x : x J inside I }, by exact linear algebra:
// x must satisfy L^T M_j x = 0 for every generator j of J, where the rows of
// L^T cut out the subspace I.
template <class K>
Ideal<K> ideal_colon(const ArtinRing<K>& r, const Ideal<K>& i, const Ideal<K>& j) {
    if (j.is_zero()) return ideal_whole(r);
    auto l = kernel_basis(i.basis.transposed());  // columns y with y^T I = 0
    Matrix<K> constraints(0, r.dim());
    bool first = true;
    for (std::size_t c = 0; c < j.basis.cols(); ++c) {
        auto m = l.transposed() * r.lmul_by(j.basis.column(c));
        constraints = first ? m : Matrix<K>::vstack(constraints, m);
        first = false;
    }
    auto sol = kernel_basis(constraints);
    // the solution space is automatically an ideal; reduce the basis
    return Ideal<K>{reduced_span(sol)};
}

// Quotient ring R / I with projection and section.
template <class K>
QuotientAlgebra<K> quotient_ring(const ArtinRing<K>& r, const Ideal<K>& i) {
    return quotient_algebra(r, i.basis);
}

// --- split semisimplicity ---------------------------------------------------
//
// Is a commutative algebra isomorphic to k^n as an algebra?
//
// Over F_p: true iff the Frobenius x -> x^p is the identity.  (x^p = x for
// all x forces every element's minimal polynomial to divide the squarefree
// split polynomial X^p - X; commuting diagonalizables are simultaneously
// diagonalizable, so the regular representation embeds the algebra into
// diagonal matrices.)  Frobenius is additive in characteristic p, so checking
// it on a basis suffices.
inline std::vector<Fp> algebra_pow(const Algebra<Fp>& a, std::vector<Fp> x, std::int64_t e) {
    auto r = a.unit;
    while (e > 0) {
        if (e & 1) r = a.mul(r, x);
        x = a.mul(x, x);
        e >>= 1;
    }
    return r;
}

inline bool algebra_is_split_semisimple(const Algebra<Fp>& a) {
    if (a.dim() == 0) return false;
    std::int64_t p = a.field.characteristic;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (algebra_pow(a, a.basis_elt(i), p) != a.basis_elt(i)) return false;
    return true;
}

// Over Q: true iff every basis multiplication operator is diagonalizable
// with all eigenvalues rational.  (Then the commuting family diagonalizes
// simultaneously and the diagonal entries give an injection into Q^n.)
// Eigenvalues are found as rational roots of the exact minimal polynomial.
inline std::vector<Rat> minimal_polynomial(const Matrix<Rat>& l) {
    std::size_t n = l.rows();
    // vectorize successive powers and find the first linear dependency
    std::vector<Matrix<Rat>> pw{Matrix<Rat>::identity(n, Rat(1))};
    for (std::size_t d = 1;; ++d) {
        pw.push_back(l * pw.back());
        Matrix<Rat> m(n * n, d);
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i * n + j, k) = pw[k](i, j);
        std::vector<Rat> rhs(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rhs[i * n + j] = pw[d](i, j);
        auto s = solve_linear(m, rhs);
        if (s.ok()) {
            // L^d = sum c_k L^k  ->  min poly = X^d - sum c_k X^k
            std::vector<Rat> coeffs(d + 1);
            for (std::size_t k = 0; k < d; ++k) coeffs[k] = -(*s.solution)[k];
            coeffs[d] = Rat(1);
            return coeffs;
        }
    }
}

inline std::vector<Rat> rational_roots(const std::vector<Rat>& poly) {
    using boost::multiprecision::cpp_int;
    // clear denominators to integer coefficients
    cpp_int lcm = 1;
    for (auto& c : poly) {
        cpp_int den = boost::multiprecision::denominator(c.raw());
        lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    std::vector<cpp_int> ic;
    for (auto& c : poly) {
        Rat::rep v = c.raw() * Rat::rep(lcm);
        ic.push_back(boost::multiprecision::numerator(v));
    }
    std::vector<Rat> roots;
    // strip a power of X: 0 is a root while the constant term vanishes
    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) roots.push_back(Rat(0));
    if (low + 1 >= ic.size()) return roots;
    cpp_int c0 = abs(ic[low]), cd = abs(ic.back());
    auto divisors = [](cpp_int v) {
        std::vector<cpp_int> d;
        for (cpp_int i = 1; i * i <= v; ++i)
            if (v % i == 0) {
                d.push_back(i);
                if (i * i != v) d.push_back(v / i);
            }
        return d;
    };
    // trial division is exact but only feasible for modest coefficients
    if (c0 > 1000000000000LL || cd > 1000000000000LL)
        throw std::runtime_error("rational_roots: coefficients too large for exact root search");
    auto eval = [&](const Rat& x) {
        Rat v;
        for (std::size_t k = ic.size(); k-- > low;) v = v * x + Rat(Rat::rep(ic[k]));
        return v;
    };
    for (auto& u : divisors(c0))
        for (auto& v : divisors(cd))
            for (int sign : {1, -1}) {
                Rat cand(Rat::rep(cpp_int(sign) * u) / Rat::rep(v));
                if (eval(cand).is_zero() &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    return roots;
}

inline bool algebra_is_split_semisimple(const Algebra<Rat>& a) {
    std::size_t n = a.dim();
    if (n == 0) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& l = a.lmul[i];
        std::size_t total = 0;
        for (auto& r : rational_roots(minimal_polynomial(l))) {
            auto shifted = l - Matrix<Rat>::identity(n, Rat(1)).scaled(r);
            total += kernel_basis(shifted).cols();
        }
        if (total != n) return false;
    }
    return true;
}

template <class K>
bool quotient_is_split_semisimple(const ArtinRing<K>& r, const Ideal<K>& i) {
    auto q = quotient_ring(r, i);
    return algebra_is_split_semisimple(q.alg);
}

}  // namespace dgaus

#endif
