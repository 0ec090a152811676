#ifndef DGAUS_MODULE_HPP
#define DGAUS_MODULE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <random>

#include "quiver.hpp"

namespace dgaus {

// --- right modules ----------------------------------------------------------
//
// A right module is a vector space with one action matrix per algebra basis
// element; m . (e_i e_j) = (m . e_i) . e_j, so act(e_i e_j) = act_j * act_i.
// Modules keep a pointer to their algebra; keep the algebra alive and in
// place while its modules exist.

template <class K>
struct RightModule {
    const Algebra<K>* alg = nullptr;
    std::size_t dim = 0;
    std::vector<Matrix<K>> action;  // action[i]: dim x dim

    Matrix<K> act(const std::vector<K>& a) const {
        Matrix<K> m(dim, dim);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!a[i].is_zero()) m += action[i].scaled(a[i]);
        return m;
    }
};

template <class K>
RightModule<K> zero_module(const Algebra<K>& a) {
    return RightModule<K>{&a, 0, std::vector<Matrix<K>>(a.dim(), Matrix<K>(0, 0))};
}

template <class K>
RightModule<K> regular_module(const Algebra<K>& a) {
    RightModule<K> m{&a, a.dim(), {}};
    for (std::size_t i = 0; i < a.dim(); ++i) m.action.push_back(a.rmul(i));
    return m;
}

template <class K>
bool validate_module(const RightModule<K>& m) {
    const auto& a = *m.alg;
    if (m.action.size() != a.dim()) return false;
    for (auto& x : m.action)
        if (x.rows() != m.dim || x.cols() != m.dim) return false;
    if (m.act(a.unit) != Matrix<K>::identity(m.dim, free_one<K>())) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (m.act(a.mul(a.basis_elt(i), a.basis_elt(j))) != m.action[j] * m.action[i])
                return false;
    return true;
}

template <class K>
bool is_module_map(const RightModule<K>& m, const RightModule<K>& n, const Matrix<K>& f) {
    if (f.rows() != n.dim || f.cols() != m.dim) return false;
    for (std::size_t i = 0; i < m.alg->dim(); ++i)
        if (f * m.action[i] != n.action[i] * f) return false;
    return true;
}

template <class K>
RightModule<K> direct_sum_modules(const std::vector<const RightModule<K>*>& parts) {
    RightModule<K> s;
    if (parts.empty()) throw std::invalid_argument("direct_sum_modules: empty");
    s.alg = parts[0]->alg;
    std::size_t d = 0;
    for (auto* p : parts) d += p->dim;
    s.dim = d;
    for (std::size_t i = 0; i < s.alg->dim(); ++i) {
        Matrix<K> m(d, d);
        std::size_t off = 0;
        for (auto* p : parts) {
            for (std::size_t r = 0; r < p->dim; ++r)
                for (std::size_t c = 0; c < p->dim; ++c) m(off + r, off + c) = p->action[i](r, c);
            off += p->dim;
        }
        s.action.push_back(std::move(m));
    }
    return s;
}

// Submodule spanned by stable columns; action transported along the inclusion.
template <class K>
struct SubmoduleData {
    RightModule<K> mod;
    Matrix<K> incl;
};

template <class K>
SubmoduleData<K> submodule(const RightModule<K>& m, const Matrix<K>& span) {
    SubmoduleData<K> s;
    s.incl = reduced_span(span);
    s.mod.alg = m.alg;
    s.mod.dim = s.incl.cols();
    for (std::size_t i = 0; i < m.alg->dim(); ++i) {
        auto sol = solve_matrix(s.incl, m.action[i] * s.incl);
        if (!sol) throw std::invalid_argument("submodule: span not action-stable");
        s.mod.action.push_back(*sol);
    }
    return s;
}

// Quotient by a stable span via an echelon complement.
template <class K>
struct QuotientModuleData {
    RightModule<K> mod;
    Matrix<K> proj;  // M -> Q
    Matrix<K> lift;  // section Q -> M (complement columns)
};

template <class K>
QuotientModuleData<K> quotient_module(const RightModule<K>& m, const Matrix<K>& span) {
    QuotientModuleData<K> q;
    q.mod.alg = m.alg;
    auto rb = reduced_span(span);
    std::size_t n = m.dim;
    auto e = echelon(Matrix<K>::hstack(rb, Matrix<K>::identity(n, free_one<K>())));
    std::vector<std::size_t> comp;
    for (auto p : e.pivots)
        if (p >= rb.cols()) comp.push_back(p - rb.cols());
    q.lift = Matrix<K>(n, comp.size());
    for (std::size_t c = 0; c < comp.size(); ++c) q.lift(comp[c], c) = free_one<K>();
    auto full = inverse(Matrix<K>::hstack(rb, q.lift));
    q.proj = full->submatrix(rb.cols(), 0, comp.size(), n);
    q.mod.dim = comp.size();
    for (std::size_t i = 0; i < m.alg->dim(); ++i) {
        q.mod.action.push_back(q.proj * m.action[i] * q.lift);
        if (!(q.proj * m.action[i] * rb).is_zero())
            throw std::invalid_argument("quotient_module: span not action-stable");
    }
    return q;
}

// Closure of a set of vectors under the action.
template <class K>
Matrix<K> module_closure(const RightModule<K>& m, const Matrix<K>& gens) {
    Matrix<K> span = reduced_span(gens);
    for (;;) {
        std::vector<std::vector<K>> cols;
        for (std::size_t c = 0; c < span.cols(); ++c) {
            cols.push_back(span.column(c));
            for (std::size_t i = 0; i < m.alg->dim(); ++i)
                cols.push_back(m.action[i].apply(span.column(c)));
        }
        auto next = reduced_span(Matrix<K>::from_columns(cols, m.dim));
        if (next.cols() == span.cols()) return next;
        span = next;
    }
}

// --- hom spaces -------------------------------------------------------------

template <class K>
std::vector<K> vec_of(const Matrix<K>& f) {
    std::vector<K> v;
    for (std::size_t c = 0; c < f.cols(); ++c)
        for (std::size_t r = 0; r < f.rows(); ++r) v.push_back(f(r, c));
    return v;
}

template <class K>
Matrix<K> unvec(const std::vector<K>& v, std::size_t rows, std::size_t cols) {
    Matrix<K> f(rows, cols);
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < rows; ++r) f(r, c) = v[c * rows + r];
    return f;
}

// Basis of Hom_A(M, N): kernel of the intertwining constraints on vec(f).
template <class K>
std::vector<Matrix<K>> hom_space(const RightModule<K>& m, const RightModule<K>& n) {
    std::size_t sz = n.dim * m.dim;
    if (sz == 0) return {};
    Matrix<K> constraints(0, sz);
    bool first = true;
    auto in_ = Matrix<K>::identity(n.dim, free_one<K>());
    auto im = Matrix<K>::identity(m.dim, free_one<K>());
    for (std::size_t i = 0; i < m.alg->dim(); ++i) {
        auto row = Matrix<K>::kron(m.action[i].transposed(), in_) - Matrix<K>::kron(im, n.action[i]);
        constraints = first ? row : Matrix<K>::vstack(constraints, row);
        first = false;
    }
    auto ker = kernel_basis(constraints);
    std::vector<Matrix<K>> out;
    for (std::size_t c = 0; c < ker.cols(); ++c) out.push_back(unvec(ker.column(c), n.dim, m.dim));
    return out;
}

// Seeded search for an isomorphism inside the hom space.
template <class K>
std::optional<Matrix<K>> find_module_iso(const RightModule<K>& m, const RightModule<K>& n,
                                         std::uint64_t seed = 7) {
    if (m.dim != n.dim) return std::nullopt;
    if (m.dim == 0) return Matrix<K>(0, 0);
    auto hs = hom_space(m, n);
    for (auto& f : hs)
        if (inverse(f)) return f;
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 40; ++trial) {
        Matrix<K> f(n.dim, m.dim);
        for (auto& h : hs)
            f += h.scaled(ScalarOps<K>::from_int(m.alg->field,
                                                 static_cast<std::int64_t>(rng() % 19) - 9));
        if (inverse(f)) return f;
    }
    return std::nullopt;
}

// --- basic algebra data -----------------------------------------------------
//
// An algebra with a certified radical and a complete list of primitive
// orthogonal idempotents; enough to form projective covers and simples.

template <class K>
struct BasicAlgebraData {
    Algebra<K> alg;
    Matrix<K> radical;                 // reduced span of the Jacobson radical
    std::vector<std::vector<K>> eps;   // primitive orthogonal idempotents
    std::vector<RightModule<K>> proj;  // P_i = eps_i . alg
    std::vector<Matrix<K>> proj_incl;  // basis of P_i inside alg
    std::vector<std::vector<K>> proj_gen;  // coords of eps_i in the P_i basis
    std::vector<RightModule<K>> simple;    // tops of the P_i (dim 1 each)

    std::size_t vertices() const { return eps.size(); }

    // The stored modules point at this->alg, so copies and moves must rebind.
    BasicAlgebraData() = default;
    BasicAlgebraData(const BasicAlgebraData& o) { *this = o; }
    BasicAlgebraData(BasicAlgebraData&& o) noexcept { *this = std::move(o); }
    BasicAlgebraData& operator=(const BasicAlgebraData& o) {
        if (this == &o) return *this;
        alg = o.alg;
        radical = o.radical;
        eps = o.eps;
        proj = o.proj;
        proj_incl = o.proj_incl;
        proj_gen = o.proj_gen;
        simple = o.simple;
        rebind();
        return *this;
    }
    BasicAlgebraData& operator=(BasicAlgebraData&& o) noexcept {
        if (this == &o) return *this;
        alg = std::move(o.alg);
        radical = std::move(o.radical);
        eps = std::move(o.eps);
        proj = std::move(o.proj);
        proj_incl = std::move(o.proj_incl);
        proj_gen = std::move(o.proj_gen);
        simple = std::move(o.simple);
        rebind();
        return *this;
    }
    void rebind() {
        for (auto& p : proj) p.alg = &alg;
        for (auto& s : simple) s.alg = &alg;
    }
};

template <class K>
BasicAlgebraData<K> basic_data(const Algebra<K>& a, const Matrix<K>& radical,
                               const std::vector<std::vector<K>>& eps) {
    BasicAlgebraData<K> b;
    b.alg = a;
    b.radical = reduced_span(radical);
    b.eps = eps;
    // sanity: orthogonal idempotents summing to 1, radical nilpotent ideal,
    // quotient dimension = number of idempotents
    std::vector<K> sum(a.dim());
    for (auto& e : eps)
        for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += e[t];
    if (sum != a.unit) throw std::invalid_argument("basic_data: idempotents do not sum to 1");
    for (std::size_t i = 0; i < eps.size(); ++i)
        for (std::size_t j = 0; j < eps.size(); ++j) {
            auto p = b.alg.mul(eps[i], eps[j]);
            if (i == j ? p != eps[i] : !b.alg.is_zero_vec(p))
                throw std::invalid_argument("basic_data: idempotents not orthogonal");
        }
    if (b.radical.cols() + eps.size() != a.dim())
        throw std::invalid_argument("basic_data: radical complement has wrong dimension");
    {
        Matrix<K> p = b.radical;
        while (p.cols() > 0) {
            auto next = product_span(b.alg, p, b.radical);
            if (next.cols() >= p.cols())
                throw std::invalid_argument("basic_data: radical not nilpotent");
            p = next;
        }
    }
    auto reg = regular_module(b.alg);
    for (std::size_t i = 0; i < eps.size(); ++i) {
        std::vector<std::vector<K>> cols;
        for (std::size_t k = 0; k < a.dim(); ++k) cols.push_back(b.alg.mul(eps[i], a.basis_elt(k)));
        auto sub = submodule(reg, Matrix<K>::from_columns(cols, a.dim()));
        b.proj_incl.push_back(sub.incl);
        auto gen = solve_linear(sub.incl, eps[i]);
        if (!gen.ok()) throw std::invalid_argument("basic_data: idempotent escapes its column");
        b.proj_gen.push_back(*gen.solution);
        b.proj.push_back(std::move(sub.mod));
    }
    // simples are formed lazily below (need stable addresses for alg)
    return b;
}

// Span of M . radical inside M.
template <class K>
Matrix<K> radical_submodule(const BasicAlgebraData<K>& b, const RightModule<K>& m) {
    std::vector<std::vector<K>> cols;
    for (std::size_t c = 0; c < b.radical.cols(); ++c) {
        auto op = m.act(b.radical.column(c));
        for (std::size_t v = 0; v < m.dim; ++v) {
            std::vector<K> unit(m.dim);
            unit[v] = free_one<K>();
            cols.push_back(op.apply(unit));
        }
    }
    return reduced_span(Matrix<K>::from_columns(cols, m.dim));
}

template <class K>
BasicAlgebraData<K> basic_data(const AuslanderAlgebra<K>& a) {
    return basic_data(a.total, radical_span(a), a.eps);
}

// Local Artinian ring: one idempotent, the given radical.
template <class K>
BasicAlgebraData<K> local_data(const ArtinRing<K>& r, const Ideal<K>& rad) {
    return basic_data(r, rad.basis, {r.unit});
}

template <class K>
Algebra<K> opposite_algebra(const Algebra<K>& a) {
    Algebra<K> o;
    o.field = a.field;
    o.basis_names = a.basis_names;
    o.unit = a.unit;
    for (std::size_t i = 0; i < a.dim(); ++i) o.lmul.push_back(a.rmul(i));
    return o;
}

template <class K>
Algebra<K> tensor_algebra(const Algebra<K>& a, const Algebra<K>& b) {
    Algebra<K> t;
    t.field = a.field;
    for (std::size_t p = 0; p < a.dim(); ++p)
        for (std::size_t q = 0; q < b.dim(); ++q)
            t.basis_names.push_back(a.basis_names[p] + "(x)" + b.basis_names[q]);
    for (std::size_t p = 0; p < a.dim(); ++p)
        for (std::size_t q = 0; q < b.dim(); ++q)
            t.lmul.push_back(Matrix<K>::kron(a.lmul[p], b.lmul[q]));
    t.unit.assign(a.dim() * b.dim(), K());
    for (std::size_t p = 0; p < a.dim(); ++p)
        for (std::size_t q = 0; q < b.dim(); ++q) t.unit[p * b.dim() + q] = a.unit[p] * b.unit[q];
    return t;
}

// Enveloping algebra A^op (x) A with the diagonal bimodule as a right module.
template <class K>
struct EnvelopingData {
    BasicAlgebraData<K> env;
    RightModule<K> diagonal;  // A with x.(a(x)b) = a x b

    EnvelopingData() = default;
    EnvelopingData(const EnvelopingData& o) { *this = o; }
    EnvelopingData(EnvelopingData&& o) noexcept { *this = std::move(o); }
    EnvelopingData& operator=(const EnvelopingData& o) {
        if (this == &o) return *this;
        env = o.env;
        diagonal = o.diagonal;
        diagonal.alg = &env.alg;
        return *this;
    }
    EnvelopingData& operator=(EnvelopingData&& o) noexcept {
        if (this == &o) return *this;
        env = std::move(o.env);
        diagonal = std::move(o.diagonal);
        diagonal.alg = &env.alg;
        return *this;
    }
};

template <class K>
EnvelopingData<K> enveloping_data(const BasicAlgebraData<K>& b) {
    EnvelopingData<K> e;
    const auto& a = b.alg;
    auto aop = opposite_algebra(a);
    auto env = tensor_algebra(aop, a);
    std::vector<std::vector<K>> rad_cols;
    auto embed = [&](const std::vector<K>& x, const std::vector<K>& y) {
        std::vector<K> v(a.dim() * a.dim());
        for (std::size_t p = 0; p < a.dim(); ++p)
            for (std::size_t q = 0; q < a.dim(); ++q) v[p * a.dim() + q] = x[p] * y[q];
        return v;
    };
    for (std::size_t c = 0; c < b.radical.cols(); ++c)
        for (std::size_t k = 0; k < a.dim(); ++k) {
            rad_cols.push_back(embed(b.radical.column(c), a.basis_elt(k)));
            rad_cols.push_back(embed(a.basis_elt(k), b.radical.column(c)));
        }
    std::vector<std::vector<K>> eps;
    for (auto& ei : b.eps)
        for (auto& ej : b.eps) eps.push_back(embed(ei, ej));
    e.env = basic_data(env, Matrix<K>::from_columns(rad_cols, env.dim()), eps);
    e.diagonal.alg = &e.env.alg;
    e.diagonal.dim = a.dim();
    for (std::size_t p = 0; p < a.dim(); ++p)
        for (std::size_t q = 0; q < a.dim(); ++q)
            e.diagonal.action.push_back(a.lmul[p] * a.rmul(q));
    return e;
}

// Triangular extension [[k, M], [0, A]] for a right A-module M; basis order:
// scalar unit, M basis, A basis.
template <class K>
BasicAlgebraData<K> triangular_extension(const BasicAlgebraData<K>& b, const RightModule<K>& m) {
    const auto& a = b.alg;
    Algebra<K> t;
    t.field = a.field;
    std::size_t d = 1 + m.dim + a.dim();
    t.basis_names.push_back("s");
    for (std::size_t i = 0; i < m.dim; ++i) t.basis_names.push_back("m" + std::to_string(i));
    for (auto& nm : a.basis_names) t.basis_names.push_back(nm);
    t.lmul.assign(d, Matrix<K>(d, d));
    // s * (l, v, a) = (l, v, 0)
    t.lmul[0](0, 0) = free_one<K>();
    for (std::size_t i = 0; i < m.dim; ++i) t.lmul[0](1 + i, 1 + i) = free_one<K>();
    // m_i * (l, v, a) = (0, m_i . a, 0)
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t k = 0; k < a.dim(); ++k) {
            std::vector<K> unit(m.dim);
            unit[i] = free_one<K>();
            auto w = m.action[k].apply(unit);
            for (std::size_t r = 0; r < m.dim; ++r) t.lmul[1 + i](1 + r, 1 + m.dim + k) = w[r];
        }
    // a_k * (l, v, a) = (0, 0, a_k a)
    for (std::size_t k = 0; k < a.dim(); ++k)
        for (std::size_t r = 0; r < a.dim(); ++r)
            for (std::size_t c = 0; c < a.dim(); ++c)
                t.lmul[1 + m.dim + k](1 + m.dim + r, 1 + m.dim + c) = a.lmul[k](r, c);
    t.unit.assign(d, K());
    t.unit[0] = free_one<K>();
    for (std::size_t i = 0; i < a.dim(); ++i) t.unit[1 + m.dim + i] = a.unit[i];
    std::vector<std::vector<K>> rad_cols;
    for (std::size_t i = 0; i < m.dim; ++i) {
        std::vector<K> v(d);
        v[1 + i] = free_one<K>();
        rad_cols.push_back(std::move(v));
    }
    for (std::size_t c = 0; c < b.radical.cols(); ++c) {
        std::vector<K> v(d);
        auto col = b.radical.column(c);
        for (std::size_t i = 0; i < a.dim(); ++i) v[1 + m.dim + i] = col[i];
        rad_cols.push_back(std::move(v));
    }
    std::vector<std::vector<K>> eps;
    {
        std::vector<K> e0(d);
        e0[0] = free_one<K>();
        eps.push_back(std::move(e0));
    }
    for (auto& e : b.eps) {
        std::vector<K> v(d);
        for (std::size_t i = 0; i < a.dim(); ++i) v[1 + m.dim + i] = e[i];
        eps.push_back(std::move(v));
    }
    return basic_data(t, Matrix<K>::from_columns(rad_cols, d), eps);
}

// --- minimal projective resolutions ----------------------------------------

enum class ResolutionStatus { Finite, CapReached, Periodic };

template <class K>
struct Resolution {
    ResolutionStatus status = ResolutionStatus::Finite;
    std::size_t length = 0;                        // pdim when Finite
    std::vector<std::vector<std::size_t>> terms;   // idempotent indices per step
    std::vector<RightModule<K>> proj_mods;         // the P_s as modules
    std::vector<Matrix<K>> maps;                   // maps[0]: P_0 -> M; maps[s]: P_s -> P_{s-1}
    std::size_t period = 0;                        // syzygy period when Periodic
};

namespace detail {

// Projective cover data for one module: term list, cover module, map to M.
template <class K>
struct Cover {
    std::vector<std::size_t> ids;
    RightModule<K> proj;
    Matrix<K> map;
    std::vector<Matrix<K>> incls;  // A-coordinates of each summand basis
};

template <class K>
Cover<K> projective_cover(const BasicAlgebraData<K>& b, const RightModule<K>& m) {
    Cover<K> cv;
    auto top = quotient_module(m, radical_submodule(b, m));
    std::vector<const RightModule<K>*> parts;
    std::vector<std::vector<K>> gens;  // lifted generator in M per summand
    for (std::size_t i = 0; i < b.vertices(); ++i) {
        auto ti = column_space_basis(top.mod.act(b.eps[i]));
        for (std::size_t c = 0; c < ti.cols(); ++c) {
            auto g = m.act(b.eps[i]).apply(top.lift.apply(ti.column(c)));
            cv.ids.push_back(i);
            cv.incls.push_back(b.proj_incl[i]);
            parts.push_back(&b.proj[i]);
            gens.push_back(std::move(g));
        }
    }
    if (parts.empty()) {
        cv.proj = zero_module(b.alg);
        cv.map = Matrix<K>(m.dim, 0);
        return cv;
    }
    cv.proj = direct_sum_modules(parts);
    cv.map = Matrix<K>(m.dim, cv.proj.dim);
    std::size_t off = 0;
    for (std::size_t s = 0; s < cv.ids.size(); ++s) {
        const auto& incl = cv.incls[s];
        for (std::size_t c = 0; c < incl.cols(); ++c) {
            auto v = m.act(incl.column(c)).apply(gens[s]);
            for (std::size_t r = 0; r < m.dim; ++r) cv.map(r, off + c) = v[r];
        }
        off += incl.cols();
    }
    return cv;
}

}  // namespace detail

template <class K>
Resolution<K> minimal_projective_resolution(const BasicAlgebraData<K>& b, const RightModule<K>& m,
                                            std::size_t cap, bool detect_periodicity = true) {
    Resolution<K> res;
    RightModule<K> cur = m;
    Matrix<K> cur_incl;  // inclusion of cur into previous projective (empty at step 0)
    std::vector<RightModule<K>> syzygies;
    for (std::size_t step = 0;; ++step) {
        if (cur.dim == 0) {
            res.status = ResolutionStatus::Finite;
            res.length = step == 0 ? 0 : step - 1;
            // a zero module at step s means P_{s-1} was the last term
            if (step == 0) res.length = 0;
            return res;
        }
        if (step > cap) {
            res.status = ResolutionStatus::CapReached;
            res.length = cap;
            if (detect_periodicity)
                for (std::size_t i = 0; i + 1 < syzygies.size(); ++i)
                    for (std::size_t j = i + 1; j < syzygies.size(); ++j)
                        if (syzygies[i].dim == syzygies[j].dim && syzygies[i].dim > 0 &&
                            find_module_iso(syzygies[i], syzygies[j])) {
                            res.status = ResolutionStatus::Periodic;
                            res.period = j - i;
                            return res;
                        }
            return res;
        }
        auto cv = detail::projective_cover(b, cur);
        res.terms.push_back(cv.ids);
        res.maps.push_back(step == 0 ? cv.map : cur_incl * cv.map);
        res.proj_mods.push_back(cv.proj);
        auto ker = kernel_basis(cv.map);
        if (ker.cols() == 0) {
            res.status = ResolutionStatus::Finite;
            res.length = step;
            return res;
        }
        auto sub = submodule(cv.proj, ker);
        cur_incl = sub.incl;
        cur = std::move(sub.mod);
        syzygies.push_back(cur);
    }
}

// --- Ext tables -------------------------------------------------------------
//
// Hom_A(eps_i A, N) = N eps_i; the Ext complex is assembled in those
// coordinates, with differentials induced by the resolution maps.

template <class K>
std::vector<std::size_t> ext_table(const BasicAlgebraData<K>& b, const RightModule<K>& m,
                                   const RightModule<K>& n, std::size_t maxdeg,
                                   std::size_t cap = 0) {
    if (cap == 0) cap = maxdeg + 2;
    auto res = minimal_projective_resolution(b, m, std::max(cap, maxdeg + 1), false);
    std::size_t steps = res.terms.size();
    // basis of N eps_i per vertex
    std::vector<Matrix<K>> neps;
    for (std::size_t i = 0; i < b.vertices(); ++i)
        neps.push_back(column_space_basis(n.act(b.eps[i])));
    // dim of C^s and concrete matrices of its basis maps P_s -> N
    auto cochain = [&](std::size_t s) {
        std::vector<Matrix<K>> maps;
        if (s >= steps) return maps;
        std::size_t off = 0;
        for (auto id : res.terms[s]) {
            const auto& incl = b.proj_incl[id];
            for (std::size_t c = 0; c < neps[id].cols(); ++c) {
                Matrix<K> f(n.dim, res.proj_mods[s].dim);
                auto nv = neps[id].column(c);
                for (std::size_t pc = 0; pc < incl.cols(); ++pc) {
                    auto v = n.act(incl.column(pc)).apply(nv);
                    for (std::size_t r = 0; r < n.dim; ++r) f(r, off + pc) = v[r];
                }
                maps.push_back(std::move(f));
            }
            off += incl.cols();
        }
        return maps;
    };
    // differential C^s -> C^{s+1} in the N-eps coordinates
    auto diff = [&](std::size_t s, const std::vector<Matrix<K>>& cs) {
        std::size_t next_dim = 0;
        if (s + 1 < steps)
            for (auto id : res.terms[s + 1]) next_dim += neps[id].cols();
        Matrix<K> d(next_dim, cs.size());
        if (s + 1 >= steps || next_dim == 0) return d;
        for (std::size_t col = 0; col < cs.size(); ++col) {
            auto g = cs[col] * res.maps[s + 1];
            std::size_t row = 0, off = 0;
            for (std::size_t k = 0; k < res.terms[s + 1].size(); ++k) {
                auto id = res.terms[s + 1][k];
                std::vector<K> gen(res.proj_mods[s + 1].dim);
                for (std::size_t t = 0; t < b.proj_gen[id].size(); ++t)
                    gen[off + t] = b.proj_gen[id][t];
                auto val = g.apply(gen);
                auto sol = solve_linear(neps[id], val);
                if (!sol.ok()) throw std::runtime_error("ext_table: value escapes N eps_i");
                for (std::size_t t = 0; t < sol.solution->size(); ++t)
                    d(row + t, col) = (*sol.solution)[t];
                row += neps[id].cols();
                off += b.proj_incl[id].cols();
            }
        }
        return d;
    };
    std::vector<std::size_t> out;
    Matrix<K> prev_d(0, 0);
    for (std::size_t s = 0; s <= maxdeg; ++s) {
        auto cs = cochain(s);
        auto d = diff(s, cs);
        std::size_t ker = cs.size() - rank(d);
        std::size_t im = s == 0 ? 0 : rank(prev_d);
        out.push_back(ker - im);
        prev_d = std::move(d);
    }
    return out;
}

// --- Cartan matrix, global dimension, smoothness ----------------------------

template <class K>
std::vector<std::vector<std::size_t>> cartan_matrix(const BasicAlgebraData<K>& b) {
    std::size_t n = b.vertices();
    std::vector<std::vector<std::size_t>> c(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::vector<K>> cols;
            for (std::size_t k = 0; k < b.alg.dim(); ++k)
                cols.push_back(b.alg.mul(b.alg.mul(b.eps[j], b.alg.basis_elt(k)), b.eps[i]));
            c[i][j] = rank(Matrix<K>::from_columns(cols, b.alg.dim()));
        }
    return c;
}

inline std::int64_t int_det(const std::vector<std::vector<std::size_t>>& m) {
    std::size_t n = m.size();
    std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<std::int64_t>(m[i][j]);
    // Laplace expansion; fine for the small matrices in scope
    std::function<std::int64_t(std::vector<std::vector<std::int64_t>>)> det =
        [&](std::vector<std::vector<std::int64_t>> x) -> std::int64_t {
        std::size_t k = x.size();
        if (k == 0) return 1;
        if (k == 1) return x[0][0];
        std::int64_t s = 0, sign = 1;
        for (std::size_t c = 0; c < k; ++c, sign = -sign) {
            std::vector<std::vector<std::int64_t>> minor;
            for (std::size_t r = 1; r < k; ++r) {
                std::vector<std::int64_t> row;
                for (std::size_t cc = 0; cc < k; ++cc)
                    if (cc != c) row.push_back(x[r][cc]);
                minor.push_back(std::move(row));
            }
            s += sign * x[0][c] * det(std::move(minor));
        }
        return s;
    };
    return det(a);
}

template <class K>
struct GldimReport {
    ResolutionStatus status = ResolutionStatus::Finite;
    std::size_t value = 0;  // gldim when Finite, the cap otherwise
    std::vector<std::size_t> simple_pdims;
    std::size_t period = 0;
};

// Simple at vertex i: top of P_i.
template <class K>
RightModule<K> simple_module(const BasicAlgebraData<K>& b, std::size_t i) {
    return quotient_module(b.proj[i], radical_submodule(b, b.proj[i])).mod;
}

template <class K>
GldimReport<K> gldim(const BasicAlgebraData<K>& b, std::size_t cap) {
    GldimReport<K> g;
    for (std::size_t i = 0; i < b.vertices(); ++i) {
        auto s = simple_module(b, i);
        auto res = minimal_projective_resolution(b, s, cap);
        if (res.status == ResolutionStatus::Finite) {
            g.simple_pdims.push_back(res.length);
            g.value = std::max(g.value, res.length);
        } else {
            g.status = res.status;
            g.period = res.period;
            g.simple_pdims.push_back(cap + 1);
            g.value = std::max(g.value, cap);
        }
    }
    return g;
}

template <class K>
struct SmoothnessReport {
    ResolutionStatus status = ResolutionStatus::Finite;
    std::size_t length = 0;  // diagonal resolution length when smooth
    std::size_t period = 0;
    bool smooth() const { return status == ResolutionStatus::Finite; }
};

template <class K>
SmoothnessReport<K> smoothness_check(const BasicAlgebraData<K>& b, std::size_t cap) {
    auto env = enveloping_data(b);
    auto res = minimal_projective_resolution(env.env, env.diagonal, cap);
    return SmoothnessReport<K>{res.status, res.length, res.period};
}

// --- module complexes -------------------------------------------------------

template <class K>
struct ModuleComplex {
    std::map<int, RightModule<K>> terms;
    std::map<int, Matrix<K>> diffs;  // d^k: term k -> term k+1

    std::size_t dim(int k) const {
        auto it = terms.find(k);
        return it == terms.end() ? 0 : it->second.dim;
    }
    Matrix<K> diff(int k) const {
        auto it = diffs.find(k);
        if (it != diffs.end()) return it->second;
        return Matrix<K>(dim(k + 1), dim(k));
    }
    int min_deg() const { return terms.empty() ? 0 : terms.begin()->first; }
    int max_deg() const { return terms.empty() ? 0 : terms.rbegin()->first; }
};

template <class K>
bool validate_module_complex(const ModuleComplex<K>& c) {
    for (auto& [k, m] : c.terms) {
        auto it = c.terms.find(k + 1);
        if (it != c.terms.end() && !is_module_map(m, it->second, c.diff(k))) return false;
        if (!(c.diff(k + 1) * c.diff(k)).is_zero()) return false;
    }
    return true;
}

template <class K>
std::size_t complex_cohomology_dim(const ModuleComplex<K>& c, int k) {
    auto d = c.diff(k);
    std::size_t ker = c.dim(k) - rank(d);
    std::size_t im = rank(c.diff(k - 1));
    return ker - im;
}

// Smart truncations preserving cohomology on the kept side.
template <class K>
ModuleComplex<K> truncate_below(const ModuleComplex<K>& c, int k) {  // tau^{<=k}
    ModuleComplex<K> out;
    for (auto& [deg, m] : c.terms)
        if (deg < k) out.terms[deg] = m;
    for (auto& [deg, d] : c.diffs)
        if (deg < k - 1) out.diffs[deg] = d;
    if (c.terms.count(k)) {
        auto s = submodule(c.terms.at(k), kernel_basis(c.diff(k)));
        if (c.dim(k - 1) > 0) {
            auto lifted = solve_matrix(s.incl, c.diff(k - 1));
            if (!lifted) throw std::invalid_argument("truncate_below: differential misses kernel");
            out.diffs[k - 1] = *lifted;
        }
        out.terms[k] = std::move(s.mod);
    }
    return out;
}

template <class K>
ModuleComplex<K> truncate_above(const ModuleComplex<K>& c, int k) {  // tau^{>=k}
    ModuleComplex<K> out;
    for (auto& [deg, m] : c.terms)
        if (deg > k) out.terms[deg] = m;
    for (auto& [deg, d] : c.diffs)
        if (deg > k) out.diffs[deg] = d;
    if (c.terms.count(k)) {
        // image of d^{k-1} inside term k
        Matrix<K> im = c.dim(k - 1) ? reduced_span(c.diff(k - 1)) : Matrix<K>(c.dim(k), 0);
        auto q = quotient_module(c.terms.at(k), im);
        if (c.dim(k + 1) > 0) out.diffs[k] = c.diff(k) * q.lift;
        out.terms[k] = std::move(q.mod);
    }
    return out;
}

// --- seeded random modules --------------------------------------------------

template <class K>
RightModule<K> random_module(const BasicAlgebraData<K>& b, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::size_t copies = 1 + rng() % 2;
    std::vector<const RightModule<K>*> parts;
    for (std::size_t c = 0; c < copies; ++c) parts.push_back(&b.proj[rng() % b.vertices()]);
    auto p = direct_sum_modules(parts);
    std::size_t ngens = rng() % 3;
    std::vector<std::vector<K>> gens;
    for (std::size_t g = 0; g < ngens; ++g) {
        std::vector<K> v(p.dim);
        for (auto& x : v)
            x = ScalarOps<K>::from_int(b.alg.field, static_cast<std::int64_t>(rng() % 7) - 3);
        gens.push_back(std::move(v));
    }
    Matrix<K> span = gens.empty() ? Matrix<K>(p.dim, 0) : Matrix<K>::from_columns(gens, p.dim);
    auto closed = module_closure(p, span);
    if (closed.cols() == p.dim) return zero_module(b.alg);
    return quotient_module(p, closed).mod;
}

}  // namespace dgaus

#endif
