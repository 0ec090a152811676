#ifndef DGAUS_MODFUNCTORS_HPP
#define DGAUS_MODFUNCTORS_HPP

#include <deque>

#include "module.hpp"

namespace dgaus {

// --- shifted grids and the corner identification ----------------------------

// Dropping the first row and column of a grid: a'_{ij} = a_{i+1,j+1}.  The
// block algebra on the shifted grid is the corner (1-eps_1) A (1-eps_1) with
// identical block representatives and structure constants.
template <class K>
IdealGrid<K> shifted_grid(const IdealGrid<K>& g) {
    if (g.n < 2) throw std::invalid_argument("shifted_grid: nothing left");
    IdealGrid<K> s;
    s.n = g.n - 1;
    s.whole = g.whole;
    for (std::size_t i = 1; i <= s.n; ++i) {
        s.entries.emplace_back();
        for (std::size_t j = i + 1; j <= s.n + 1; ++j) s.entries.back().push_back(g.at(i + 1, j + 1));
    }
    return s;
}

template <class K>
AuslanderAlgebra<K> corner_algebra_shifted(const AuslanderAlgebra<K>& a) {
    return build_generalized(a.base, shifted_grid(a.grid), a.rad);
}

// A-element supported in block (i, j) with the given R-representative.
template <class K>
std::vector<K> block_embed(const AuslanderAlgebra<K>& a, std::size_t i, std::size_t j,
                           const std::vector<K>& x) {
    std::vector<K> v(a.total.dim());
    auto c = a.block_coords(i, j, x);
    for (std::size_t t = 0; t < c.size(); ++t) v[a.boff(i, j) + t] = c[t];
    return v;
}

// --- peel context -----------------------------------------------------------
//
// Everything needed for the functors around the recollement
// Mod-T  <-  Mod-A  <-  Mod-A'   (T = R/a_{12}, A' = the corner).

template <class K>
struct PeelContext {
    const AuslanderAlgebra<K>* a = nullptr;
    const AuslanderAlgebra<K>* corner = nullptr;  // null when n == 1
    PeelReport<K> peel;
    QuotientAlgebra<K> target;              // T = R / a_{12}
    std::vector<std::vector<K>> hom;        // A basis -> T (the quotient ring map)
    std::vector<std::vector<K>> t_lift;     // T basis -> A preimages
    std::vector<K> ebar;                    // 1 - eps_1
    std::vector<std::size_t> w_idx;         // A basis indices spanning (1-eps1)A
    std::vector<std::size_t> c2a;           // corner basis index -> A basis index
};

template <class K>
PeelContext<K> make_peel_context(const AuslanderAlgebra<K>& a,
                                 const AuslanderAlgebra<K>* corner = nullptr) {
    PeelContext<K> ctx;
    ctx.a = &a;
    ctx.corner = corner;
    ctx.peel = ideal_csI(a);
    if (!ctx.peel.ok()) throw std::runtime_error("make_peel_context: peel quotient mismatch");
    ctx.target = quotient_ring(a.base, a.grid.at(1, 2));
    for (std::size_t b = 0; b < a.total.dim(); ++b)
        ctx.hom.push_back(ctx.peel.iso.apply(ctx.peel.quotient.proj.apply(a.total.basis_elt(b))));
    auto inv = inverse(ctx.peel.iso);
    for (std::size_t t = 0; t < ctx.target.alg.dim(); ++t)
        ctx.t_lift.push_back(ctx.peel.quotient.lift.apply(inv->column(t)));
    ctx.ebar = a.total.unit;
    for (std::size_t t = 0; t < ctx.ebar.size(); ++t) ctx.ebar[t] -= a.eps[0][t];
    for (std::size_t i = 2; i <= a.n; ++i)
        for (std::size_t j = 1; j <= a.n; ++j)
            for (std::size_t u = 0; u < a.bdim(i, j); ++u) ctx.w_idx.push_back(a.boff(i, j) + u);
    if (corner) {
        ctx.c2a.assign(corner->total.dim(), 0);
        for (std::size_t i = 1; i <= corner->n; ++i)
            for (std::size_t j = 1; j <= corner->n; ++j) {
                if (corner->bdim(i, j) != a.bdim(i + 1, j + 1))
                    throw std::runtime_error("make_peel_context: corner block dims differ");
                for (std::size_t u = 0; u < corner->bdim(i, j); ++u)
                    ctx.c2a[corner->boff(i, j) + u] = a.boff(i + 1, j + 1) + u;
            }
        // the corner multiplication must match A's on the shifted blocks
        auto lift_c = [&](const std::vector<K>& v) {
            std::vector<K> w(a.total.dim());
            for (std::size_t t = 0; t < v.size(); ++t) w[ctx.c2a[t]] = v[t];
            return w;
        };
        for (std::size_t p = 0; p < corner->total.dim(); ++p)
            for (std::size_t q = 0; q < corner->total.dim(); ++q) {
                auto inner = lift_c(corner->total.mul(corner->total.basis_elt(p),
                                                      corner->total.basis_elt(q)));
                auto outer = a.total.mul(a.total.basis_elt(ctx.c2a[p]), a.total.basis_elt(ctx.c2a[q]));
                if (inner != outer)
                    throw std::runtime_error("make_peel_context: corner products differ");
            }
    }
    return ctx;
}

// --- generic tensor over an inner algebra -----------------------------------
//
// M (x)_B W for a right B-module M and a (B, A)-bimodule W given by action
// matrices; full-space index (mi * wdim + wi).

template <class K>
struct SpaceQuotient {
    Matrix<K> proj, incl;
};

template <class K>
SpaceQuotient<K> space_quotient(const Matrix<K>& span, std::size_t n) {
    SpaceQuotient<K> q;
    auto rb = reduced_span(span);
    auto e = echelon(Matrix<K>::hstack(rb, Matrix<K>::identity(n, free_one<K>())));
    std::vector<std::size_t> comp;
    for (auto p : e.pivots)
        if (p >= rb.cols()) comp.push_back(p - rb.cols());
    q.incl = Matrix<K>(n, comp.size());
    for (std::size_t c = 0; c < comp.size(); ++c) q.incl(comp[c], c) = free_one<K>();
    auto full = inverse(Matrix<K>::hstack(rb, q.incl));
    q.proj = full->submatrix(rb.cols(), 0, comp.size(), n);
    return q;
}

template <class K>
struct TensorResult {
    RightModule<K> mod;      // over the outer algebra
    Matrix<K> proj, incl;    // between the full space M (x) W and the quotient
    std::size_t wdim = 0;
};

template <class K>
TensorResult<K> tensor_module(const RightModule<K>& m, std::size_t wd,
                              const std::vector<Matrix<K>>& leftact,
                              const std::vector<Matrix<K>>& mact,
                              const std::vector<Matrix<K>>& rightact, const Algebra<K>& outer) {
    TensorResult<K> tr;
    tr.wdim = wd;
    std::size_t full = m.dim * wd;
    std::vector<std::vector<K>> rel;
    for (std::size_t k = 0; k < mact.size(); ++k)
        for (std::size_t mi = 0; mi < m.dim; ++mi)
            for (std::size_t wi = 0; wi < wd; ++wi) {
                std::vector<K> col(full);
                bool nz = false;
                for (std::size_t r = 0; r < m.dim; ++r) {
                    auto v = mact[k](r, mi);
                    if (!v.is_zero()) { col[r * wd + wi] += v; nz = true; }
                }
                for (std::size_t s = 0; s < wd; ++s) {
                    auto v = leftact[k](s, wi);
                    if (!v.is_zero()) { col[mi * wd + s] -= v; nz = true; }
                }
                if (nz) rel.push_back(std::move(col));
            }
    Matrix<K> span = rel.empty() ? Matrix<K>(full, 0) : Matrix<K>::from_columns(rel, full);
    auto q = space_quotient(span, full);
    tr.proj = q.proj;
    tr.incl = q.incl;
    tr.mod.alg = &outer;
    tr.mod.dim = q.incl.cols();
    auto im = Matrix<K>::identity(m.dim, free_one<K>());
    Matrix<K> rspan = reduced_span(span);
    for (std::size_t t = 0; t < outer.dim(); ++t) {
        auto f = Matrix<K>::kron(im, rightact[t]);
        if (!(tr.proj * f * rspan).is_zero())
            throw std::runtime_error("tensor_module: relations not right-stable");
        tr.mod.action.push_back(tr.proj * f * tr.incl);
    }
    return tr;
}

// Span of M . (ideal columns) inside M.
template <class K>
Matrix<K> ideal_submodule_span(const RightModule<K>& m, const Matrix<K>& ideal) {
    std::vector<std::vector<K>> cols;
    for (std::size_t c = 0; c < ideal.cols(); ++c) {
        auto op = m.act(ideal.column(c));
        for (std::size_t v = 0; v < m.dim; ++v) {
            std::vector<K> unit(m.dim);
            unit[v] = free_one<K>();
            cols.push_back(op.apply(unit));
        }
    }
    return reduced_span(Matrix<K>::from_columns(cols, m.dim));
}

// --- the six peel functors --------------------------------------------------

// si: Mod-T -> Mod-A, restriction along A ->> T.
template <class K>
RightModule<K> functor_si(const PeelContext<K>& ctx, const RightModule<K>& m0) {
    // m0 must genuinely be a T-module; its action matrices get reused
    RightModule<K> m{&ctx.a->total, m0.dim, {}};
    for (std::size_t b = 0; b < ctx.a->total.dim(); ++b) m.action.push_back(m0.act(ctx.hom[b]));
    return m;
}

// si on morphisms is the identity on matrices.

// si*: Mod-A -> Mod-T, M / M.I with the induced T-action.
template <class K>
struct SiStarResult {
    RightModule<K> mod;    // over T
    Matrix<K> proj, lift;  // from/to the underlying space of M
};

template <class K>
SiStarResult<K> functor_si_star(const PeelContext<K>& ctx, const RightModule<K>& m) {
    SiStarResult<K> r;
    auto span = ideal_submodule_span(m, ctx.peel.ideal);
    auto q = space_quotient(span, m.dim);
    r.proj = q.proj;
    r.lift = q.incl;
    r.mod.alg = &ctx.target.alg;
    r.mod.dim = q.incl.cols();
    for (std::size_t t = 0; t < ctx.target.alg.dim(); ++t)
        r.mod.action.push_back(q.proj * m.act(ctx.t_lift[t]) * q.incl);
    return r;
}

template <class K>
Matrix<K> functor_si_star_mor(const SiStarResult<K>& src, const SiStarResult<K>& dst,
                              const Matrix<K>& f) {
    return dst.proj * f * src.lift;
}

// se: Mod-A' -> Mod-A, M' (x)_{A'} (1-eps_1)A.
template <class K>
TensorResult<K> functor_se(const PeelContext<K>& ctx, const RightModule<K>& mp) {
    if (!ctx.corner) throw std::invalid_argument("functor_se: no corner at n = 1");
    const auto& a = ctx.a->total;
    std::size_t wd = ctx.w_idx.size();
    std::vector<Matrix<K>> leftact, rightact;
    auto restrict_ = [&](const Matrix<K>& big) {
        Matrix<K> r(wd, wd);
        for (std::size_t i = 0; i < wd; ++i)
            for (std::size_t j = 0; j < wd; ++j) r(i, j) = big(ctx.w_idx[i], ctx.w_idx[j]);
        return r;
    };
    for (std::size_t k = 0; k < ctx.corner->total.dim(); ++k)
        leftact.push_back(restrict_(a.lmul[ctx.c2a[k]]));
    for (std::size_t t = 0; t < a.dim(); ++t) rightact.push_back(restrict_(a.rmul(t)));
    return tensor_module(mp, wd, leftact, mp.action, rightact, a);
}

template <class K>
Matrix<K> functor_se_mor(const TensorResult<K>& src, const TensorResult<K>& dst,
                         const Matrix<K>& f) {
    auto iw = Matrix<K>::identity(src.wdim, free_one<K>());
    return dst.proj * Matrix<K>::kron(f, iw) * src.incl;
}

// se^!: Mod-A -> Mod-A', the (1-eps_1)-corner of a module.
template <class K>
struct SeShriekResult {
    RightModule<K> mod;  // over the corner
    Matrix<K> incl;      // basis of N(1-eps1) inside N
};

template <class K>
SeShriekResult<K> functor_se_shriek(const PeelContext<K>& ctx, const RightModule<K>& n) {
    if (!ctx.corner) throw std::invalid_argument("functor_se_shriek: no corner at n = 1");
    SeShriekResult<K> r;
    r.incl = column_space_basis(n.act(ctx.ebar));
    r.mod.alg = &ctx.corner->total;
    r.mod.dim = r.incl.cols();
    for (std::size_t k = 0; k < ctx.corner->total.dim(); ++k) {
        auto sol = solve_matrix(r.incl, n.action[ctx.c2a[k]] * r.incl);
        if (!sol) throw std::runtime_error("functor_se_shriek: corner action escapes");
        r.mod.action.push_back(*sol);
    }
    return r;
}

template <class K>
Matrix<K> functor_se_shriek_mor(const SeShriekResult<K>& src, const SeShriekResult<K>& dst,
                                const Matrix<K>& f) {
    auto sol = solve_matrix(dst.incl, f * src.incl);
    if (!sol) throw std::runtime_error("functor_se_shriek_mor: image escapes the corner part");
    return *sol;
}

// rho^*: Mod-R -> Mod-A, M (x)_R eps_1 A; rho_*: Mod-A -> Mod-R, N eps_1.
template <class K>
struct RhoContext {
    const AuslanderAlgebra<K>* a = nullptr;
    std::vector<std::size_t> w_idx;         // A basis indices spanning eps_1 A
    std::vector<std::vector<K>> r_embed;    // R basis -> diagonal block (1,1) element
    std::vector<K> eps1_w;                  // coords of eps_1 in the w basis
};

template <class K>
RhoContext<K> make_rho_context(const AuslanderAlgebra<K>& a) {
    if (a.first_row_nonzero_annihilator)
        throw std::invalid_argument("make_rho_context: first column is not faithful over R");
    RhoContext<K> ctx;
    ctx.a = &a;
    for (std::size_t j = 1; j <= a.n; ++j)
        for (std::size_t u = 0; u < a.bdim(1, j); ++u) ctx.w_idx.push_back(a.boff(1, j) + u);
    for (std::size_t t = 0; t < a.base.dim(); ++t)
        ctx.r_embed.push_back(block_embed(a, 1, 1, a.base.basis_elt(t)));
    ctx.eps1_w.assign(ctx.w_idx.size(), K());
    for (std::size_t i = 0; i < ctx.w_idx.size(); ++i) ctx.eps1_w[i] = a.eps[0][ctx.w_idx[i]];
    return ctx;
}

template <class K>
TensorResult<K> rho_pullback(const RhoContext<K>& ctx, const RightModule<K>& m) {
    const auto& a = ctx.a->total;
    std::size_t wd = ctx.w_idx.size();
    auto restrict_ = [&](const Matrix<K>& big) {
        Matrix<K> r(wd, wd);
        for (std::size_t i = 0; i < wd; ++i)
            for (std::size_t j = 0; j < wd; ++j) r(i, j) = big(ctx.w_idx[i], ctx.w_idx[j]);
        return r;
    };
    std::vector<Matrix<K>> leftact, rightact;
    for (std::size_t t = 0; t < ctx.a->base.dim(); ++t) {
        Matrix<K> big(a.dim(), a.dim());
        for (std::size_t p = 0; p < a.dim(); ++p)
            if (!ctx.r_embed[t][p].is_zero()) big += a.lmul[p].scaled(ctx.r_embed[t][p]);
        leftact.push_back(restrict_(big));
    }
    for (std::size_t t = 0; t < a.dim(); ++t) rightact.push_back(restrict_(a.rmul(t)));
    return tensor_module(m, wd, leftact, m.action, rightact, a);
}

template <class K>
Matrix<K> rho_pullback_mor(const TensorResult<K>& src, const TensorResult<K>& dst,
                           const Matrix<K>& f) {
    return functor_se_mor(src, dst, f);
}

template <class K>
struct RhoPushResult {
    RightModule<K> mod;  // over R
    Matrix<K> incl;      // basis of N eps_1 inside N
};

template <class K>
RhoPushResult<K> rho_pushforward(const RhoContext<K>& ctx, const RightModule<K>& n) {
    RhoPushResult<K> r;
    r.incl = column_space_basis(n.act(ctx.a->eps[0]));
    r.mod.alg = &ctx.a->base;
    r.mod.dim = r.incl.cols();
    for (std::size_t t = 0; t < ctx.a->base.dim(); ++t) {
        auto sol = solve_matrix(r.incl, n.act(ctx.r_embed[t]) * r.incl);
        if (!sol) throw std::runtime_error("rho_pushforward: action escapes the corner");
        r.mod.action.push_back(*sol);
    }
    return r;
}

template <class K>
Matrix<K> rho_pushforward_mor(const RhoPushResult<K>& src, const RhoPushResult<K>& dst,
                              const Matrix<K>& f) {
    auto sol = solve_matrix(dst.incl, f * src.incl);
    if (!sol) throw std::runtime_error("rho_pushforward_mor: image escapes");
    return *sol;
}

// The unit M -> rho_* rho^* M; an isomorphism by the projection formula.
template <class K>
std::optional<Matrix<K>> rho_unit(const RhoContext<K>& ctx, const RightModule<K>& m,
                                  const TensorResult<K>& pulled, const RhoPushResult<K>& pushed) {
    std::size_t wd = ctx.w_idx.size();
    Matrix<K> to_full(m.dim * wd, m.dim);
    for (std::size_t mi = 0; mi < m.dim; ++mi)
        for (std::size_t wi = 0; wi < wd; ++wi)
            if (!ctx.eps1_w[wi].is_zero()) to_full(mi * wd + wi, mi) = ctx.eps1_w[wi];
    auto into_pulled = pulled.proj * to_full;
    auto sol = solve_matrix(pushed.incl, into_pulled);
    if (!sol) return std::nullopt;
    if (!inverse(*sol)) return std::nullopt;
    for (std::size_t t = 0; t < ctx.a->base.dim(); ++t)
        if (*sol * m.action[t] != pushed.mod.action[t] * *sol) return std::nullopt;
    return *sol;
}

// --- derived si* ------------------------------------------------------------
//
// Resolve over A, apply si* termwise; projectives are acyclic for si*, so the
// result computes the left-derived functor.

template <class K>
ModuleComplex<K> derived_si_star(const PeelContext<K>& ctx, const BasicAlgebraData<K>& bd,
                                 const RightModule<K>& m, std::size_t cap) {
    auto res = minimal_projective_resolution(bd, m, cap, false);
    if (res.status != ResolutionStatus::Finite)
        throw std::runtime_error("derived_si_star: resolution cap exceeded");
    ModuleComplex<K> c;
    std::vector<SiStarResult<K>> stars;
    for (std::size_t s = 0; s < res.proj_mods.size(); ++s)
        stars.push_back(functor_si_star(ctx, res.proj_mods[s]));
    for (std::size_t s = 0; s < stars.size(); ++s) {
        c.terms[-static_cast<int>(s)] = stars[s].mod;
        if (s > 0)
            c.diffs[-static_cast<int>(s)] =
                functor_si_star_mor(stars[s], stars[s - 1], res.maps[s]);
    }
    return c;
}

// Same shape for the derived composite si* after se: resolve over the corner,
// push the projective complex through se, then si* termwise.
template <class K>
ModuleComplex<K> derived_si_star_after_se(const PeelContext<K>& ctx,
                                          const BasicAlgebraData<K>& corner_bd,
                                          const RightModule<K>& mp, std::size_t cap) {
    auto res = minimal_projective_resolution(corner_bd, mp, cap, false);
    if (res.status != ResolutionStatus::Finite)
        throw std::runtime_error("derived_si_star_after_se: resolution cap exceeded");
    std::vector<TensorResult<K>> se_terms;
    for (auto& p : res.proj_mods) se_terms.push_back(functor_se(ctx, p));
    std::vector<SiStarResult<K>> stars;
    for (auto& t : se_terms) stars.push_back(functor_si_star(ctx, t.mod));
    ModuleComplex<K> c;
    for (std::size_t s = 0; s < stars.size(); ++s) {
        c.terms[-static_cast<int>(s)] = stars[s].mod;
        if (s > 0)
            c.diffs[-static_cast<int>(s)] = functor_si_star_mor(
                stars[s], stars[s - 1], functor_se_mor(se_terms[s], se_terms[s - 1], res.maps[s]));
    }
    return c;
}

// --- decomposition triangle  0 -> M.I -> M -> M/M.I -> 0 --------------------

// M (x)_A I for the peel ideal I, as a right A-module.
template <class K>
TensorResult<K> tensor_with_ideal(const PeelContext<K>& ctx, const RightModule<K>& m) {
    const auto& a = ctx.a->total;
    const Matrix<K>& ib = ctx.peel.ideal;  // basis of I inside A
    std::vector<Matrix<K>> leftact, rightact;
    for (std::size_t b = 0; b < a.dim(); ++b) {
        auto ls = solve_matrix(ib, a.lmul[b] * ib);
        auto rs = solve_matrix(ib, a.rmul(b) * ib);
        if (!ls || !rs) throw std::runtime_error("tensor_with_ideal: ideal is not two-sided");
        leftact.push_back(*ls);
        rightact.push_back(*rs);
    }
    return tensor_module(m, ib.cols(), leftact, m.action, rightact, a);
}

template <class K>
struct DecompositionTriangle {
    SubmoduleData<K> sub;        // M.I with inclusion
    QuotientModuleData<K> quo;   // M / M.I
    bool sub_matches_se = false; // counit se(se^!(M)) -> M is onto M.I, and
                                 // se(se^!(M)) = M (x)_A I as the proof asserts
    bool quo_matches_si = false; // M/M.I equals si(si*(M)) on the nose
    bool ok() const { return sub_matches_se && quo_matches_si; }
};

template <class K>
DecompositionTriangle<K> decomposition_triangle(const PeelContext<K>& ctx,
                                                const RightModule<K>& m) {
    DecompositionTriangle<K> d;
    auto span = ideal_submodule_span(m, ctx.peel.ideal);
    d.sub = submodule(m, span);
    d.quo = quotient_module(m, span);
    if (ctx.corner) {
        auto sh = functor_se_shriek(ctx, m);
        auto se = functor_se(ctx, sh.mod);
        // counit se(se^!(M)) -> M: v (x) w -> v . w
        std::size_t wd = ctx.w_idx.size();
        Matrix<K> from_full(m.dim, sh.mod.dim * wd);
        for (std::size_t vi = 0; vi < sh.mod.dim; ++vi)
            for (std::size_t wi = 0; wi < wd; ++wi) {
                auto img = m.action[ctx.w_idx[wi]].apply(sh.incl.column(vi));
                for (std::size_t r = 0; r < m.dim; ++r) from_full(r, vi * wd + wi) = img[r];
            }
        auto counit = from_full * se.incl;
        // the counit is a module map with image exactly M.I ...
        d.sub_matches_se = is_module_map(se.mod, m, counit) &&
                           rank(counit) == d.sub.mod.dim && span_contains(d.sub.incl, counit);
        // ... and its source agrees with M (x)_A I
        if (d.sub_matches_se) {
            auto ti = tensor_with_ideal(ctx, m);
            d.sub_matches_se =
                ti.mod.dim == se.mod.dim &&
                (se.mod.dim == 0 || find_module_iso(ti.mod, se.mod).has_value());
        }
    } else {
        d.sub_matches_se = d.sub.mod.dim == 0;
    }
    {
        auto star = functor_si_star(ctx, m);
        auto back = functor_si(ctx, star.mod);
        d.quo_matches_si = back.dim == d.quo.mod.dim;
        if (d.quo_matches_si)
            for (std::size_t b = 0; b < ctx.a->total.dim(); ++b)
                if (!(back.action[b] == d.quo.mod.action[b])) { d.quo_matches_si = false; break; }
    }
    return d;
}

// --- quiver sheaves ---------------------------------------------------------
//
// Components M_i = M eps_{n+1-i} with the R-action through the diagonal
// blocks, ladder maps alpha (multiplication by the class of 1 one block down)
// and beta (multiplication by radical classes one block up).

template <class K>
struct QuiverSheaf {
    std::size_t n = 0;
    std::vector<std::size_t> dims;                  // component dimensions
    std::vector<std::vector<Matrix<K>>> raction;    // per component, per R basis elt
    std::vector<Matrix<K>> alpha;                   // alpha[i]: M_{i+1} -> M_{i+2} (0-based i)
    std::vector<std::vector<Matrix<K>>> beta;       // beta[i][g]: M_{i+2} -> M_{i+1} per rad column
};

template <class K>
bool validate_quiver_sheaf(const AuslanderAlgebra<K>& a, const QuiverSheaf<K>& q) {
    const auto& r = a.base;
    std::size_t n = q.n;
    // component actions are R-module structures
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t d = q.dims[i];
        Matrix<K> unit(d, d);
        for (std::size_t t = 0; t < r.dim(); ++t)
            if (!r.unit[t].is_zero()) unit += q.raction[i][t].scaled(r.unit[t]);
        if (unit != Matrix<K>::identity(d, free_one<K>())) return false;
        for (std::size_t s = 0; s < r.dim(); ++s)
            for (std::size_t t = 0; t < r.dim(); ++t) {
                auto prod = r.mul(r.basis_elt(s), r.basis_elt(t));
                Matrix<K> lhs(d, d);
                for (std::size_t u = 0; u < r.dim(); ++u)
                    if (!prod[u].is_zero()) lhs += q.raction[i][u].scaled(prod[u]);
                if (lhs != q.raction[i][t] * q.raction[i][s]) return false;
            }
    }
    // ladder condition (1): alpha and beta are R-linear, and the two
    // roundtrips equal multiplication by the radical element
    auto ract = [&](std::size_t i, const std::vector<K>& x) {
        Matrix<K> m(q.dims[i], q.dims[i]);
        for (std::size_t t = 0; t < r.dim(); ++t)
            if (!x[t].is_zero()) m += q.raction[i][t].scaled(x[t]);
        return m;
    };
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t t = 0; t < r.dim(); ++t)
            if (q.alpha[i] * q.raction[i][t] != q.raction[i + 1][t] * q.alpha[i]) return false;
        for (std::size_t g = 0; g < a.rad.basis.cols(); ++g) {
            for (std::size_t t = 0; t < r.dim(); ++t)
                if (q.beta[i][g] * q.raction[i + 1][t] != q.raction[i][t] * q.beta[i][g])
                    return false;
            auto gx = a.rad.basis.column(g);
            if (q.beta[i][g] * q.alpha[i] != ract(i, gx)) return false;
            if (q.alpha[i] * q.beta[i][g] != ract(i + 1, gx)) return false;
        }
    }
    // condition (2): iterated beta factors through multiplication r (x) r -> r^2
    for (std::size_t i = 0; i + 2 < n; ++i) {
        std::size_t gd = a.rad.basis.cols();
        std::vector<std::vector<K>> prod_cols;
        for (std::size_t g = 0; g < gd; ++g)
            for (std::size_t h = 0; h < gd; ++h)
                prod_cols.push_back(r.mul(a.rad.basis.column(g), a.rad.basis.column(h)));
        auto ker = kernel_basis(Matrix<K>::from_columns(prod_cols, r.dim()));
        for (std::size_t c = 0; c < ker.cols(); ++c) {
            Matrix<K> sum(q.dims[i], q.dims[i + 2]);
            for (std::size_t g = 0; g < gd; ++g)
                for (std::size_t h = 0; h < gd; ++h) {
                    auto coef = ker(g * gd + h, c);
                    if (!coef.is_zero()) sum += (q.beta[i][g] * q.beta[i + 1][h]).scaled(coef);
                }
            if (!sum.is_zero()) return false;
        }
    }
    return true;
}

template <class K>
struct QuiverSheafTranslation {
    QuiverSheaf<K> sheaf;
    std::vector<Matrix<K>> incl;  // basis of M eps_{n+1-i} inside M
};

template <class K>
QuiverSheafTranslation<K> to_quiver_sheaf(const AuslanderAlgebra<K>& a, const RightModule<K>& m) {
    for (std::size_t j = 1; j <= a.n; ++j)
        if (j + 1 <= a.n + 1 && !ideal_contains(a.grid.at(j, j + 1), a.rad))
            throw std::invalid_argument("to_quiver_sheaf: radical escapes the superdiagonal");
    QuiverSheafTranslation<K> tr;
    auto& q = tr.sheaf;
    q.n = a.n;
    const auto& r = a.base;
    for (std::size_t i = 1; i <= a.n; ++i) {
        std::size_t j = a.n + 1 - i;
        tr.incl.push_back(column_space_basis(m.act(a.eps[j - 1])));
        q.dims.push_back(tr.incl.back().cols());
    }
    auto express = [&](std::size_t comp, const Matrix<K>& raw) {
        auto sol = solve_matrix(tr.incl[comp], raw);
        if (!sol) throw std::runtime_error("to_quiver_sheaf: image escapes a component");
        return *sol;
    };
    for (std::size_t i = 1; i <= a.n; ++i) {
        std::size_t j = a.n + 1 - i;
        std::vector<Matrix<K>> ra;
        for (std::size_t t = 0; t < r.dim(); ++t)
            ra.push_back(express(i - 1, m.act(block_embed(a, j, j, r.basis_elt(t))) * tr.incl[i - 1]));
        q.raction.push_back(std::move(ra));
    }
    for (std::size_t i = 1; i + 1 <= a.n; ++i) {
        std::size_t j = a.n + 1 - i;  // component i sits at idempotent j; alpha lands at j-1
        q.alpha.push_back(express(i, m.act(block_embed(a, j, j - 1, r.unit)) * tr.incl[i - 1]));
        std::vector<Matrix<K>> bs;
        for (std::size_t g = 0; g < a.rad.basis.cols(); ++g)
            bs.push_back(express(i - 1, m.act(block_embed(a, j - 1, j, a.rad.basis.column(g))) *
                                            tr.incl[i]));
        q.beta.push_back(std::move(bs));
    }
    return tr;
}

template <class K>
RightModule<K> from_quiver_sheaf(const AuslanderAlgebra<K>& a, const QuiverSheaf<K>& q) {
    const auto& r = a.base;
    std::size_t n = a.n;
    std::vector<std::size_t> off(n);
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) { off[i] = total; total += q.dims[i]; }
    RightModule<K> m{&a.total, total, {}};
    auto ract = [&](std::size_t i, const std::vector<K>& x) {
        Matrix<K> mm(q.dims[i], q.dims[i]);
        for (std::size_t t = 0; t < r.dim(); ++t)
            if (!x[t].is_zero()) mm += q.raction[i][t].scaled(x[t]);
        return mm;
    };
    // precompute products of radical basis columns for superdiagonal solves
    for (std::size_t b = 0; b < a.total.dim(); ++b) m.action.push_back(Matrix<K>(total, total));
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t l = 1; l <= n; ++l)
            for (std::size_t u = 0; u < a.bdim(j, l); ++u) {
                std::size_t bidx = a.boff(j, l) + u;
                auto y = a.reps[j - 1][l - 1].column(u);  // R-representative
                std::size_t i = n + 1 - j, ip = n + 1 - l;  // components (1-based)
                Matrix<K> f;
                if (j >= l) {
                    f = ract(i - 1, y);
                    for (std::size_t s = 0; s < j - l; ++s) f = q.alpha[i - 1 + s] * f;
                } else {
                    std::size_t k = l - j;
                    std::size_t gd = a.rad.basis.cols();
                    // decompose y over k-fold products of radical columns
                    std::vector<std::vector<std::size_t>> tuples;
                    std::vector<std::vector<K>> prods;
                    std::vector<std::size_t> cur(k, 0);
                    for (;;) {
                        std::vector<K> p = r.unit;
                        for (auto g : cur) p = r.mul(p, a.rad.basis.column(g));
                        tuples.push_back(cur);
                        prods.push_back(std::move(p));
                        std::size_t pos = 0;
                        while (pos < k && ++cur[pos] == gd) cur[pos++] = 0;
                        if (pos == k) break;
                    }
                    auto sol = solve_linear(Matrix<K>::from_columns(prods, r.dim()), y);
                    if (!sol.ok())
                        throw std::runtime_error("from_quiver_sheaf: representative not in rad^k");
                    f = Matrix<K>(q.dims[ip - 1], q.dims[i - 1]);
                    for (std::size_t tidx = 0; tidx < tuples.size(); ++tidx) {
                        auto coef = (*sol.solution)[tidx];
                        if (coef.is_zero()) continue;
                        Matrix<K> g = Matrix<K>::identity(q.dims[i - 1], free_one<K>());
                        std::size_t comp = i;  // walks i -> i-1 -> ... -> ip
                        for (auto gi : tuples[tidx]) {
                            g = q.beta[comp - 2][gi] * g;
                            --comp;
                        }
                        f += g.scaled(coef);
                    }
                }
                for (std::size_t rr = 0; rr < f.rows(); ++rr)
                    for (std::size_t cc = 0; cc < f.cols(); ++cc)
                        m.action[bidx](off[ip - 1] + rr, off[i - 1] + cc) = f(rr, cc);
            }
    if (!validate_module(m))
        throw std::invalid_argument("from_quiver_sheaf: ladder data does not define a module");
    return m;
}

// --- SOD certificate --------------------------------------------------------

template <class K>
struct SODReport {
    std::size_t layers = 0;
    std::vector<std::size_t> layer_ring_dims;  // dim R/a_{i,i+1} per layer
    std::vector<std::size_t> layer_dims;       // dim of the layer generator over A
    bool semiorthogonal = true;                // Ext^*(L_t, L_s) = 0 for t > s
    bool cartan_unimodular = false;
    bool layer_end_rings_match = true;         // End(L_s) = layer ring, naturally
    bool ok() const { return semiorthogonal && cartan_unimodular && layer_end_rings_match; }
};

template <class K>
SODReport<K> sod_certificate_modules(const AuslanderAlgebra<K>& a, std::size_t cap) {
    SODReport<K> rep;
    rep.layers = a.n;
    std::deque<AuslanderAlgebra<K>> algs;
    algs.push_back(a);
    for (std::size_t s = 1; s < a.n; ++s) algs.push_back(corner_algebra_shifted(algs.back()));
    std::deque<PeelContext<K>> ctxs;
    for (std::size_t s = 0; s < a.n; ++s)
        ctxs.push_back(make_peel_context(algs[s], s + 1 < a.n ? &algs[s + 1] : nullptr));
    auto bd = basic_data(a);
    // layer generators with their natural endomorphism actions
    std::vector<RightModule<K>> gens;
    std::vector<std::vector<Matrix<K>>> nats;
    for (std::size_t s = 0; s < a.n; ++s) {
        const auto& t = ctxs[s].target.alg;
        rep.layer_ring_dims.push_back(t.dim());
        auto g = functor_si(ctxs[s], regular_module(t));
        std::vector<Matrix<K>> nat;
        for (std::size_t u = 0; u < t.dim(); ++u) nat.push_back(t.lmul_by(t.basis_elt(u)));
        for (std::size_t stage = s; stage-- > 0;) {
            auto lifted = functor_se(ctxs[stage], g);
            std::vector<Matrix<K>> next;
            for (auto& f : nat) next.push_back(functor_se_mor(lifted, lifted, f));
            g = lifted.mod;
            nat = std::move(next);
        }
        rep.layer_dims.push_back(g.dim);
        gens.push_back(std::move(g));
        nats.push_back(std::move(nat));
    }
    for (std::size_t t = 0; t < a.n; ++t)
        for (std::size_t s = 0; s < t; ++s) {
            auto ext = ext_table(bd, gens[t], gens[s], 2 * a.n, cap);
            for (auto d : ext)
                if (d != 0) rep.semiorthogonal = false;
        }
    rep.cartan_unimodular = std::abs(int_det(cartan_matrix(bd))) == 1;
    for (std::size_t s = 0; s < a.n; ++s) {
        const auto& t = ctxs[s].target.alg;
        auto hs = hom_space(gens[s], gens[s]);
        if (hs.size() != t.dim()) { rep.layer_end_rings_match = false; continue; }
        std::vector<std::vector<K>> flat;
        for (auto& f : nats[s]) flat.push_back(vec_of(f));
        if (gens[s].dim > 0 &&
            rank(Matrix<K>::from_columns(flat, gens[s].dim * gens[s].dim)) != t.dim())
            rep.layer_end_rings_match = false;
        for (auto& f : nats[s])
            if (!is_module_map(gens[s], gens[s], f)) rep.layer_end_rings_match = false;
        for (std::size_t u = 0; u < t.dim(); ++u)
            for (std::size_t v = 0; v < t.dim(); ++v) {
                auto prod = t.mul(t.basis_elt(u), t.basis_elt(v));
                Matrix<K> expect(gens[s].dim, gens[s].dim);
                for (std::size_t w = 0; w < t.dim(); ++w)
                    if (!prod[w].is_zero()) expect += nats[s][w].scaled(prod[w]);
                if (nats[s][u] * nats[s][v] != expect) rep.layer_end_rings_match = false;
            }
    }
    return rep;
}

// --- lifting along rho ------------------------------------------------------

// Extend a finite resolution with zero terms so indices up to `need - 1` exist.
template <class K>
void pad_resolution(Resolution<K>& res, const BasicAlgebraData<K>& rd, std::size_t m_dim,
                    std::size_t need) {
    while (res.proj_mods.size() < need) {
        std::size_t prev = res.proj_mods.empty() ? m_dim : res.proj_mods.back().dim;
        res.proj_mods.push_back(zero_module(rd.alg));
        res.maps.push_back(Matrix<K>(prev, 0));
        res.terms.emplace_back();
    }
}

template <class K>
struct LiftResult {
    ModuleComplex<K> lift;                 // complex over A in degrees {k..0}
    int k = 0;
    std::vector<TensorResult<K>> pulled;   // pulled projectives, innermost first
    bool pushforward_matches = false;      // H^*(rho_* lift) = M concentrated in degree 0
};

template <class K>
LiftResult<K> lift_object(const RhoContext<K>& ctx, const BasicAlgebraData<K>& rd,
                          const RightModule<K>& m) {
    LiftResult<K> out;
    auto res = minimal_projective_resolution(rd, m, 2, false);
    bool projective = res.status == ResolutionStatus::Finite && res.length == 0;
    out.k = projective ? 0 : -1;
    std::size_t need = projective ? 1 : 3;
    pad_resolution(res, rd, m.dim, need);
    for (std::size_t s = 0; s < need; ++s) out.pulled.push_back(rho_pullback(ctx, res.proj_mods[s]));
    out.lift.terms[0] = out.pulled[0].mod;
    if (!projective) {
        auto d1 = rho_pullback_mor(out.pulled[1], out.pulled[0], res.maps[1]);
        auto d2 = rho_pullback_mor(out.pulled[2], out.pulled[1], res.maps[2]);
        // tau^{>= -1}: replace degree -1 by the cokernel of d2
        ModuleComplex<K> two;
        two.terms[-1] = out.pulled[1].mod;
        two.terms[0] = out.pulled[0].mod;
        two.diffs[-1] = d1;
        auto q = quotient_module(out.pulled[1].mod, reduced_span(d2));
        out.lift.terms[-1] = q.mod;
        out.lift.diffs[-1] = d1 * q.lift;
    }
    // push forward and compare with M
    auto pushed0 = rho_pushforward(ctx, out.lift.terms.at(0));
    auto unit0 = rho_unit(ctx, res.proj_mods[0], out.pulled[0], pushed0);
    out.pushforward_matches = unit0.has_value();
    if (out.pushforward_matches) {
        // augmentation rho_*(lift)^0 -> M through the unit inverse
        auto aug = res.maps[0] * *inverse(*unit0);
        if (out.k == -1) {
            auto pushed1 = rho_pushforward(ctx, out.lift.terms.at(-1));
            auto dpush = rho_pushforward_mor(pushed1, pushed0, out.lift.diffs.at(-1));
            // exact at -1 and H^0 = M via aug
            if (rank(dpush) != pushed1.mod.dim) out.pushforward_matches = false;
            if (!(aug * dpush).is_zero()) out.pushforward_matches = false;
            if (rank(aug) != m.dim) out.pushforward_matches = false;
            std::size_t h0 = pushed0.mod.dim - rank(dpush);
            if (h0 != m.dim) out.pushforward_matches = false;
        } else {
            if (rank(aug) != m.dim || pushed0.mod.dim != m.dim) out.pushforward_matches = false;
        }
    }
    return out;
}

template <class K>
struct LiftMorphismResult {
    Matrix<K> f0;          // degree-0 component of the lifted morphism
    Matrix<K> fm1;         // degree -1 component (may be empty)
    bool commutes = false; // lift squares commute and push forward to f
};

template <class K>
LiftMorphismResult<K> lift_morphism(const RhoContext<K>& ctx, const BasicAlgebraData<K>& rd,
                                    const RightModule<K>& m, const RightModule<K>& n,
                                    const Matrix<K>& f, const LiftResult<K>& lm,
                                    const LiftResult<K>& ln) {
    LiftMorphismResult<K> out;
    auto resm = minimal_projective_resolution(rd, m, 2, false);
    auto resn = minimal_projective_resolution(rd, n, 2, false);
    std::size_t need = (lm.k == 0 && ln.k == 0) ? 1 : 3;
    std::size_t needm = need, needn = need;
    pad_resolution(resm, rd, m.dim, needm);
    pad_resolution(resn, rd, n.dim, needn);
    // comparison map in degree 0: any linear solution through the cover of N
    auto f0 = solve_matrix(resn.maps[0], f * resm.maps[0]);
    if (!f0) return out;
    // fix up to a module map: a projective cover is generated by idempotent
    // columns, so rebuild the map from its generator images
    auto module_lift = [&](const Resolution<K>& rs, const Resolution<K>& rt, std::size_t lvl,
                           const Matrix<K>& target_of_gens) {
        // rs.proj_mods[lvl] is a direct sum of eps-columns of R (free since R local)
        const auto& src = rs.proj_mods[lvl];
        Matrix<K> g(rt.proj_mods[lvl].dim, src.dim);
        std::size_t off = 0;
        for (std::size_t sidx = 0; sidx < rs.terms[lvl].size(); ++sidx) {
            auto id = rs.terms[lvl][sidx];
            const auto& incl = rd.proj_incl[id];
            std::vector<K> gen(src.dim);
            for (std::size_t t = 0; t < rd.proj_gen[id].size(); ++t)
                gen[off + t] = rd.proj_gen[id][t];
            auto y = target_of_gens.apply(gen);
            for (std::size_t c = 0; c < incl.cols(); ++c) {
                auto v = rt.proj_mods[lvl].act(incl.column(c)).apply(y);
                for (std::size_t rr = 0; rr < v.size(); ++rr) g(rr, off + c) = v[rr];
            }
            off += incl.cols();
        }
        return g;
    };
    out.f0 = module_lift(resm, resn, 0, *f0);
    if (!is_module_map(resm.proj_mods[0], resn.proj_mods[0], out.f0)) return out;
    out.commutes = true;
    Matrix<K> pf0 = rho_pullback_mor(lm.pulled[0], ln.pulled[0], out.f0);
    if (lm.k == -1 || ln.k == -1) {
        std::size_t dm1 = lm.k == -1 ? resm.proj_mods[1].dim : 0;
        Matrix<K> srcmap = lm.k == -1 ? resm.maps[1] : Matrix<K>(resm.proj_mods[0].dim, 0);
        auto f1raw = solve_matrix(resn.maps[1], out.f0 * srcmap);
        if (!f1raw) { out.commutes = false; return out; }
        Matrix<K> f1 = ln.k == -1 ? module_lift(resm, resn, 1, *f1raw) : Matrix<K>(0, dm1);
        if (ln.k == -1 && lm.k == -1 &&
            !is_module_map(resm.proj_mods[1], resn.proj_mods[1], f1)) {
            out.commutes = false;
            return out;
        }
        if (lm.k == -1 && ln.k == -1) {
            // descend to the cokernel presentations of degree -1
            auto qm = quotient_module(lm.pulled[1].mod, reduced_span(rho_pullback_mor(
                          lm.pulled[2], lm.pulled[1], resm.maps[2])));
            auto qn = quotient_module(ln.pulled[1].mod, reduced_span(rho_pullback_mor(
                          ln.pulled[2], ln.pulled[1], resn.maps[2])));
            auto pf1 = rho_pullback_mor(lm.pulled[1], ln.pulled[1], f1);
            out.fm1 = qn.proj * pf1 * qm.lift;
            if (!(qn.proj * pf1 * reduced_span(rho_pullback_mor(lm.pulled[2], lm.pulled[1],
                                                                resm.maps[2])))
                     .is_zero())
                out.commutes = false;
            if (ln.lift.diffs.count(-1) && lm.lift.diffs.count(-1) &&
                ln.lift.diffs.at(-1) * out.fm1 != pf0 * lm.lift.diffs.at(-1))
                out.commutes = false;
        }
    }
    // pushforward of the degree-0 square recovers f on H^0
    auto pm = rho_pushforward(ctx, lm.lift.terms.at(0));
    auto pn = rho_pushforward(ctx, ln.lift.terms.at(0));
    auto um = rho_unit(ctx, resm.proj_mods[0], lm.pulled[0], pm);
    auto un = rho_unit(ctx, resn.proj_mods[0], ln.pulled[0], pn);
    if (!um || !un) { out.commutes = false; return out; }
    auto pushed_f = rho_pushforward_mor(pm, pn, pf0);
    auto augm = resm.maps[0] * *inverse(*um);
    auto augn = resn.maps[0] * *inverse(*un);
    if (augn * pushed_f != f * augm) out.commutes = false;
    return out;
}

// --- t-exactness ------------------------------------------------------------

template <class K>
ModuleComplex<K> rho_push_complex(const RhoContext<K>& ctx, const ModuleComplex<K>& c) {
    ModuleComplex<K> out;
    std::map<int, RhoPushResult<K>> pushed;
    for (auto& [k, t] : c.terms) pushed[k] = rho_pushforward(ctx, t);
    for (auto& [k, p] : pushed) {
        out.terms[k] = p.mod;
        auto it = pushed.find(k + 1);
        if (it != pushed.end()) out.diffs[k] = rho_pushforward_mor(p, it->second, c.diff(k));
    }
    return out;
}

// rho_* tau^{<=k} = tau^{<=k} rho_*: compare dims and exhibit a degreewise iso
// commuting with the differentials.
template <class K>
bool t_exactness_check(const RhoContext<K>& ctx, const ModuleComplex<K>& c, int k) {
    auto lhs = rho_push_complex(ctx, truncate_below(c, k));
    auto rhs = truncate_below(rho_push_complex(ctx, c), k);
    std::map<int, Matrix<K>> iso;
    for (int d = std::min(lhs.min_deg(), rhs.min_deg()); d <= std::max(lhs.max_deg(), rhs.max_deg());
         ++d) {
        if (lhs.dim(d) != rhs.dim(d)) return false;
        if (lhs.dim(d) == 0) { iso[d] = Matrix<K>(0, 0); continue; }
        if (d < k) {
            iso[d] = Matrix<K>::identity(lhs.dim(d), free_one<K>());
            continue;
        }
        // both degree-k terms embed into rho_*(C^k); match their bases
        auto full = rho_pushforward(ctx, c.terms.at(k));
        auto ker_push = kernel_basis(rho_push_complex(ctx, c).diff(k));
        // lhs term: rho_* of ker(d^k) with its inclusion; recompute it
        auto kers = submodule(c.terms.at(k), kernel_basis(c.diff(k)));
        auto lp = rho_pushforward(ctx, kers.mod);
        // inclusion of lhs into full coordinates: kers.incl restricted to eps1
        auto sol = solve_matrix(full.incl, kers.incl * lp.incl);
        if (!sol) return false;
        auto rhs_incl = ker_push;  // columns already in full coordinates
        auto change = solve_matrix(rhs_incl, *sol);
        if (!change || !inverse(*change)) return false;
        iso[d] = *change;
    }
    for (auto& [d, m] : iso) {
        if (!iso.count(d + 1)) continue;
        if (iso.at(d + 1) * lhs.diff(d) != rhs.diff(d) * m) return false;
    }
    return true;
}

// --- opposite side ----------------------------------------------------------

template <class K>
struct OppositeReport {
    BasicAlgebraData<K> op;          // A^op with radical and idempotents
    std::size_t pdim_structure = 0;  // pdim over A^op of the restricted layer ring
    bool pdim_bound_ok = false;      // <= 1
    bool exceptional_pair = false;   // simples at the two outer vertices
};

template <class K>
RightModule<K> functor_si_op(const PeelContext<K>& ctx, const BasicAlgebraData<K>& op,
                             const RightModule<K>& m0) {
    RightModule<K> m{&op.alg, m0.dim, {}};
    for (std::size_t b = 0; b < op.alg.dim(); ++b) m.action.push_back(m0.act(ctx.hom[b]));
    return m;
}

template <class K>
OppositeReport<K> opposite_report(const PeelContext<K>& ctx, std::size_t cap) {
    OppositeReport<K> rep;
    const auto& a = *ctx.a;
    rep.op = basic_data(opposite_algebra(a.total), radical_span(a), a.eps);
    auto layer = functor_si_op(ctx, rep.op, regular_module(ctx.target.alg));
    auto res = minimal_projective_resolution(rep.op, layer, cap, false);
    rep.pdim_structure = res.status == ResolutionStatus::Finite ? res.length : cap + 1;
    rep.pdim_bound_ok = res.status == ResolutionStatus::Finite && res.length <= 1;
    if (a.n >= 2) {
        // the pair (simple at the first vertex, projective at the last):
        // no backwards extensions, scalar endomorphisms, both exceptional
        auto s1 = simple_module(rep.op, 0);
        const auto& pn = rep.op.proj[a.n - 1];
        bool good = true;
        for (auto d : ext_table(rep.op, pn, s1, 2 * a.n, cap))
            if (d != 0) good = false;
        auto self1 = ext_table(rep.op, s1, s1, 2 * a.n, cap);
        if (self1[0] != 1) good = false;
        for (std::size_t s = 1; s < self1.size(); ++s)
            if (self1[s] != 0) good = false;
        if (ext_table(rep.op, pn, pn, 0, cap)[0] != 1) good = false;
        rep.exceptional_pair = good;
    } else {
        rep.exceptional_pair = true;
    }
    return rep;
}

// --- generalized morphism functors ------------------------------------------

template <class K>
struct PairBimodule {
    const Algebra<K>* left_alg = nullptr;   // B acting on the left
    const Algebra<K>* right_alg = nullptr;  // A acting on the right
    std::size_t dim = 0;
    std::vector<Matrix<K>> left, right;

    RightModule<K> as_right_module() const {
        return RightModule<K>{right_alg, dim, right};
    }
};

template <class K>
bool validate_pair_bimodule(const PairBimodule<K>& p) {
    const auto& b = *p.left_alg;
    const auto& a = *p.right_alg;
    if (p.left.size() != b.dim() || p.right.size() != a.dim()) return false;
    RightModule<K> rm = p.as_right_module();
    if (!validate_module(rm)) return false;
    // left module axioms: L(e_i e_j) = L_i L_j, unital
    auto lact = [&](const std::vector<K>& x) {
        Matrix<K> m(p.dim, p.dim);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!x[i].is_zero()) m += p.left[i].scaled(x[i]);
        return m;
    };
    if (lact(b.unit) != Matrix<K>::identity(p.dim, free_one<K>())) return false;
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            if (lact(b.mul(b.basis_elt(i), b.basis_elt(j))) != p.left[i] * p.left[j]) return false;
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (p.left[i] * p.right[j] != p.right[j] * p.left[i]) return false;
    return true;
}

template <class K>
bool pair_bimodule_right_projective(const PairBimodule<K>& p, const BasicAlgebraData<K>& bd_right) {
    auto rm = p.as_right_module();
    auto res = minimal_projective_resolution(bd_right, rm, 1, false);
    return res.status == ResolutionStatus::Finite && res.length == 0;
}

template <class K>
TensorResult<K> generalized_pullback(const PairBimodule<K>& p, const RightModule<K>& m) {
    return tensor_module(m, p.dim, p.left, m.action, p.right, *p.right_alg);
}

template <class K>
struct GeneralizedPushforward {
    RightModule<K> mod;             // over B
    std::vector<Matrix<K>> basis;   // hom-space basis P -> N over A
};

template <class K>
GeneralizedPushforward<K> generalized_pushforward(const PairBimodule<K>& p,
                                                  const RightModule<K>& n) {
    GeneralizedPushforward<K> out;
    auto rm = p.as_right_module();
    out.basis = hom_space(rm, n);
    out.mod.alg = p.left_alg;
    out.mod.dim = out.basis.size();
    std::vector<std::vector<K>> flat;
    for (auto& f : out.basis) flat.push_back(vec_of(f));
    Matrix<K> hmat = out.mod.dim == 0 ? Matrix<K>(n.dim * p.dim, 0)
                                      : Matrix<K>::from_columns(flat, n.dim * p.dim);
    for (std::size_t b = 0; b < p.left_alg->dim(); ++b) {
        Matrix<K> act(out.mod.dim, out.mod.dim);
        for (std::size_t j = 0; j < out.basis.size(); ++j) {
            auto sol = solve_linear(hmat, vec_of(Matrix<K>(out.basis[j] * p.left[b])));
            if (!sol.ok()) throw std::runtime_error("generalized_pushforward: action escapes");
            for (std::size_t i = 0; i < out.mod.dim; ++i) act(i, j) = (*sol.solution)[i];
        }
        out.mod.action.push_back(std::move(act));
    }
    return out;
}

}  // namespace dgaus

#endif
