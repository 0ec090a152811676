#ifndef DGAUS_REGLUE_HPP
#define DGAUS_REGLUE_HPP

#include "functor.hpp"
#include "glue.hpp"

namespace dgaus {

// --- quotient of a complex by a degreewise subspace -------------------------

// Quotient of a complex by the span of the given relation vectors (columns,
// per degree).  A complement of the span inside the standard basis is chosen
// degreewise; incl embeds the quotient as that complement and proj is the
// corresponding projection.  The differential must preserve the relation
// subspace for the quotient differential to be well defined; that is checked
// numerically and reported.
template <class K>
struct SubspaceQuotient {
    CochainComplex<K> quotient;
    std::map<int, Matrix<K>> proj;  // total^k -> quotient^k
    std::map<int, Matrix<K>> incl;  // quotient^k -> total^k
    bool d_preserves_relations = true;
};

template <class K>
SubspaceQuotient<K> subspace_quotient(const CochainComplex<K>& t,
                                      const std::map<int, Matrix<K>>& rel) {
    SubspaceQuotient<K> r;
    if (t.is_zero()) return r;
    std::map<int, Matrix<K>> span;  // reduced basis of the relation span
    for (int k = t.min_deg(); k <= t.max_deg(); ++k) {
        std::size_t n = t.dim(k);
        if (!n) continue;
        auto it = rel.find(k);
        Matrix<K> rb(n, 0);
        if (it != rel.end() && it->second.cols()) {
            if (it->second.rows() != n)
                throw std::invalid_argument("subspace_quotient: relation row count mismatch");
            rb = column_space_basis(it->second);
        }
        span[k] = rb;
        // free columns of [span | identity] past the span give the complement
        auto e = echelon(Matrix<K>::hstack(rb, Matrix<K>::identity(n, free_one<K>())));
        std::vector<std::size_t> comp;
        for (auto p : e.pivots)
            if (p >= rb.cols()) comp.push_back(p - rb.cols());
        r.quotient.set_dim(k, comp.size());
        Matrix<K> inc(n, comp.size());
        for (std::size_t j = 0; j < comp.size(); ++j) inc(comp[j], j) = free_one<K>();
        r.incl[k] = inc;
        // proj = quotient rows of [span | incl]^{-1}
        auto full = inverse(Matrix<K>::hstack(rb, inc));
        if (!full) throw std::logic_error("subspace_quotient: complement is not a complement");
        r.proj[k] = full->submatrix(rb.cols(), 0, comp.size(), n);
    }
    for (int k = t.min_deg(); k < t.max_deg(); ++k) {
        if (!r.quotient.dim(k) || !t.dim(k + 1)) continue;
        auto d = t.diff(k);
        if (r.quotient.dim(k + 1))
            r.quotient.set_diff(k, r.proj.at(k + 1) * d * r.incl.at(k));
        // the induced map must kill the relation span
        auto its = span.find(k);
        if (its != span.end() && its->second.cols() && r.quotient.dim(k + 1))
            if (!(r.proj.at(k + 1) * d * its->second).is_zero())
                r.d_preserves_relations = false;
    }
    return r;
}

// --- regluing ---------------------------------------------------------------
//
// Base change of the gluing bimodule along chain functors tau1: D1 -> E1 and
// tau2: D2 -> E2: the value of the reglued bimodule at (y2, y1) is the triple
// tensor product
//   (+) over (x2, x1) of E2(tau2 x2, y2) (x) phi(x2, x1) (x) E1(y1, tau1 x1)
// modulo moving D2 morphisms into the left phi action and D1 morphisms into
// the right phi action.  Both relation families are sign-free in this basis;
// the differential is the usual triple-tensor one and is checked to preserve
// the relation span.

namespace detail {

// Basis bookkeeping for one value of the reglued bimodule.
template <class K>
struct TripleSpace {
    // (x2, x1, deg_left, deg_mid, i, j, l); deg_right = total - left - mid
    using Entry = std::tuple<std::size_t, std::size_t, int, int, std::size_t, std::size_t, std::size_t>;
    CochainComplex<K> total;
    std::map<int, std::vector<Entry>> basis;
    std::map<int, std::map<Entry, std::size_t>> index;
    SubspaceQuotient<K> q;

    std::size_t at(int k, const Entry& e) const { return index.at(k).at(e); }
};

}  // namespace detail

template <class K>
struct RegluedBimodule {
    FinDGBimodule<K> phi;  // over (E2-objects, E1-objects)
    std::map<std::pair<std::size_t, std::size_t>, detail::TripleSpace<K>> spaces;
    bool relations_closed = true;  // d preserved every relation span
};

template <class K>
RegluedBimodule<K> reglue_bimodule(const Gluing<K>& g, const FinDGCategory<K>& e1,
                                   const DGFunctor<K>& tau1, const FinDGCategory<K>& e2,
                                   const DGFunctor<K>& tau2, std::size_t dim_cap = 4096) {
    RegluedBimodule<K> r;
    r.phi.field = g.phi.field;
    r.phi.n2 = e2.n_objects();
    r.phi.n1 = e1.n_objects();
    using Entry = typename detail::TripleSpace<K>::Entry;

    for (std::size_t y2 = 0; y2 < r.phi.n2; ++y2)
        for (std::size_t y1 = 0; y1 < r.phi.n1; ++y1) {
            detail::TripleSpace<K> sp;
            // enumerate the triple-tensor basis
            for (std::size_t x2 = 0; x2 < g.phi.n2; ++x2)
                for (std::size_t x1 = 0; x1 < g.phi.n1; ++x1) {
                    const auto& hl = e2.hom(tau2.obj[x2], y2);
                    const auto& hm = g.phi.at(x2, x1);
                    const auto& hr = e1.hom(y1, tau1.obj[x1]);
                    if (hl.is_zero() || hm.is_zero() || hr.is_zero()) continue;
                    for (int a = hl.min_deg(); a <= hl.max_deg(); ++a)
                        for (int b = hm.min_deg(); b <= hm.max_deg(); ++b)
                            for (int c = hr.min_deg(); c <= hr.max_deg(); ++c)
                                for (std::size_t i = 0; i < hl.dim(a); ++i)
                                    for (std::size_t j = 0; j < hm.dim(b); ++j)
                                        for (std::size_t l = 0; l < hr.dim(c); ++l)
                                            sp.basis[a + b + c].emplace_back(x2, x1, a, b, i, j, l);
                }
            std::size_t totaldim = 0;
            for (auto& [k, v] : sp.basis) {
                sp.total.set_dim(k, v.size());
                totaldim += v.size();
                for (std::size_t t = 0; t < v.size(); ++t) sp.index[k][v[t]] = t;
            }
            if (totaldim > dim_cap)
                throw std::runtime_error("reglue_bimodule: dimension cap exceeded");
            if (sp.total.is_zero()) {
                r.spaces[{y2, y1}] = std::move(sp);
                continue;
            }
            // differential d(g (x) mu (x) h) =
            //   dg (x) mu (x) h + (-1)^a g (x) dmu (x) h + (-1)^{a+b} g (x) mu (x) dh
            for (int k = sp.total.min_deg(); k < sp.total.max_deg(); ++k) {
                if (!sp.total.dim(k) || !sp.total.dim(k + 1)) continue;
                Matrix<K> dm(sp.total.dim(k + 1), sp.total.dim(k));
                const auto& bas = sp.basis.at(k);
                for (std::size_t col = 0; col < bas.size(); ++col) {
                    auto [x2, x1, a, b, i, j, l] = bas[col];
                    int c = k - a - b;
                    const auto& hl = e2.hom(tau2.obj[x2], y2);
                    const auto& hm = g.phi.at(x2, x1);
                    const auto& hr = e1.hom(y1, tau1.obj[x1]);
                    auto dl = hl.diff(a);
                    for (std::size_t rr = 0; rr < hl.dim(a + 1); ++rr)
                        if (!dl(rr, i).is_zero())
                            dm(sp.at(k + 1, Entry{x2, x1, a + 1, b, rr, j, l}), col) += dl(rr, i);
                    auto dmid = hm.diff(b);
                    bool sa = (a % 2) != 0;
                    for (std::size_t rr = 0; rr < hm.dim(b + 1); ++rr)
                        if (!dmid(rr, j).is_zero()) {
                            auto v = dmid(rr, j);
                            dm(sp.at(k + 1, Entry{x2, x1, a, b + 1, i, rr, l}), col) += sa ? -v : v;
                        }
                    auto dr = hr.diff(c);
                    bool sab = ((a + b) % 2) != 0;
                    for (std::size_t rr = 0; rr < hr.dim(c + 1); ++rr)
                        if (!dr(rr, l).is_zero()) {
                            auto v = dr(rr, l);
                            dm(sp.at(k + 1, Entry{x2, x1, a, b, i, j, rr}), col) += sab ? -v : v;
                        }
                }
                sp.total.set_diff(k, std::move(dm));
            }
            // relation span: adjacent-action relations, sign-free
            std::map<int, std::vector<std::vector<K>>> relcols;
            auto add_rel = [&](int k, std::vector<K> v) { relcols[k].push_back(std::move(v)); };
            // (g . tau2 f2) (x) mu (x) h  =  g (x) (f2 . mu) (x) h
            for (std::size_t x2 = 0; x2 < g.phi.n2; ++x2)
                for (std::size_t z2 = 0; z2 < g.phi.n2; ++z2) {
                    const auto& hf = g.d2.hom(x2, z2);
                    if (hf.is_zero()) continue;
                    for (int u = hf.min_deg(); u <= hf.max_deg(); ++u)
                        for (std::size_t fi = 0; fi < hf.dim(u); ++fi) {
                            auto f2 = g.d2.basis_mor(x2, z2, u, fi);
                            auto tf2 = tau2.apply(f2, g.d2, e2);
                            for (std::size_t x1 = 0; x1 < g.phi.n1; ++x1) {
                                const auto& hm = g.phi.at(x2, x1);
                                const auto& hl = e2.hom(tau2.obj[z2], y2);
                                const auto& hr = e1.hom(y1, tau1.obj[x1]);
                                if (hm.is_zero() || hl.is_zero() || hr.is_zero()) continue;
                                for (int a = hl.min_deg(); a <= hl.max_deg(); ++a)
                                    for (int b = hm.min_deg(); b <= hm.max_deg(); ++b)
                                        for (int c = hr.min_deg(); c <= hr.max_deg(); ++c)
                                            for (std::size_t gi = 0; gi < hl.dim(a); ++gi)
                                                for (std::size_t mi = 0; mi < hm.dim(b); ++mi)
                                                    for (std::size_t hi = 0; hi < hr.dim(c); ++hi) {
                                                        int k = a + u + b + c;
                                                        if (!sp.total.dim(k)) continue;
                                                        std::vector<K> v(sp.total.dim(k));
                                                        auto gt = e2.compose(  // g o tau2(f2)
                                                            e2.basis_mor(tau2.obj[z2], y2, a, gi), tf2);
                                                        for (std::size_t rr = 0; rr < gt.coords.size(); ++rr)
                                                            if (!gt.coords[rr].is_zero())
                                                                v[sp.at(k, Entry{x2, x1, a + u, b, rr, mi, hi})] +=
                                                                    gt.coords[rr];
                                                        auto fm = g.phi.act_left(
                                                            z2, f2, g.phi.basis_elt(x2, x1, b, mi));
                                                        for (std::size_t rr = 0; rr < fm.coords.size(); ++rr)
                                                            if (!fm.coords[rr].is_zero())
                                                                v[sp.at(k, Entry{z2, x1, a, b + u, gi, rr, hi})] -=
                                                                    fm.coords[rr];
                                                        add_rel(k, std::move(v));
                                                    }
                            }
                        }
                }
            // g (x) (mu . f1) (x) h  =  g (x) mu (x) (tau1 f1 . h)
            for (std::size_t z1 = 0; z1 < g.phi.n1; ++z1)
                for (std::size_t x1 = 0; x1 < g.phi.n1; ++x1) {
                    const auto& hf = g.d1.hom(z1, x1);
                    if (hf.is_zero()) continue;
                    for (int u = hf.min_deg(); u <= hf.max_deg(); ++u)
                        for (std::size_t fi = 0; fi < hf.dim(u); ++fi) {
                            auto f1 = g.d1.basis_mor(z1, x1, u, fi);
                            auto tf1 = tau1.apply(f1, g.d1, e1);
                            for (std::size_t x2 = 0; x2 < g.phi.n2; ++x2) {
                                const auto& hm = g.phi.at(x2, x1);
                                const auto& hl = e2.hom(tau2.obj[x2], y2);
                                const auto& hr = e1.hom(y1, tau1.obj[z1]);
                                if (hm.is_zero() || hl.is_zero() || hr.is_zero()) continue;
                                for (int a = hl.min_deg(); a <= hl.max_deg(); ++a)
                                    for (int b = hm.min_deg(); b <= hm.max_deg(); ++b)
                                        for (int c = hr.min_deg(); c <= hr.max_deg(); ++c)
                                            for (std::size_t gi = 0; gi < hl.dim(a); ++gi)
                                                for (std::size_t mi = 0; mi < hm.dim(b); ++mi)
                                                    for (std::size_t hi = 0; hi < hr.dim(c); ++hi) {
                                                        int k = a + b + u + c;
                                                        if (!sp.total.dim(k)) continue;
                                                        std::vector<K> v(sp.total.dim(k));
                                                        auto mf = g.phi.act_right(
                                                            g.phi.basis_elt(x2, x1, b, mi), f1);
                                                        for (std::size_t rr = 0; rr < mf.coords.size(); ++rr)
                                                            if (!mf.coords[rr].is_zero())
                                                                v[sp.at(k, Entry{x2, z1, a, b + u, gi, rr, hi})] +=
                                                                    mf.coords[rr];
                                                        auto th = e1.compose(  // tau1(f1) o h
                                                            tf1, e1.basis_mor(y1, tau1.obj[z1], c, hi));
                                                        for (std::size_t rr = 0; rr < th.coords.size(); ++rr)
                                                            if (!th.coords[rr].is_zero())
                                                                v[sp.at(k, Entry{x2, x1, a, b, gi, mi, rr})] -=
                                                                    th.coords[rr];
                                                        add_rel(k, std::move(v));
                                                    }
                            }
                        }
                }
            std::map<int, Matrix<K>> rel;
            for (auto& [k, cols] : relcols) {
                Matrix<K> m(sp.total.dim(k), cols.size());
                for (std::size_t j = 0; j < cols.size(); ++j)
                    for (std::size_t i = 0; i < cols[j].size(); ++i) m(i, j) = cols[j][i];
                rel[k] = std::move(m);
            }
            sp.q = subspace_quotient(sp.total, rel);
            if (!sp.q.d_preserves_relations) r.relations_closed = false;
            r.phi.set(y2, y1, sp.q.quotient);
            r.spaces[{y2, y1}] = std::move(sp);
        }

    // action tables through the quotient presentations
    for (std::size_t y2 = 0; y2 < r.phi.n2; ++y2)
        for (std::size_t y1 = 0; y1 < r.phi.n1; ++y1) {
            const auto& sp = r.spaces.at({y2, y1});
            const auto& v = r.phi.at(y2, y1);
            if (v.is_zero()) continue;
            for (int p = v.min_deg(); p <= v.max_deg(); ++p) {
                std::size_t dp = v.dim(p);
                if (!dp) continue;
                // left action: postcompose the left tensor factor
                for (std::size_t z2 = 0; z2 < r.phi.n2; ++z2) {
                    const auto& h = e2.hom(y2, z2);
                    if (h.is_zero()) continue;
                    const auto& tgt = r.spaces.at({z2, y1});
                    for (int q = h.min_deg(); q <= h.max_deg(); ++q) {
                        std::size_t dq = h.dim(q);
                        if (!dq || !r.phi.dim(z2, y1, p + q)) continue;
                        Matrix<K> m(r.phi.dim(z2, y1, p + q), dq * dp);
                        for (std::size_t fi = 0; fi < dq; ++fi) {
                            auto f = e2.basis_mor(y2, z2, q, fi);
                            for (std::size_t mi = 0; mi < dp; ++mi) {
                                // expand the quotient basis vector in the big space
                                auto big = sp.q.incl.at(p).column(mi);
                                std::vector<K> out(tgt.total.dim(p + q));
                                const auto& bas = sp.basis.at(p);
                                for (std::size_t t = 0; t < big.size(); ++t) {
                                    if (big[t].is_zero()) continue;
                                    auto [x2, x1, a, b, i, j, l] = bas[t];
                                    auto fg = e2.compose(f, e2.basis_mor(tau2.obj[x2], y2, a, i));
                                    for (std::size_t rr = 0; rr < fg.coords.size(); ++rr)
                                        if (!fg.coords[rr].is_zero())
                                            out[tgt.at(p + q, Entry{x2, x1, a + q, b, rr, j, l})] +=
                                                big[t] * fg.coords[rr];
                                }
                                auto red = tgt.q.proj.at(p + q).apply(out);
                                for (std::size_t rr = 0; rr < red.size(); ++rr)
                                    m(rr, fi * dp + mi) = red[rr];
                            }
                        }
                        r.phi.set_left_table(y2, z2, y1, q, p, std::move(m));
                    }
                }
                // right action: precompose the right tensor factor
                for (std::size_t z1 = 0; z1 < r.phi.n1; ++z1) {
                    const auto& h = e1.hom(z1, y1);
                    if (h.is_zero()) continue;
                    const auto& tgt = r.spaces.at({y2, z1});
                    for (int q = h.min_deg(); q <= h.max_deg(); ++q) {
                        std::size_t dq = h.dim(q);
                        if (!dq || !r.phi.dim(y2, z1, p + q)) continue;
                        Matrix<K> m(r.phi.dim(y2, z1, p + q), dp * dq);
                        for (std::size_t mi = 0; mi < dp; ++mi) {
                            auto big = sp.q.incl.at(p).column(mi);
                            const auto& bas = sp.basis.at(p);
                            for (std::size_t fi = 0; fi < dq; ++fi) {
                                auto f = e1.basis_mor(z1, y1, q, fi);
                                std::vector<K> out(tgt.total.dim(p + q));
                                for (std::size_t t = 0; t < big.size(); ++t) {
                                    if (big[t].is_zero()) continue;
                                    auto [x2, x1, a, b, i, j, l] = bas[t];
                                    int c = p - a - b;
                                    auto hf = e1.compose(e1.basis_mor(y1, tau1.obj[x1], c, l), f);
                                    for (std::size_t rr = 0; rr < hf.coords.size(); ++rr)
                                        if (!hf.coords[rr].is_zero())
                                            out[tgt.at(p + q, Entry{x2, x1, a, b, i, j, rr})] +=
                                                big[t] * hf.coords[rr];
                                }
                                auto red = tgt.q.proj.at(p + q).apply(out);
                                for (std::size_t rr = 0; rr < red.size(); ++rr)
                                    m(rr, mi * dq + fi) = red[rr];
                            }
                        }
                        r.phi.set_right_table(y2, y1, z1, q, p, std::move(m));
                    }
                }
            }
        }
    return r;
}

// Comparison map c: phi(x2, x1) -> reglued phi(tau2 x2, tau1 x1), the class
// of id (x) mu (x) id.
template <class K>
ChainMap<K> reglue_comparison(const Gluing<K>& g, const FinDGCategory<K>& e1,
                              const DGFunctor<K>& tau1, const FinDGCategory<K>& e2,
                              const DGFunctor<K>& tau2, const RegluedBimodule<K>& rb,
                              std::size_t x2, std::size_t x1) {
    using Entry = typename detail::TripleSpace<K>::Entry;
    ChainMap<K> cm;
    cm.source = g.phi.at(x2, x1);
    cm.target = rb.phi.at(tau2.obj[x2], tau1.obj[x1]);
    cm.map.degree = 0;
    if (cm.source.is_zero()) return cm;
    const auto& sp = rb.spaces.at({tau2.obj[x2], tau1.obj[x1]});
    const auto& id2 = e2.identity_coords(tau2.obj[x2]);
    const auto& id1 = e1.identity_coords(tau1.obj[x1]);
    for (int b = cm.source.min_deg(); b <= cm.source.max_deg(); ++b) {
        std::size_t db = cm.source.dim(b);
        if (!db || !cm.target.dim(b)) continue;
        Matrix<K> m(cm.target.dim(b), db);
        for (std::size_t j = 0; j < db; ++j) {
            std::vector<K> big(sp.total.dim(b));
            for (std::size_t i = 0; i < id2.size(); ++i) {
                if (id2[i].is_zero()) continue;
                for (std::size_t l = 0; l < id1.size(); ++l) {
                    if (id1[l].is_zero()) continue;
                    big[sp.at(b, Entry{x2, x1, 0, b, i, j, l})] += id2[i] * id1[l];
                }
            }
            auto red = sp.q.proj.at(b).apply(big);
            for (std::size_t rr = 0; rr < red.size(); ++rr) m(rr, j) = red[rr];
        }
        cm.map.set_comp(b, std::move(m));
    }
    return cm;
}

// Full regluing: new bimodule, transported glued objects, and the certified
// comparison data.
template <class K>
struct RegluingReport {
    RegluedBimodule<K> bimodule;
    Gluing<K> gluing;
    std::vector<std::size_t> objects;  // transported object indices
    bool tau1_qff = false;             // Hom cohomology preserved by tau1/tau2
    bool tau2_qff = false;
    bool relations_closed = false;
    bool comparison_chain_maps = false;
    bool comparison_quasi_iso = false;
    bool hom_cohomology_preserved = false;
    bool ok() const {
        return tau1_qff && tau2_qff && relations_closed && comparison_chain_maps &&
               comparison_quasi_iso && hom_cohomology_preserved;
    }
};

template <class K>
bool functor_is_qff(const FinDGCategory<K>& src, const FinDGCategory<K>& dst,
                    const DGFunctor<K>& f) {
    for (std::size_t x = 0; x < src.n_objects(); ++x)
        for (std::size_t y = 0; y < src.n_objects(); ++y)
            if (cohomology_dims(src.hom(x, y)) !=
                cohomology_dims(dst.hom(f.obj[x], f.obj[y])))
                return false;
    return true;
}

template <class K>
RegluingReport<K> reglue(Gluing<K>& g, const FinDGCategory<K>& e1, const DGFunctor<K>& tau1,
                         const FinDGCategory<K>& e2, const DGFunctor<K>& tau2,
                         std::size_t dim_cap = 4096) {
    g.ensure_built();
    RegluingReport<K> rep;
    rep.tau1_qff = functor_is_qff(g.d1, e1, tau1);
    rep.tau2_qff = functor_is_qff(g.d2, e2, tau2);
    rep.bimodule = reglue_bimodule(g, e1, tau1, e2, tau2, dim_cap);
    rep.relations_closed = rep.bimodule.relations_closed;

    rep.comparison_chain_maps = true;
    rep.comparison_quasi_iso = true;
    for (std::size_t x2 = 0; x2 < g.phi.n2; ++x2)
        for (std::size_t x1 = 0; x1 < g.phi.n1; ++x1) {
            auto cm = reglue_comparison(g, e1, tau1, e2, tau2, rep.bimodule, x2, x1);
            if (cm.source.is_zero() && cm.target.is_zero()) continue;
            if (!cm.valid()) rep.comparison_chain_maps = false;
            if (!is_acyclic(cone(cm).cone)) rep.comparison_quasi_iso = false;
        }

    // transported glued objects (M1, M2, mu) -> (tau1 M1, tau2 M2, c(mu))
    rep.gluing = Gluing<K>(e1, e2, rep.bimodule.phi);
    for (std::size_t m = 0; m < g.objects.size(); ++m) {
        const auto& o = g.objects[m];
        auto cm = reglue_comparison(g, e1, tau1, e2, tau2, rep.bimodule, o.x2, o.x1);
        std::vector<K> mu(rep.bimodule.phi.dim(tau2.obj[o.x2], tau1.obj[o.x1], 0));
        if (!mu.empty() && !o.mu.empty())
            mu = cm.map.comp(cm.source, cm.target, 0).apply(o.mu);
        rep.objects.push_back(rep.gluing.add_object(GluedObject<K>{tau1.obj[o.x1], tau2.obj[o.x2], mu}));
    }
    rep.gluing.build();

    rep.hom_cohomology_preserved = true;
    for (std::size_t m = 0; m < g.objects.size(); ++m)
        for (std::size_t n = 0; n < g.objects.size(); ++n)
            if (cohomology_dims(g.cat.hom(m, n)) !=
                cohomology_dims(rep.gluing.cat.hom(rep.objects[m], rep.objects[n])))
                rep.hom_cohomology_preserved = false;
    return rep;
}

}  // namespace dgaus

#endif
