#ifndef DGAUS_BIMODULE_HPP
#define DGAUS_BIMODULE_HPP

#include "dgcat.hpp"

namespace dgaus {

// Homogeneous element of phi(x2, x1).
template <class K>
struct BimodElt {
    std::size_t x2 = 0, x1 = 0;
    int deg = 0;
    std::vector<K> coords;

    bool is_zero() const {
        for (auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }
};

// DG bimodule phi over (D2, D1): a complex phi(x2, x1) for every object pair,
// covariant in x2 (left action by morphisms of D2), contravariant in x1
// (right action by morphisms of D1).  Stored as structure-constant tables in
// the same style as FinDGCategory.
template <class K>
class FinDGBimodule {
public:
    FieldSpec field;
    std::size_t n2 = 0, n1 = 0;

    const CochainComplex<K>& at(std::size_t x2, std::size_t x1) const {
        auto it = vals_.find({x2, x1});
        return it == vals_.end() ? empty_ : it->second;
    }
    void set(std::size_t x2, std::size_t x1, CochainComplex<K> c) {
        if (c.is_zero()) vals_.erase({x2, x1}); else vals_[{x2, x1}] = std::move(c);
    }
    std::size_t dim(std::size_t x2, std::size_t x1, int deg) const { return at(x2, x1).dim(deg); }

    // Left action Hom2(x2,y2)^q (x) phi(x2,x1)^p -> phi(y2,x1)^{p+q},
    // column index f2_index * dim_p + mu_index.
    Matrix<K> left_table(std::size_t x2, std::size_t y2, std::size_t x1, int q, int p) const {
        auto it = lact_.find({x2, y2, x1, q, p});
        if (it != lact_.end()) return it->second;
        return Matrix<K>::zero(dim(y2, x1, p + q), 0);  // cols fixed by caller context
    }
    void set_left_table(std::size_t x2, std::size_t y2, std::size_t x1, int q, int p, Matrix<K> m) {
        if (m.rows() != dim(y2, x1, p + q))
            throw std::invalid_argument("FinDGBimodule: left action shape mismatch");
        if (m.is_zero()) lact_.erase({x2, y2, x1, q, p});
        else lact_[{x2, y2, x1, q, p}] = std::move(m);
    }

    // Right action phi(x2,x1)^p (x) Hom1(y1,x1)^q -> phi(x2,y1)^{p+q},
    // column index mu_index * dim_q + f1_index.
    Matrix<K> right_table(std::size_t x2, std::size_t x1, std::size_t y1, int q, int p) const {
        auto it = ract_.find({x2, x1, y1, q, p});
        if (it != ract_.end()) return it->second;
        return Matrix<K>::zero(dim(x2, y1, p + q), 0);
    }
    void set_right_table(std::size_t x2, std::size_t x1, std::size_t y1, int q, int p, Matrix<K> m) {
        if (m.rows() != dim(x2, y1, p + q))
            throw std::invalid_argument("FinDGBimodule: right action shape mismatch");
        if (m.is_zero()) ract_.erase({x2, x1, y1, q, p});
        else ract_[{x2, x1, y1, q, p}] = std::move(m);
    }

    BimodElt<K> zero_elt(std::size_t x2, std::size_t x1, int deg) const {
        return BimodElt<K>{x2, x1, deg, std::vector<K>(dim(x2, x1, deg))};
    }
    BimodElt<K> basis_elt(std::size_t x2, std::size_t x1, int deg, std::size_t t) const {
        auto r = zero_elt(x2, x1, deg);
        r.coords[t] = free_one<K>();
        return r;
    }
    BimodElt<K> differential(const BimodElt<K>& m) const {
        return BimodElt<K>{m.x2, m.x1, m.deg + 1, at(m.x2, m.x1).diff(m.deg).apply(m.coords)};
    }
    BimodElt<K> add(const BimodElt<K>& a, const BimodElt<K>& b) const {
        if (a.x2 != b.x2 || a.x1 != b.x1 || a.deg != b.deg)
            throw std::invalid_argument("BimodElt add: incompatible");
        auto r = a;
        for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
        return r;
    }
    BimodElt<K> scale(const BimodElt<K>& a, const K& c) const {
        auto r = a;
        for (auto& x : r.coords) x = x * c;
        return r;
    }
    BimodElt<K> negate(const BimodElt<K>& a) const { return scale(a, -free_one<K>()); }

    // f2 . mu for f2 in Hom2(mu.x2, y2)
    BimodElt<K> act_left(std::size_t y2, const Mor<K>& f2, const BimodElt<K>& mu) const {
        if (f2.src != mu.x2 || f2.dst != y2)
            throw std::invalid_argument("act_left: object mismatch");
        std::size_t dp = mu.coords.size();
        auto t = left_table(mu.x2, y2, mu.x1, f2.deg, mu.deg);
        std::vector<K> in(f2.coords.size() * dp);
        for (std::size_t gi = 0; gi < f2.coords.size(); ++gi)
            for (std::size_t mi = 0; mi < dp; ++mi)
                in[gi * dp + mi] = f2.coords[gi] * mu.coords[mi];
        if (t.cols() != in.size()) t = Matrix<K>::zero(dim(y2, mu.x1, mu.deg + f2.deg), in.size());
        return BimodElt<K>{y2, mu.x1, mu.deg + f2.deg, t.apply(in)};
    }
    // mu . f1 for f1 in Hom1(y1, mu.x1)
    BimodElt<K> act_right(const BimodElt<K>& mu, const Mor<K>& f1) const {
        if (f1.dst != mu.x1) throw std::invalid_argument("act_right: object mismatch");
        std::size_t dq = f1.coords.size();
        auto t = right_table(mu.x2, mu.x1, f1.src, f1.deg, mu.deg);
        std::vector<K> in(mu.coords.size() * dq);
        for (std::size_t mi = 0; mi < mu.coords.size(); ++mi)
            for (std::size_t gi = 0; gi < dq; ++gi)
                in[mi * dq + gi] = mu.coords[mi] * f1.coords[gi];
        if (t.cols() != in.size()) t = Matrix<K>::zero(dim(mu.x2, f1.src, mu.deg + f1.deg), in.size());
        return BimodElt<K>{mu.x2, f1.src, mu.deg + f1.deg, t.apply(in)};
    }

    bool elt_equal(const BimodElt<K>& a, const BimodElt<K>& b) const {
        if (a.x2 != b.x2 || a.x1 != b.x1 || a.deg != b.deg) return false;
        for (std::size_t i = 0; i < a.coords.size(); ++i)
            if (a.coords[i] != b.coords[i]) return false;
        return true;
    }

    const std::map<std::pair<std::size_t, std::size_t>, CochainComplex<K>>& values() const { return vals_; }

private:
    std::map<std::pair<std::size_t, std::size_t>, CochainComplex<K>> vals_;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, int, int>, Matrix<K>> lact_;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, int, int>, Matrix<K>> ract_;
    CochainComplex<K> empty_;
};

namespace detail {
template <class K>
std::vector<int> support_degrees(const CochainComplex<K>& h) {
    std::vector<int> ds;
    if (h.is_zero()) return ds;
    for (int k = h.min_deg(); k <= h.max_deg(); ++k)
        if (h.dim(k)) ds.push_back(k);
    return ds;
}
}  // namespace detail

// Bimodule axioms, basis by basis: d^2 = 0, Leibniz for both actions,
// associativity and unitality of both actions, and their commutation.
template <class K>
ValidationReport validate_bimodule(const FinDGCategory<K>& d1, const FinDGCategory<K>& d2,
                                   const FinDGBimodule<K>& phi) {
    using detail::support_degrees;
    ValidationReport rep;
    for (std::size_t x2 = 0; x2 < phi.n2; ++x2)
        for (std::size_t x1 = 0; x1 < phi.n1; ++x1)
            if (!phi.at(x2, x1).valid())
                rep.violations.push_back({"d_squared", {x2, x1}, {}, {}, "bimodule value fails d^2 = 0"});

    auto elt_degs = [&](std::size_t x2, std::size_t x1) { return support_degrees(phi.at(x2, x1)); };

    for (std::size_t x2 = 0; x2 < phi.n2; ++x2)
        for (std::size_t x1 = 0; x1 < phi.n1; ++x1)
            for (int p : elt_degs(x2, x1))
                for (std::size_t mi = 0; mi < phi.dim(x2, x1, p); ++mi) {
                    auto mu = phi.basis_elt(x2, x1, p, mi);
                    // unit actions
                    if (d2.hom_dim(x2, x2, 0) &&
                        !phi.elt_equal(phi.act_left(x2, d2.identity(x2), mu), mu))
                        rep.violations.push_back({"identity", {x2, x1}, {p}, {mi}, "id2 . mu != mu"});
                    if (d1.hom_dim(x1, x1, 0) &&
                        !phi.elt_equal(phi.act_right(mu, d1.identity(x1)), mu))
                        rep.violations.push_back({"identity", {x2, x1}, {p}, {mi}, "mu . id1 != mu"});

                    // left action: Leibniz + associativity
                    for (std::size_t y2 = 0; y2 < phi.n2; ++y2)
                        for (int q : support_degrees(d2.hom(x2, y2)))
                            for (std::size_t fi = 0; fi < d2.hom_dim(x2, y2, q); ++fi) {
                                auto f2 = d2.basis_mor(x2, y2, q, fi);
                                auto lhs = phi.differential(phi.act_left(y2, f2, mu));
                                auto t1 = phi.act_left(y2, d2.differential(f2), mu);
                                auto t2 = phi.act_left(y2, f2, phi.differential(mu));
                                auto rhs = phi.add(t1, (q % 2 == 0) ? t2 : phi.negate(t2));
                                if (!phi.elt_equal(lhs, rhs))
                                    rep.violations.push_back({"leibniz", {x2, y2, x1}, {q, p}, {fi, mi}, "left action"});
                                for (std::size_t z2 = 0; z2 < phi.n2; ++z2)
                                    for (int r : support_degrees(d2.hom(y2, z2)))
                                        for (std::size_t gi = 0; gi < d2.hom_dim(y2, z2, r); ++gi) {
                                            auto g2 = d2.basis_mor(y2, z2, r, gi);
                                            auto a = phi.act_left(z2, d2.compose(g2, f2), mu);
                                            auto b = phi.act_left(z2, g2, phi.act_left(y2, f2, mu));
                                            if (!phi.elt_equal(a, b))
                                                rep.violations.push_back({"assoc", {x2, y2, z2, x1}, {r, q, p}, {gi, fi, mi}, "left action"});
                                        }
                                // commutation with the right action
                                for (std::size_t y1 = 0; y1 < phi.n1; ++y1)
                                    for (int s : support_degrees(d1.hom(y1, x1)))
                                        for (std::size_t hi = 0; hi < d1.hom_dim(y1, x1, s); ++hi) {
                                            auto f1 = d1.basis_mor(y1, x1, s, hi);
                                            auto a = phi.act_right(phi.act_left(y2, f2, mu), f1);
                                            auto b = phi.act_left(y2, f2, phi.act_right(mu, f1));
                                            if (!phi.elt_equal(a, b))
                                                rep.violations.push_back({"assoc", {x2, y2, x1, y1}, {q, p, s}, {fi, mi, hi}, "actions do not commute"});
                                        }
                            }

                    // right action: Leibniz + associativity
                    for (std::size_t y1 = 0; y1 < phi.n1; ++y1)
                        for (int q : support_degrees(d1.hom(y1, x1)))
                            for (std::size_t fi = 0; fi < d1.hom_dim(y1, x1, q); ++fi) {
                                auto f1 = d1.basis_mor(y1, x1, q, fi);
                                auto lhs = phi.differential(phi.act_right(mu, f1));
                                auto t1 = phi.act_right(phi.differential(mu), f1);
                                auto t2 = phi.act_right(mu, d1.differential(f1));
                                auto rhs = phi.add(t1, (p % 2 == 0) ? t2 : phi.negate(t2));
                                if (!phi.elt_equal(lhs, rhs))
                                    rep.violations.push_back({"leibniz", {x2, x1, y1}, {p, q}, {mi, fi}, "right action"});
                                for (std::size_t z1 = 0; z1 < phi.n1; ++z1)
                                    for (int r : support_degrees(d1.hom(z1, y1)))
                                        for (std::size_t gi = 0; gi < d1.hom_dim(z1, y1, r); ++gi) {
                                            auto g1 = d1.basis_mor(z1, y1, r, gi);
                                            auto a = phi.act_right(mu, d1.compose(f1, g1));
                                            auto b = phi.act_right(phi.act_right(mu, f1), g1);
                                            if (!phi.elt_equal(a, b))
                                                rep.violations.push_back({"assoc", {x2, x1, y1, z1}, {p, q, r}, {mi, fi, gi}, "right action"});
                                        }
                            }
                }
    return rep;
}

// Diagonal bimodule of a category: phi(x2, x1) = Hom(x1, x2), actions by
// composition on both sides.
template <class K>
FinDGBimodule<K> diagonal_bimodule(const FinDGCategory<K>& c) {
    FinDGBimodule<K> phi;
    phi.field = c.field;
    phi.n1 = phi.n2 = c.n_objects();
    std::size_t n = c.n_objects();
    for (std::size_t x2 = 0; x2 < n; ++x2)
        for (std::size_t x1 = 0; x1 < n; ++x1)
            phi.set(x2, x1, c.hom(x1, x2));
    using detail::support_degrees;
    for (std::size_t x2 = 0; x2 < n; ++x2)
        for (std::size_t x1 = 0; x1 < n; ++x1) {
            auto pds = support_degrees(c.hom(x1, x2));
            for (std::size_t y2 = 0; y2 < n; ++y2)
                for (int q : support_degrees(c.hom(x2, y2)))
                    for (int p : pds) {
                        auto t = c.comp_table(x1, x2, y2, q, p);
                        if (t.rows()) phi.set_left_table(x2, y2, x1, q, p, t);
                    }
            for (std::size_t y1 = 0; y1 < n; ++y1)
                for (int q : support_degrees(c.hom(y1, x1)))
                    for (int p : pds) {
                        auto t = c.comp_table(y1, x1, x2, p, q);
                        if (t.rows()) phi.set_right_table(x2, x1, y1, q, p, t);
                    }
        }
    return phi;
}

// Restriction of a bimodule to full subcategories picked out by object index
// lists (new index -> old index).
template <class K>
FinDGBimodule<K> restrict_bimodule(const FinDGBimodule<K>& phi,
                                   const std::vector<std::size_t>& keep2,
                                   const std::vector<std::size_t>& keep1) {
    FinDGBimodule<K> r;
    r.field = phi.field;
    r.n2 = keep2.size();
    r.n1 = keep1.size();
    for (std::size_t a = 0; a < keep2.size(); ++a)
        for (std::size_t b = 0; b < keep1.size(); ++b)
            r.set(a, b, phi.at(keep2[a], keep1[b]));
    for (std::size_t a = 0; a < keep2.size(); ++a)
        for (std::size_t a2 = 0; a2 < keep2.size(); ++a2)
            for (std::size_t b = 0; b < keep1.size(); ++b) {
                const auto& v = phi.at(keep2[a], keep1[b]);
                if (v.is_zero()) continue;
                for (int p = v.min_deg(); p <= v.max_deg(); ++p)
                    for (int q = -16; q <= 16; ++q) {
                        auto t = phi.left_table(keep2[a], keep2[a2], keep1[b], q, p);
                        if (t.cols()) r.set_left_table(a, a2, b, q, p, t);
                    }
            }
    for (std::size_t a = 0; a < keep2.size(); ++a)
        for (std::size_t b = 0; b < keep1.size(); ++b)
            for (std::size_t b2 = 0; b2 < keep1.size(); ++b2) {
                const auto& v = phi.at(keep2[a], keep1[b]);
                if (v.is_zero()) continue;
                for (int p = v.min_deg(); p <= v.max_deg(); ++p)
                    for (int q = -16; q <= 16; ++q) {
                        auto t = phi.right_table(keep2[a], keep1[b], keep1[b2], q, p);
                        if (t.cols()) r.set_right_table(a, b, b2, q, p, t);
                    }
            }
    return r;
}

// Degreewise shift phi[n]: values shift, right action unchanged, left action
// picks up (-1)^{n deg f2}.  With this convention both Leibniz rules still
// hold for the shifted differential (-1)^n d.
template <class K>
FinDGBimodule<K> shift_bimodule(const FinDGBimodule<K>& phi, int n) {
    FinDGBimodule<K> r;
    r.field = phi.field;
    r.n2 = phi.n2;
    r.n1 = phi.n1;
    for (std::size_t x2 = 0; x2 < phi.n2; ++x2)
        for (std::size_t x1 = 0; x1 < phi.n1; ++x1)
            r.set(x2, x1, shift(phi.at(x2, x1), n));
    for (std::size_t x2 = 0; x2 < phi.n2; ++x2)
        for (std::size_t x1 = 0; x1 < phi.n1; ++x1) {
            const auto& v = phi.at(x2, x1);
            if (v.is_zero()) continue;
            for (int p = v.min_deg(); p <= v.max_deg(); ++p) {
                if (!v.dim(p)) continue;
                for (std::size_t y2 = 0; y2 < phi.n2; ++y2)
                    for (int q = -16; q <= 16; ++q) {
                        auto t = phi.left_table(x2, y2, x1, q, p);
                        if (!t.cols()) continue;
                        if ((n % 2 != 0) && (q % 2 != 0)) t = -t;
                        r.set_left_table(x2, y2, x1, q, p - n, std::move(t));
                    }
                for (std::size_t y1 = 0; y1 < phi.n1; ++y1)
                    for (int q = -16; q <= 16; ++q) {
                        auto t = phi.right_table(x2, x1, y1, q, p);
                        if (t.cols()) r.set_right_table(x2, x1, y1, q, p - n, std::move(t));
                    }
            }
        }
    return r;
}

}  // namespace dgaus

#endif
