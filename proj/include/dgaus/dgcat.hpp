#ifndef DGAUS_DGCAT_HPP
#define DGAUS_DGCAT_HPP

#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "complex.hpp"

namespace dgaus {

// Morphism of a finite DG category, in coordinates: a homogeneous element of
// Hom(src, dst) in the given degree.
template <class K>
struct Mor {
    std::size_t src = 0, dst = 0;
    int deg = 0;
    std::vector<K> coords;

    bool is_zero() const {
        for (auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }
};

// Finite DG category over an exact scalar, stored as tables: one finite
// complex per ordered pair of objects and one structure-constant matrix per
// (triple of objects, pair of degrees).  Nothing is assumed to hold; the
// axioms are checked by validate() and violations are reported as data.
template <class K>
class FinDGCategory {
public:
    FieldSpec field;
    std::vector<std::string> object_names;
    std::size_t zero_object = 0;  // designated object with Hom(z, z) = 0

    std::size_t n_objects() const { return object_names.size(); }

    const CochainComplex<K>& hom(std::size_t x, std::size_t y) const {
        auto it = homs_.find({x, y});
        return it == homs_.end() ? empty_ : it->second;
    }
    void set_hom(std::size_t x, std::size_t y, CochainComplex<K> c) {
        if (c.is_zero()) homs_.erase({x, y}); else homs_[{x, y}] = std::move(c);
    }

    std::size_t hom_dim(std::size_t x, std::size_t y, int deg) const { return hom(x, y).dim(deg); }

    // Structure constants of composition Hom(y,z)^q (x) Hom(x,y)^p ->
    // Hom(x,z)^{p+q}; column index is g_index * dim_p + f_index.
    Matrix<K> comp_table(std::size_t x, std::size_t y, std::size_t z, int q, int p) const {
        auto it = comp_.find({x, y, z, q, p});
        if (it != comp_.end()) return it->second;
        return Matrix<K>::zero(hom_dim(x, z, p + q), hom_dim(y, z, q) * hom_dim(x, y, p));
    }
    void set_comp_table(std::size_t x, std::size_t y, std::size_t z, int q, int p, Matrix<K> m) {
        if (m.rows() != hom_dim(x, z, p + q) || m.cols() != hom_dim(y, z, q) * hom_dim(x, y, p))
            throw std::invalid_argument("FinDGCategory: composition table shape mismatch");
        if (m.is_zero()) comp_.erase({x, y, z, q, p});
        else comp_[{x, y, z, q, p}] = std::move(m);
    }

    const std::vector<K>& identity_coords(std::size_t x) const { return ids_.at(x); }
    void set_identity(std::size_t x, std::vector<K> coords) {
        if (coords.size() != hom_dim(x, x, 0))
            throw std::invalid_argument("FinDGCategory: identity coordinate size mismatch");
        ids_[x] = std::move(coords);
    }
    Mor<K> identity(std::size_t x) const { return Mor<K>{x, x, 0, identity_coords(x)}; }

    Mor<K> zero_mor(std::size_t x, std::size_t y, int deg) const {
        return Mor<K>{x, y, deg, std::vector<K>(hom_dim(x, y, deg))};
    }

    Mor<K> differential(const Mor<K>& f) const {
        Mor<K> r{f.src, f.dst, f.deg + 1, {}};
        r.coords = hom(f.src, f.dst).diff(f.deg).apply(f.coords);
        return r;
    }

    Mor<K> compose(const Mor<K>& g, const Mor<K>& f) const {
        if (f.dst != g.src) throw std::invalid_argument("compose: objects do not match");
        auto t = comp_table(f.src, f.dst, g.dst, g.deg, f.deg);
        std::size_t dp = f.coords.size();
        std::vector<K> in(g.coords.size() * dp);
        for (std::size_t gi = 0; gi < g.coords.size(); ++gi) {
            if (g.coords[gi].is_zero()) continue;
            for (std::size_t fi = 0; fi < dp; ++fi)
                in[gi * dp + fi] = g.coords[gi] * f.coords[fi];
        }
        return Mor<K>{f.src, g.dst, f.deg + g.deg, t.apply(in)};
    }

    Mor<K> add(const Mor<K>& a, const Mor<K>& b) const {
        if (a.src != b.src || a.dst != b.dst || a.deg != b.deg)
            throw std::invalid_argument("add: incompatible morphisms");
        Mor<K> r = a;
        for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
        return r;
    }
    Mor<K> scale(const Mor<K>& a, const K& c) const {
        Mor<K> r = a;
        for (auto& x : r.coords) x = x * c;
        return r;
    }
    Mor<K> negate(const Mor<K>& a) const { return scale(a, -free_one<K>()); }

    // basis morphism t in Hom(x,y)^deg
    Mor<K> basis_mor(std::size_t x, std::size_t y, int deg, std::size_t t) const {
        Mor<K> r = zero_mor(x, y, deg);
        r.coords[t] = free_one<K>();
        return r;
    }

    bool mor_equal(const Mor<K>& a, const Mor<K>& b) const {
        if (a.src != b.src || a.dst != b.dst || a.deg != b.deg) return false;
        if (a.coords.size() != b.coords.size()) return false;
        for (std::size_t i = 0; i < a.coords.size(); ++i)
            if (a.coords[i] != b.coords[i]) return false;
        return true;
    }

    const std::map<std::pair<std::size_t, std::size_t>, CochainComplex<K>>& homs() const { return homs_; }

private:
    std::map<std::pair<std::size_t, std::size_t>, CochainComplex<K>> homs_;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, int, int>, Matrix<K>> comp_;
    std::map<std::size_t, std::vector<K>> ids_;
    CochainComplex<K> empty_;
};

// One violated axiom instance, reported as data rather than thrown.
struct Violation {
    std::string axiom;                  // "d_squared" | "leibniz" | "assoc" | "identity" | "zero_object"
    std::vector<std::size_t> objects;   // the objects involved
    std::vector<int> degrees;           // the degrees involved
    std::vector<std::size_t> basis;     // basis indices of the witnesses
    std::string detail;

    std::string describe() const {
        std::ostringstream os;
        os << axiom << " at objects(";
        for (std::size_t i = 0; i < objects.size(); ++i) os << (i ? "," : "") << objects[i];
        os << ") degrees(";
        for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
        os << ")";
        if (!detail.empty()) os << ": " << detail;
        return os.str();
    }
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Full axiom check: d^2 = 0, Leibniz rule for composition, associativity on
// basis triples, left/right identity laws, closed identities, and the
// designated zero object having a zero endomorphism complex.
template <class K>
ValidationReport validate_dg_category(const FinDGCategory<K>& c) {
    ValidationReport rep;
    std::size_t n = c.n_objects();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (!c.hom(x, y).valid())
                rep.violations.push_back({"d_squared", {x, y}, {}, {}, "hom complex fails d^2 = 0"});

    if (!c.hom(c.zero_object, c.zero_object).is_zero())
        rep.violations.push_back({"zero_object", {c.zero_object}, {}, {}, "designated zero object has nonzero endomorphisms"});

    auto degrees_of = [&](std::size_t x, std::size_t y) {
        std::vector<int> ds;
        const auto& h = c.hom(x, y);
        if (h.is_zero()) return ds;
        for (int k = h.min_deg(); k <= h.max_deg(); ++k)
            if (h.dim(k)) ds.push_back(k);
        return ds;
    };

    // identities: closed, unital on both sides.  An object with no degree-0
    // endomorphisms can only carry id = 0, which forces every hom space in
    // and out of it to vanish; check that instead of demanding coordinates.
    for (std::size_t x = 0; x < n; ++x) {
        if (c.hom_dim(x, x, 0) == 0) {
            for (std::size_t y = 0; y < n; ++y)
                if (!c.hom(x, y).is_zero() || !c.hom(y, x).is_zero())
                    rep.violations.push_back({"identity", {x, y}, {}, {},
                                              "object without identity has nonzero hom spaces"});
            continue;
        }
        auto id = c.identity(x);
        if (!c.differential(id).is_zero())
            rep.violations.push_back({"identity", {x}, {0}, {}, "identity is not closed"});
        for (std::size_t y = 0; y < n; ++y) {
            for (int p : degrees_of(x, y))
                for (std::size_t t = 0; t < c.hom_dim(x, y, p); ++t) {
                    auto f = c.basis_mor(x, y, p, t);
                    if (!c.mor_equal(c.compose(f, id), f))
                        rep.violations.push_back({"identity", {x, y}, {p}, {t}, "f o id != f"});
                }
            for (int p : degrees_of(y, x))
                for (std::size_t t = 0; t < c.hom_dim(y, x, p); ++t) {
                    auto f = c.basis_mor(y, x, p, t);
                    if (!c.mor_equal(c.compose(id, f), f))
                        rep.violations.push_back({"identity", {y, x}, {p}, {t}, "id o f != f"});
                }
        }
    }

    // Leibniz: d(g o f) = dg o f + (-1)^{deg g} g o df
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (int q : degrees_of(y, z))
                    for (int p : degrees_of(x, y))
                        for (std::size_t gi = 0; gi < c.hom_dim(y, z, q); ++gi)
                            for (std::size_t fi = 0; fi < c.hom_dim(x, y, p); ++fi) {
                                auto g = c.basis_mor(y, z, q, gi);
                                auto f = c.basis_mor(x, y, p, fi);
                                auto lhs = c.differential(c.compose(g, f));
                                auto rhs = c.add(c.compose(c.differential(g), f),
                                                 (q % 2 == 0)
                                                     ? c.compose(g, c.differential(f))
                                                     : c.negate(c.compose(g, c.differential(f))));
                                if (!c.mor_equal(lhs, rhs))
                                    rep.violations.push_back({"leibniz", {x, y, z}, {q, p}, {gi, fi}, ""});
                            }

    // associativity on basis triples
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t w = 0; w < n; ++w)
                    for (int r : degrees_of(z, w))
                        for (int q : degrees_of(y, z))
                            for (int p : degrees_of(x, y))
                                for (std::size_t hi = 0; hi < c.hom_dim(z, w, r); ++hi)
                                    for (std::size_t gi = 0; gi < c.hom_dim(y, z, q); ++gi)
                                        for (std::size_t fi = 0; fi < c.hom_dim(x, y, p); ++fi) {
                                            auto h = c.basis_mor(z, w, r, hi);
                                            auto g = c.basis_mor(y, z, q, gi);
                                            auto f = c.basis_mor(x, y, p, fi);
                                            auto lhs = c.compose(c.compose(h, g), f);
                                            auto rhs = c.compose(h, c.compose(g, f));
                                            if (!c.mor_equal(lhs, rhs))
                                                rep.violations.push_back(
                                                    {"assoc", {x, y, z, w}, {r, q, p}, {hi, gi, fi}, ""});
                                        }
    return rep;
}

// Graded homotopy category dimensions: dim H^deg Hom(x, y).
template <class K>
std::map<int, std::size_t> homotopy_hom(const FinDGCategory<K>& c, std::size_t x, std::size_t y) {
    return cohomology_dims(c.hom(x, y));
}

// Opposite category: Hom_op(x,y) = Hom(y,x), f o_op g = (-1)^{deg f deg g} g o f.
template <class K>
FinDGCategory<K> opposite(const FinDGCategory<K>& c) {
    FinDGCategory<K> r;
    r.field = c.field;
    r.object_names = c.object_names;
    r.zero_object = c.zero_object;
    std::size_t n = c.n_objects();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            r.set_hom(x, y, c.hom(y, x));
    for (std::size_t x = 0; x < n; ++x)
        if (c.hom_dim(x, x, 0)) r.set_identity(x, c.identity_coords(x));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const auto& hxy = c.hom(y, x);  // = Hom_op(x, y)
                const auto& hyz = c.hom(z, y);
                if (hxy.is_zero() || hyz.is_zero()) continue;
                for (int q = hyz.min_deg(); q <= hyz.max_deg(); ++q)
                    for (int p = hxy.min_deg(); p <= hxy.max_deg(); ++p) {
                        std::size_t dq = hyz.dim(q), dp = hxy.dim(p);
                        if (!dq || !dp || !c.hom_dim(z, x, p + q)) continue;
                        // g in Hom_op(y,z)^q = Hom(z,y)^q, f in Hom_op(x,y)^p = Hom(y,x)^p;
                        // g o_op f = (-1)^{pq} f o g
                        auto t = c.comp_table(z, y, x, p, q);  // f o g, col = f_index * dq + g_index
                        Matrix<K> m(t.rows(), dq * dp);
                        bool neg = (p % 2 != 0) && (q % 2 != 0);
                        for (std::size_t gi = 0; gi < dq; ++gi)
                            for (std::size_t fi = 0; fi < dp; ++fi)
                                for (std::size_t rr = 0; rr < t.rows(); ++rr) {
                                    K v = t(rr, fi * dq + gi);
                                    m(rr, gi * dp + fi) = neg ? -v : v;
                                }
                        r.set_comp_table(x, y, z, q, p, std::move(m));
                    }
            }
    return r;
}

// Tensor product category: objects are pairs, Hom = tensor of hom complexes,
// composition has the Koszul sign (-1)^{deg f2 deg g1} on (f1 (x) f2) o (g1 (x) g2).
template <class K>
struct TensorCategory {
    FinDGCategory<K> cat;
    std::size_t n1 = 0, n2 = 0;
    // per object pair, the tensor bookkeeping for basis indexing
    std::map<std::pair<std::size_t, std::size_t>, TensorComplex<K>> parts;

    std::size_t obj(std::size_t x1, std::size_t x2) const { return x1 * n2 + x2; }
};

template <class K>
TensorCategory<K> tensor_category(const FinDGCategory<K>& a, const FinDGCategory<K>& b) {
    TensorCategory<K> t;
    t.n1 = a.n_objects();
    t.n2 = b.n_objects();
    auto& r = t.cat;
    r.field = a.field;
    for (std::size_t x1 = 0; x1 < t.n1; ++x1)
        for (std::size_t x2 = 0; x2 < t.n2; ++x2)
            r.object_names.push_back(a.object_names[x1] + "(x)" + b.object_names[x2]);
    r.zero_object = t.obj(a.zero_object, b.zero_object);
    for (std::size_t x1 = 0; x1 < t.n1; ++x1)
        for (std::size_t x2 = 0; x2 < t.n2; ++x2)
            for (std::size_t y1 = 0; y1 < t.n1; ++y1)
                for (std::size_t y2 = 0; y2 < t.n2; ++y2) {
                    auto tc = tensor_complex(a.hom(x1, y1), b.hom(x2, y2));
                    r.set_hom(t.obj(x1, x2), t.obj(y1, y2), tc.complex);
                    t.parts[{t.obj(x1, x2), t.obj(y1, y2)}] = std::move(tc);
                }
    // identities: id_{x1} (x) id_{x2}
    for (std::size_t x1 = 0; x1 < t.n1; ++x1)
        for (std::size_t x2 = 0; x2 < t.n2; ++x2) {
            std::size_t x = t.obj(x1, x2);
            if (!r.hom_dim(x, x, 0)) continue;
            if (!a.hom_dim(x1, x1, 0) || !b.hom_dim(x2, x2, 0)) continue;
            auto& tc = t.parts.at({x, x});
            std::vector<K> idc(r.hom_dim(x, x, 0));
            const auto& ia = a.identity_coords(x1);
            const auto& ib = b.identity_coords(x2);
            auto& basis = tc.basis.at(0);
            for (std::size_t u = 0; u < basis.size(); ++u) {
                auto [k, i, j] = basis[u];
                if (k == 0) idc[u] = ia[i] * ib[j];
            }
            r.set_identity(x, std::move(idc));
        }
    // composition tables
    for (std::size_t x1 = 0; x1 < t.n1; ++x1)
        for (std::size_t x2 = 0; x2 < t.n2; ++x2)
            for (std::size_t y1 = 0; y1 < t.n1; ++y1)
                for (std::size_t y2 = 0; y2 < t.n2; ++y2)
                    for (std::size_t z1 = 0; z1 < t.n1; ++z1)
                        for (std::size_t z2 = 0; z2 < t.n2; ++z2) {
                            std::size_t x = t.obj(x1, x2), y = t.obj(y1, y2), z = t.obj(z1, z2);
                            const auto& hxy = r.hom(x, y);
                            const auto& hyz = r.hom(y, z);
                            const auto& hxz = r.hom(x, z);
                            if (hxy.is_zero() || hyz.is_zero() || hxz.is_zero()) continue;
                            auto& bxy = t.parts.at({x, y});
                            auto& byz = t.parts.at({y, z});
                            auto& bxz = t.parts.at({x, z});
                            for (int q = hyz.min_deg(); q <= hyz.max_deg(); ++q)
                                for (int p = hxy.min_deg(); p <= hxy.max_deg(); ++p) {
                                    std::size_t dq = hyz.dim(q), dp = hxy.dim(p);
                                    if (!dq || !dp || !hxz.dim(p + q)) continue;
                                    Matrix<K> m(hxz.dim(p + q), dq * dp);
                                    auto& gb = byz.basis.at(q);
                                    auto& fb = bxy.basis.at(p);
                                    for (std::size_t gi = 0; gi < dq; ++gi) {
                                        auto [qk, g1, g2] = gb[gi];   // g1 deg qk, g2 deg q - qk
                                        for (std::size_t fi = 0; fi < dp; ++fi) {
                                            auto [pk, f1, f2] = fb[fi];  // f1 deg pk, f2 deg p - pk
                                            // (g1 (x) g2) o (f1 (x) f2) =
                                            //   (-1)^{(q-qk) pk} (g1 o f1) (x) (g2 o f2)
                                            auto c1 = a.compose(a.basis_mor(y1, z1, qk, g1),
                                                                a.basis_mor(x1, y1, pk, f1));
                                            auto c2 = b.compose(b.basis_mor(y2, z2, q - qk, g2),
                                                                b.basis_mor(x2, y2, p - pk, f2));
                                            bool neg = ((q - qk) % 2 != 0) && (pk % 2 != 0);
                                            for (std::size_t u1 = 0; u1 < c1.coords.size(); ++u1) {
                                                if (c1.coords[u1].is_zero()) continue;
                                                for (std::size_t u2 = 0; u2 < c2.coords.size(); ++u2) {
                                                    if (c2.coords[u2].is_zero()) continue;
                                                    K v = c1.coords[u1] * c2.coords[u2];
                                                    std::size_t row = bxz.index_of(p + q, pk + qk, u1, u2);
                                                    m(row, gi * dp + fi) += neg ? -v : v;
                                                }
                                            }
                                        }
                                    }
                                    r.set_comp_table(x, y, z, q, p, std::move(m));
                                }
                        }
    return t;
}

}  // namespace dgaus

#endif
