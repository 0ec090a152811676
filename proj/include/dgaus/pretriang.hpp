#ifndef DGAUS_PRETRIANG_HPP
#define DGAUS_PRETRIANG_HPP

#include "backed.hpp"

namespace dgaus {

// Witness that `shifted` plays the role of obj[1]: closed morphisms
// u in Hom(shifted, obj)^{+1} and v in Hom(obj, shifted)^{-1} that are
// mutually inverse.
template <class K>
struct ShiftWitness {
    std::size_t obj = 0, shifted = 0;
    Mor<K> u, v;
};

// Witness that cone_obj is a cone of the closed degree-0 morphism f: x -> y,
// in the internal sense: morphisms i (deg -1), p (deg +1), j, s (deg 0)
// satisfying p i = id_x, s j = id_y, i p + j s = id_c, dj = dp = 0,
// di = j f, ds = -f p.
template <class K>
struct ConeWitness {
    Mor<K> f;
    std::size_t cone_obj = 0;
    Mor<K> i, p, j, s;
};

template <class K>
struct PretriangulatedCertificate {
    std::vector<ShiftWitness<K>> shifts;
    std::vector<ConeWitness<K>> cones;
};

template <class K>
bool check_shift_witness(const FinDGCategory<K>& c, const ShiftWitness<K>& w,
                         ValidationReport* rep = nullptr) {
    auto fail = [&](const std::string& d) {
        if (rep) rep->violations.push_back({"shift_witness", {w.obj, w.shifted}, {}, {}, d});
        return false;
    };
    if (w.u.src != w.shifted || w.u.dst != w.obj || w.u.deg != 1) return fail("u has wrong type");
    if (w.v.src != w.obj || w.v.dst != w.shifted || w.v.deg != -1) return fail("v has wrong type");
    if (!c.differential(w.u).is_zero()) return fail("u not closed");
    if (!c.differential(w.v).is_zero()) return fail("v not closed");
    if (!c.mor_equal(c.compose(w.u, w.v), c.identity(w.obj))) return fail("u v != id");
    if (!c.mor_equal(c.compose(w.v, w.u), c.identity(w.shifted))) return fail("v u != id");
    return true;
}

template <class K>
bool check_cone_witness(const FinDGCategory<K>& c, const ConeWitness<K>& w,
                        ValidationReport* rep = nullptr) {
    std::size_t x = w.f.src, y = w.f.dst, cn = w.cone_obj;
    auto fail = [&](const std::string& d) {
        if (rep) rep->violations.push_back({"cone_witness", {x, y, cn}, {}, {}, d});
        return false;
    };
    if (w.f.deg != 0 || !c.differential(w.f).is_zero()) return fail("f is not a closed degree-0 morphism");
    if (w.i.src != x || w.i.dst != cn || w.i.deg != -1) return fail("i has wrong type");
    if (w.p.src != cn || w.p.dst != x || w.p.deg != 1) return fail("p has wrong type");
    if (w.j.src != y || w.j.dst != cn || w.j.deg != 0) return fail("j has wrong type");
    if (w.s.src != cn || w.s.dst != y || w.s.deg != 0) return fail("s has wrong type");
    if (!c.mor_equal(c.compose(w.p, w.i), c.identity(x))) return fail("p i != id");
    if (!c.mor_equal(c.compose(w.s, w.j), c.identity(y))) return fail("s j != id");
    if (!c.mor_equal(c.add(c.compose(w.i, w.p), c.compose(w.j, w.s)), c.identity(cn)))
        return fail("i p + j s != id");
    if (!c.differential(w.j).is_zero()) return fail("dj != 0");
    if (!c.differential(w.p).is_zero()) return fail("dp != 0");
    if (!c.mor_equal(c.differential(w.i), c.compose(w.j, w.f))) return fail("di != j f");
    if (!c.mor_equal(c.differential(w.s), c.negate(c.compose(w.f, w.p)))) return fail("ds != -f p");
    return true;
}

// Verify a full pretriangulation certificate: every non-zero object must have
// a shift witness, and every requested cone witness must check out.
template <class K>
ValidationReport check_pretriangulated(const FinDGCategory<K>& c,
                                       const PretriangulatedCertificate<K>& cert) {
    ValidationReport rep;
    std::vector<bool> has_shift(c.n_objects(), false);
    for (auto& w : cert.shifts)
        if (check_shift_witness(c, w, &rep)) has_shift[w.obj] = true;
    for (std::size_t x = 0; x < c.n_objects(); ++x)
        if (x != c.zero_object && !has_shift[x])
            rep.violations.push_back({"shift_witness", {x}, {}, {}, "no shift witness for object"});
    for (auto& w : cert.cones) check_cone_witness(c, w, &rep);
    return rep;
}

// --- automatic witnesses for backed categories -----------------------------

// Requires models[shifted] == shift(models[x], 1); the witness morphisms are
// the identity components read through the hom-complex coordinates.
template <class K>
ShiftWitness<K> backed_shift_witness(const BackedCategory<K>& b, std::size_t x, std::size_t shifted) {
    const auto& m = b.models[x];
    if (!(b.models[shifted] == shift(m, 1)))
        throw std::invalid_argument("backed_shift_witness: model is not the shift");
    GradedMap<K> u;  // shift(m,1) -> m, degree +1, identity components
    u.degree = 1;
    GradedMap<K> v;
    v.degree = -1;
    for (auto& [k, d] : m.dims()) {
        u.set_comp(k - 1, Matrix<K>::identity(d, free_one<K>()));
        v.set_comp(k, Matrix<K>::identity(d, free_one<K>()));
    }
    ShiftWitness<K> w;
    w.obj = x;
    w.shifted = shifted;
    w.u = b.mor_of(shifted, x, u);
    w.v = b.mor_of(x, shifted, v);
    return w;
}

// Requires models[cone_obj] == cone(underlying chain map of f).cone.
template <class K>
ConeWitness<K> backed_cone_witness(const BackedCategory<K>& b, const Mor<K>& f, std::size_t cone_obj) {
    ChainMap<K> cm{b.models[f.src], b.models[f.dst], b.map_of(f)};
    auto cd = cone(cm);
    if (!(b.models[cone_obj] == cd.cone))
        throw std::invalid_argument("backed_cone_witness: model is not the cone");
    ConeWitness<K> w;
    w.f = f;
    w.cone_obj = cone_obj;
    w.i = b.mor_of(f.src, cone_obj, cd.incl_shifted);
    w.p = b.mor_of(cone_obj, f.src, cd.proj_shifted);
    w.j = b.mor_of(f.dst, cone_obj, cd.incl_target);
    w.s = b.mor_of(cone_obj, f.dst, cd.proj_target);
    return w;
}

}  // namespace dgaus

#endif
