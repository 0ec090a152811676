#ifndef DGAUS_FUNCTOR_HPP
#define DGAUS_FUNCTOR_HPP

#include "dgcat.hpp"

namespace dgaus {

// DG functor between finite DG categories, stored as data: an object map and
// one matrix per (object pair, degree) giving the action on Hom coordinates.
// Nothing is assumed; validate_functor checks the axioms on the table data.
template <class K>
struct DGFunctor {
    std::vector<std::size_t> obj;
    std::map<std::tuple<std::size_t, std::size_t, int>, Matrix<K>> comps;

    const Matrix<K>& comp(std::size_t x, std::size_t y, int deg,
                          const FinDGCategory<K>& src, const FinDGCategory<K>& dst) const {
        static thread_local Matrix<K> zero;
        auto it = comps.find({x, y, deg});
        if (it != comps.end()) return it->second;
        zero = Matrix<K>::zero(dst.hom_dim(obj[x], obj[y], deg), src.hom_dim(x, y, deg));
        return zero;
    }

    Mor<K> apply(const Mor<K>& f, const FinDGCategory<K>& src, const FinDGCategory<K>& dst) const {
        return Mor<K>{obj[f.src], obj[f.dst], f.deg,
                      comp(f.src, f.dst, f.deg, src, dst).apply(f.coords)};
    }
};

// Identity functor on a category.
template <class K>
DGFunctor<K> identity_functor(const FinDGCategory<K>& c) {
    DGFunctor<K> f;
    f.obj.resize(c.n_objects());
    for (std::size_t x = 0; x < c.n_objects(); ++x) {
        f.obj[x] = x;
        for (std::size_t y = 0; y < c.n_objects(); ++y) {
            const auto& h = c.hom(x, y);
            if (h.is_zero()) continue;
            for (int k = h.min_deg(); k <= h.max_deg(); ++k)
                if (h.dim(k))
                    f.comps[{x, y, k}] = Matrix<K>::identity(h.dim(k), free_one<K>());
        }
    }
    return f;
}

// Checks that F: src -> dst preserves differentials, identities, zero object,
// and composition, degreewise on basis elements.
template <class K>
ValidationReport validate_functor(const FinDGCategory<K>& src, const FinDGCategory<K>& dst,
                                  const DGFunctor<K>& f) {
    ValidationReport rep;
    auto note = [&](const char* ax, std::vector<std::size_t> objs, std::vector<int> degs) {
        rep.violations.push_back(Violation{ax, std::move(objs), std::move(degs), {}, ""});
    };
    if (f.obj.size() != src.n_objects()) {
        note("functor_shape", {}, {});
        return rep;
    }
    for (auto& [key, m] : f.comps) {
        auto [x, y, k] = key;
        if (m.rows() != dst.hom_dim(f.obj[x], f.obj[y], k) || m.cols() != src.hom_dim(x, y, k))
            note("functor_shape", {x, y}, {k});
    }
    if (!rep.ok()) return rep;
    if (f.obj[src.zero_object] != dst.zero_object) note("functor_zero", {src.zero_object}, {});
    for (std::size_t x = 0; x < src.n_objects(); ++x) {
        if (src.hom_dim(x, x, 0) && dst.hom_dim(f.obj[x], f.obj[x], 0)) {
            auto fid = f.apply(src.identity(x), src, dst);
            if (!dst.mor_equal(fid, dst.identity(f.obj[x]))) note("functor_identity", {x}, {});
        }
        for (std::size_t y = 0; y < src.n_objects(); ++y) {
            const auto& h = src.hom(x, y);
            if (h.is_zero()) continue;
            for (int k = h.min_deg(); k <= h.max_deg(); ++k)
                for (std::size_t t = 0; t < h.dim(k); ++t) {
                    auto b = src.basis_mor(x, y, k, t);
                    auto lhs = f.apply(src.differential(b), src, dst);
                    auto rhs = dst.differential(f.apply(b, src, dst));
                    if (!dst.mor_equal(lhs, rhs)) note("functor_differential", {x, y}, {k});
                }
        }
    }
    for (std::size_t x = 0; x < src.n_objects(); ++x)
        for (std::size_t y = 0; y < src.n_objects(); ++y)
            for (std::size_t z = 0; z < src.n_objects(); ++z) {
                const auto& hxy = src.hom(x, y);
                const auto& hyz = src.hom(y, z);
                if (hxy.is_zero() || hyz.is_zero()) continue;
                for (int p = hxy.min_deg(); p <= hxy.max_deg(); ++p)
                    for (int q = hyz.min_deg(); q <= hyz.max_deg(); ++q)
                        for (std::size_t a = 0; a < hxy.dim(p); ++a)
                            for (std::size_t b = 0; b < hyz.dim(q); ++b) {
                                auto g = src.basis_mor(x, y, p, a);
                                auto h = src.basis_mor(y, z, q, b);
                                auto lhs = f.apply(src.compose(h, g), src, dst);
                                auto rhs = dst.compose(f.apply(h, src, dst), f.apply(g, src, dst));
                                if (!dst.mor_equal(lhs, rhs))
                                    note("functor_composition", {x, y, z}, {p, q});
                            }
            }
    return rep;
}

// Full subcategory on a list of kept objects (keep[0] must be the designated
// zero object); returns the category plus the embedding functor.
template <class K>
struct FullSubcategory {
    FinDGCategory<K> cat;
    std::vector<std::size_t> keep;  // subcategory index -> original index
    DGFunctor<K> incl;
};

template <class K>
FullSubcategory<K> full_subcategory(const FinDGCategory<K>& c, std::vector<std::size_t> keep) {
    FullSubcategory<K> r;
    r.keep = std::move(keep);
    auto& s = r.cat;
    s.field = c.field;
    s.zero_object = 0;
    if (r.keep.empty() || r.keep[0] != c.zero_object)
        throw std::invalid_argument("full_subcategory: keep[0] must be the zero object");
    std::size_t n = r.keep.size();
    for (auto x : r.keep) s.object_names.push_back(c.object_names[x]);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) s.set_hom(x, y, c.hom(r.keep[x], r.keep[y]));
    for (std::size_t x = 0; x < n; ++x)
        if (s.hom_dim(x, x, 0)) s.set_identity(x, c.identity_coords(r.keep[x]));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const auto& hxy = s.hom(x, y);
                const auto& hyz = s.hom(y, z);
                if (hxy.is_zero() || hyz.is_zero()) continue;
                for (int q = hyz.min_deg(); q <= hyz.max_deg(); ++q)
                    for (int p = hxy.min_deg(); p <= hxy.max_deg(); ++p)
                        if (hyz.dim(q) && hxy.dim(p) && s.hom_dim(x, z, p + q))
                            s.set_comp_table(x, y, z, q, p,
                                             c.comp_table(r.keep[x], r.keep[y], r.keep[z], q, p));
            }
    r.incl.obj = r.keep;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const auto& h = s.hom(x, y);
            if (h.is_zero()) continue;
            for (int k = h.min_deg(); k <= h.max_deg(); ++k)
                if (h.dim(k)) r.incl.comps[{x, y, k}] = Matrix<K>::identity(h.dim(k), free_one<K>());
        }
    return r;
}

}  // namespace dgaus

#endif
