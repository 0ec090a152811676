#ifndef DGAUS_BACKED_HPP
#define DGAUS_BACKED_HPP

#include "bimodule.hpp"

namespace dgaus {

// DG category presented as a full subcategory of complexes: Hom(x, y) is the
// hom complex of the underlying models and composition is actual composition
// of graded maps.  All category axioms hold by construction, which makes this
// the workhorse for randomized instances; the tables are still explicit so
// validate_dg_category exercises real data.
template <class K>
struct BackedCategory {
    FinDGCategory<K> cat;
    std::vector<CochainComplex<K>> models;
    std::map<std::pair<std::size_t, std::size_t>, HomComplex<K>> homs;

    Mor<K> mor_of(std::size_t x, std::size_t y, const GradedMap<K>& f) const {
        return Mor<K>{x, y, f.degree, homs.at({x, y}).to_coords(f)};
    }
    GradedMap<K> map_of(const Mor<K>& m) const {
        return homs.at({m.src, m.dst}).from_coords(m.deg, m.coords);
    }
};

// models[zero_index] should be the zero complex; a designated zero object is
// part of the category data.
template <class K>
BackedCategory<K> backed_category(const FieldSpec& fs,
                                  std::vector<CochainComplex<K>> models,
                                  std::size_t zero_index) {
    BackedCategory<K> b;
    b.models = std::move(models);
    auto& c = b.cat;
    c.field = fs;
    c.zero_object = zero_index;
    std::size_t n = b.models.size();
    for (std::size_t x = 0; x < n; ++x) c.object_names.push_back("C" + std::to_string(x));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            auto h = hom_complex(b.models[x], b.models[y]);
            c.set_hom(x, y, h.complex);
            b.homs[{x, y}] = std::move(h);
        }
    for (std::size_t x = 0; x < n; ++x)
        if (c.hom_dim(x, x, 0))
            c.set_identity(x, b.homs.at({x, x}).to_coords(gm_identity(b.models[x])));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const auto& hxy = c.hom(x, y);
                const auto& hyz = c.hom(y, z);
                if (hxy.is_zero() || hyz.is_zero()) continue;
                for (int q = hyz.min_deg(); q <= hyz.max_deg(); ++q)
                    for (int p = hxy.min_deg(); p <= hxy.max_deg(); ++p) {
                        std::size_t dq = hyz.dim(q), dp = hxy.dim(p);
                        if (!dq || !dp || !c.hom_dim(x, z, p + q)) continue;
                        Matrix<K> m(c.hom_dim(x, z, p + q), dq * dp);
                        for (std::size_t gi = 0; gi < dq; ++gi) {
                            std::vector<K> gc(dq);
                            gc[gi] = free_one<K>();
                            auto g = b.homs.at({y, z}).from_coords(q, gc);
                            for (std::size_t fi = 0; fi < dp; ++fi) {
                                std::vector<K> fc(dp);
                                fc[fi] = free_one<K>();
                                auto f = b.homs.at({x, y}).from_coords(p, fc);
                                auto gf = gm_compose(g, f, b.models[x], b.models[y], b.models[z]);
                                auto out = b.homs.at({x, z}).to_coords(gf);
                                for (std::size_t r = 0; r < out.size(); ++r) m(r, gi * dp + fi) = out[r];
                            }
                        }
                        c.set_comp_table(x, y, z, q, p, std::move(m));
                    }
            }
    return b;
}

// Bimodule backed by hom complexes between two backed categories:
// phi(x2, x1) = Hom(model1[x1], model2[x2]), left action by postcomposition
// in D2, right action by precomposition in D1.
template <class K>
struct BackedBimodule {
    FinDGBimodule<K> bimod;
    std::map<std::pair<std::size_t, std::size_t>, HomComplex<K>> homs;
};

template <class K>
BackedBimodule<K> backed_bimodule(const BackedCategory<K>& d1, const BackedCategory<K>& d2) {
    BackedBimodule<K> b;
    auto& phi = b.bimod;
    phi.field = d1.cat.field;
    phi.n1 = d1.models.size();
    phi.n2 = d2.models.size();
    for (std::size_t x2 = 0; x2 < phi.n2; ++x2)
        for (std::size_t x1 = 0; x1 < phi.n1; ++x1) {
            auto h = hom_complex(d1.models[x1], d2.models[x2]);
            phi.set(x2, x1, h.complex);
            b.homs[{x2, x1}] = std::move(h);
        }
    for (std::size_t x2 = 0; x2 < phi.n2; ++x2)
        for (std::size_t x1 = 0; x1 < phi.n1; ++x1) {
            const auto& v = phi.at(x2, x1);
            if (v.is_zero()) continue;
            for (int p = v.min_deg(); p <= v.max_deg(); ++p) {
                std::size_t dp = v.dim(p);
                if (!dp) continue;
                for (std::size_t y2 = 0; y2 < phi.n2; ++y2) {
                    const auto& h2 = d2.cat.hom(x2, y2);
                    if (h2.is_zero()) continue;
                    for (int q = h2.min_deg(); q <= h2.max_deg(); ++q) {
                        std::size_t dq = h2.dim(q);
                        if (!dq || !phi.dim(y2, x1, p + q)) continue;
                        Matrix<K> m(phi.dim(y2, x1, p + q), dq * dp);
                        for (std::size_t gi = 0; gi < dq; ++gi) {
                            std::vector<K> gc(dq);
                            gc[gi] = free_one<K>();
                            auto f2 = d2.homs.at({x2, y2}).from_coords(q, gc);
                            for (std::size_t mi = 0; mi < dp; ++mi) {
                                std::vector<K> mc(dp);
                                mc[mi] = free_one<K>();
                                auto mu = b.homs.at({x2, x1}).from_coords(p, mc);
                                auto out = b.homs.at({y2, x1}).to_coords(gm_compose(
                                    f2, mu, d1.models[x1], d2.models[x2], d2.models[y2]));
                                for (std::size_t r = 0; r < out.size(); ++r) m(r, gi * dp + mi) = out[r];
                            }
                        }
                        phi.set_left_table(x2, y2, x1, q, p, std::move(m));
                    }
                }
                for (std::size_t y1 = 0; y1 < phi.n1; ++y1) {
                    const auto& h1 = d1.cat.hom(y1, x1);
                    if (h1.is_zero()) continue;
                    for (int q = h1.min_deg(); q <= h1.max_deg(); ++q) {
                        std::size_t dq = h1.dim(q);
                        if (!dq || !phi.dim(x2, y1, p + q)) continue;
                        Matrix<K> m(phi.dim(x2, y1, p + q), dp * dq);
                        for (std::size_t mi = 0; mi < dp; ++mi) {
                            std::vector<K> mc(dp);
                            mc[mi] = free_one<K>();
                            auto mu = b.homs.at({x2, x1}).from_coords(p, mc);
                            for (std::size_t gi = 0; gi < dq; ++gi) {
                                std::vector<K> gc(dq);
                                gc[gi] = free_one<K>();
                                auto f1 = d1.homs.at({y1, x1}).from_coords(q, gc);
                                auto out = b.homs.at({x2, y1}).to_coords(gm_compose(
                                    mu, f1, d1.models[y1], d1.models[x1], d2.models[x2]));
                                for (std::size_t r = 0; r < out.size(); ++r) m(r, mi * dq + gi) = out[r];
                            }
                        }
                        phi.set_right_table(x2, x1, y1, q, p, std::move(m));
                    }
                }
            }
        }
    return b;
}

}  // namespace dgaus

#endif
