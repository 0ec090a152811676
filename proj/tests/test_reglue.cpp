#include <catch2/catch_amalgamated.hpp>

#include "dgaus/glue_checks.hpp"
#include "dgaus/reglue.hpp"
#include "dgaus/rng.hpp"

using namespace dgaus;

namespace {

template <class K>
struct GlueFixture {
    BackedCategory<K> b1, b2;
    FinDGBimodule<K> phi;
    Gluing<K> g;

    GlueFixture(std::mt19937_64& rng, const FieldSpec& fs) {
        CochainComplex<K> m1, m2;
        do m1 = random_complex<K>(rng, fs, 0, 1, 1); while (!m1.total_dim());
        do m2 = random_complex<K>(rng, fs, 0, 1, 1); while (!m2.total_dim());
        b1 = backed_category<K>(fs, {CochainComplex<K>{}, m1}, 0);
        b2 = backed_category<K>(fs, {CochainComplex<K>{}, m2}, 0);
        phi = backed_bimodule(b1, b2).bimod;
        g = Gluing<K>(b1.cat, b2.cat, phi);
    }

    std::size_t random_object(std::mt19937_64& rng, const FieldSpec& fs,
                              std::size_t x1, std::size_t x2) {
        const auto& v = phi.at(x2, x1);
        std::vector<K> mu(v.dim(0));
        if (!mu.empty()) {
            auto ker = kernel_basis(v.diff(0));
            std::uniform_int_distribution<int> dist(-2, 2);
            for (std::size_t j = 0; j < ker.cols(); ++j) {
                K c = ScalarOps<K>::from_int(fs, dist(rng));
                for (std::size_t i = 0; i < mu.size(); ++i) mu[i] += ker(i, j) * c;
            }
        }
        return g.add_object(GluedObject<K>{x1, x2, mu});
    }
};

template <class K>
Gluing<K> upper_triangular(const FieldSpec& fs, BackedCategory<K>& b1, BackedCategory<K>& b2) {
    auto pt = CochainComplex<K>::point(0);
    b1 = backed_category<K>(fs, {CochainComplex<K>{}, pt}, 0);
    b2 = backed_category<K>(fs, {CochainComplex<K>{}, pt}, 0);
    FinDGBimodule<K> phi;
    phi.field = fs;
    phi.n1 = phi.n2 = 2;
    phi.set(1, 1, CochainComplex<K>::point(-1));
    Matrix<K> one(1, 1);
    one(0, 0) = free_one<K>();
    phi.set_left_table(1, 1, 1, 0, -1, one);
    phi.set_right_table(1, 1, 1, 0, -1, one);
    Gluing<K> g(b1.cat, b2.cat, phi);
    g.embed1(1);
    g.embed2(1);
    g.build();
    return g;
}

// Inclusion functor for a backed category extended by extra models: object map
// into the first objects of the larger category, identity on morphisms.
template <class K>
DGFunctor<K> inclusion_functor(const FinDGCategory<K>& small) {
    DGFunctor<K> f;
    for (std::size_t x = 0; x < small.n_objects(); ++x) f.obj.push_back(x);
    for (std::size_t x = 0; x < small.n_objects(); ++x)
        for (std::size_t y = 0; y < small.n_objects(); ++y) {
            const auto& h = small.hom(x, y);
            for (int k = h.min_deg(); k <= h.max_deg(); ++k)
                if (h.dim(k))
                    f.comps[{x, y, k}] = Matrix<K>::identity(h.dim(k), free_one<K>());
        }
    return f;
}

}  // namespace

TEST_CASE("quotient by a subspace has the right dimensions and induced differential") {
    FieldSpec fs = FieldSpec::rationals();
    // 0 -> Q^2 -> Q -> 0 with d(a, b) = a + b; kill the relation (1, -1) in degree 0
    CochainComplex<Rat> c;
    c.set_dim(0, 2);
    c.set_dim(1, 1);
    Matrix<Rat> d(1, 2);
    d(0, 0) = Rat(1);
    d(0, 1) = Rat(1);
    c.set_diff(0, d);
    std::map<int, Matrix<Rat>> rel;
    Matrix<Rat> r(2, 1);
    r(0, 0) = Rat(1);
    r(1, 0) = Rat(-1);
    rel[0] = r;
    auto q = subspace_quotient(c, rel);
    CHECK(q.d_preserves_relations);
    CHECK(q.quotient.dim(0) == 1);
    CHECK(q.quotient.dim(1) == 1);
    // proj o incl = id in every degree
    CHECK((q.proj.at(0) * q.incl.at(0)) == Matrix<Rat>::identity(1, Rat(1)));
    // the induced differential kills nothing: (a, b) with a + b != 0 survives
    CHECK_FALSE(q.quotient.diff(0).is_zero());

    // the relation (1, 0) is not d-stable: d maps it to a nonzero class
    rel[0] = Matrix<Rat>::zero(2, 1);
    rel[0](0, 0) = Rat(1);
    auto q2 = subspace_quotient(c, rel);
    CHECK_FALSE(q2.d_preserves_relations);
}

TEST_CASE("base change along identity functors reproduces the gluing up to quasi-isomorphism") {
    FieldSpec fs = FieldSpec::rationals();
    BackedCategory<Rat> b1, b2;
    auto g = upper_triangular<Rat>(fs, b1, b2);
    auto rep = reglue(g, b1.cat, identity_functor(b1.cat), b2.cat, identity_functor(b2.cat));
    CHECK(rep.tau1_qff);
    CHECK(rep.tau2_qff);
    CHECK(rep.relations_closed);
    CHECK(rep.comparison_chain_maps);
    CHECK(rep.comparison_quasi_iso);
    CHECK(rep.hom_cohomology_preserved);
    CHECK(validate_bimodule(b1.cat, b2.cat, rep.bimodule.phi).ok());
    CHECK(validate_dg_category(rep.gluing.cat).ok());
}

TEST_CASE("identity base change on random gluings preserves all structure") {
    std::mt19937_64 rng(701);
    for (auto fs : {FieldSpec::rationals(), FieldSpec::prime(101)}) {
        auto run = [&](auto tag) {
            using K = decltype(tag);
            for (int trial = 0; trial < 3; ++trial) {
                GlueFixture<K> fx(rng, fs);
                fx.g.embed1(1);
                fx.g.embed2(1);
                fx.random_object(rng, fs, 1, 1);
                fx.g.build();
                auto rep = reglue(fx.g, fx.b1.cat, identity_functor(fx.b1.cat), fx.b2.cat,
                                  identity_functor(fx.b2.cat));
                CHECK(rep.ok());
                CHECK(validate_bimodule(fx.b1.cat, fx.b2.cat, rep.bimodule.phi).ok());
            }
        };
        if (fs.kind == FieldSpec::Kind::Rationals) run(Rat());
        else run(Fp());
    }
}

TEST_CASE("base change along fully faithful embeddings is a quasi-isomorphism") {
    std::mt19937_64 rng(709);
    FieldSpec fs = FieldSpec::prime(101);
    for (int trial = 0; trial < 3; ++trial) {
        GlueFixture<Fp> fx(rng, fs);
        fx.g.embed1(1);
        fx.g.embed2(1);
        fx.random_object(rng, fs, 1, 1);
        fx.g.build();
        // extend each side by an extra shifted model; the inclusion is fully faithful
        std::vector<CochainComplex<Fp>> mods1{CochainComplex<Fp>{}, fx.b1.models[1],
                                              shift(fx.b1.models[1], 1)};
        std::vector<CochainComplex<Fp>> mods2{CochainComplex<Fp>{}, fx.b2.models[1],
                                              shift(fx.b2.models[1], 1)};
        auto e1 = backed_category<Fp>(fs, mods1, 0);
        auto e2 = backed_category<Fp>(fs, mods2, 0);
        auto tau1 = inclusion_functor(fx.b1.cat);
        auto tau2 = inclusion_functor(fx.b2.cat);
        REQUIRE(validate_functor(fx.b1.cat, e1.cat, tau1).ok());
        REQUIRE(validate_functor(fx.b2.cat, e2.cat, tau2).ok());
        auto rep = reglue(fx.g, e1.cat, tau1, e2.cat, tau2);
        CHECK(rep.ok());
        CHECK(validate_bimodule(e1.cat, e2.cat, rep.bimodule.phi).ok());
        CHECK(validate_dg_category(rep.gluing.cat).ok());
    }
}

TEST_CASE("transport along a bimodule quasi-isomorphism is quasi-fully-faithful") {
    std::mt19937_64 rng(719);
    FieldSpec fs = FieldSpec::rationals();
    GlueFixture<Rat> fx(rng, fs);
    fx.g.embed1(1);
    fx.g.embed2(1);
    fx.random_object(rng, fs, 1, 1);
    fx.g.build();

    // the identity map transports every object to itself
    auto idrep = transport_gluing(fx.g, fx.phi, identity_bimodule_map(fx.phi));
    CHECK(idrep.ok());
    CHECK(idrep.objects.size() == fx.g.objects.size());

    // the unit comparison map of the identity base change is a nontrivial
    // quasi-isomorphism into the quotient bimodule
    auto t1 = identity_functor(fx.b1.cat);
    auto t2 = identity_functor(fx.b2.cat);
    auto rb = reglue_bimodule(fx.g, fx.b1.cat, t1, fx.b2.cat, t2);
    BimoduleMap<Rat> xi;
    for (std::size_t x2 = 0; x2 < fx.phi.n2; ++x2)
        for (std::size_t x1 = 0; x1 < fx.phi.n1; ++x1)
            xi.comps[{x2, x1}] =
                reglue_comparison(fx.g, fx.b1.cat, t1, fx.b2.cat, t2, rb, x2, x1).map;
    auto rep = transport_gluing(fx.g, rb.phi, xi);
    CHECK(rep.map_report.chain_maps);
    CHECK(rep.map_report.left_compatible);
    CHECK(rep.map_report.right_compatible);
    CHECK(rep.map_report.quasi_iso);
    CHECK(rep.hom_cohomology_preserved);
}
