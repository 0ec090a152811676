#include <catch2/catch_amalgamated.hpp>

#include "dgaus/pretriang.hpp"
#include "dgaus/rng.hpp"

using namespace dgaus;

TEST_CASE("backed categories satisfy all DG category axioms") {
    std::mt19937_64 rng(201);
    for (auto fs : {FieldSpec::rationals(), FieldSpec::prime(101)}) {
        for (int trial = 0; trial < 2; ++trial) {
            if (fs.kind == FieldSpec::Kind::Rationals) {
                auto b = random_backed_category<Rat>(rng, fs, 3, 0, 1, 2);
                auto rep = validate_dg_category(b.cat);
                for (auto& v : rep.violations) INFO(v.describe());
                CHECK(rep.ok());
            } else {
                auto b = random_backed_category<Fp>(rng, fs, 3, 0, 1, 2);
                CHECK(validate_dg_category(b.cat).ok());
            }
        }
    }
}

TEST_CASE("validation detects corrupted tables") {
    std::mt19937_64 rng(203);
    FieldSpec fs = FieldSpec::rationals();
    // build until we get a category with a usable composition entry
    for (int attempt = 0; attempt < 50; ++attempt) {
        auto b = random_backed_category<Rat>(rng, fs, 3, 0, 1, 2);
        auto& c = b.cat;
        REQUIRE(validate_dg_category(c).ok());

        // corrupt a differential: d^2 = 0 or Leibniz must break
        bool corrupted = false;
        for (std::size_t x = 0; x < c.n_objects() && !corrupted; ++x)
            for (std::size_t y = 0; y < c.n_objects() && !corrupted; ++y) {
                auto h = c.hom(x, y);
                if (h.is_zero()) continue;
                for (int k = h.min_deg(); k < h.max_deg(); ++k) {
                    if (!h.dim(k) || !h.dim(k + 1)) continue;
                    auto d = h.diff(k);
                    d(0, 0) += Rat(1);
                    h.set_diff(k, d);
                    c.set_hom(x, y, h);
                    corrupted = true;
                    break;
                }
            }
        if (!corrupted) continue;
        auto rep = validate_dg_category(c);
        CHECK_FALSE(rep.ok());
        // the report names the axiom that broke
        bool named = false;
        for (auto& v : rep.violations)
            if (v.axiom == "d_squared" || v.axiom == "leibniz" || v.axiom == "identity") named = true;
        CHECK(named);
        return;
    }
    FAIL("no corruptible category generated");
}

TEST_CASE("validation detects a broken identity element") {
    std::mt19937_64 rng(205);
    FieldSpec fs = FieldSpec::prime(101);
    auto b = random_backed_category<Fp>(rng, fs, 2, 0, 1, 2);
    auto& c = b.cat;
    std::size_t x = 1;
    if (!c.hom_dim(x, x, 0)) return;
    auto idc = c.identity_coords(x);
    idc[0] += Fp(1, 101);
    c.set_identity(x, idc);
    CHECK_FALSE(validate_dg_category(c).ok());
}

TEST_CASE("opposite category is valid and an involution") {
    std::mt19937_64 rng(207);
    FieldSpec fs = FieldSpec::rationals();
    auto b = random_backed_category<Rat>(rng, fs, 3, 0, 1, 2);
    auto op = opposite(b.cat);
    CHECK(validate_dg_category(op).ok());
    auto opop = opposite(op);
    // double opposite agrees with the original on every table
    for (std::size_t x = 0; x < b.cat.n_objects(); ++x)
        for (std::size_t y = 0; y < b.cat.n_objects(); ++y) {
            CHECK(opop.hom(x, y) == b.cat.hom(x, y));
            for (std::size_t z = 0; z < b.cat.n_objects(); ++z) {
                const auto& hxy = b.cat.hom(x, y);
                const auto& hyz = b.cat.hom(y, z);
                if (hxy.is_zero() || hyz.is_zero()) continue;
                for (int q = hyz.min_deg(); q <= hyz.max_deg(); ++q)
                    for (int p = hxy.min_deg(); p <= hxy.max_deg(); ++p)
                        CHECK(opop.comp_table(x, y, z, q, p) == b.cat.comp_table(x, y, z, q, p));
            }
        }
    // hom complexes are transposed across op
    for (std::size_t x = 0; x < b.cat.n_objects(); ++x)
        for (std::size_t y = 0; y < b.cat.n_objects(); ++y)
            CHECK(op.hom(x, y) == b.cat.hom(y, x));
}

TEST_CASE("homotopy category dimensions via hom-complex cohomology") {
    // models: zero, a point, and a two-term contractible complex
    CochainComplex<Rat> contr;
    contr.set_dim(0, 1);
    contr.set_dim(1, 1);
    Matrix<Rat> one(1, 1);
    one(0, 0) = Rat(1);
    contr.set_diff(0, one);
    auto pt = CochainComplex<Rat>::point(0);
    auto b = backed_category<Rat>(FieldSpec::rationals(),
                                  {CochainComplex<Rat>{}, pt, contr}, 0);
    auto h = homotopy_hom(b.cat, 1, 1);
    REQUIRE(h.size() == 1);
    CHECK(h.at(0) == 1);
    // a contractible complex is invisible in the homotopy category
    CHECK(homotopy_hom(b.cat, 2, 2).empty());
    CHECK(homotopy_hom(b.cat, 1, 2).empty());
    CHECK(homotopy_hom(b.cat, 2, 1).empty());
    CHECK(homotopy_hom(b.cat, 0, 1).empty());
}

TEST_CASE("tensor category of two backed categories is a valid DG category") {
    std::mt19937_64 rng(211);
    FieldSpec fs = FieldSpec::prime(101);
    auto a = random_backed_category<Fp>(rng, fs, 2, 0, 1, 2);
    auto b = random_backed_category<Fp>(rng, fs, 2, 0, 1, 2);
    auto t = tensor_category(a.cat, b.cat);
    auto rep = validate_dg_category(t.cat);
    for (auto& v : rep.violations) INFO(v.describe());
    CHECK(rep.ok());
    // graded dimensions multiply
    for (int k = -2; k <= 4; ++k) {
        std::size_t expect = 0;
        for (int u = -2; u <= 4; ++u)
            expect += a.cat.hom_dim(1, 1, u) * b.cat.hom_dim(1, 1, k - u);
        CHECK(t.cat.hom_dim(t.obj(1, 1), t.obj(1, 1), k) == expect);
    }
}

TEST_CASE("diagonal bimodule of a backed category satisfies the bimodule axioms") {
    std::mt19937_64 rng(213);
    FieldSpec fs = FieldSpec::rationals();
    auto b = random_backed_category<Rat>(rng, fs, 3, 0, 1, 2);
    auto phi = diagonal_bimodule(b.cat);
    auto rep = validate_bimodule(b.cat, b.cat, phi);
    for (auto& v : rep.violations) INFO(v.describe());
    CHECK(rep.ok());
}

TEST_CASE("backed bimodule between two categories validates; restriction too") {
    std::mt19937_64 rng(217);
    FieldSpec fs = FieldSpec::prime(101);
    auto d1 = random_backed_category<Fp>(rng, fs, 3, 0, 1, 1);
    auto d2 = random_backed_category<Fp>(rng, fs, 3, 0, 1, 2);
    auto bb = backed_bimodule(d1, d2);
    CHECK(validate_bimodule(d1.cat, d2.cat, bb.bimod).ok());

    // mutation: corrupt one action table entry
    auto phi = bb.bimod;
    bool corrupted = false;
    for (std::size_t x2 = 0; x2 < phi.n2 && !corrupted; ++x2)
        for (std::size_t y2 = 0; y2 < phi.n2 && !corrupted; ++y2)
            for (std::size_t x1 = 0; x1 < phi.n1 && !corrupted; ++x1)
                for (int q = 0; q <= 2 && !corrupted; ++q)
                    for (int p = 0; p <= 2 && !corrupted; ++p) {
                        auto t = phi.left_table(x2, y2, x1, q, p);
                        if (!t.rows() || !t.cols()) continue;
                        t(0, 0) += Fp(1, 101);
                        phi.set_left_table(x2, y2, x1, q, p, t);
                        corrupted = true;
                    }
    if (corrupted) CHECK_FALSE(validate_bimodule(d1.cat, d2.cat, phi).ok());
}

TEST_CASE("shifted bimodule still satisfies both Leibniz rules") {
    std::mt19937_64 rng(219);
    FieldSpec fs = FieldSpec::rationals();
    auto d1 = random_backed_category<Rat>(rng, fs, 2, 0, 1, 2);
    auto d2 = random_backed_category<Rat>(rng, fs, 2, 0, 1, 2);
    auto bb = backed_bimodule(d1, d2);
    for (int n : {1, -1, 2}) {
        auto sh = shift_bimodule(bb.bimod, n);
        auto rep = validate_bimodule(d1.cat, d2.cat, sh);
        for (auto& v : rep.violations) INFO(v.describe());
        CHECK(rep.ok());
    }
}

TEST_CASE("pretriangulated certificate for a shift/cone-closed object list") {
    std::mt19937_64 rng(223);
    FieldSpec fs = FieldSpec::rationals();
    auto m = random_complex<Rat>(rng, fs, 0, 1, 2);
    auto n = random_complex<Rat>(rng, fs, 0, 1, 2);
    auto f0 = random_chain_map(rng, fs, m, n);
    auto cd = cone(f0);
    // object list: 0, M, N, M[1], N[1], Cone(f), Cone(f)[1]
    auto b = backed_category<Rat>(fs,
        {CochainComplex<Rat>{}, m, n, shift(m, 1), shift(n, 1), cd.cone, shift(cd.cone, 1)}, 0);

    PretriangulatedCertificate<Rat> cert;
    cert.shifts.push_back(backed_shift_witness(b, 1, 3));
    cert.shifts.push_back(backed_shift_witness(b, 2, 4));
    cert.shifts.push_back(backed_shift_witness(b, 5, 6));
    auto c = b.cat;
    Mor<Rat> f = b.mor_of(1, 2, f0.map);
    cert.cones.push_back(backed_cone_witness(b, f, 5));
    ValidationReport rep;
    for (auto& w : cert.shifts) CHECK(check_shift_witness(c, w, &rep));
    for (auto& w : cert.cones) CHECK(check_cone_witness(c, w, &rep));
    for (auto& v : rep.violations) INFO(v.describe());
    CHECK(rep.violations.empty());

    // tampering with the cone witness is caught
    auto bad = cert.cones[0];
    if (!bad.s.coords.empty()) {
        bad.s.coords[0] += Rat(1);
        CHECK_FALSE(check_cone_witness(c, bad));
    }
}

TEST_CASE("full certificate check demands a shift witness per object") {
    std::mt19937_64 rng(227);
    FieldSpec fs = FieldSpec::rationals();
    auto m = random_complex<Rat>(rng, fs, 0, 1, 2);
    auto b = backed_category<Rat>(fs, {CochainComplex<Rat>{}, m, shift(m, 1)}, 0);
    PretriangulatedCertificate<Rat> cert;
    cert.shifts.push_back(backed_shift_witness(b, 1, 2));
    auto rep = check_pretriangulated(b.cat, cert);
    // object 2 has no witness in the list, so the report flags exactly that
    bool flagged = false;
    for (auto& v : rep.violations)
        if (v.axiom == "shift_witness" && v.objects == std::vector<std::size_t>{2}) flagged = true;
    CHECK(flagged);
}
