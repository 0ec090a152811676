#include <catch2/catch_amalgamated.hpp>

#include "dgaus/quiver.hpp"

using namespace dgaus;

namespace {

template <class K>
AuslanderAlgebra<K> line_algebra(const FieldSpec& fs, unsigned nilp, std::size_t n) {
    auto r = truncated_line<K>(fs, nilp);
    auto rad = ideal_principal(r, r.basis_elt(1));  // (t)
    return build_auslander(r, rad, n);
}

}  // namespace

TEST_CASE("one-step construction returns the ring itself") {
    auto fs = FieldSpec::rationals();
    auto r = truncated_line<Rat>(fs, 3);
    auto a = build_auslander(r, ideal_zero(r), 1);
    REQUIRE(a.total.dim() == r.dim());
    REQUIRE(validate_algebra(a.total, /*require_commutative=*/true).ok());
    // single block, represented by the identity coordinate choice
    for (std::size_t u = 0; u < r.dim(); ++u)
        for (std::size_t v = 0; v < r.dim(); ++v)
            REQUIRE(a.total.mul(a.total.basis_elt(u), a.total.basis_elt(v)) ==
                    a.block_coords(1, 1, r.mul(a.reps[0][0].column(u), a.reps[0][0].column(v))));
}

TEST_CASE("dual numbers, two steps: dimension five with the expected quiver") {
    for (auto fs : {FieldSpec::rationals(), FieldSpec::prime(101)}) {
        auto run = [&](auto tag) {
            using K = decltype(tag);
            auto a = line_algebra<K>(fs, 2, 2);
            REQUIRE(a.total.dim() == 5);
            REQUIRE(a.bdim(1, 1) == 2);
            REQUIRE(a.bdim(1, 2) == 1);
            REQUIRE(a.bdim(2, 1) == 1);
            REQUIRE(a.bdim(2, 2) == 1);
            REQUIRE(validate_algebra(a.total).ok());
            REQUIRE(check_endomorphism_embedding(a));
            REQUIRE(validate_dg_category(a.cat).ok());
            REQUIRE_FALSE(a.first_row_nonzero_annihilator);

            auto qp = quiver_presentation(a);
            REQUIRE(qp.vertices == 2);
            REQUIRE(qp.radical.cols() == 3);
            REQUIRE(qp.nilpotency == 3);
            REQUIRE(qp.arrows.size() == 2);
            std::size_t fwd = 0, back = 0;
            for (auto& arr : qp.arrows) {
                if (arr.src == 1 && arr.dst == 2) ++fwd;
                if (arr.src == 2 && arr.dst == 1) ++back;
            }
            REQUIRE(fwd == 1);
            REQUIRE(back == 1);
            REQUIRE(qp.relations.size() == 1);
            REQUIRE(qp.relations[0].length == 2);
            REQUIRE(qp.relations[0].src == 2);
            REQUIRE(qp.relations[0].dst == 2);
        };
        if (fs.kind == FieldSpec::Kind::Rationals) run(Rat()); else run(Fp());
    }
}

TEST_CASE("dual numbers, three steps: dimension eleven, four arrows, three relations") {
    auto fs = FieldSpec::rationals();
    auto a = line_algebra<Rat>(fs, 2, 3);
    REQUIRE(a.total.dim() == 11);
    REQUIRE(validate_algebra(a.total).ok());
    REQUIRE(check_endomorphism_embedding(a));
    REQUIRE(validate_dg_category(a.cat).ok());

    // orthogonal idempotents summing to the unit
    std::vector<Rat> sum(a.total.dim());
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += a.eps[i][t];
        for (std::size_t j = 0; j < 3; ++j) {
            auto p = a.total.mul(a.eps[i], a.eps[j]);
            if (i == j) REQUIRE(p == a.eps[i]);
            else REQUIRE(a.total.is_zero_vec(p));
        }
    }
    REQUIRE(sum == a.total.unit);

    auto qp = quiver_presentation(a);
    REQUIRE(qp.vertices == 3);
    REQUIRE(qp.arrows.size() == 4);
    REQUIRE(qp.nilpotency == 4);
    REQUIRE(qp.relations.size() == 3);
    for (auto& rel : qp.relations) REQUIRE(rel.length == 2);
}

TEST_CASE("block dimension formula for truncated polynomial lines") {
    auto fs = FieldSpec::prime(7);
    unsigned nilp = 4;
    auto a = line_algebra<Fp>(fs, nilp, nilp);
    for (std::size_t i = 1; i <= nilp; ++i)
        for (std::size_t j = 1; j <= nilp; ++j)
            REQUIRE(a.bdim(i, j) == nilp + 1 - std::max(i, j));
    REQUIRE(a.total.dim() == 30);
    REQUIRE(validate_algebra(a.total).ok());
    REQUIRE(check_endomorphism_embedding(a));
}

TEST_CASE("peeling ideal and corner recursion") {
    auto fs = FieldSpec::rationals();
    for (std::size_t n : {2u, 3u}) {
        auto a = line_algebra<Rat>(fs, 2, n);
        auto peel = ideal_csI(a);
        REQUIRE(peel.ok());
        REQUIRE(peel.quotient.alg.dim() == 1);  // R / r here
        REQUIRE(corner_matches_smaller(a));
    }
    auto a3 = line_algebra<Rat>(fs, 3, 3);
    auto peel = ideal_csI(a3);
    REQUIRE(peel.ok());
    REQUIRE(peel.quotient.alg.dim() == 1);  // still R / r
    REQUIRE(corner_matches_smaller(a3));
}

TEST_CASE("colon grid reproduces the power grid on a full-length line") {
    auto fs = FieldSpec::rationals();
    auto r = truncated_line<Rat>(fs, 3);
    auto rad = ideal_principal(r, r.basis_elt(1));
    auto gp = grid_from_powers(r, rad, 3);
    auto gc = grid_from_colons(r, rad, 3);
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = i + 1; j <= 4; ++j)
            REQUIRE(ideal_equal(gp.at(i, j), gc.at(i, j)));
    REQUIRE(validate_grid(r, gc).ok());
    auto a = build_generalized(r, gc, rad);
    REQUIRE(a.total.dim() == 14);
    REQUIRE(check_endomorphism_embedding(a));
    REQUIRE_FALSE(a.first_row_nonzero_annihilator);
}

TEST_CASE("short colon grid flags a nonzero annihilator row and still embeds") {
    auto fs = FieldSpec::rationals();
    auto r = truncated_line<Rat>(fs, 3);
    auto rad = ideal_principal(r, r.basis_elt(1));
    auto gc = grid_from_colons(r, rad, 2);
    REQUIRE(validate_grid(r, gc).ok());
    auto a = build_generalized(r, gc, rad);
    REQUIRE(a.first_row_nonzero_annihilator);
    REQUIRE(a.total.dim() == 5);  // End(R/r^2 + R/r) of the length-three line
    REQUIRE(validate_algebra(a.total).ok());
    REQUIRE(check_endomorphism_embedding(a));
}

TEST_CASE("non-nilpotent input is rejected") {
    auto fs = FieldSpec::rationals();
    auto r = truncated_line<Rat>(fs, 3);
    auto rad = ideal_principal(r, r.basis_elt(1));
    REQUIRE_THROWS_AS(build_auslander(r, rad, 2), std::invalid_argument);
}

TEST_CASE("two-variable base ring builds and certifies") {
    auto fs = FieldSpec::prime(5);
    // k[x,y]/(x^2, y^2), radical (x, y), nilpotent of order 3
    auto r = truncated_polynomial_ring<Fp>(fs, 2, {Monomial{2, 0}, Monomial{0, 2}});
    Matrix<Fp> gens(r.dim(), 2);
    for (std::size_t b = 0; b < r.dim(); ++b)
        if (r.basis_names[b] == "x0" || r.basis_names[b] == "x1") gens(b, b == 1 ? 0 : 1) = Fp(1, 5);
    auto rad = ideal_from_generators(r, gens);
    REQUIRE(rad.dim() == 3);
    auto a = build_auslander(r, rad, 3);
    REQUIRE(validate_algebra(a.total).ok());
    REQUIRE(check_endomorphism_embedding(a));
    REQUIRE(validate_dg_category(a.cat).ok());
    auto qp = quiver_presentation(a);
    REQUIRE(qp.vertices == 3);
    auto peel = ideal_csI(a);
    REQUIRE(peel.ok());
}
