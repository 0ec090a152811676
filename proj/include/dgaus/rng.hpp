#ifndef DGAUS_RNG_HPP
#define DGAUS_RNG_HPP

#include <random>

#include "backed.hpp"

namespace dgaus {

// Seeded generators shared by the test suite and the CLI self-check, so runs
// are reproducible from a single 64-bit seed.

template <class K>
Matrix<K> random_matrix(std::mt19937_64& rng, const FieldSpec& fs,
                        std::size_t r, std::size_t c, int span = 5) {
    Matrix<K> m(r, c);
    std::uniform_int_distribution<int> dist(-span, span);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = ScalarOps<K>::from_int(fs, dist(rng));
    return m;
}

// Random complex supported in [lo, hi]: random dims and entries, each
// differential projected onto the kernel of the next so d^2 = 0 holds by
// construction while keeping the maps generic.
template <class K>
CochainComplex<K> random_complex(std::mt19937_64& rng, const FieldSpec& fs,
                                 int lo, int hi, std::size_t maxdim = 3) {
    std::uniform_int_distribution<std::size_t> ddist(0, maxdim);
    std::uniform_int_distribution<int> edist(-3, 3);
    CochainComplex<K> c;
    for (int k = lo; k <= hi; ++k) c.set_dim(k, ddist(rng));
    for (int k = hi - 1; k >= lo; --k) {
        std::size_t r = c.dim(k + 1), cl = c.dim(k);
        if (!r || !cl) continue;
        Matrix<K> raw(r, cl);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < cl; ++j)
                raw(i, j) = ScalarOps<K>::from_int(fs, edist(rng));
        auto dnext = c.diff(k + 1);
        if (!dnext.is_zero()) {
            auto ker = kernel_basis(dnext);
            Matrix<K> coef(ker.cols(), cl);
            std::uniform_int_distribution<int> cdist(-2, 2);
            for (std::size_t i = 0; i < coef.rows(); ++i)
                for (std::size_t j = 0; j < cl; ++j)
                    coef(i, j) = ScalarOps<K>::from_int(fs, cdist(rng));
            raw = ker * coef;
        }
        c.set_diff(k, raw);
    }
    return c;
}

// Random closed degree-0 map src -> dst: random combination of a kernel basis
// of the degree-0 differential of hom(src, dst).
template <class K>
ChainMap<K> random_chain_map(std::mt19937_64& rng, const FieldSpec& fs,
                             const CochainComplex<K>& src, const CochainComplex<K>& dst) {
    auto h = hom_complex(src, dst);
    auto ker = kernel_basis(h.complex.diff(0));
    std::uniform_int_distribution<int> dist(-2, 2);
    std::vector<K> coords(h.complex.dim(0));
    for (std::size_t j = 0; j < ker.cols(); ++j) {
        K c = ScalarOps<K>::from_int(fs, dist(rng));
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += ker(i, j) * c;
    }
    ChainMap<K> f;
    f.source = src;
    f.target = dst;
    f.map = h.from_coords(0, coords);
    return f;
}

// Random closed morphism of a given degree in a category.
template <class K>
Mor<K> random_closed_mor(std::mt19937_64& rng, const FieldSpec& fs,
                         const FinDGCategory<K>& c, std::size_t x, std::size_t y, int deg) {
    auto ker = kernel_basis(c.hom(x, y).diff(deg));
    std::uniform_int_distribution<int> dist(-2, 2);
    auto m = c.zero_mor(x, y, deg);
    for (std::size_t j = 0; j < ker.cols(); ++j) {
        K co = ScalarOps<K>::from_int(fs, dist(rng));
        for (std::size_t i = 0; i < m.coords.size(); ++i) m.coords[i] += ker(i, j) * co;
    }
    return m;
}

// Random backed category on n_objects small complexes, plus a designated zero
// object at index 0.
template <class K>
BackedCategory<K> random_backed_category(std::mt19937_64& rng, const FieldSpec& fs,
                                         std::size_t n_objects, int lo = 0, int hi = 2,
                                         std::size_t maxdim = 2) {
    std::vector<CochainComplex<K>> models;
    models.emplace_back();  // zero object
    for (std::size_t i = 1; i < n_objects; ++i)
        models.push_back(random_complex<K>(rng, fs, lo, hi, maxdim));
    return backed_category(fs, std::move(models), 0);
}

}  // namespace dgaus

#endif
