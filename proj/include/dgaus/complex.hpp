#ifndef DGAUS_COMPLEX_HPP
#define DGAUS_COMPLEX_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"

namespace dgaus {

// Finitely supported Z-graded complex of finite-dimensional vector spaces
// with degree +1 differential.  Degrees outside the stored support have
// dimension 0.
template <class K>
class CochainComplex {
public:
    CochainComplex() = default;

    void set_dim(int deg, std::size_t dim) {
        if (dim == 0) dims_.erase(deg); else dims_[deg] = dim;
    }
    void set_diff(int deg, Matrix<K> d) {
        if (d.rows() != dim(deg + 1) || d.cols() != dim(deg))
            throw std::invalid_argument("CochainComplex: differential shape mismatch");
        if (d.is_zero()) diffs_.erase(deg); else diffs_[deg] = std::move(d);
    }

    std::size_t dim(int deg) const {
        auto it = dims_.find(deg);
        return it == dims_.end() ? 0 : it->second;
    }
    Matrix<K> diff(int deg) const {
        auto it = diffs_.find(deg);
        if (it != diffs_.end()) return it->second;
        return Matrix<K>::zero(dim(deg + 1), dim(deg));
    }

    int min_deg() const { return dims_.empty() ? 0 : dims_.begin()->first; }
    int max_deg() const { return dims_.empty() ? 0 : dims_.rbegin()->first; }
    bool is_zero() const { return dims_.empty(); }
    std::size_t total_dim() const {
        std::size_t t = 0;
        for (auto& [k, d] : dims_) t += d;
        return t;
    }
    const std::map<int, std::size_t>& dims() const { return dims_; }

    // d^{k+1} o d^k = 0 in every degree; violation is a hard error elsewhere.
    bool valid() const {
        for (auto& [k, m] : diffs_) {
            if (m.rows() != dim(k + 1) || m.cols() != dim(k)) return false;
            if (!(diff(k + 1) * m).is_zero()) return false;
        }
        return true;
    }

    bool operator==(const CochainComplex& o) const {
        if (dims_ != o.dims_) return false;
        for (auto& [k, d] : dims_)
            if (diff(k) != o.diff(k)) return false;
        return true;
    }

    static CochainComplex point(int deg, std::size_t dim = 1) {
        CochainComplex c;
        c.set_dim(deg, dim);
        return c;
    }

private:
    std::map<int, std::size_t> dims_;
    std::map<int, Matrix<K>> diffs_;
};

// Homogeneous graded map f: C -> D of fixed degree; component in degree k
// maps C^k to D^{k+deg}.  Closedness/chainness is checked, not assumed.
template <class K>
struct GradedMap {
    int degree = 0;
    std::map<int, Matrix<K>> comps;  // only nonzero components stored

    Matrix<K> comp(const CochainComplex<K>& src, const CochainComplex<K>& dst, int k) const {
        auto it = comps.find(k);
        if (it != comps.end()) return it->second;
        return Matrix<K>::zero(dst.dim(k + degree), src.dim(k));
    }
    void set_comp(int k, Matrix<K> m) {
        if (m.is_zero()) comps.erase(k); else comps[k] = std::move(m);
    }
    bool is_zero() const {
        for (auto& [k, m] : comps)
            if (!m.is_zero()) return false;
        return true;
    }
};

template <class K>
GradedMap<K> gm_add(const GradedMap<K>& a, const GradedMap<K>& b,
                    const CochainComplex<K>& src, const CochainComplex<K>& dst) {
    if (a.degree != b.degree) throw std::invalid_argument("gm_add: degree mismatch");
    GradedMap<K> r;
    r.degree = a.degree;
    for (int k = std::min(src.min_deg(), dst.min_deg()) - 2; k <= std::max(src.max_deg(), dst.max_deg()) + 2; ++k) {
        auto m = a.comp(src, dst, k) + b.comp(src, dst, k);
        r.set_comp(k, std::move(m));
    }
    return r;
}

template <class K>
GradedMap<K> gm_scale(const GradedMap<K>& a, const K& c) {
    GradedMap<K> r;
    r.degree = a.degree;
    for (auto& [k, m] : a.comps) r.set_comp(k, m.scaled(c));
    return r;
}

// g after f, degrees add.
template <class K>
GradedMap<K> gm_compose(const GradedMap<K>& g, const GradedMap<K>& f,
                        const CochainComplex<K>& src, const CochainComplex<K>& mid,
                        const CochainComplex<K>& dst) {
    GradedMap<K> r;
    r.degree = f.degree + g.degree;
    for (auto& [k, fm] : f.comps) {
        auto gm = g.comp(mid, dst, k + f.degree);
        r.set_comp(k, gm * fm);
    }
    return r;
}

// Hom-complex differential d(f) = d_D o f - (-1)^{deg f} f o d_C.
template <class K>
GradedMap<K> gm_diff(const GradedMap<K>& f, const CochainComplex<K>& src,
                     const CochainComplex<K>& dst) {
    GradedMap<K> r;
    r.degree = f.degree + 1;
    bool odd = (f.degree % 2) != 0;
    for (int k = src.min_deg() - 1; k <= src.max_deg(); ++k) {
        Matrix<K> m = dst.diff(k + f.degree) * f.comp(src, dst, k);
        Matrix<K> n = f.comp(src, dst, k + 1) * src.diff(k);
        m = odd ? m + n : m - n;
        r.set_comp(k, std::move(m));
    }
    return r;
}

template <class K>
bool gm_equal(const GradedMap<K>& a, const GradedMap<K>& b,
              const CochainComplex<K>& src, const CochainComplex<K>& dst) {
    if (a.degree != b.degree) return false;
    for (int k = src.min_deg() - 2; k <= src.max_deg() + 2; ++k)
        if (a.comp(src, dst, k) != b.comp(src, dst, k)) return false;
    return true;
}

template <class K>
GradedMap<K> gm_identity(const CochainComplex<K>& c) {
    GradedMap<K> r;
    r.degree = 0;
    for (auto& [k, d] : c.dims()) r.set_comp(k, Matrix<K>::identity(d, free_one<K>()));
    return r;
}

// Chain map: closed degree-0 graded map between fixed complexes.
template <class K>
struct ChainMap {
    CochainComplex<K> source, target;
    GradedMap<K> map;  // degree 0

    bool valid() const {
        if (map.degree != 0) return false;
        return gm_diff(map, source, target).is_zero();
    }
};

// --- shift -----------------------------------------------------------------

// (C[n])^k = C^{k+n}, differential (-1)^n d.
template <class K>
CochainComplex<K> shift(const CochainComplex<K>& c, int n) {
    CochainComplex<K> r;
    for (auto& [k, d] : c.dims()) r.set_dim(k - n, d);
    for (auto& [k, d] : c.dims()) {
        auto m = c.diff(k);
        if (n % 2 != 0) m = -m;
        if (m.rows() || m.cols()) {
            if (r.dim(k - n) == c.dim(k) && r.dim(k - n + 1) == c.dim(k + 1))
                r.set_diff(k - n, std::move(m));
        }
    }
    return r;
}

// --- cone ------------------------------------------------------------------

// Cone(f)^k = N^k (+) M^{k+1} for f : M -> N, differential d(n,m) =
// (dn + f(m), -dm).  Structure maps i, p, j, s with degrees -1, +1, 0, 0 and
// the six relations pi = id, sj = id, ip + js = id, dj = dp = 0, di = jf,
// ds = -fp.
template <class K>
struct ConeData {
    CochainComplex<K> cone;
    GradedMap<K> incl_shifted;   // i : M -> Cone, degree -1
    GradedMap<K> proj_shifted;   // p : Cone -> M, degree +1
    GradedMap<K> incl_target;    // j : N -> Cone, degree 0
    GradedMap<K> proj_target;    // s : Cone -> N, degree 0
};

template <class K>
ConeData<K> cone(const ChainMap<K>& f) {
    if (!f.valid()) throw std::invalid_argument("cone: map is not a closed degree-0 chain map");
    const auto& m = f.source;
    const auto& n = f.target;
    ConeData<K> r;
    int lo = std::min(m.min_deg() - 1, n.min_deg()) - 1;
    int hi = std::max(m.max_deg(), n.max_deg()) + 1;
    for (int k = lo; k <= hi; ++k) r.cone.set_dim(k, n.dim(k) + m.dim(k + 1));
    for (int k = lo; k <= hi; ++k) {
        std::size_t rn = n.dim(k + 1), rm = m.dim(k + 2);
        std::size_t cn = n.dim(k), cm = m.dim(k + 1);
        Matrix<K> d(rn + rm, cn + cm);
        auto dn = n.diff(k);
        auto dm = m.diff(k + 1);
        auto fk = f.map.comp(m, n, k + 1);
        for (std::size_t i = 0; i < rn; ++i) {
            for (std::size_t j = 0; j < cn; ++j) d(i, j) = dn(i, j);
            for (std::size_t j = 0; j < cm; ++j) d(i, cn + j) = fk(i, j);
        }
        for (std::size_t i = 0; i < rm; ++i)
            for (std::size_t j = 0; j < cm; ++j) d(rn + i, cn + j) = -dm(i, j);
        r.cone.set_diff(k, std::move(d));
    }
    K one = free_one<K>();
    r.incl_shifted.degree = -1;
    r.proj_shifted.degree = 1;
    r.incl_target.degree = 0;
    r.proj_target.degree = 0;
    for (int k = lo; k <= hi; ++k) {
        std::size_t cn = n.dim(k), cm = m.dim(k + 1);
        // i : M^{k+1} -> Cone^k (second summand)
        if (m.dim(k + 1)) {
            Matrix<K> mi(cn + cm, m.dim(k + 1));
            for (std::size_t t = 0; t < cm; ++t) mi(cn + t, t) = one;
            r.incl_shifted.set_comp(k + 1, std::move(mi));
        }
        // p : Cone^k -> M^{k+1}
        if (cm) {
            Matrix<K> mp(m.dim(k + 1), cn + cm);
            for (std::size_t t = 0; t < cm; ++t) mp(t, cn + t) = one;
            r.proj_shifted.set_comp(k, std::move(mp));
        }
        // j : N^k -> Cone^k
        if (cn) {
            Matrix<K> mj(cn + cm, cn);
            for (std::size_t t = 0; t < cn; ++t) mj(t, t) = one;
            r.incl_target.set_comp(k, std::move(mj));
        }
        // s : Cone^k -> N^k
        if (cn) {
            Matrix<K> ms(cn, cn + cm);
            for (std::size_t t = 0; t < cn; ++t) ms(t, t) = one;
            r.proj_target.set_comp(k, std::move(ms));
        }
    }
    return r;
}

// Verify the six cone relations exactly.  Used in tests and again on every
// glued cone since those rebuild the maps from components.
template <class K>
bool cone_relations_hold(const ChainMap<K>& f, const ConeData<K>& c) {
    const auto& m = f.source;
    const auto& n = f.target;
    const auto& cn = c.cone;
    auto ms = shift(m, 1);
    // pi = id_{M[1]}
    auto pi = gm_compose(c.proj_shifted, c.incl_shifted, m, cn, m);
    GradedMap<K> idm = gm_identity(m);
    idm.degree = 0;
    if (!gm_equal(pi, idm, m, m)) return false;
    // sj = id_N
    auto sj = gm_compose(c.proj_target, c.incl_target, n, cn, n);
    if (!gm_equal(sj, gm_identity(n), n, n)) return false;
    // ip + js = id_Cone
    auto ip = gm_compose(c.incl_shifted, c.proj_shifted, cn, m, cn);
    auto js = gm_compose(c.incl_target, c.proj_target, cn, n, cn);
    if (!gm_equal(gm_add(ip, js, cn, cn), gm_identity(cn), cn, cn)) return false;
    // dj = dp = 0
    if (!gm_diff(c.incl_target, n, cn).is_zero()) return false;
    if (!gm_diff(c.proj_shifted, cn, m).is_zero()) return false;
    // di = jf
    auto di = gm_diff(c.incl_shifted, m, cn);
    auto jf = gm_compose(c.incl_target, f.map, m, n, cn);
    if (!gm_equal(di, jf, m, cn)) return false;
    // ds = -fp
    auto ds = gm_diff(c.proj_target, cn, n);
    auto fp = gm_compose(f.map, c.proj_shifted, cn, m, n);
    if (!gm_equal(ds, gm_scale(fp, -free_one<K>()), cn, n)) return false;
    return true;
}

// --- hom and tensor complexes ----------------------------------------------

// Basis bookkeeping for Hom(C,D): degree-n basis element (k, r, c) is the
// map sending C^k basis vector c to D^{k+n} basis vector r.
template <class K>
struct HomComplex {
    CochainComplex<K> source, target;
    CochainComplex<K> complex;
    // per degree: list of (k, row, col)
    std::map<int, std::vector<std::tuple<int, std::size_t, std::size_t>>> basis;

    std::vector<K> to_coords(const GradedMap<K>& f) const {
        auto it = basis.find(f.degree);
        std::vector<K> v(it == basis.end() ? 0 : it->second.size());
        if (it == basis.end()) return v;
        for (std::size_t t = 0; t < it->second.size(); ++t) {
            auto [k, r, c] = it->second[t];
            v[t] = f.comp(source, target, k)(r, c);
        }
        return v;
    }
    GradedMap<K> from_coords(int degree, const std::vector<K>& v) const {
        GradedMap<K> f;
        f.degree = degree;
        auto it = basis.find(degree);
        if (it == basis.end()) {
            if (!v.empty()) throw std::invalid_argument("HomComplex: coord size mismatch");
            return f;
        }
        if (v.size() != it->second.size()) throw std::invalid_argument("HomComplex: coord size mismatch");
        std::map<int, Matrix<K>> mats;
        for (std::size_t t = 0; t < it->second.size(); ++t) {
            auto [k, r, c] = it->second[t];
            auto mit = mats.find(k);
            if (mit == mats.end())
                mit = mats.emplace(k, Matrix<K>::zero(target.dim(k + degree), source.dim(k))).first;
            mit->second(r, c) = v[t];
        }
        for (auto& [k, m] : mats) f.set_comp(k, std::move(m));
        return f;
    }
};

template <class K>
HomComplex<K> hom_complex(const CochainComplex<K>& c, const CochainComplex<K>& d) {
    HomComplex<K> h;
    h.source = c;
    h.target = d;
    if (c.is_zero() || d.is_zero()) return h;
    int lo = d.min_deg() - c.max_deg(), hi = d.max_deg() - c.min_deg();
    for (int n = lo; n <= hi; ++n) {
        auto& b = h.basis[n];
        for (int k = c.min_deg(); k <= c.max_deg(); ++k)
            for (std::size_t r = 0; r < d.dim(k + n); ++r)
                for (std::size_t col = 0; col < c.dim(k); ++col)
                    b.emplace_back(k, r, col);
        h.complex.set_dim(n, b.size());
    }
    for (int n = lo; n < hi; ++n) {
        Matrix<K> dm(h.complex.dim(n + 1), h.complex.dim(n));
        auto bit = h.basis.find(n);
        if (bit == h.basis.end()) continue;
        for (std::size_t t = 0; t < bit->second.size(); ++t) {
            std::vector<K> coords(h.complex.dim(n));
            coords[t] = free_one<K>();
            auto f = h.from_coords(n, coords);
            auto df = gm_diff(f, c, d);
            auto out = h.to_coords(df);
            for (std::size_t r = 0; r < out.size(); ++r) dm(r, t) = out[r];
        }
        h.complex.set_diff(n, std::move(dm));
    }
    h.basis.erase(h.basis.upper_bound(hi), h.basis.end());
    return h;
}

// Tensor complex with basis (k, i, j): C^k basis i tensor D^{n-k} basis j;
// d(x ox y) = dx ox y + (-1)^{deg x} x ox dy.
template <class K>
struct TensorComplex {
    CochainComplex<K> left, right;
    CochainComplex<K> complex;
    std::map<int, std::vector<std::tuple<int, std::size_t, std::size_t>>> basis;

    std::size_t index_of(int n, int k, std::size_t i, std::size_t j) const {
        auto& b = basis.at(n);
        for (std::size_t t = 0; t < b.size(); ++t)
            if (b[t] == std::make_tuple(k, i, j)) return t;
        throw std::out_of_range("TensorComplex: basis element not found");
    }
};

template <class K>
TensorComplex<K> tensor_complex(const CochainComplex<K>& c, const CochainComplex<K>& d) {
    TensorComplex<K> t;
    t.left = c;
    t.right = d;
    if (c.is_zero() || d.is_zero()) return t;
    int lo = c.min_deg() + d.min_deg(), hi = c.max_deg() + d.max_deg();
    for (int n = lo; n <= hi; ++n) {
        auto& b = t.basis[n];
        for (int k = c.min_deg(); k <= c.max_deg(); ++k)
            for (std::size_t i = 0; i < c.dim(k); ++i)
                for (std::size_t j = 0; j < d.dim(n - k); ++j)
                    b.emplace_back(k, i, j);
        if (!b.empty()) t.complex.set_dim(n, b.size());
    }
    for (int n = lo; n < hi; ++n) {
        if (!t.complex.dim(n)) continue;
        Matrix<K> dm(t.complex.dim(n + 1), t.complex.dim(n));
        auto& b = t.basis[n];
        auto& b1 = t.basis[n + 1];
        auto pos = [&](int k, std::size_t i, std::size_t j) -> std::optional<std::size_t> {
            for (std::size_t u = 0; u < b1.size(); ++u)
                if (b1[u] == std::make_tuple(k, i, j)) return u;
            return std::nullopt;
        };
        for (std::size_t col = 0; col < b.size(); ++col) {
            auto [k, i, j] = b[col];
            auto dc = c.diff(k);
            for (std::size_t r = 0; r < c.dim(k + 1); ++r) {
                if (dc(r, i).is_zero()) continue;
                if (auto u = pos(k + 1, r, j)) dm(*u, col) += dc(r, i);
            }
            auto dd = d.diff(n - k);
            bool odd = (k % 2) != 0;
            for (std::size_t r = 0; r < d.dim(n - k + 1); ++r) {
                if (dd(r, j).is_zero()) continue;
                if (auto u = pos(k, i, r)) dm(*u, col) += odd ? -dd(r, j) : dd(r, j);
            }
        }
        t.complex.set_diff(n, std::move(dm));
    }
    return t;
}

// --- cohomology ------------------------------------------------------------

template <class K>
struct Cohomology {
    std::size_t dim = 0;
    // cocycle representatives spanning a complement of the coboundaries
    Matrix<K> representatives;  // columns, in C^k coordinates
};

template <class K>
Cohomology<K> cohomology(const CochainComplex<K>& c, int k) {
    Cohomology<K> h;
    if (c.dim(k) == 0) { h.representatives = Matrix<K>::zero(0, 0); return h; }
    auto ker = kernel_basis(c.diff(k));
    auto im = column_space_basis(c.diff(k - 1));
    // pick kernel columns extending the image to a basis of the cocycles
    Matrix<K> combined = Matrix<K>::hstack(im, ker);
    auto e = echelon(combined);
    std::vector<std::size_t> chosen;
    for (auto p : e.pivots)
        if (p >= im.cols()) chosen.push_back(p - im.cols());
    Matrix<K> reps(c.dim(k), chosen.size());
    for (std::size_t j = 0; j < chosen.size(); ++j)
        for (std::size_t i = 0; i < c.dim(k); ++i) reps(i, j) = ker(i, chosen[j]);
    h.dim = chosen.size();
    h.representatives = std::move(reps);
    return h;
}

template <class K>
std::map<int, std::size_t> cohomology_dims(const CochainComplex<K>& c) {
    std::map<int, std::size_t> r;
    if (c.is_zero()) return r;
    for (int k = c.min_deg(); k <= c.max_deg(); ++k) {
        auto h = cohomology(c, k).dim;
        if (h) r[k] = h;
    }
    return r;
}

template <class K>
bool is_acyclic(const CochainComplex<K>& c) { return cohomology_dims(c).empty(); }

// Direct sum, with the block layout (a first, then b) in every degree.
template <class K>
CochainComplex<K> direct_sum(const CochainComplex<K>& a, const CochainComplex<K>& b) {
    CochainComplex<K> r;
    int lo = std::min(a.min_deg(), b.min_deg());
    int hi = std::max(a.max_deg(), b.max_deg());
    if (a.is_zero() && b.is_zero()) return r;
    for (int k = lo; k <= hi; ++k) r.set_dim(k, a.dim(k) + b.dim(k));
    for (int k = lo; k < hi; ++k)
        if (r.dim(k) && r.dim(k + 1))
            r.set_diff(k, Matrix<K>::diag_sum(a.diff(k), b.diff(k)));
    return r;
}

}  // namespace dgaus

#endif
