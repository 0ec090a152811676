#ifndef DGAUS_QUIVER_HPP
#define DGAUS_QUIVER_HPP

#include <map>

#include "auslander.hpp"

namespace dgaus {

// Quiver-with-relations presentation of the block algebra.  Paths compose
// left to right: a path [a, b] with a: i -> j and b: j -> k evaluates to
// elt(a) * elt(b) inside eps_i A eps_k.

template <class K>
struct QuiverArrow {
    std::size_t src = 0, dst = 0;  // vertices 1..n
    std::string name;
    std::vector<K> elt;            // representative in total coordinates
};

template <class K>
struct QuiverRelation {
    std::size_t src = 0, dst = 0, length = 0;
    std::vector<std::pair<K, std::vector<std::size_t>>> terms;  // coeff, arrow-index path
    std::string pretty;
};

template <class K>
struct QuiverPresentation {
    std::size_t vertices = 0;
    std::vector<QuiverArrow<K>> arrows;
    std::vector<QuiverRelation<K>> relations;
    Matrix<K> radical;             // reduced basis of J in total coordinates
    std::size_t nilpotency = 0;    // least N with J^N = 0
};

// The radical of the block algebra: off-diagonal blocks plus the images of
// the input ideal on the diagonal.  Certified by direct computation: it is a
// nilpotent two-sided ideal whose quotient is split semisimple of dimension n.
template <class K>
Matrix<K> radical_span(const AuslanderAlgebra<K>& a) {
    std::vector<std::vector<K>> cols;
    std::size_t d = a.total.dim();
    for (std::size_t i = 1; i <= a.n; ++i)
        for (std::size_t j = 1; j <= a.n; ++j) {
            if (i != j) {
                for (std::size_t u = 0; u < a.bdim(i, j); ++u) {
                    std::vector<K> v(d);
                    v[a.boff(i, j) + u] = free_one<K>();
                    cols.push_back(std::move(v));
                }
            } else {
                for (std::size_t c = 0; c < a.rad.basis.cols(); ++c) {
                    auto bc = a.block_coords(i, i, a.rad.basis.column(c));
                    std::vector<K> v(d);
                    for (std::size_t t = 0; t < bc.size(); ++t) v[a.boff(i, i) + t] = bc[t];
                    cols.push_back(std::move(v));
                }
            }
        }
    return reduced_span(Matrix<K>::from_columns(cols, d));
}

template <class K>
QuiverPresentation<K> quiver_presentation(const AuslanderAlgebra<K>& a) {
    const auto& alg = a.total;
    QuiverPresentation<K> qp;
    qp.vertices = a.n;
    qp.radical = radical_span(a);

    // two-sided ideal check
    for (std::size_t b = 0; b < alg.dim(); ++b)
        for (std::size_t c = 0; c < qp.radical.cols(); ++c) {
            auto x = qp.radical.column(c);
            if (!in_span(qp.radical, alg.mul(alg.basis_elt(b), x)) ||
                !in_span(qp.radical, alg.mul(x, alg.basis_elt(b))))
                throw std::runtime_error("quiver_presentation: radical candidate is not an ideal");
        }
    // nilpotency with strictly decreasing powers
    {
        Matrix<K> p = qp.radical;
        qp.nilpotency = 1;
        while (p.cols() > 0) {
            auto next = product_span(alg, p, qp.radical);
            if (next.cols() >= p.cols())
                throw std::runtime_error("quiver_presentation: radical candidate not nilpotent");
            p = next;
            ++qp.nilpotency;
        }
    }
    // split semisimple quotient of dimension n (one class per vertex)
    {
        auto quo = quotient_algebra(alg, qp.radical);
        if (quo.alg.dim() != a.n || !algebra_is_split_semisimple(quo.alg))
            throw std::runtime_error("quiver_presentation: algebra is not basic split");
    }

    // arrow spaces: complement of eps_i J^2 eps_j inside eps_i J eps_j
    auto corner_span = [&](const Matrix<K>& span, std::size_t i, std::size_t j) {
        std::vector<std::vector<K>> cols;
        for (std::size_t c = 0; c < span.cols(); ++c)
            cols.push_back(alg.mul(a.eps[i - 1], alg.mul(span.column(c), a.eps[j - 1])));
        return reduced_span(Matrix<K>::from_columns(cols, alg.dim()));
    };
    auto rad2 = product_span(alg, qp.radical, qp.radical);
    for (std::size_t i = 1; i <= a.n; ++i)
        for (std::size_t j = 1; j <= a.n; ++j) {
            auto s = corner_span(qp.radical, i, j);
            auto t = corner_span(rad2, i, j);
            auto e = echelon(Matrix<K>::hstack(t, s));
            for (auto pv : e.pivots)
                if (pv >= t.cols()) {
                    QuiverArrow<K> arr;
                    arr.src = i;
                    arr.dst = j;
                    arr.name = "a" + std::to_string(qp.arrows.size());
                    arr.elt = s.column(pv - t.cols());
                    qp.arrows.push_back(std::move(arr));
                }
        }

    // relations: per length, kernel of path evaluation modulo consequences of
    // shorter relations.  All paths of the nilpotency length evaluate to zero,
    // and every longer path factors through an ideal element, so lengths
    // 2..nilpotency suffice.
    using Path = std::vector<std::size_t>;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Path>> prev;  // by (src, dst)
    for (std::size_t ai = 0; ai < qp.arrows.size(); ++ai)
        prev[{qp.arrows[ai].src, qp.arrows[ai].dst}].push_back({ai});
    auto eval_path = [&](const Path& p) {
        auto v = qp.arrows[p[0]].elt;
        for (std::size_t t = 1; t < p.size(); ++t) v = alg.mul(v, qp.arrows[p[t]].elt);
        return v;
    };
    auto pretty_path = [&](const Path& p) {
        std::string s;
        for (std::size_t t = 0; t < p.size(); ++t)
            s += (t ? "*" : "") + qp.arrows[p[t]].name;
        return s;
    };
    // paths by (src, dst, length); length 1 seeded above
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<Path>> by_len;
    for (auto& [key, v] : prev) by_len[{key.first, key.second, 1}] = v;
    for (std::size_t len = 2; len <= qp.nilpotency && !qp.arrows.empty(); ++len) {
        // extend
        std::map<std::pair<std::size_t, std::size_t>, std::vector<Path>> cur;
        for (auto& [key, ps] : prev)
            for (auto& p : ps)
                for (std::size_t ai = 0; ai < qp.arrows.size(); ++ai)
                    if (qp.arrows[ai].src == key.second) {
                        Path np = p;
                        np.push_back(ai);
                        cur[{key.first, qp.arrows[ai].dst}].push_back(std::move(np));
                    }
        for (auto& [key, v] : cur) by_len[{key.first, key.second, len}] = v;
        for (auto& [key, paths] : cur) {
            std::map<Path, std::size_t> index;
            for (std::size_t c = 0; c < paths.size(); ++c) index[paths[c]] = c;
            std::vector<std::vector<K>> evals;
            for (auto& p : paths) evals.push_back(eval_path(p));
            auto ker = kernel_basis(Matrix<K>::from_columns(evals, alg.dim()));
            if (ker.cols() == 0) continue;
            // consequence span: prefix * relation * suffix filling the length
            std::vector<std::vector<K>> cons;
            for (auto& rel : qp.relations)
                for (std::size_t s = 0; s + rel.length <= len; ++s) {
                    std::size_t t = len - rel.length - s;
                    auto pre_it = s ? by_len.find({key.first, rel.src, s}) : by_len.end();
                    auto suf_it = t ? by_len.find({rel.dst, key.second, t}) : by_len.end();
                    if (s && (pre_it == by_len.end() || pre_it->second.empty())) continue;
                    if (t && (suf_it == by_len.end() || suf_it->second.empty())) continue;
                    if (!s && rel.src != key.first) continue;
                    if (!t && rel.dst != key.second) continue;
                    std::vector<Path> pres = s ? pre_it->second : std::vector<Path>{{}};
                    std::vector<Path> sufs = t ? suf_it->second : std::vector<Path>{{}};
                    for (auto& pre : pres)
                        for (auto& suf : sufs) {
                            std::vector<K> col(paths.size());
                            for (auto& [coeff, mid] : rel.terms) {
                                Path full = pre;
                                full.insert(full.end(), mid.begin(), mid.end());
                                full.insert(full.end(), suf.begin(), suf.end());
                                col[index.at(full)] += coeff;
                            }
                            cons.push_back(std::move(col));
                        }
                }
            auto cspan = reduced_span(Matrix<K>::from_columns(cons, paths.size()));
            auto e = echelon(Matrix<K>::hstack(cspan, ker));
            for (auto pv : e.pivots) {
                if (pv < cspan.cols()) continue;
                auto kv = ker.column(pv - cspan.cols());
                QuiverRelation<K> rel;
                rel.src = key.first;
                rel.dst = key.second;
                rel.length = len;
                for (std::size_t c = 0; c < kv.size(); ++c)
                    if (!kv[c].is_zero()) rel.terms.emplace_back(kv[c], paths[c]);
                for (std::size_t t = 0; t < rel.terms.size(); ++t) {
                    if (t) rel.pretty += " + ";
                    rel.pretty += "(" + rel.terms[t].first.str() + ")" +
                                  pretty_path(rel.terms[t].second);
                }
                qp.relations.push_back(std::move(rel));
            }
        }
        prev = std::move(cur);
    }
    return qp;
}

}  // namespace dgaus

#endif
