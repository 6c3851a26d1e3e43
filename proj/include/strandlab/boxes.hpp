#ifndef STRANDLAB_BOXES_HPP
#define STRANDLAB_BOXES_HPP

// The complex of boxes: a polyhedral cell complex whose cells are products
// X_1 x ... x X_n of column sets with max(X_k) < min(X_{k+1}). Vertices are
// the increasing n-tuples; cell labels are squarefree monomials on the grid.
// Includes induced subcomplexes, f-vectors, labeled cellular chain
// complexes, degree restrictions, and the cellular resolution /
// linear-strand homology criteria.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "strandlab/chain.hpp"
#include "strandlab/ideals.hpp"
#include "strandlab/simplicial.hpp"

namespace strandlab {

using Box = std::vector<Face>; // parts X_1, ..., X_n, each nonempty and increasing

inline int box_dimension(const Box& b) {
    int d = -static_cast<int>(b.size());
    for (const auto& part : b) d += static_cast<int>(part.size());
    return d;
}

// product of x_{k,a} over a in X_k — the lcm of the vertex labels
inline Monomial box_label(const Box& b) {
    Monomial l;
    for (std::size_t k = 0; k < b.size(); ++k)
        for (int a : b[k]) l.set({static_cast<int>(k) + 1, a}, 1);
    return l;
}

class BoxComplex {
public:
    BoxComplex(int n, int m, std::vector<Box> cells) : n_(n), m_(m), cells_(std::move(cells)) {
        for (const auto& b : cells_) {
            if (static_cast<int>(b.size()) != n_)
                throw InvalidShapeError("BoxComplex: box with wrong number of parts");
            for (const auto& part : b)
                if (part.empty()) throw InvalidShapeError("BoxComplex: empty part");
            for (std::size_t k = 0; k < b.size(); ++k) {
                if (b[k].front() < 1 || b[k].back() > m_)
                    throw OutOfRangeError("BoxComplex: column outside 1..m");
                if (k + 1 < b.size() && b[k].back() >= b[k + 1].front())
                    throw InvalidShapeError("BoxComplex: parts must be strictly separated");
            }
        }
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    }

    int n() const { return n_; }
    int m() const { return m_; }
    const std::vector<Box>& cells() const { return cells_; }
    bool empty() const { return cells_.empty(); }

    int dimension() const {
        int d = -1;
        for (const auto& b : cells_) d = std::max(d, box_dimension(b));
        return d;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<Box> cells_; // face-closed by construction at every call site
};

// every box inside the staircase region, vertices included
inline BoxComplex complex_of_boxes(int n, int m) {
    if (n < 1 || n > m) throw InvalidShapeError("complex_of_boxes: need 1 <= n <= m");
    std::vector<Box> cells;
    Box cur(n);
    auto rec = [&](auto&& self, int k, int lo) -> void {
        if (k == n) {
            cells.push_back(cur);
            return;
        }
        // X_k ranges over nonempty subsets of {lo..m}, leaving room for the rest
        std::vector<int> pool;
        for (int v = lo; v <= m; ++v) pool.push_back(v);
        std::vector<Face> subs;
        for (int sz = 1; sz <= static_cast<int>(pool.size()); ++sz) detail::subsets_of_size(pool, sz, subs);
        for (const auto& part : subs) {
            if (part.back() + (n - k - 1) > m) continue; // no room for later parts
            cur[k] = part;
            self(self, k + 1, part.back() + 1);
        }
    };
    rec(rec, 0, 1);
    return BoxComplex(n, m, std::move(cells));
}

// boxes all of whose selection tuples are facets of delta
inline BoxComplex induced_box_subcomplex(const BoxComplex& p, const SimplicialComplex& delta) {
    if (!delta.is_pure(p.n()))
        throw NotPureError("induced_box_subcomplex: complex is not pure (n-1)-dimensional");
    std::set<Face> facets(delta.facets().begin(), delta.facets().end());
    std::vector<Box> keep;
    for (const auto& b : p.cells()) {
        Face tuple(b.size());
        bool ok = true;
        auto rec = [&](auto&& self, std::size_t k) -> void {
            if (!ok) return;
            if (k == b.size()) {
                if (!facets.count(tuple)) ok = false;
                return;
            }
            for (int v : b[k]) {
                tuple[k] = v;
                self(self, k + 1);
            }
        };
        rec(rec, 0);
        if (ok) keep.push_back(b);
    }
    return BoxComplex(p.n(), p.m(), std::move(keep));
}

using FVector = std::vector<long long>;

inline FVector f_vector(const BoxComplex& p) {
    FVector f(p.empty() ? 0 : p.dimension() + 1, 0);
    for (const auto& b : p.cells()) f[box_dimension(b)]++;
    return f;
}

inline BoxComplex restrict_leq(const BoxComplex& p, const Multidegree& alpha) {
    std::vector<Box> keep;
    for (const auto& b : p.cells())
        if (box_label(b).divides(alpha)) keep.push_back(b);
    return BoxComplex(p.n(), p.m(), std::move(keep));
}

namespace detail {

inline std::string box_id(const Box& b) {
    std::ostringstream os;
    for (std::size_t k = 0; k < b.size(); ++k) {
        os << (k ? "x{" : "{");
        for (std::size_t i = 0; i < b[k].size(); ++i) os << (i ? "," : "") << b[k][i];
        os << "}";
    }
    return os.str();
}

// codimension-1 faces with the tensor-product orientation: deleting the
// t-th element of X_k (1-based, |X_k| >= 2) carries sign
// (-1)^{(t-1) + sum_{l<k} (|X_l| - 1)}
struct BoxFacet {
    Box face;
    long long sign;
    Monomial var; // the deleted variable x_{k,a}
};

inline std::vector<BoxFacet> box_facets(const Box& b) {
    std::vector<BoxFacet> out;
    int shift = 0;
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (b[k].size() >= 2) {
            for (std::size_t t = 0; t < b[k].size(); ++t) {
                Box g = b;
                g[k].erase(g[k].begin() + static_cast<long>(t));
                long long sign = ((static_cast<int>(t) + shift) % 2 == 0) ? 1 : -1;
                out.push_back({std::move(g), sign, Monomial::variable(static_cast<int>(k) + 1, b[k][t])});
            }
        }
        shift += static_cast<int>(b[k].size()) - 1;
    }
    return out;
}

} // namespace detail

// Level = cell dimension + 1, with a rank-1 augmentation target at level 0.
// Each cell carries its label as multidegree; entries are the deleted
// variables, so the result is homogeneous and (labels being distinct across
// incident cells) minimal.
inline MonomialChainComplex cellular_chain_complex(const BoxComplex& p) {
    int top = p.empty() ? 0 : p.dimension() + 1;
    std::vector<std::vector<Box>> by_dim(top + 1);
    for (const auto& b : p.cells()) by_dim[box_dimension(b) + 1].push_back(b);

    std::vector<std::vector<BasisElement>> levels(top + 1);
    levels[0].push_back({"1", Multidegree()});
    for (int l = 1; l <= top; ++l)
        for (const auto& b : by_dim[l]) levels[l].push_back({detail::box_id(b), box_label(b)});

    std::vector<std::vector<std::vector<DiffEntry>>> diffs(top + 1);
    for (int l = 1; l <= top; ++l) {
        std::map<Box, int> index;
        for (std::size_t i = 0; i < by_dim[l - 1].size(); ++i) index[by_dim[l - 1][i]] = static_cast<int>(i);
        diffs[l].resize(by_dim[l].size());
        for (std::size_t s = 0; s < by_dim[l].size(); ++s) {
            if (l == 1) {
                diffs[l][s].push_back({0, 1, box_label(by_dim[l][s])});
                continue;
            }
            for (auto& f : detail::box_facets(by_dim[l][s]))
                diffs[l][s].push_back({index.at(f.face), f.sign, f.var});
        }
    }
    return MonomialChainComplex(std::move(levels), std::move(diffs));
}

// reduced cellular homology; the empty complex reports no homology at all
inline HomologyVector box_reduced_homology(const BoxComplex& p, const ScalarFieldSpec& field) {
    HomologyVector h;
    if (p.empty()) return h;
    int dim = p.dimension();
    std::vector<std::vector<Box>> by_dim(dim + 1);
    for (const auto& b : p.cells()) by_dim[box_dimension(b)].push_back(b);

    // ranks[d] = rank of the boundary from dimension d; d = 0 is the augmentation
    std::map<int, int> ranks;
    {
        SparseMatrix aug(1, static_cast<int>(by_dim[0].size()));
        for (int c = 0; c < aug.cols(); ++c) aug.set(0, c, 1);
        ranks[0] = rank(aug, field);
    }
    for (int d = 1; d <= dim; ++d) {
        std::map<Box, int> index;
        for (std::size_t i = 0; i < by_dim[d - 1].size(); ++i) index[by_dim[d - 1][i]] = static_cast<int>(i);
        SparseMatrix bd(static_cast<int>(by_dim[d - 1].size()), static_cast<int>(by_dim[d].size()));
        for (std::size_t c = 0; c < by_dim[d].size(); ++c)
            for (auto& f : detail::box_facets(by_dim[d][c]))
                bd.add(index.at(f.face), static_cast<int>(c), f.sign);
        ranks[d] = rank(bd, field);
    }
    long long hm1 = 1 - ranks[0]; // degree -1 of the augmented complex
    if (hm1 != 0) h.dims[-1] = hm1;
    for (int d = 0; d <= dim; ++d) {
        long long v = static_cast<long long>(by_dim[d].size()) - ranks[d] - (d < dim ? ranks[d + 1] : 0);
        if (v != 0) h.dims[d] = v;
    }
    return h;
}

namespace detail {

inline std::vector<Multidegree> box_vertex_labels(const BoxComplex& p) {
    std::vector<Multidegree> out;
    for (const auto& b : p.cells())
        if (box_dimension(b) == 0) out.push_back(box_label(b));
    return out;
}

inline void require_labels_match(const BoxComplex& p, const MonomialIdeal& ideal, int degree) {
    auto vl = box_vertex_labels(p);
    std::set<Monomial> labels(vl.begin(), vl.end());
    std::set<Monomial> gens;
    for (const auto& g : ideal.generators())
        if (g.degree() == degree) gens.insert(g);
    if (labels != gens)
        throw LabelMismatchError("vertex labels differ from the ideal's minimal generators in the base degree");
}

} // namespace detail

struct CellularCheck {
    bool ok = true;
    std::optional<Multidegree> witness; // degree where the test fails
};

// ℱ_P resolves R/I iff every lattice-degree restriction is acyclic;
// minimality additionally requires labels to differ across incident cells.
inline CellularCheck is_cellular_resolution(const BoxComplex& p, const MonomialIdeal& ideal,
                                            const ScalarFieldSpec& field) {
    detail::require_labels_match(p, ideal, p.n());
    for (const auto& b : p.cells())
        for (auto& f : detail::box_facets(b))
            if (box_label(f.face) == box_label(b)) return {false, box_label(b)};
    for (const auto& alpha : join_closure(detail::box_vertex_labels(p)))
        if (!box_reduced_homology(restrict_leq(p, alpha), field).all_zero()) return {false, alpha};
    return {};
}

// Linear-strand criterion: for every α of total degree n + k (k > 0) both
// H̃_k and H̃_{k-1} of P_{≤α} must vanish. Labels are squarefree, so
// P_{≤α} = P_{≤β} for β the join of the labels dividing α, and every total
// degree |α| ≥ |β| is realized by padding exponents on supp(β). The test
// therefore fails exactly when some lattice β has H̃_i(P_{≤β}) ≠ 0 with
// |β| ≤ n + i + 1.
inline CellularCheck is_cellular_linear_strand(const BoxComplex& p, const MonomialIdeal& ideal,
                                               const ScalarFieldSpec& field) {
    detail::require_labels_match(p, ideal, p.n());
    for (const auto& beta : join_closure(detail::box_vertex_labels(p))) {
        HomologyVector h = box_reduced_homology(restrict_leq(p, beta), field);
        for (const auto& [i, d] : h.dims)
            if (i >= 0 && d != 0 && beta.degree() <= p.n() + i + 1) return {false, beta};
    }
    return {};
}

} // namespace strandlab

#endif
