#ifndef STRANDLAB_ORACLE_HPP
#define STRANDLAB_ORACLE_HPP

// Independent ground truth: multigraded Betti numbers of an arbitrary
// monomial ideal from the reduced homology of its upper-Koszul complexes,
// evaluated across the join-closure of the generator degrees. Nothing here
// touches the chain-complex builders, so agreement is meaningful evidence.

#include <algorithm>
#include <vector>

#include "strandlab/chain.hpp"
#include "strandlab/ideals.hpp"
#include "strandlab/simplicial.hpp"

namespace strandlab {

// K^α(I) on the support of α: vertex i stands for the i-th smallest support
// variable, and τ is a face iff x^{α-τ} ∈ I. Void when x^α ∉ I.
inline SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Multidegree& alpha) {
    std::vector<VarIndex> supp;
    for (const auto& [v, e] : alpha.exponents()) supp.push_back(v);
    int s = static_cast<int>(supp.size());
    if (!ideal.contains(alpha)) return SimplicialComplex::void_complex(s);

    // enumerate faces as bitmasks over the support, then keep the maximal ones
    std::vector<char> is_face(std::size_t(1) << s, 0);
    for (std::size_t mask = 0; mask < is_face.size(); ++mask) {
        Monomial q = alpha;
        for (int i = 0; i < s; ++i)
            if (mask >> i & 1) q.bump(supp[i], -1);
        is_face[mask] = ideal.contains(q) ? 1 : 0;
    }
    std::vector<Face> facets;
    for (std::size_t mask = 0; mask < is_face.size(); ++mask) {
        if (!is_face[mask]) continue;
        bool maximal = true;
        for (int i = 0; i < s && maximal; ++i)
            if (!(mask >> i & 1) && is_face[mask | (std::size_t(1) << i)]) maximal = false;
        if (!maximal) continue;
        Face f;
        for (int i = 0; i < s; ++i)
            if (mask >> i & 1) f.push_back(i + 1);
        facets.push_back(f);
    }
    return SimplicialComplex(s, facets);
}

namespace detail {

inline bool is_cone(const SimplicialComplex& delta) {
    if (delta.is_void() || delta.facets().empty()) return false;
    Face common = delta.facets().front();
    for (const auto& f : delta.facets()) {
        Face next;
        std::set_intersection(common.begin(), common.end(), f.begin(), f.end(), std::back_inserter(next));
        common = std::move(next);
        if (common.empty()) return false;
    }
    return true;
}

} // namespace detail

// β_{i,α}(I) = dim H̃_{i-2}(K^α(I)) for i ≥ 1 across the join-closure of
// the generator degrees (all Betti degrees live there). Index 1 counts the
// minimal generators, matching the chain module's resolution indexing.
inline BettiTable multigraded_betti(const MonomialIdeal& ideal, const ScalarFieldSpec& field) {
    BettiTable t;
    std::vector<Multidegree> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g);
    for (const auto& alpha : join_closure(gens)) {
        SimplicialComplex k = upper_koszul(ideal, alpha);
        if (detail::is_cone(k)) continue; // cones are acyclic
        HomologyVector h = reduced_homology(k, field);
        for (const auto& [deg, d] : h.dims)
            if (d != 0) t.fine[{deg + 2, alpha}] = d;
    }
    return t;
}

} // namespace strandlab

#endif
