#ifndef STRANDLAB_IDEALS_HPP
#define STRANDLAB_IDEALS_HPP

// Monomial ideals on the n x m grid, diagonal initial terms of maximal
// minors, the lcm-closed test, and the squarefree / box-polarization
// specialization maps.

#include <algorithm>
#include <optional>
#include <vector>

#include "strandlab/monomial.hpp"
#include "strandlab/simplicial.hpp"

namespace strandlab {

class MonomialIdeal {
public:
    MonomialIdeal() = default;

    explicit MonomialIdeal(std::vector<Monomial> gens) {
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        for (const auto& g : gens) {
            bool redundant = false;
            for (const auto& h : gens)
                if (h != g && h.divides(g)) {
                    redundant = true;
                    break;
                }
            if (!redundant) gens_.push_back(g);
        }
    }

    const std::vector<Monomial>& generators() const { return gens_; }

    bool contains(const Monomial& m) const {
        for (const auto& g : gens_)
            if (g.divides(m)) return true;
        return false;
    }

    bool operator==(const MonomialIdeal&) const = default;

private:
    std::vector<Monomial> gens_; // divisibility antichain, sorted
};

// x_{1,a1} x_{2,a2} ... x_{n,an} for an increasing n-tuple a
inline Monomial diagonal_initial_term(const Face& a, int n) {
    if (static_cast<int>(a.size()) != n)
        throw WrongCardinalityError("diagonal_initial_term: |a| != n");
    Monomial m;
    for (int k = 0; k < n; ++k) m.set({k + 1, a[k]}, 1);
    return m;
}

// The ideal generated by the diagonal terms of the facets of Δ. This is the
// degree-n part of the initial ideal of the associated DFI; higher-degree
// generators (present when the facet minors are not a Groebner basis) are
// deliberately not modeled, since the linear strand only depends on the
// degree-n generators.
inline MonomialIdeal initial_dfi(const SimplicialComplex& delta, int n) {
    if (!delta.is_pure(n))
        throw NotPureError("initial_dfi: complex is not pure (n-1)-dimensional");
    std::vector<Monomial> gens;
    for (const auto& f : delta.facets()) gens.push_back(diagonal_initial_term(f, n));
    return MonomialIdeal(std::move(gens));
}

struct LcmClosedResult {
    bool closed = true;
    // on failure: the violating facet pair and the indices of their cliques
    std::optional<std::pair<Face, Face>> witness;
    std::optional<std::pair<int, int>> clique_pair;
};

// Facets a ∈ Δ_i, a' ∈ Δ_j sharing the same vertex in the same sorted
// position, with neither lying in Δ_i ∩ Δ_j, must admit a facet c of
// Δ_i ∩ Δ_j whose diagonal term divides lcm(in[a], in[a']).
inline LcmClosedResult lcm_closed(const SimplicialComplex& delta, int n) {
    auto decomp = clique_complex(delta, n);
    const auto& cliques = decomp.maximal_cliques;
    auto in_clique = [&](const Face& a, const Face& gamma) {
        return std::includes(gamma.begin(), gamma.end(), a.begin(), a.end());
    };
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        for (std::size_t j = 0; j < cliques.size(); ++j) {
            if (i == j) continue;
            Face meet;
            std::set_intersection(cliques[i].begin(), cliques[i].end(),
                                  cliques[j].begin(), cliques[j].end(), std::back_inserter(meet));
            std::vector<Face> meet_facets;
            detail::subsets_of_size(meet, n, meet_facets);
            for (const auto& a : delta.facets()) {
                if (!in_clique(a, cliques[i]) || in_clique(a, meet)) continue;
                for (const auto& b : delta.facets()) {
                    if (!in_clique(b, cliques[j]) || in_clique(b, meet)) continue;
                    bool shared_position = false;
                    for (int k = 0; k < n; ++k)
                        if (a[k] == b[k]) {
                            shared_position = true;
                            break;
                        }
                    if (!shared_position) continue;
                    Monomial target = monomial_lcm(diagonal_initial_term(a, n), diagonal_initial_term(b, n));
                    bool found = false;
                    for (const auto& c : meet_facets)
                        if (diagonal_initial_term(c, n).divides(target)) {
                            found = true;
                            break;
                        }
                    if (!found)
                        return {false, std::make_pair(a, b),
                                std::make_pair(static_cast<int>(i), static_cast<int>(j))};
                }
            }
        }
    }
    return {};
}

enum class Substitution {
    Squarefree, // x_{ij} -> y_j
    BoxPol,     // x_{ij} -> x_{j-i+1,i} -> z_{j-i+1}
};

inline Monomial specialize(const Monomial& m, Substitution phi) {
    Monomial out;
    for (const auto& [v, e] : m.exponents()) {
        if (phi == Substitution::Squarefree) {
            out.bump({1, v.col}, e);
        } else {
            int r = v.col - v.row + 1;
            if (r < 1)
                throw OutOfRangeError("specialize: box polarization needs col - row + 1 >= 1 on the support");
            out.bump({1, r}, e);
        }
    }
    return out;
}

enum class CanonicalIdealKind { AllSquarefree, PowerOfMax };

// AllSquarefree(m, n): all squarefree degree-n monomials in y_1..y_m.
// PowerOfMax(r, n): (z_1, ..., z_r)^n.
inline MonomialIdeal canonical_ideal(CanonicalIdealKind kind, int first, int n) {
    std::vector<Monomial> gens;
    if (kind == CanonicalIdealKind::AllSquarefree) {
        int m = first;
        std::vector<Face> subs;
        Face all(m);
        for (int i = 0; i < m; ++i) all[i] = i + 1;
        detail::subsets_of_size(all, n, subs);
        for (const auto& s : subs) {
            Monomial g;
            for (int v : s) g.set({1, v}, 1);
            gens.push_back(g);
        }
    } else {
        int r = first;
        std::vector<int> exps(r, 0);
        auto rec = [&](auto&& self, int pos, int left) -> void {
            if (pos == r - 1) {
                exps[pos] = left;
                Monomial g;
                for (int k = 0; k < r; ++k)
                    if (exps[k] > 0) g.set({1, k + 1}, exps[k]);
                gens.push_back(g);
                return;
            }
            for (int e = 0; e <= left; ++e) {
                exps[pos] = e;
                self(self, pos + 1, left - e);
            }
        };
        if (r >= 1) rec(rec, 0, n);
    }
    return MonomialIdeal(std::move(gens));
}

} // namespace strandlab

#endif
