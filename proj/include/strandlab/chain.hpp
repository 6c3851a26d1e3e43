#ifndef STRANDLAB_CHAIN_HPP
#define STRANDLAB_CHAIN_HPP

// Multigraded free chain complexes whose differential entries are
// scalar x monomial. Strand extraction at a multidegree turns a complex
// into finite matrices over a field; from there homology, exactness over
// the lcm-lattice, Betti tables, and the linear-strand homology criterion
// are all exact rank computations.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "strandlab/exactla.hpp"
#include "strandlab/ideals.hpp"
#include "strandlab/monomial.hpp"
#include "strandlab/simplicial.hpp"

namespace strandlab {

struct BasisElement {
    std::string id;
    Multidegree mdeg;

    bool operator==(const BasisElement&) const = default;
};

struct DiffEntry {
    int target = 0;       // index into the basis one level down
    long long coeff = 0;  // nonzero scalar
    Monomial mono;        // monomial factor of the entry
};

// Levels 0..L. diffs()[l] (l >= 1) stores one column per level-l basis
// element: the list of entries of d_l into level l-1. A level with no
// generators is legal; its differential columns are simply absent.
class MonomialChainComplex {
public:
    MonomialChainComplex(std::vector<std::vector<BasisElement>> levels,
                         std::vector<std::vector<std::vector<DiffEntry>>> diffs)
        : levels_(std::move(levels)), diffs_(std::move(diffs)) {
        if (diffs_.size() != levels_.size())
            throw ShapeMismatchError("MonomialChainComplex: one differential block per level expected");
        if (!diffs_.empty() && !diffs_[0].empty())
            throw ShapeMismatchError("MonomialChainComplex: level 0 has no outgoing differential");
        for (std::size_t l = 1; l < levels_.size(); ++l) {
            if (diffs_[l].size() != levels_[l].size())
                throw ShapeMismatchError("MonomialChainComplex: column count != level rank");
            for (const auto& col : diffs_[l])
                for (const auto& e : col) {
                    if (e.target < 0 || e.target >= static_cast<int>(levels_[l - 1].size()))
                        throw ShapeMismatchError("MonomialChainComplex: entry target out of range");
                    if (e.coeff == 0)
                        throw ShapeMismatchError("MonomialChainComplex: zero entry stored");
                }
        }
    }

    int top_level() const { return static_cast<int>(levels_.size()) - 1; }
    const std::vector<std::vector<BasisElement>>& levels() const { return levels_; }
    const std::vector<std::vector<std::vector<DiffEntry>>>& diffs() const { return diffs_; }

    std::vector<long long> level_ranks() const {
        std::vector<long long> out;
        for (const auto& lv : levels_) out.push_back(static_cast<long long>(lv.size()));
        return out;
    }

private:
    std::vector<std::vector<BasisElement>> levels_;
    std::vector<std::vector<std::vector<DiffEntry>>> diffs_;
};

// d_{l-1} ∘ d_l = 0 as polynomials: collect like monomials per
// (source, final target) and require every coefficient to cancel.
inline bool verify_complex(const MonomialChainComplex& c) {
    for (int l = 2; l <= c.top_level(); ++l) {
        for (const auto& col : c.diffs()[l]) {
            std::map<std::pair<int, Monomial>, long long> acc;
            for (const auto& e1 : col)
                for (const auto& e2 : c.diffs()[l - 1][e1.target])
                    acc[{e2.target, e1.mono * e2.mono}] += e1.coeff * e2.coeff;
            for (const auto& [key, v] : acc)
                if (v != 0) return false;
        }
    }
    return true;
}

// fine (Z^{nm}) homogeneity: source degree = entry monomial + target degree
inline bool is_homogeneous(const MonomialChainComplex& c) {
    for (int l = 1; l <= c.top_level(); ++l)
        for (std::size_t s = 0; s < c.diffs()[l].size(); ++s)
            for (const auto& e : c.diffs()[l][s])
                if (c.levels()[l][s].mdeg != e.mono * c.levels()[l - 1][e.target].mdeg) return false;
    return true;
}

namespace detail {

// (row totals, column totals) of a multidegree
inline std::pair<std::map<int, int>, std::map<int, int>> marginals(const Multidegree& a) {
    std::map<int, int> rows, cols;
    for (const auto& [v, e] : a.exponents()) {
        rows[v.row] += e;
        cols[v.col] += e;
    }
    return {rows, cols};
}

} // namespace detail

// coarse (Z^n x Z^m) homogeneity: row and column marginals match
inline bool is_homogeneous_coarse(const MonomialChainComplex& c) {
    for (int l = 1; l <= c.top_level(); ++l)
        for (std::size_t s = 0; s < c.diffs()[l].size(); ++s)
            for (const auto& e : c.diffs()[l][s])
                if (detail::marginals(c.levels()[l][s].mdeg) !=
                    detail::marginals(e.mono * c.levels()[l - 1][e.target].mdeg))
                    return false;
    return true;
}

inline bool is_minimal(const MonomialChainComplex& c) {
    for (int l = 1; l <= c.top_level(); ++l)
        for (const auto& col : c.diffs()[l])
            for (const auto& e : col)
                if (e.mono.is_unit()) return false;
    return true;
}

// The degree-α piece: basis elements with mdeg ≤ α, entries reduced to
// their scalars (the monomial is forced by the grading).
struct StrandComplex {
    std::vector<long long> dims;     // per level
    std::vector<SparseMatrix> diffs; // diffs[l] : level l -> level l-1; diffs[0] is 0 x dims[0]
};

inline StrandComplex strand(const MonomialChainComplex& c, const Multidegree& alpha) {
    int top = c.top_level();
    std::vector<std::vector<int>> keep(top + 1); // strand row index per basis index, -1 if absent
    StrandComplex s;
    s.dims.assign(top + 1, 0);
    for (int l = 0; l <= top; ++l) {
        keep[l].assign(c.levels()[l].size(), -1);
        for (std::size_t i = 0; i < c.levels()[l].size(); ++i)
            if (c.levels()[l][i].mdeg.divides(alpha)) keep[l][i] = static_cast<int>(s.dims[l]++);
    }
    s.diffs.resize(top + 1);
    s.diffs[0] = SparseMatrix(0, static_cast<int>(s.dims[0]));
    for (int l = 1; l <= top; ++l) {
        SparseMatrix d(static_cast<int>(s.dims[l - 1]), static_cast<int>(s.dims[l]));
        for (std::size_t src = 0; src < c.diffs()[l].size(); ++src) {
            if (keep[l][src] < 0) continue;
            for (const auto& e : c.diffs()[l][src]) {
                // homogeneity makes the target automatically ≤ α
                d.add(keep[l - 1][e.target], keep[l][src], e.coeff);
            }
        }
        s.diffs[l] = std::move(d);
    }
    return s;
}

// homology of one strand level: dim − rank(incoming) − rank(outgoing)
inline long long strand_homology_at(const StrandComplex& s, int level, const ScalarFieldSpec& f) {
    if (level < 0 || level >= static_cast<int>(s.dims.size())) return 0;
    long long h = s.dims[level];
    if (level >= 1) h -= rank(s.diffs[level], f);
    if (level + 1 < static_cast<int>(s.diffs.size())) h -= rank(s.diffs[level + 1], f);
    return h;
}

inline HomologyVector strand_homology(const MonomialChainComplex& c, const Multidegree& alpha,
                                      const ScalarFieldSpec& f) {
    if (!verify_complex(c)) throw NotAComplexError("strand_homology: d*d != 0");
    StrandComplex s = strand(c, alpha);
    HomologyVector h;
    for (int l = 0; l <= c.top_level(); ++l) {
        long long v = strand_homology_at(s, l, f);
        if (v != 0) h.dims[l] = v;
    }
    return h;
}

// all joins (componentwise maxima) of nonempty subsets of gens
inline std::vector<Multidegree> join_closure(const std::vector<Multidegree>& gens) {
    std::set<Multidegree> closure(gens.begin(), gens.end());
    for (;;) {
        std::set<Multidegree> next = closure;
        for (const auto& a : closure)
            for (const auto& g : gens) next.insert(monomial_lcm(a, g));
        if (next.size() == closure.size()) break;
        closure = std::move(next);
    }
    return {closure.begin(), closure.end()};
}

// One lattice point of the exactness test: positive-level strand homology
// vanishes and the level-0 cokernel detects membership of x^α in I.
inline bool exact_at(const MonomialChainComplex& c, const MonomialIdeal& ideal, const Multidegree& alpha,
                     const ScalarFieldSpec& f) {
    StrandComplex s = strand(c, alpha);
    long long h0 = s.dims[0];
    if (c.top_level() >= 1) h0 -= rank(s.diffs[1], f);
    if (h0 != (ideal.contains(alpha) ? 0 : s.dims[0])) return false;
    for (int l = 1; l <= c.top_level(); ++l)
        if (strand_homology_at(s, l, f) != 0) return false;
    return true;
}

struct ExactnessResult {
    bool exact = true;
    std::optional<Multidegree> witness; // first lattice degree with homology
};

inline ExactnessResult exactness_check(const MonomialChainComplex& c, const MonomialIdeal& ideal,
                                       const ScalarFieldSpec& f) {
    if (!is_homogeneous(c)) throw NonHomogeneousError("exactness_check: complex is not homogeneous");
    if (!verify_complex(c)) throw NotAComplexError("exactness_check: d*d != 0");
    std::vector<Multidegree> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g);
    for (const auto& alpha : join_closure(gens))
        if (!exact_at(c, ideal, alpha, f)) return {false, alpha};
    return {};
}

struct BettiTable {
    // (homological index, multidegree) -> count; index 1 holds the
    // generators of the resolved ideal (total degree n there).
    std::map<std::pair<int, Multidegree>, long long> fine;

    std::map<std::pair<int, int>, long long> coarse() const {
        std::map<std::pair<int, int>, long long> out;
        for (const auto& [key, v] : fine) out[{key.first, key.second.degree()}] += v;
        return out;
    }

    bool operator==(const BettiTable&) const = default;
};

inline BettiTable betti_from_minimal(const MonomialChainComplex& c) {
    if (!is_minimal(c)) throw NotMinimalError("betti_from_minimal: complex has a unit entry");
    BettiTable t;
    for (int l = 1; l <= c.top_level(); ++l)
        for (const auto& b : c.levels()[l]) t.fine[{l, b.mdeg}]++;
    return t;
}

// keep homological index i only in total degree n + i - 1
inline BettiTable linear_strand_table(const BettiTable& b, int n) {
    BettiTable out;
    for (const auto& [key, v] : b.fine)
        if (key.second.degree() == n + key.first - 1) out.fine[key] = v;
    return out;
}

struct LinearStrandCheck {
    bool ok = true;
    int level = 0;                      // on failure: level with homology
    std::optional<Multidegree> witness; // and the degree where it appears
};

// Homology criterion for being the linear strand of a minimal resolution of
// an ideal generated in degree n: strand homology at every level i ≥ 1
// vanishes in all multidegrees of total degree n+i-1 and n+i. Only degrees
// lying above some level-i basis element can carry level-i homology, so the
// candidate set {mdeg(b)} ∪ {mdeg(b) + v} over variables v appearing in the
// complex is complete.
inline LinearStrandCheck is_linear_strand(const MonomialChainComplex& c, const ScalarFieldSpec& f) {
    if (!verify_complex(c)) throw NotAComplexError("is_linear_strand: d*d != 0");
    std::set<VarIndex> vars;
    for (const auto& lv : c.levels())
        for (const auto& b : lv)
            for (const auto& [v, e] : b.mdeg.exponents()) vars.insert(v);
    for (int i = 1; i <= c.top_level(); ++i) {
        std::set<Multidegree> candidates;
        for (const auto& b : c.levels()[i]) {
            candidates.insert(b.mdeg);
            for (const auto& v : vars) {
                Multidegree a = b.mdeg;
                a.bump(v, 1);
                candidates.insert(a);
            }
        }
        for (const auto& alpha : candidates) {
            StrandComplex s = strand(c, alpha);
            if (strand_homology_at(s, i, f) != 0) return {false, i, alpha};
        }
    }
    return {};
}

} // namespace strandlab

#endif
