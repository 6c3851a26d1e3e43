#ifndef STRANDLAB_EN_HPP
#define STRANDLAB_EN_HPP

// Sparse Eagon-Northcott complexes for the diagonal initial ideal of the
// maximal minors of a generic n x m matrix, their generalization over a
// simplicial complex of allowed column sets, and the squarefree /
// box-polarization specializations.

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "strandlab/chain.hpp"
#include "strandlab/ideals.hpp"
#include "strandlab/simplicial.hpp"

namespace strandlab {

struct ENBasis {
    std::vector<int> alpha; // n nonnegative integers, |alpha| = level - 1
    Face I;                 // increasing column set, |I| = n + level - 1

    bool operator==(const ENBasis&) const = default;
};

struct IndexPair {
    int row = 0;      // 1..n, has alpha[row] > 0
    int colValue = 0; // an element of I
    auto operator<=>(const IndexPair&) const = default;
};

// { (i, I_{i+j}) : alpha_i > 0, |alpha_{<=i-1}| <= j <= |alpha_{<=i}| },
// with I_k the k-th smallest element of I (1-based).
inline std::vector<IndexPair> indexing_set(const std::vector<int>& alpha, const Face& I) {
    std::vector<IndexPair> out;
    int prefix = 0;
    for (std::size_t i1 = 1; i1 <= alpha.size(); ++i1) {
        int ai = alpha[i1 - 1];
        if (ai > 0) {
            for (int j = prefix; j <= prefix + ai; ++j) {
                std::size_t pos = i1 + j; // 1-based position in I
                if (pos < 1 || pos > I.size())
                    throw OutOfRangeError("indexing_set: position i+j outside I");
                out.push_back({static_cast<int>(i1), I[pos - 1]});
            }
        }
        prefix += ai;
    }
    return out;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// rank of level ℓ: C(n+ℓ-2, n-1) * C(m, n+ℓ-1)
inline long long en_rank(int n, int m, int level) {
    return binomial(n + level - 2, n - 1) * binomial(m, n + level - 1);
}

// Row i consumes alpha_i + 1 consecutive elements of I, left to right.
inline Multidegree en_multidegree(const ENBasis& b) {
    Multidegree d;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < b.alpha.size(); ++i)
        for (int t = 0; t <= b.alpha[i]; ++t) {
            if (pos >= b.I.size()) throw OutOfRangeError("en_multidegree: |I| != n + |alpha|");
            d.bump({static_cast<int>(i) + 1, b.I[pos++]}, 1);
        }
    if (pos != b.I.size()) throw OutOfRangeError("en_multidegree: |I| != n + |alpha|");
    return d;
}

namespace detail {

inline std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(parts, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == parts - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[pos] = e;
            self(self, pos + 1, left - e);
        }
    };
    if (parts >= 1) rec(rec, 0, total);
    return out;
}

inline std::string en_id(const ENBasis& b) {
    std::ostringstream os;
    os << "a(";
    for (std::size_t i = 0; i < b.alpha.size(); ++i) os << (i ? "," : "") << b.alpha[i];
    os << ")I(";
    for (std::size_t i = 0; i < b.I.size(); ++i) os << (i ? "," : "") << b.I[i];
    os << ")";
    return os.str();
}

// shared builder: faces_ok selects which column sets I are allowed
template <class Pred>
MonomialChainComplex build_en(int n, int m, Pred faces_ok) {
    if (n < 1 || n > m) throw InvalidShapeError("sparse_en: need 1 <= n <= m");
    int top = m - n + 1;

    std::vector<std::vector<BasisElement>> levels(top + 1);
    std::vector<std::vector<ENBasis>> bases(top + 1);
    levels[0].push_back({"g[n]", Multidegree()});

    Face all(m);
    for (int i = 0; i < m; ++i) all[i] = i + 1;
    for (int l = 1; l <= top; ++l) {
        std::vector<Face> Is;
        subsets_of_size(all, n + l - 1, Is); // already lexicographic
        auto alphas = compositions(l - 1, n);
        std::sort(alphas.begin(), alphas.end());
        for (const auto& I : Is) {
            if (!faces_ok(I)) continue;
            for (const auto& a : alphas) {
                ENBasis b{a, I};
                bases[l].push_back(b);
                levels[l].push_back({en_id(b), en_multidegree(b)});
            }
        }
    }

    std::vector<std::vector<std::vector<DiffEntry>>> diffs(top + 1);
    std::map<std::pair<std::vector<int>, Face>, int> index; // basis lookup one level down
    for (int l = 1; l <= top; ++l) {
        index.clear();
        for (std::size_t i = 0; i < bases[l - 1].size(); ++i)
            index[{bases[l - 1][i].alpha, bases[l - 1][i].I}] = static_cast<int>(i);
        diffs[l].resize(bases[l].size());
        for (std::size_t s = 0; s < bases[l].size(); ++s) {
            const ENBasis& b = bases[l][s];
            if (l == 1) {
                // f_I -> (diagonal term of I) * g[n]
                diffs[l][s].push_back({0, 1, diagonal_initial_term(b.I, n)});
                continue;
            }
            for (const auto& p : indexing_set(b.alpha, b.I)) {
                auto it = std::find(b.I.begin(), b.I.end(), p.colValue);
                int pos = static_cast<int>(it - b.I.begin()) + 1; // 1-based position of the deleted element
                std::vector<int> na = b.alpha;
                na[p.row - 1] -= 1;
                Face nI = b.I;
                nI.erase(nI.begin() + (pos - 1));
                auto jt = index.find({na, nI});
                if (jt == index.end()) continue; // target column set not allowed
                long long sign = (pos % 2 == 1) ? 1 : -1;
                diffs[l][s].push_back({jt->second, sign, Monomial::variable(p.row, p.colValue)});
            }
        }
    }
    return MonomialChainComplex(std::move(levels), std::move(diffs));
}

} // namespace detail

inline MonomialChainComplex sparse_en(int n, int m) {
    return detail::build_en(n, m, [](const Face&) { return true; });
}

// subcomplex of sparse_en(n,m) on basis elements whose column set is a face
// of delta_clique; well defined because faces are closed under deletion
inline MonomialChainComplex generalized_sparse_en(const SimplicialComplex& delta_clique, int n, int m) {
    return detail::build_en(n, m, [&](const Face& I) { return delta_clique.contains(I); });
}

// same basis and signs, entry monomials pushed through the substitution
inline MonomialChainComplex specialize_complex(const MonomialChainComplex& c, Substitution phi) {
    std::vector<std::vector<BasisElement>> levels(c.levels().size());
    for (std::size_t l = 0; l < c.levels().size(); ++l)
        for (const auto& b : c.levels()[l]) levels[l].push_back({b.id, specialize(b.mdeg, phi)});
    std::vector<std::vector<std::vector<DiffEntry>>> diffs(c.diffs().size());
    for (std::size_t l = 1; l < c.diffs().size(); ++l) {
        diffs[l].resize(c.diffs()[l].size());
        for (std::size_t s = 0; s < c.diffs()[l].size(); ++s)
            for (const auto& e : c.diffs()[l][s])
                diffs[l][s].push_back({e.target, e.coeff, specialize(e.mono, phi)});
    }
    return MonomialChainComplex(std::move(levels), std::move(diffs));
}

} // namespace strandlab

#endif
