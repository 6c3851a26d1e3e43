#ifndef STRANDLAB_SIMPLICIAL_HPP
#define STRANDLAB_SIMPLICIAL_HPP

// Simplicial complexes on [m] in facet-list presentation. The void complex
// (no faces at all) and the irrelevant complex {∅} are distinct values:
// the former has an empty facet list, the latter's only facet is ∅.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "strandlab/errors.hpp"
#include "strandlab/exactla.hpp"

namespace strandlab {

using Face = std::vector<int>; // strictly increasing vertex labels in 1..m

struct HomologyVector {
    // reduced convention: degree -1 is meaningful ({∅} has dims[-1] = 1)
    std::map<int, long long> dims;

    long long at(int i) const {
        auto it = dims.find(i);
        return it == dims.end() ? 0 : it->second;
    }
    bool all_zero() const {
        for (const auto& [i, d] : dims)
            if (d != 0) return false;
        return true;
    }
    bool operator==(const HomologyVector&) const = default;
};

class SimplicialComplex {
public:
    // facets are maximalized, validated against 1..m, and sorted
    // lexicographically; the antichain flag records whether the input
    // already was one.
    SimplicialComplex(int m, std::vector<Face> faces) : m_(m) {
        if (m < 0) throw OutOfRangeError("SimplicialComplex: negative vertex count");
        for (auto& f : faces) {
            std::sort(f.begin(), f.end());
            if (std::adjacent_find(f.begin(), f.end()) != f.end())
                throw OutOfRangeError("SimplicialComplex: repeated vertex in face");
            if (!f.empty() && (f.front() < 1 || f.back() > m))
                throw OutOfRangeError("SimplicialComplex: vertex outside 1..m");
        }
        std::sort(faces.begin(), faces.end());
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        was_antichain_ = true;
        for (const auto& f : faces) {
            bool maximal = true;
            for (const auto& g : faces) {
                if (&f != &g && f.size() < g.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                    maximal = false;
                    break;
                }
            }
            if (maximal)
                facets_.push_back(f);
            else
                was_antichain_ = false;
        }
    }

    static SimplicialComplex void_complex(int m) { return SimplicialComplex(m, {}); }
    static SimplicialComplex irrelevant_complex(int m) { return SimplicialComplex(m, {Face{}}); }

    static SimplicialComplex full_simplex(int m) {
        Face all(m);
        for (int i = 0; i < m; ++i) all[i] = i + 1;
        return SimplicialComplex(m, {all});
    }

    // all n-subsets of [m] as facets
    static SimplicialComplex complete_complex(int m, int n);

    int vertex_count() const { return m_; }
    const std::vector<Face>& facets() const { return facets_; }
    bool was_antichain() const { return was_antichain_; }
    bool is_void() const { return facets_.empty(); }

    int dimension() const { // -2 for the void complex by convention
        int d = -2;
        for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
        return d;
    }

    bool contains(const Face& face) const {
        for (const auto& f : facets_)
            if (std::includes(f.begin(), f.end(), face.begin(), face.end())) return true;
        return false;
    }

    bool is_pure(int n) const { // pure (n-1)-dimensional
        if (facets_.empty()) return true;
        for (const auto& f : facets_)
            if (static_cast<int>(f.size()) != n) return false;
        return true;
    }

    bool operator==(const SimplicialComplex& other) const {
        return m_ == other.m_ && facets_ == other.facets_;
    }

private:
    int m_ = 0;
    std::vector<Face> facets_;
    bool was_antichain_ = true;
};

inline SimplicialComplex SimplicialComplex::complete_complex(int m, int n) {
    std::vector<Face> fs;
    Face cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == n) {
            fs.push_back(cur);
            return;
        }
        for (int v = start; v <= m; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return SimplicialComplex(m, fs);
}

namespace detail {

inline void subsets_of_size(const Face& f, int k, std::vector<Face>& out) {
    if (k < 0 || k > static_cast<int>(f.size())) return;
    Face cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < f.size(); ++i) {
            cur.push_back(f[i]);
            self(self, i + 1);
        cur.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace detail

// the k-element faces, deduplicated, in lexicographic order
inline std::vector<Face> faces(const SimplicialComplex& delta, int k) {
    std::set<Face> out;
    std::vector<Face> buf;
    for (const auto& f : delta.facets()) {
        buf.clear();
        detail::subsets_of_size(f, k, buf);
        out.insert(buf.begin(), buf.end());
    }
    if (k == 0 && !delta.is_void()) out.insert(Face{});
    return {out.begin(), out.end()};
}

inline std::vector<Face> all_faces(const SimplicialComplex& delta) {
    std::vector<Face> out;
    int d = delta.dimension();
    for (int k = 0; k <= d + 1; ++k) {
        auto fk = faces(delta, k);
        out.insert(out.end(), fk.begin(), fk.end());
    }
    return out;
}

inline SimplicialComplex skeleton(const SimplicialComplex& delta, int i) {
    if (i < -1) throw OutOfRangeError("skeleton: dimension below -1");
    std::vector<Face> fs;
    for (const auto& f : delta.facets()) {
        if (static_cast<int>(f.size()) <= i + 1) {
            fs.push_back(f);
        } else {
            detail::subsets_of_size(f, i + 1, fs);
        }
    }
    if (fs.empty() && !delta.is_void()) fs.push_back(Face{});
    return SimplicialComplex(delta.vertex_count(), fs);
}

inline SimplicialComplex induced_subcomplex(const SimplicialComplex& delta, const std::vector<int>& w) {
    std::set<int> ws(w.begin(), w.end());
    std::vector<Face> fs;
    for (const auto& f : delta.facets()) {
        Face g;
        for (int v : f)
            if (ws.count(v)) g.push_back(v);
        fs.push_back(g);
    }
    if (fs.empty() && !delta.is_void()) fs.push_back(Face{});
    return SimplicialComplex(delta.vertex_count(), fs);
}

struct CliqueDecomposition {
    SimplicialComplex clique_complex;      // facets are the maximal cliques
    std::vector<Face> maximal_cliques;     // same facets, in lexicographic order
    std::vector<SimplicialComplex> parts;  // Δ_i = (n-1)-skeleton of each clique
};

// Maximal vertex sets Γ with |Γ| >= n all of whose n-subsets are facets of Δ.
// Breadth-first growth from the facets; fine at the target scale (m <= 14).
inline CliqueDecomposition clique_complex(const SimplicialComplex& delta, int n) {
    if (n < 1) throw OutOfRangeError("clique_complex: n must be >= 1");
    if (!delta.is_pure(n))
        throw NotPureError("clique_complex: complex is not pure (n-1)-dimensional");

    std::set<Face> facet_set(delta.facets().begin(), delta.facets().end());
    auto grows_with = [&](const Face& gamma, int v) {
        // every n-subset of gamma ∪ {v} containing v must be a facet
        std::vector<Face> subs;
        detail::subsets_of_size(gamma, n - 1, subs);
        for (auto s : subs) {
            s.push_back(v);
            std::sort(s.begin(), s.end());
            if (!facet_set.count(s)) return false;
        }
        return true;
    };

    std::set<Face> frontier(facet_set.begin(), facet_set.end());
    std::set<Face> maximal;
    while (!frontier.empty()) {
        std::set<Face> next;
        for (const auto& gamma : frontier) {
            bool grew = false;
            for (int v = 1; v <= delta.vertex_count(); ++v) {
                if (std::binary_search(gamma.begin(), gamma.end(), v)) continue;
                if (grows_with(gamma, v)) {
                    Face g = gamma;
                    g.insert(std::lower_bound(g.begin(), g.end(), v), v);
                    next.insert(g);
                    grew = true;
                }
            }
            if (!grew) maximal.insert(gamma);
        }
        frontier = std::move(next);
    }
    // drop cliques contained in a larger one discovered along another branch
    std::vector<Face> cliques;
    for (const auto& g : maximal) {
        bool contained = false;
        for (const auto& h : maximal)
            if (g != h && g.size() < h.size() && std::includes(h.begin(), h.end(), g.begin(), g.end())) {
                contained = true;
                break;
            }
        if (!contained) cliques.push_back(g);
    }
    std::sort(cliques.begin(), cliques.end());

    CliqueDecomposition out{SimplicialComplex(delta.vertex_count(), cliques), cliques, {}};
    for (const auto& g : cliques) {
        std::vector<Face> fs;
        detail::subsets_of_size(g, n, fs);
        out.parts.emplace_back(delta.vertex_count(), fs);
    }
    return out;
}

// σ ∉ Δ of cardinality c such that for some j >= 1 the i+1 consecutive
// single-vertex deletions σ∖σ_{j+k}, k = 0..i, all lie in Δ.
inline std::vector<Face> i_nonfaces(const SimplicialComplex& delta, int i, int c) {
    if (i < 1 || c < 1) throw OutOfRangeError("i_nonfaces: need i >= 1 and c >= 1");
    std::vector<Face> out;
    Face sigma;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(sigma.size()) == c) {
            if (delta.contains(sigma)) return;
            for (int j = 1; j + i <= c; ++j) {
                bool ok = true;
                for (int k = 0; k <= i && ok; ++k) {
                    Face del = sigma;
                    del.erase(del.begin() + (j - 1 + k));
                    ok = delta.contains(del);
                }
                if (ok) {
                    out.push_back(sigma);
                    return;
                }
            }
            return;
        }
        for (int v = start; v <= delta.vertex_count(); ++v) {
            sigma.push_back(v);
            self(self, v + 1);
            sigma.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// Reduced simplicial homology over the given field, by exact rank
// computation on the boundary matrices (empty face included in degree -1).
inline HomologyVector reduced_homology(const SimplicialComplex& delta, const ScalarFieldSpec& field) {
    HomologyVector h;
    if (delta.is_void()) return h;

    int dim = delta.dimension();
    std::vector<std::vector<Face>> by_dim(dim + 2); // index d+1 holds dimension d
    for (int d = -1; d <= dim; ++d) by_dim[d + 1] = faces(delta, d + 1);

    std::vector<std::map<Face, int>> index(dim + 2);
    for (int d = -1; d <= dim; ++d)
        for (std::size_t i = 0; i < by_dim[d + 1].size(); ++i) index[d + 1][by_dim[d + 1][i]] = static_cast<int>(i);

    // ranks[d] = rank of the boundary map from dimension d to dimension d-1
    std::map<int, int> ranks;
    for (int d = 0; d <= dim; ++d) {
        SparseMatrix bd(static_cast<int>(by_dim[d].size()), static_cast<int>(by_dim[d + 1].size()));
        for (std::size_t col = 0; col < by_dim[d + 1].size(); ++col) {
            const Face& f = by_dim[d + 1][col];
            for (std::size_t i = 0; i < f.size(); ++i) {
                Face g = f;
                g.erase(g.begin() + static_cast<long>(i));
                bd.set(index[d].at(g), static_cast<int>(col), (i % 2 == 0) ? 1 : -1);
            }
        }
        ranks[d] = rank(bd, field);
    }
    for (int d = -1; d <= dim; ++d) {
        long long nd = static_cast<long long>(by_dim[d + 1].size());
        long long v = nd - (d >= 0 ? ranks[d] : 0) - (d < dim ? ranks[d + 1] : 0);
        if (v != 0) h.dims[d] = v;
    }
    return h;
}

inline long long euler_characteristic(const SimplicialComplex& delta) {
    long long chi = 0; // reduced: the empty face counts with sign -1
    for (int d = -1; d <= delta.dimension(); ++d)
        chi += ((d % 2 == 0) ? 1 : -1) * static_cast<long long>(faces(delta, d + 1).size());
    return chi;
}

} // namespace strandlab

#endif
