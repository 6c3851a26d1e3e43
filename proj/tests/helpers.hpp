#ifndef STRANDLAB_TEST_HELPERS_HPP
#define STRANDLAB_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "strandlab/ideals.hpp"
#include "strandlab/monomial.hpp"
#include "strandlab/simplicial.hpp"

namespace testutil {

using namespace strandlab;

struct VarExp {
    int row, col, exp;
};

inline Multidegree md(std::initializer_list<VarExp> entries) {
    Multidegree d;
    for (const auto& e : entries) d.bump({e.row, e.col}, e.exp);
    return d;
}

// the three graphs from the worked nonface examples
inline SimplicialComplex graph1() { return SimplicialComplex(4, {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}}); }
inline SimplicialComplex graph2() { return SimplicialComplex(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}); }
inline SimplicialComplex graph3() { return SimplicialComplex(4, {{1, 2}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }

// random nonempty pure (n-1)-dimensional complex on m vertices
inline SimplicialComplex random_pure_complex(std::mt19937& rng, int n, int m) {
    std::vector<Face> pool;
    Face all(m);
    for (int i = 0; i < m; ++i) all[i] = i + 1;
    detail::subsets_of_size(all, n, pool);
    std::vector<Face> facets;
    while (facets.empty()) {
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        double p = coin(rng) * 0.6 + 0.2;
        for (const auto& f : pool)
            if (coin(rng) < p) facets.push_back(f);
    }
    return SimplicialComplex(m, facets);
}

inline Multidegree random_multidegree(std::mt19937& rng, int n, int m, int max_total) {
    std::uniform_int_distribution<int> row(1, n), col(1, m), deg(0, max_total);
    Multidegree d;
    int total = deg(rng);
    for (int t = 0; t < total; ++t) d.bump({row(rng), col(rng)}, 1);
    return d;
}

} // namespace testutil

#endif
