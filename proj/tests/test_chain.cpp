#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "strandlab/chain.hpp"
#include "strandlab/en.hpp"
#include "strandlab/oracle.hpp"

using namespace strandlab;
using testutil::md;

namespace {

MonomialChainComplex flip_one_sign(const MonomialChainComplex& c) {
    auto levels = c.levels();
    auto diffs = c.diffs();
    for (std::size_t l = 2; l < diffs.size(); ++l)
        for (auto& col : diffs[l])
            if (!col.empty()) {
                col.front().coeff = -col.front().coeff;
                return MonomialChainComplex(levels, diffs);
            }
    FAIL("no entry to flip");
    return c;
}

} // namespace

TEST_CASE("verify_complex") {
    auto c = sparse_en(2, 4);
    CHECK(verify_complex(c));
    CHECK_FALSE(verify_complex(flip_one_sign(c)));
    // a single-differential complex has nothing to compose
    std::vector<std::vector<BasisElement>> levels{{{"u", Multidegree()}}, {{"v", md({{1, 1, 1}})}}};
    std::vector<std::vector<std::vector<DiffEntry>>> diffs{{}, {{{0, 1, md({{1, 1, 1}})}}}};
    CHECK(verify_complex(MonomialChainComplex(levels, diffs)));
}

TEST_CASE("construction validates shapes") {
    std::vector<std::vector<BasisElement>> levels{{{"u", Multidegree()}}, {{"v", md({{1, 1, 1}})}}};
    std::vector<std::vector<std::vector<DiffEntry>>> bad_target{{}, {{{3, 1, md({{1, 1, 1}})}}}};
    CHECK_THROWS_AS(MonomialChainComplex(levels, bad_target), ShapeMismatchError);
    std::vector<std::vector<std::vector<DiffEntry>>> bad_cols{{}, {}};
    CHECK_THROWS_AS(MonomialChainComplex(levels, bad_cols), ShapeMismatchError);
}

TEST_CASE("homogeneity and minimality") {
    auto c = sparse_en(2, 3);
    CHECK(is_homogeneous(c));
    CHECK(is_homogeneous_coarse(c));
    CHECK(is_minimal(c));
    std::vector<std::vector<BasisElement>> levels{{{"u", Multidegree()}}, {{"v", Multidegree()}}};
    std::vector<std::vector<std::vector<DiffEntry>>> diffs{{}, {{{0, 1, Monomial::unit()}}}};
    MonomialChainComplex unit_entry(levels, diffs);
    CHECK_FALSE(is_minimal(unit_entry));
    CHECK(is_homogeneous(unit_entry));
}

TEST_CASE("strand extraction") {
    auto c = sparse_en(2, 3);
    // α = degree of one generator: one level-1 element, nothing above
    auto s = strand(c, md({{1, 1, 1}, {2, 2, 1}}));
    CHECK(s.dims == std::vector<long long>{1, 1, 0});
    // α below every generator
    auto empty = strand(c, md({{1, 1, 1}}));
    CHECK(empty.dims == std::vector<long long>{1, 0, 0});
    // α = join of two generator degrees: exact at level 1
    auto alpha = monomial_lcm(md({{1, 1, 1}, {2, 3, 1}}), md({{1, 2, 1}, {2, 3, 1}}));
    auto s2 = strand(c, alpha);
    CHECK(s2.dims == std::vector<long long>{1, 2, 1});
    auto f = ScalarFieldSpec::prime();
    CHECK(strand_homology_at(s2, 1, f) == 0);
    // the full join recovers the level ranks
    Multidegree top;
    for (const auto& b : c.levels()[1]) top = monomial_lcm(top, b.mdeg);
    for (const auto& b : c.levels()[2]) top = monomial_lcm(top, b.mdeg);
    CHECK(strand(c, top).dims == c.level_ranks());
}

TEST_CASE("strand homology on the worked graphs") {
    auto f = ScalarFieldSpec::prime();
    auto g1 = generalized_sparse_en(clique_complex(testutil::graph1(), 2).clique_complex, 2, 4);
    auto h = strand_homology(g1, md({{1, 1, 1}, {2, 2, 1}, {2, 3, 1}}), f);
    CHECK(h.at(1) == 1);

    auto g2 = generalized_sparse_en(clique_complex(testutil::graph2(), 2).clique_complex, 2, 4);
    std::set<VarIndex> vars;
    for (const auto& lv : g2.levels())
        for (const auto& b : lv)
            for (const auto& [v, e] : b.mdeg.exponents()) vars.insert(v);
    for (const auto& b : g2.levels()[1])
        for (const auto& v : vars) {
            Multidegree a = b.mdeg;
            a.bump(v, 1);
            CHECK(strand_homology(g2, a, f).at(1) == 0);
        }
}

TEST_CASE("exactness_check") {
    auto f = ScalarFieldSpec::prime();
    auto c = sparse_en(2, 3);
    auto ideal = initial_dfi(SimplicialComplex::complete_complex(3, 2), 2);
    CHECK(exactness_check(c, ideal, f).exact);

    auto g1clique = clique_complex(testutil::graph1(), 2).clique_complex;
    auto gen = generalized_sparse_en(g1clique, 2, 4);
    auto bad = exactness_check(gen, initial_dfi(testutil::graph1(), 2), f);
    CHECK_FALSE(bad.exact);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->degree() >= 3);

    // deleting a level-2 generator breaks exactness
    auto levels = c.levels();
    auto diffs = c.diffs();
    levels[2].pop_back();
    diffs[2].pop_back();
    MonomialChainComplex truncated(levels, diffs);
    CHECK_FALSE(exactness_check(truncated, ideal, f).exact);
}

TEST_CASE("off-lattice degrees behave like membership tests") {
    auto f = ScalarFieldSpec::prime();
    auto c = sparse_en(2, 4);
    auto ideal = initial_dfi(SimplicialComplex::complete_complex(4, 2), 2);
    std::mt19937 rng(5150);
    for (int t = 0; t < 50; ++t) {
        auto alpha = testutil::random_multidegree(rng, 2, 4, 5);
        CHECK(exact_at(c, ideal, alpha, f));
    }
}

TEST_CASE("betti_from_minimal") {
    auto c = sparse_en(2, 3);
    auto t = betti_from_minimal(c);
    auto coarse = t.coarse();
    CHECK(coarse[{1, 2}] == 3);
    CHECK(coarse[{2, 3}] == 2);
    for (const auto& [k, v] : t.fine) CHECK(v <= 1);

    auto t4 = betti_from_minimal(sparse_en(2, 4)).coarse();
    CHECK(t4[{1, 2}] == 6);
    CHECK(t4[{2, 3}] == 8);
    CHECK(t4[{3, 4}] == 3);

    std::vector<std::vector<BasisElement>> levels{{{"u", Multidegree()}}, {{"v", md({{1, 1, 1}})}}};
    std::vector<std::vector<std::vector<DiffEntry>>> diffs{{}, {{{0, 1, md({{1, 1, 1}})}}}};
    CHECK(betti_from_minimal(MonomialChainComplex(levels, diffs)).coarse()[{1, 1}] == 1);

    std::vector<std::vector<std::vector<DiffEntry>>> unit{{}, {{{0, 1, Monomial::unit()}}}};
    std::vector<std::vector<BasisElement>> ulv{{{"u", Multidegree()}}, {{"v", Multidegree()}}};
    CHECK_THROWS_AS(betti_from_minimal(MonomialChainComplex(ulv, unit)), NotMinimalError);
}

TEST_CASE("linear_strand_table") {
    auto linear = betti_from_minimal(sparse_en(2, 4));
    CHECK(linear_strand_table(linear, 2) == linear); // a linear resolution is unchanged
    BettiTable t;
    t.fine[{1, md({{1, 1, 1}, {2, 2, 1}})}] = 1;
    t.fine[{2, md({{1, 1, 2}, {2, 2, 2}, {2, 3, 1}})}] = 1; // degree n+3 at index 2: dropped
    auto lt = linear_strand_table(t, 2);
    CHECK(lt.fine.size() == 1);
    CHECK(lt.fine.count({1, md({{1, 1, 1}, {2, 2, 1}})}) == 1);

    auto oracle = multigraded_betti(initial_dfi(testutil::graph1(), 2), ScalarFieldSpec::prime());
    auto strand = linear_strand_table(oracle, 2).coarse();
    CHECK(strand[{1, 2}] == 5);
    CHECK(strand[{2, 3}] == 6);
    CHECK(strand[{3, 4}] == 2);
}

TEST_CASE("property: strand Euler characteristic equals homology Euler characteristic") {
    auto f = ScalarFieldSpec::prime();
    std::mt19937 rng(31337);
    auto c = sparse_en(2, 4);
    for (int t = 0; t < 25; ++t) {
        auto alpha = testutil::random_multidegree(rng, 2, 4, 6);
        auto s = strand(c, alpha);
        long long chi = 0, hchi = 0;
        for (int l = 0; l <= c.top_level(); ++l) {
            long long sign = (l % 2 == 0) ? 1 : -1;
            chi += sign * s.dims[l];
            hchi += sign * strand_homology_at(s, l, f);
        }
        CHECK(chi == hchi);
    }
}

TEST_CASE("join_closure") {
    std::vector<Multidegree> gens{md({{1, 1, 1}}), md({{1, 2, 1}}), md({{1, 3, 1}})};
    CHECK(join_closure(gens).size() == 7); // all nonempty subsets of an antichain of variables
    CHECK(join_closure({md({{1, 1, 2}})}).size() == 1);
}
