#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tg/extremal.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace tg;

namespace {

// Brute-force isomorphism: try every degree-compatible permutation.
bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.order() != b.order()) return false;
    auto da = a.degrees(), db = b.degrees();
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    const int n = a.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) ok = da[v] == db[perm[v]];
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                ok = a.adjacent(u, v) == b.adjacent(perm[u], perm[v]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("build_gn degree sequences") {
    CHECK(build_gn(8).degree_sequence() == std::vector<int>{7, 7, 6, 5, 4, 4, 3, 2});
    CHECK(build_gn(4).degree_sequence() == std::vector<int>{3, 3, 2, 2});
    CHECK(build_gn(3).degree_sequence() == std::vector<int>{2, 2, 2});
    CHECK_THROWS_AS(build_gn(2), std::invalid_argument);
}

TEST_CASE("build_gn structure") {
    for (int n = 3; n <= 20; ++n) {
        const auto g = build_gn(n);
        const auto& p = g.partition();
        CHECK(p.m == std::max(1, n - 2));  // n-2 distinct degrees (1 at n = 3)
        CHECK(is_hamiltonian(p));
        if (n >= 5) {
            CHECK(p.size_of(p.m) == 2);
            CHECK(p.size_of(1) == 1);
        }
    }
}

TEST_CASE("closed forms") {
    CHECK(gn_cycle_count_formula(3) == 1);
    CHECK(gn_cycle_count_formula(4) == 1);
    CHECK(gn_cycle_count_formula(8) == 4);
    CHECK(gn_cycle_count_formula(21) == 512);
    CHECK_THROWS_AS(gn_cycle_count_formula(2), std::invalid_argument);

    CHECK(min_size_formula(5) == 8);
    CHECK(min_size_formula(8) == 19);
    CHECK(min_size_formula(3) == 3);
    CHECK_THROWS_AS(min_size_formula(1), std::invalid_argument);
    for (int n = 3; n <= 20; ++n) CHECK(min_size_formula(n) == build_gn(n).size());
}

TEST_CASE("G_n attains the cycle-count formula") {
    for (int n = 3; n <= 16; ++n)
        CHECK(count_hamilton_cycles(build_gn(n).graph()) == gn_cycle_count_formula(n));
    // past the uint64 accumulator switch
    CHECK(count_hamilton_cycles(build_gn(21).graph()) == 512);
    CHECK(count_hamilton_cycles(build_gn(22).graph()) == 512);
}

TEST_CASE("the recognizer accepts G_n") {
    for (int n = 3; n <= 12; ++n) {
        const auto p = recognize(build_gn(n).graph());
        REQUIRE(p.has_value());
        CHECK(p->m == std::max(1, n - 2));
    }
}

TEST_CASE("enumeration yields 2^(n-1) distinct graphs") {
    CHECK(all_threshold_graphs(1).size() == 1);
    CHECK(all_threshold_graphs(5).size() == 16);
    CHECK(all_threshold_graphs(10).size() == 512);
    CHECK_THROWS_AS(all_threshold_graphs(21), CapacityError);

    std::set<std::vector<int>> multisets;
    for (const auto& g : all_threshold_graphs(5)) multisets.insert(g.degree_sequence());
    CHECK(multisets.size() == 16);
}

TEST_CASE("the isomorphism oracle itself distinguishes and identifies") {
    // C_6 and two triangles share the degree multiset but are not isomorphic
    SimpleGraph two_triangles(6);
    for (int base : {0, 3})
        for (int i = 0; i < 3; ++i) two_triangles.add_edge(base + i, base + (i + 1) % 3);
    CHECK_FALSE(isomorphic(SimpleGraph::cycle(6), two_triangles));

    // a scrambled relabelling is recognized as isomorphic
    const auto g = build_gn(6).graph();
    CHECK(isomorphic(g, g.relabeled({3, 5, 0, 2, 4, 1})));
}

TEST_CASE("degree-multiset dedup is licensed: order <= 7 graphs are pairwise non-isomorphic") {
    for (int n = 5; n <= 7; ++n) {
        const auto graphs = all_threshold_graphs(n);
        for (std::size_t i = 0; i < graphs.size(); ++i)
            for (std::size_t j = i + 1; j < graphs.size(); ++j)
                REQUIRE_FALSE(isomorphic(graphs[i].graph(), graphs[j].graph()));
    }
    // and the converse direction: rebuilding from the degree multiset gives a
    // graph the permutation oracle confirms isomorphic
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : all_threshold_graphs(n)) {
            const auto rebuilt = ThresholdGraph::from_degree_sequence(g.degree_sequence());
            REQUIRE(rebuilt.has_value());
            REQUIRE(isomorphic(g.graph(), rebuilt->graph()));
        }
}

TEST_CASE("cycle-count sweep at small orders") {
    const auto r5 = verify_min_cycle_count(5);
    CHECK(r5.pass);
    CHECK(r5.min_count == 2);
    CHECK(r5.unique);
    CHECK(r5.minimizers == std::vector<std::vector<int>>{{4, 4, 3, 3, 2}});

    const auto r4 = verify_min_cycle_count(4);
    CHECK(r4.pass);
    CHECK(r4.min_count == 1);
    CHECK(r4.minimizers == std::vector<std::vector<int>>{{3, 3, 2, 2}});

    const auto r10 = verify_min_cycle_count(10);
    CHECK(r10.pass);
    CHECK(r10.min_count == 8);
    CHECK(r10.unique == (r10.minimizers.size() == 1));
    CHECK(r10.hamiltonian_total > 0);

    CHECK_THROWS_AS(verify_min_cycle_count(15), CapacityError);  // default sweep cap 14
}

TEST_CASE("size sweep at small orders") {
    const auto r8 = verify_min_size(8);
    CHECK(r8.pass);
    CHECK(r8.min_size == 19);
    CHECK(r8.size_unique);

    const auto r5 = verify_min_size(5);
    CHECK(r5.pass);
    CHECK(r5.min_size == 8);

    const auto r3 = verify_min_size(3);
    CHECK(r3.min_size == 3);
    CHECK(r3.hamiltonian_total == 1);  // only K_3
    CHECK(r3.pass);

    // endpoint of the default enumeration cap
    const auto r20 = verify_min_size(20);
    CHECK(r20.pass);
    CHECK(r20.min_size == 109);
}

TEST_CASE("count recurrence f(2k-1) = f(2k), f(2k+1) = 2 f(2k)") {
    CHECK(verify_count_recurrence(4));
    CHECK_THROWS_AS(verify_count_recurrence(1), std::invalid_argument);
}

TEST_CASE("forced path through the middle degree pair") {
    for (int k = 2; k <= 4; ++k) CHECK(verify_forced_path(k));
    CHECK_THROWS_AS(verify_forced_path(1), std::invalid_argument);
    CHECK_THROWS_AS(verify_forced_path(8), CapacityError);  // 2k = 16 > default cap 14
}

TEST_CASE("deleting one middle-pair vertex of G_2k+1 gives G_2k") {
    for (int k = 2; k <= 8; ++k) {
        const int n = 2 * k + 1;
        const auto g = build_gn(n);
        std::vector<int> pair;
        for (int v = 0; v < n; ++v)
            if (g.graph().degree(v) == (n + 1) / 2) pair.push_back(v);
        REQUIRE(pair.size() == 2);
        auto reduced = g.graph().without_vertex(pair[1]);
        auto ds = reduced.degrees();
        std::sort(ds.rbegin(), ds.rend());
        CHECK(ds == build_gn(2 * k).degree_sequence());
    }
}

TEST_CASE("lemma suite runs clean at order 7") {
    const auto r = verify_lemma_suite(7);
    CHECK(r.pass);
    CHECK(r.deletion_closure);
    CHECK(r.key_edges_in_cycles);
    CHECK(r.hamiltonicity_oracle);
    CHECK(r.degree_recurrence);
    CHECK(r.middle_set_bound);
    CHECK(r.weight_soundness);
    CHECK(r.size_agreement);
    CHECK(r.degree_injectivity);
    CHECK_THROWS_AS(verify_lemma_suite(13), CapacityError);
}
