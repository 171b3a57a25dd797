#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tg/graph.hpp"

#include <algorithm>
#include <set>

using namespace tg;

namespace {

// All creation sequences of the given length, as bit patterns.
template <class Fn>
void for_all_sequences(int len, Fn&& fn) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << len); ++bits) {
        CreationSequence seq;
        seq.symbols.resize(len);
        for (int i = 0; i < len; ++i)
            seq.symbols[i] = (bits >> i) & 1 ? CreationSymbol::dominating : CreationSymbol::isolated;
        fn(seq);
    }
}

// Reference construction, by the definition: dominating joins to everything
// built so far.
SimpleGraph simulate_construction(const CreationSequence& seq) {
    SimpleGraph g(seq.order());
    for (int i = 0; i < seq.order() - 1; ++i)
        if (seq.symbols[i] == CreationSymbol::dominating)
            for (int v = 0; v <= i; ++v) g.add_edge(i + 1, v);
    return g;
}

std::vector<int> sorted_desc(std::vector<int> v) {
    std::sort(v.rbegin(), v.rend());
    return v;
}

ThresholdGraph g6() { return ThresholdGraph::from_degree_sequence({5, 5, 4, 3, 3, 2}).value(); }

}  // namespace

TEST_CASE("creation sequence parsing") {
    CHECK(CreationSequence::parse("IDIDD").str() == "IDIDD");
    CHECK(CreationSequence::parse("").order() == 1);
    CHECK(CreationSequence::parse("idd").str() == "IDD");
    CHECK_THROWS_AS(CreationSequence::parse("IDX"), std::invalid_argument);
}

TEST_CASE("from_creation_sequence basic graphs") {
    const auto k1 = ThresholdGraph::from_creation_sequence(CreationSequence{});
    CHECK(k1.order() == 1);
    CHECK(k1.graph().edge_count() == 0);

    const auto k3 = ThresholdGraph::from_creation_sequence(CreationSequence::parse("DD"));
    CHECK(k3.order() == 3);
    CHECK(k3.graph().edge_count() == 3);
    CHECK(k3.degree_sequence() == std::vector<int>{2, 2, 2});

    // the order-6 extremal graph, built from its creation sequence
    const auto g = ThresholdGraph::from_creation_sequence(CreationSequence::parse("IDIDD"));
    CHECK(g.degree_sequence() == std::vector<int>{5, 5, 4, 3, 3, 2});
    CHECK(g.same_unlabeled(g6()));
}

TEST_CASE("construction matches the step-by-step simulation") {
    for (int len = 0; len <= 7; ++len) {
        for_all_sequences(len, [](const CreationSequence& seq) {
            const SimpleGraph raw = simulate_construction(seq);
            const auto via_factory = ThresholdGraph::from_creation_sequence(seq);
            const auto via_recognizer = ThresholdGraph::from_graph(raw);
            REQUIRE(via_recognizer.has_value());
            CHECK(via_factory.graph() == via_recognizer->graph());
        });
    }
}

TEST_CASE("built graph is connected iff the last symbol dominates") {
    for (int len = 1; len <= 8; ++len) {
        for_all_sequences(len, [&](const CreationSequence& seq) {
            const bool connected = simulate_construction(seq).connected();
            CHECK(connected == (seq.symbols.back() == CreationSymbol::dominating));
        });
    }
}

TEST_CASE("adjacency follows the partition-index rule") {
    const auto g = g6();
    const auto& p = g.partition();
    // canonical labels: D_1 = {0}, D_2 = {1,2}, D_3 = {3}, D_4 = {4,5}
    REQUIRE(p.m == 4);
    REQUIRE(p.sets[1] == std::vector<int>{0});
    REQUIRE(p.sets[2] == std::vector<int>{1, 2});
    REQUIRE(p.sets[3] == std::vector<int>{3});
    REQUIRE(p.sets[4] == std::vector<int>{4, 5});

    CHECK(g.adjacent(1, 3));        // D_2 x D_3: 2+3 > 4
    CHECK_FALSE(g.adjacent(0, 1));  // D_1 x D_2: 1+2 <= 4

    const auto k3 = ThresholdGraph::from_creation_sequence(CreationSequence::parse("DD"));
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
            if (u != v) CHECK(k3.adjacent(u, v));

    CHECK_THROWS_AS(g.adjacent(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.adjacent(0, 6), std::invalid_argument);
    CHECK_THROWS_AS(g.adjacent(-1, 0), std::invalid_argument);
}

TEST_CASE("degree partition") {
    SUBCASE("G_8") {
        const auto g = ThresholdGraph::from_degree_sequence({7, 7, 6, 5, 4, 4, 3, 2}).value();
        const auto& p = g.partition();
        CHECK(p.m == 6);
        CHECK(p.delta == std::vector<int>{0, 2, 3, 4, 5, 6, 7});
        CHECK(p.sets[0].empty());
        const std::vector<int> sizes{1, 1, 2, 1, 1, 2};
        for (int i = 1; i <= 6; ++i) CHECK(p.size_of(i) == sizes[i - 1]);
    }
    SUBCASE("edgeless order 4") {
        const auto p = degree_partition(SimpleGraph(4));
        CHECK(p.m == 0);
        CHECK(p.size_of(0) == 4);
    }
    SUBCASE("complete order 4") {
        const auto p = degree_partition(SimpleGraph::complete(4));
        CHECK(p.m == 1);
        CHECK(p.delta[1] == 3);
        CHECK(p.size_of(1) == 4);
        CHECK(p.sets[0].empty());
    }
}

TEST_CASE("recognizer") {
    CHECK_FALSE(recognize(SimpleGraph::cycle(4)).has_value());
    CHECK_FALSE(recognize(SimpleGraph::path(4)).has_value());
    CHECK(recognize(SimpleGraph::complete(5)).has_value());
    CHECK(recognize(SimpleGraph(3)).has_value());

    // every construction output is accepted, exhaustively to order 10
    for (int len = 0; len <= 9; ++len)
        for_all_sequences(len, [](const CreationSequence& seq) {
            REQUIRE(recognize(simulate_construction(seq)).has_value());
        });
}

TEST_CASE("degree recurrence") {
    const auto g8 = ThresholdGraph::from_degree_sequence({7, 7, 6, 5, 4, 4, 3, 2}).value();
    const auto& p = g8.partition();
    CHECK(check_degree_recurrence(p));
    // spot arithmetic: delta_1 = |D_6| and delta_4 = delta_3 + |D_3| - 1
    CHECK(p.delta[1] == p.size_of(6));
    CHECK(p.delta[4] == p.delta[3] + p.size_of(3) - 1);

    CHECK(check_degree_recurrence(degree_partition(SimpleGraph(3))));  // m = 0, vacuous

    // C_4 is regular of degree 2 but |D_1| = 4, so the recurrence fails
    CHECK_FALSE(check_degree_recurrence(degree_partition(SimpleGraph::cycle(4))));

    for (int len = 0; len <= 9; ++len)
        for_all_sequences(len, [](const CreationSequence& seq) {
            CHECK(check_degree_recurrence(ThresholdGraph::from_creation_sequence(seq).partition()));
        });
}

TEST_CASE("middle degree set has at least two members") {
    for (int len = 0; len <= 9; ++len)
        for_all_sequences(len, [](const CreationSequence& seq) {
            const auto& p = ThresholdGraph::from_creation_sequence(seq).partition();
            if (p.m >= 1) CHECK(p.size_of((p.m + 1) / 2) >= 2);
        });
}

TEST_CASE("size via degree sum and via the split formula") {
    CHECK(ThresholdGraph::from_degree_sequence({7, 7, 6, 5, 4, 4, 3, 2}).value().size() == 19);
    CHECK(ThresholdGraph::from_degree_sequence({4, 4, 3, 3, 2}).value().size() == 8);
    CHECK(ThresholdGraph::from_creation_sequence(CreationSequence{}).size() == 0);

    for (int len = 0; len <= 9; ++len)
        for_all_sequences(len, [](const CreationSequence& seq) {
            const auto g = ThresholdGraph::from_creation_sequence(seq);
            CHECK(g.size() == g.graph().edge_count());  // size() itself cross-checks both routes
        });
}

TEST_CASE("weight realization") {
    const auto g = g6();
    const auto wr = g.realize_weights();
    CHECK(wr.threshold == 4);
    CHECK(wr.weights == g.partition().index_of);
    CHECK(wr.weights[1] + wr.weights[3] > wr.threshold);   // a D_2/D_3 pair is adjacent
    CHECK(wr.weights[0] + wr.weights[3] <= wr.threshold);  // D_1/D_3 is not

    const auto k3 = ThresholdGraph::from_creation_sequence(CreationSequence::parse("DD"));
    const auto wk = k3.realize_weights();
    CHECK(wk.threshold == 1);
    CHECK(wk.weights == std::vector<int>{1, 1, 1});

    const auto empty3 = ThresholdGraph::from_creation_sequence(CreationSequence::parse("II"));
    const auto we = empty3.realize_weights();
    CHECK(we.threshold == 0);
    CHECK(we.weights == std::vector<int>{0, 0, 0});

    // soundness over every graph of order <= 10 (realize_weights verifies
    // internally; re-check one independent direction here)
    for (int len = 0; len <= 9; ++len)
        for_all_sequences(len, [](const CreationSequence& seq) {
            const auto g = ThresholdGraph::from_creation_sequence(seq);
            const auto wr = g.realize_weights();
            for (int u = 0; u < g.order(); ++u)
                for (int v = u + 1; v < g.order(); ++v)
                    REQUIRE((wr.weights[u] + wr.weights[v] > wr.threshold) == g.graph().adjacent(u, v));
        });
}

TEST_CASE("from_degree_sequence") {
    const auto g4 = ThresholdGraph::from_degree_sequence({3, 3, 2, 2});
    REQUIRE(g4.has_value());
    CHECK(g4->degree_sequence() == std::vector<int>{3, 3, 2, 2});
    CHECK(recognize(g4->graph()).has_value());

    CHECK_FALSE(ThresholdGraph::from_degree_sequence({2, 2, 2, 2}).has_value());
    CHECK_FALSE(ThresholdGraph::from_degree_sequence({1, 1, 1, 1}).has_value());
    CHECK_THROWS_AS(ThresholdGraph::from_degree_sequence({2, -1}), std::invalid_argument);

    // order-10 extremal degree sequence realizes and recognizes
    const auto g10 = ThresholdGraph::from_degree_sequence({9, 9, 8, 7, 6, 5, 5, 4, 3, 2});
    REQUIRE(g10.has_value());
    CHECK(recognize(g10->graph()).has_value());
    CHECK(g10->size() == 29);
}

TEST_CASE("round trips: sequence -> graph -> degrees -> graph -> sequence") {
    for (int len = 0; len <= 9; ++len)
        for_all_sequences(len, [](const CreationSequence& seq) {
            const auto g = ThresholdGraph::from_creation_sequence(seq);
            const auto rebuilt = ThresholdGraph::from_degree_sequence(g.degree_sequence());
            REQUIRE(rebuilt.has_value());
            CHECK(rebuilt->graph() == g.graph());  // identical canonical adjacency
            CHECK(g.creation_sequence() == seq);   // the sequence is unique
        });
}

TEST_CASE("degree multisets are pairwise distinct per order") {
    for (int len = 0; len <= 9; ++len) {
        std::set<std::vector<int>> seen;
        for_all_sequences(len, [&](const CreationSequence& seq) {
            seen.insert(ThresholdGraph::from_creation_sequence(seq).degree_sequence());
        });
        CHECK(seen.size() == (std::size_t(1) << len));
    }
}

TEST_CASE("canonical labelling sorts by partition index") {
    for (int len = 0; len <= 8; ++len)
        for_all_sequences(len, [](const CreationSequence& seq) {
            const auto g = ThresholdGraph::from_creation_sequence(seq);
            const auto& idx = g.partition().index_of;
            CHECK(std::is_sorted(idx.begin(), idx.end()));
            const auto d = g.graph().degrees();
            CHECK(std::is_sorted(d.begin(), d.end()));
        });
}

TEST_CASE("simple graph helpers") {
    auto g = SimpleGraph(5);
    g.add_edge(0, 3);
    CHECK(g.adjacent(3, 0));
    g.remove_edge(0, 3);
    CHECK_FALSE(g.adjacent(0, 3));
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 5), std::invalid_argument);

    const auto k4 = SimpleGraph::complete(4);
    CHECK(k4.edge_count() == 6);
    CHECK(sorted_desc(k4.degrees()) == std::vector<int>{3, 3, 3, 3});
    CHECK(k4.without_vertex(2) == SimpleGraph::complete(3));
    CHECK(SimpleGraph::cycle(5).connected());
    CHECK_FALSE(SimpleGraph(2).connected());
}
