#include "tg/key_edges.hpp"

#include <string>

namespace tg {

const char* to_string(DeletionCase c) {
    switch (c) {
        case DeletionCase::case1: return "CASE1";
        case DeletionCase::case2: return "CASE2";
        case DeletionCase::case3: return "CASE3";
        case DeletionCase::case4: return "CASE4";
        case DeletionCase::odd_middle_size2: return "ODD_MIDDLE_SIZE2";
        case DeletionCase::odd_middle_size3plus: return "ODD_MIDDLE_SIZE3PLUS";
    }
    return "?";
}

std::vector<KeyEdge> key_edges(const ThresholdGraph& g) {
    const DegreePartition& p = g.partition();
    if (p.m < 1) throw std::invalid_argument("key edges need at least one positive degree set");
    std::vector<KeyEdge> out;
    for (int j = 1; j <= (p.m + 1) / 2; ++j) {
        const int partner = p.m + 1 - j;
        if (j < partner) {
            for (int x : p.sets[j])
                for (int y : p.sets[partner]) out.push_back({x, y, j, partner});
        } else {
            // odd m, middle set: D_t is a clique since t + t > m
            const auto& mid = p.sets[j];
            for (std::size_t a = 0; a < mid.size(); ++a)
                for (std::size_t b = a + 1; b < mid.size(); ++b) out.push_back({mid[a], mid[b], j, partner});
        }
    }
    return out;
}

namespace {

void require_key_edge(const DegreePartition& p, const KeyEdge& e) {
    const bool shape_ok = e.lower_index >= 1 && e.lower_index <= e.upper_index &&
                          e.lower_index + e.upper_index == p.m + 1;
    if (!shape_ok || e.x == e.y || e.x < 0 || e.x >= p.order() || e.y < 0 || e.y >= p.order() ||
        p.index_of[e.x] != e.lower_index || p.index_of[e.y] != e.upper_index)
        throw std::invalid_argument("not a key edge of this graph");
}

}  // namespace

DeletionCase classify_key_edge(const DegreePartition& p, const KeyEdge& e) {
    require_key_edge(p, e);
    if (e.lower_index == e.upper_index)
        return p.size_of(e.lower_index) == 2 ? DeletionCase::odd_middle_size2
                                             : DeletionCase::odd_middle_size3plus;
    const int a = p.size_of(e.lower_index);
    const int b = p.size_of(e.upper_index);
    if (a == 1 && b == 1) return DeletionCase::case1;
    if (a == 1) return DeletionCase::case2;
    if (b == 1) return DeletionCase::case3;
    return DeletionCase::case4;
}

int predicted_m_delta(const DegreePartition& p, const KeyEdge& e) {
    const bool even_middle =
        p.m % 2 == 0 && e.lower_index == p.m / 2 && p.size_of(e.lower_index) == 2;
    switch (classify_key_edge(p, e)) {
        case DeletionCase::case1: return -2;
        case DeletionCase::case2: return 0;
        case DeletionCase::case3: return even_middle ? -1 : 0;
        case DeletionCase::case4: return even_middle ? 1 : 2;
        case DeletionCase::odd_middle_size2: return -1;
        case DeletionCase::odd_middle_size3plus: return 1;
    }
    throw std::logic_error("unreachable deletion case");
}

DeletionOutcome delete_key_edge(const ThresholdGraph& g, const KeyEdge& e) {
    const DegreePartition& p = g.partition();
    require_key_edge(p, e);

    const DeletionCase label = classify_key_edge(p, e);
    const int predicted = predicted_m_delta(p, e);

    SimpleGraph reduced = g.graph();
    reduced.remove_edge(e.x, e.y);
    auto result = ThresholdGraph::from_graph(reduced);
    if (!result)
        throw std::logic_error("key-edge deletion left the threshold class (case " +
                               std::string(to_string(label)) + ")");
    const int observed = result->partition().m - p.m;
    if (observed != predicted)
        throw std::logic_error("key-edge deletion moved m by " + std::to_string(observed) +
                               ", expected " + std::to_string(predicted) + " (case " +
                               std::string(to_string(label)) + ")");
    return {*std::move(result), label, observed};
}

bool verify_key_edges_in_hamilton_cycles(const ThresholdGraph& g, const CountOptions& opt) {
    if (!is_hamiltonian(g.partition()))
        throw std::invalid_argument("key-edge cycle check requires a hamiltonian graph");
    for (const KeyEdge& e : key_edges(g))
        if (count_hamilton_cycles_through_edge(g.graph(), e.x, e.y, opt) < 1) return false;
    return true;
}

}  // namespace tg
