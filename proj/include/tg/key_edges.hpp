#pragma once

#include "tg/graph.hpp"
#include "tg/hamilton.hpp"

#include <vector>

namespace tg {

/// An edge joining D_j to D_{m+1-j} for some 1 <= j <= ceil(m/2). Such pairs
/// are always adjacent (indices sum to m+1 > m); for odd m and j = ceil(m/2)
/// both endpoints lie in the same set, which is a clique.
struct KeyEdge {
    int x = 0;            ///< endpoint in D_{lower_index}
    int y = 0;            ///< endpoint in D_{upper_index}
    int lower_index = 0;  ///< j
    int upper_index = 0;  ///< m+1-j

    friend bool operator==(const KeyEdge&, const KeyEdge&) = default;
};

/// How the degree partition reacts to deleting a key edge, keyed on the
/// pre-deletion sizes of the two degree sets involved.
enum class DeletionCase {
    case1,                 ///< |D_j| = 1, |D_{m+1-j}| = 1: both sets vanish, m drops by 2
    case2,                 ///< |D_j| = 1, |D_{m+1-j}| >= 2: x and y slide down, m unchanged
    case3,                 ///< |D_j| >= 2, |D_{m+1-j}| = 1: m drops by 1 in the even-middle subcase, else unchanged
    case4,                 ///< |D_j| >= 2, |D_{m+1-j}| >= 2: m grows by 1 in the even-middle subcase, else by 2
    odd_middle_size2,      ///< odd m, both ends in D_t, |D_t| = 2: the set vanishes, m drops by 1
    odd_middle_size3plus,  ///< odd m, both ends in D_t, |D_t| >= 3: a new set {x, y} appears, m grows by 1
};

const char* to_string(DeletionCase c);

struct DeletionOutcome {
    ThresholdGraph result;   ///< g - e, re-recognized and canonicalized
    DeletionCase label;
    int m_delta = 0;         ///< m(result) - m(g)
};

/// Every key edge, each listed once, ordered by (j, x, y) ascending.
/// Requires m >= 1.
std::vector<KeyEdge> key_edges(const ThresholdGraph& g);

/// Case label from the pre-deletion partition alone.
DeletionCase classify_key_edge(const DegreePartition& p, const KeyEdge& e);

/// The change of m implied by the case analysis, computed from the
/// pre-deletion partition alone.
int predicted_m_delta(const DegreePartition& p, const KeyEdge& e);

/// Delete a key edge. The result must still be a threshold graph and its m
/// must move exactly as predicted; either failure is a hard invariant
/// violation (std::logic_error). A non-key edge argument is a usage error.
DeletionOutcome delete_key_edge(const ThresholdGraph& g, const KeyEdge& e);

/// True iff every key edge of a hamiltonian threshold graph lies in at least
/// one Hamilton cycle. Non-hamiltonian input is a usage error.
bool verify_key_edges_in_hamilton_cycles(const ThresholdGraph& g, const CountOptions& opt = {});

}  // namespace tg
