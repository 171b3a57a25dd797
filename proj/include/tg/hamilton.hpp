#pragma once

#include "tg/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace tg {

/// Exact Hamilton-cycle counts are unbounded integers; they leave 64-bit
/// range around order 24 for dense graphs.
using HamiltonCount = boost::multiprecision::cpp_int;

enum class DpKernel { serial, parallel };

struct CountOptions {
    int max_order = 28;                     ///< capacity cap for the subset DP
    DpKernel kernel = DpKernel::parallel;   ///< parallel = OpenMP over popcount layers
};

/// Exact number of undirected Hamilton cycles, rotations and reflections
/// identified. Subset DP over vertex sets anchored at vertex 0: directed
/// cycles through 0 are counted and the total halved. Orders 1-2 yield 0;
/// orders above the cap raise CapacityError.
HamiltonCount count_hamilton_cycles(const SimpleGraph& g, const CountOptions& opt = {});

/// Exact number of undirected Hamilton cycles containing edge uv. Counted as
/// directed Hamilton paths u -> v (a path of length >= 2 cannot reuse the
/// edge uv, so each cycle through uv maps to exactly one such path).
/// Throws std::invalid_argument when uv is not an edge.
HamiltonCount count_hamilton_cycles_through_edge(const SimpleGraph& g, int u, int v,
                                                 const CountOptions& opt = {});

/// A Hamilton cycle in canonical form: starts at vertex 0 and the second
/// vertex is the smaller of 0's two cycle neighbours, which fixes rotation
/// and reflection.
struct HamiltonCycle {
    std::vector<int> vertices;

    bool contains_edge(int u, int v) const;
    friend bool operator==(const HamiltonCycle&, const HamiltonCycle&) = default;
};

/// Backtracking search for one Hamilton cycle, optionally through a required
/// edge. Returns the canonical form, or nullopt when none exists. Exponential
/// in the worst case; no order cap.
std::optional<HamiltonCycle> find_hamilton_cycle(
    const SimpleGraph& g, std::optional<std::pair<int, int>> required_edge = std::nullopt);

/// All Hamilton cycles in canonical form, lexicographic order. The output is
/// exponential for dense graphs; max_order guards against runaway inputs.
std::vector<HamiltonCycle> enumerate_hamilton_cycles(const SimpleGraph& g, int max_order = 14);

/// Backtracking existence test with no reliance on threshold structure;
/// oracle-scale only (CapacityError above max_order).
bool brute_force_hamiltonian(const SimpleGraph& g, int max_order = 12);

/// Outcome of the degree-partition hamiltonicity criterion for threshold
/// graphs. A threshold graph of order >= 3 is hamiltonian iff D_0 is empty,
/// the prefix sums satisfy sum |D_j| < sum |D_{m+1-j}| (j = 1..k) for every
/// k = 1..floor((m-1)/2), and for even m the middle prefix sums satisfy <=.
struct HamiltonicityVerdict {
    enum class Reason { ok, order_below_3, isolated_vertices, prefix_sum_strict, prefix_sum_middle };

    bool hamiltonian = false;
    Reason reason = Reason::ok;
    int failing_k = 0;   ///< first violated inequality, when applicable
};

HamiltonicityVerdict hamiltonicity_from_partition(const DegreePartition& p);

/// Shorthand for hamiltonicity_from_partition(p).hamiltonian.
bool is_hamiltonian(const DegreePartition& p);

}  // namespace tg
