#pragma once

#include "tg/graph.hpp"
#include "tg/hamilton.hpp"

#include <functional>
#include <vector>

namespace tg {

/// G_n: the threshold graph with degree sequence
/// n-1, n-1, n-2, ..., ceil(n/2), ceil(n/2), ..., 3, 2 (n-2 distinct degrees;
/// n = 3 collapses to K_3). It is hamiltonian and is the unique minimizer of
/// both the Hamilton-cycle count and the size among hamiltonian threshold
/// graphs of order n.
ThresholdGraph build_gn(int n);

/// 2^floor((n-3)/2), the Hamilton-cycle count of G_n.
HamiltonCount gn_cycle_count_formula(int n);

/// (n^2+2n-3)/4 for odd n, (n^2+2n-4)/4 for even n: the size of G_n and the
/// minimum size of a hamiltonian threshold graph of order n.
long long min_size_formula(int n);

/// Visit one representative per unlabelled threshold graph of order n: all
/// 2^(n-1) creation sequences, in index order (bit i of the index set means
/// vertex i+1 joins dominating). Degree multisets are checked to be pairwise
/// distinct before returning. Throws CapacityError above max_order.
void enumerate_threshold_graphs(int n,
                                const std::function<void(std::uint64_t, const ThresholdGraph&)>& visit,
                                int max_order = 20);

std::vector<ThresholdGraph> all_threshold_graphs(int n, int max_order = 20);

struct SweepOptions {
    int max_enum_order = 20;         ///< cap on 2^(n-1) enumeration sweeps
    int max_count_sweep_order = 14;  ///< cap when every enumerated graph is counted
    CountOptions count;              ///< per-graph counting options
};

/// Result of an exhaustive sweep over the threshold graphs of one order.
/// Minimizer identities are carried as degree sequences (non-increasing),
/// which determine threshold graphs uniquely.
struct ExtremalReport {
    int n = 0;
    bool pass = false;

    HamiltonCount min_count;                      ///< min cycle count over hamiltonian graphs
    HamiltonCount formula_count;                  ///< 2^floor((n-3)/2)
    std::vector<std::vector<int>> minimizers;     ///< degree sequences attaining min_count
    bool unique = false;

    long long hamiltonian_total = 0;              ///< hamiltonian threshold graphs examined

    long long min_size = 0;                       ///< min size over hamiltonian graphs
    long long formula_size = 0;
    std::vector<std::vector<int>> size_minimizers;
    bool size_unique = false;

    double elapsed_ms = 0.0;
};

/// Sweep all threshold graphs of order n, count Hamilton cycles of the
/// hamiltonian ones, and check that the minimum equals the closed form and is
/// attained by G_n alone.
ExtremalReport verify_min_cycle_count(int n, const SweepOptions& opt = {});

/// Same sweep minimizing size instead of cycle count (no per-graph DP).
ExtremalReport verify_min_size(int n, const SweepOptions& opt = {});

/// Check f(2k-1) = f(2k) and f(2k+1) = 2 f(2k) for 2 <= k <= k_max, where
/// f(n) is the DP cycle count of G_n.
bool verify_count_recurrence(int k_max, const CountOptions& opt = {});

/// In G_2k let {x, y} be the two vertices of degree k and z a vertex of
/// degree k+1. Checks that every Hamilton cycle contains the path x-z-y and
/// that deleting either xz or yz destroys hamiltonicity (by the partition
/// criterion). For k = 2 both degree-3 vertices are checked as z.
bool verify_forced_path(int k, int max_cycle_order = 14);

/// Exhaustive structural checks over every threshold graph of order
/// 1..max_order (capped at 12 by the brute-force hamiltonicity oracle).
struct LemmaSuiteReport {
    int max_order = 0;
    bool deletion_closure = false;      ///< key-edge deletion stays threshold, m moves as predicted
    bool key_edges_in_cycles = false;   ///< every key edge of a hamiltonian graph lies in a cycle
    bool hamiltonicity_oracle = false;  ///< partition criterion agrees with brute force
    bool degree_recurrence = false;
    bool middle_set_bound = false;      ///< |D_ceil(m/2)| >= 2 whenever m >= 1
    bool weight_soundness = false;
    bool size_agreement = false;        ///< degree-sum size equals split-formula size
    bool degree_injectivity = false;    ///< distinct creation sequences, distinct degree multisets
    bool pass = false;
    double elapsed_ms = 0.0;
};

LemmaSuiteReport verify_lemma_suite(int max_order, const CountOptions& opt = {});

}  // namespace tg
