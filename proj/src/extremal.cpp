#include "tg/extremal.hpp"
#include "tg/key_edges.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <string>

namespace tg {

namespace {

CreationSequence seq_from_bits(std::uint64_t bits, int len) {
    CreationSequence seq;
    seq.symbols.resize(len);
    for (int i = 0; i < len; ++i)
        seq.symbols[i] = (bits >> i) & 1 ? CreationSymbol::dominating : CreationSymbol::isolated;
    return seq;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

ThresholdGraph build_gn(int n) {
    if (n < 3) throw std::invalid_argument("G_n is defined for n >= 3");
    std::vector<int> ds;
    ds.reserve(n);
    for (int d = 2; d <= n - 1; ++d) ds.push_back(d);
    ds.push_back(n - 1);
    ds.push_back((n + 1) / 2);
    auto g = ThresholdGraph::from_degree_sequence(std::move(ds));
    if (!g) throw std::logic_error("the G_n degree sequence must have a threshold realization");
    if (!is_hamiltonian(g->partition())) throw std::logic_error("G_n must be hamiltonian");
    return *std::move(g);
}

HamiltonCount gn_cycle_count_formula(int n) {
    if (n < 3) throw std::invalid_argument("the cycle-count formula needs n >= 3");
    return HamiltonCount(1) << ((n - 3) / 2);
}

long long min_size_formula(int n) {
    if (n < 3) throw std::invalid_argument("the size formula needs n >= 3");
    const long long nn = n;
    return n % 2 ? (nn * nn + 2 * nn - 3) / 4 : (nn * nn + 2 * nn - 4) / 4;
}

void enumerate_threshold_graphs(int n,
                                const std::function<void(std::uint64_t, const ThresholdGraph&)>& visit,
                                int max_order) {
    if (n < 1) throw std::invalid_argument("enumeration needs order >= 1");
    if (n > max_order)
        throw CapacityError("order " + std::to_string(n) + " exceeds the enumeration cap " +
                            std::to_string(max_order));
    const std::uint64_t total = std::uint64_t(1) << (n - 1);
    std::vector<std::vector<int>> seen;
    seen.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        ThresholdGraph g = ThresholdGraph::from_creation_sequence(seq_from_bits(idx, n - 1));
        seen.push_back(g.degree_sequence());
        visit(idx, g);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::logic_error("distinct creation sequences produced equal degree multisets");
}

std::vector<ThresholdGraph> all_threshold_graphs(int n, int max_order) {
    std::vector<ThresholdGraph> out;
    enumerate_threshold_graphs(
        n, [&](std::uint64_t, const ThresholdGraph& g) { out.push_back(g); }, max_order);
    return out;
}

namespace {

// One pass over all 2^(n-1) creation sequences. Graphs are independent, so
// the loop is parallel; per-index slots plus an index-ordered reduction keep
// the result identical for any worker count.
ExtremalReport run_sweep(int n, bool with_counts, const SweepOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();

    ExtremalReport report;
    report.n = n;
    report.formula_count = gn_cycle_count_formula(n);
    report.formula_size = min_size_formula(n);

    const std::uint64_t total = std::uint64_t(1) << (n - 1);
    std::vector<std::uint8_t> hamiltonian_flag(total, 0);
    std::vector<long long> size_of(total, 0);
    std::vector<HamiltonCount> count_of(with_counts ? total : 0);

    CountOptions per_graph = opt.count;
    per_graph.kernel = DpKernel::serial;  // parallelism lives at the graph level

#pragma omp parallel for schedule(dynamic, 64)
    for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
        ThresholdGraph g = ThresholdGraph::from_creation_sequence(seq_from_bits(idx, n - 1));
        if (!is_hamiltonian(g.partition())) continue;
        hamiltonian_flag[idx] = 1;
        size_of[idx] = g.size();
        if (with_counts) count_of[idx] = count_hamilton_cycles(g.graph(), per_graph);
    }

    std::vector<std::uint64_t> count_argmins, size_argmins;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (!hamiltonian_flag[idx]) continue;
        ++report.hamiltonian_total;
        if (size_argmins.empty() || size_of[idx] < report.min_size) {
            report.min_size = size_of[idx];
            size_argmins.assign(1, idx);
        } else if (size_of[idx] == report.min_size) {
            size_argmins.push_back(idx);
        }
        if (!with_counts) continue;
        if (count_argmins.empty() || count_of[idx] < report.min_count) {
            report.min_count = count_of[idx];
            count_argmins.assign(1, idx);
        } else if (count_of[idx] == report.min_count) {
            count_argmins.push_back(idx);
        }
    }

    auto degree_sequences = [n](const std::vector<std::uint64_t>& idxs) {
        std::vector<std::vector<int>> out;
        out.reserve(idxs.size());
        for (std::uint64_t idx : idxs)
            out.push_back(ThresholdGraph::from_creation_sequence(seq_from_bits(idx, n - 1)).degree_sequence());
        std::sort(out.begin(), out.end());
        return out;
    };
    report.minimizers = degree_sequences(count_argmins);
    report.unique = report.minimizers.size() == 1;
    report.size_minimizers = degree_sequences(size_argmins);
    report.size_unique = report.size_minimizers.size() == 1;

    report.elapsed_ms = ms_since(t0);
    return report;
}

}  // namespace

ExtremalReport verify_min_cycle_count(int n, const SweepOptions& opt) {
    if (n < 3) throw std::invalid_argument("the cycle-count sweep needs n >= 3");
    if (n > opt.max_enum_order || n > opt.max_count_sweep_order)
        throw CapacityError("order " + std::to_string(n) + " exceeds the counting sweep cap " +
                            std::to_string(std::min(opt.max_enum_order, opt.max_count_sweep_order)));
    ExtremalReport report = run_sweep(n, true, opt);
    report.pass = report.min_count == report.formula_count && report.unique &&
                  report.minimizers.front() == build_gn(n).degree_sequence();
    return report;
}

ExtremalReport verify_min_size(int n, const SweepOptions& opt) {
    if (n < 3) throw std::invalid_argument("the size sweep needs n >= 3");
    if (n > opt.max_enum_order)
        throw CapacityError("order " + std::to_string(n) + " exceeds the enumeration cap " +
                            std::to_string(opt.max_enum_order));
    ExtremalReport report = run_sweep(n, false, opt);
    report.pass = report.min_size == report.formula_size && report.size_unique &&
                  report.size_minimizers.front() == build_gn(n).degree_sequence();
    return report;
}

bool verify_count_recurrence(int k_max, const CountOptions& opt) {
    if (k_max < 2) throw std::invalid_argument("the recurrence check needs k_max >= 2");
    std::vector<HamiltonCount> f(2 * k_max + 2);
    for (int n = 3; n <= 2 * k_max + 1; ++n) f[n] = count_hamilton_cycles(build_gn(n).graph(), opt);
    for (int k = 2; k <= k_max; ++k) {
        if (f[2 * k - 1] != f[2 * k]) return false;
        if (f[2 * k + 1] != 2 * f[2 * k]) return false;
    }
    return true;
}

bool verify_forced_path(int k, int max_cycle_order) {
    if (k < 2) throw std::invalid_argument("the forced-path check needs k >= 2");
    const int n = 2 * k;
    const ThresholdGraph g = build_gn(n);

    // {x, y} are the two vertices of the doubled middle degree k; z has
    // degree k+1 (two candidates only in the degenerate k = 2 case).
    std::vector<int> mid, above;
    for (int v = 0; v < n; ++v) {
        const int d = g.graph().degree(v);
        if (d == k) mid.push_back(v);
        if (d == k + 1) above.push_back(v);
    }
    if (mid.size() != 2 || above.empty())
        throw std::logic_error("G_2k does not show the expected middle degree sets");
    const int x = mid[0], y = mid[1];

    const auto cycles = enumerate_hamilton_cycles(g.graph(), max_cycle_order);
    if (cycles.empty()) return false;

    for (int z : above) {
        for (const HamiltonCycle& c : cycles)
            if (!c.contains_edge(x, z) || !c.contains_edge(z, y)) return false;
        for (int endpoint : {x, y}) {
            SimpleGraph reduced = g.graph();
            reduced.remove_edge(endpoint, z);
            auto part = recognize(reduced);
            if (!part) throw std::logic_error("deleting a forced-path edge left the threshold class");
            if (is_hamiltonian(*part)) return false;
        }
    }
    return true;
}

LemmaSuiteReport verify_lemma_suite(int max_order, const CountOptions& opt) {
    constexpr int kOracleCap = 12;
    if (max_order < 1) throw std::invalid_argument("the lemma suite needs max_order >= 1");
    if (max_order > kOracleCap)
        throw CapacityError("order " + std::to_string(max_order) +
                            " exceeds the brute-force oracle cap " + std::to_string(kOracleCap));
    const auto t0 = std::chrono::steady_clock::now();

    LemmaSuiteReport r;
    r.max_order = max_order;
    r.deletion_closure = r.key_edges_in_cycles = r.hamiltonicity_oracle = true;
    r.degree_recurrence = r.middle_set_bound = r.weight_soundness = true;
    r.size_agreement = r.degree_injectivity = true;

    for (int n = 1; n <= max_order; ++n) {
        try {
            enumerate_threshold_graphs(n, [&](std::uint64_t, const ThresholdGraph& g) {
                const DegreePartition& p = g.partition();
                if (!check_degree_recurrence(p)) r.degree_recurrence = false;
                if (p.m >= 1 && p.size_of((p.m + 1) / 2) < 2) r.middle_set_bound = false;
                try {
                    g.realize_weights();
                    g.size();
                } catch (const std::logic_error&) {
                    r.weight_soundness = false;
                    r.size_agreement = false;
                }

                const bool ham = is_hamiltonian(p);
                if (ham != brute_force_hamiltonian(g.graph())) r.hamiltonicity_oracle = false;

                if (p.m >= 1) {
                    for (const KeyEdge& e : key_edges(g)) {
                        try {
                            delete_key_edge(g, e);
                        } catch (const std::logic_error&) {
                            r.deletion_closure = false;
                        }
                        if (ham && count_hamilton_cycles_through_edge(g.graph(), e.x, e.y, opt) < 1)
                            r.key_edges_in_cycles = false;
                    }
                }
            });
        } catch (const std::logic_error&) {
            r.degree_injectivity = false;  // enumerate asserts multiset distinctness
        }
    }

    r.pass = r.deletion_closure && r.key_edges_in_cycles && r.hamiltonicity_oracle &&
             r.degree_recurrence && r.middle_set_bound && r.weight_soundness &&
             r.size_agreement && r.degree_injectivity;
    r.elapsed_ms = ms_since(t0);
    return r;
}

}  // namespace tg
