#include "tg/hamilton.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cstddef>

namespace tg {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// u128 path counts stay exact up to this order: the directed count is at
// most (n-1)! and 33! < 2^128.
constexpr int kAccumulatorLimit = 34;

HamiltonCount to_count(u64 v) { return HamiltonCount(v); }
HamiltonCount to_count(u128 v) {
    HamiltonCount c = std::uint64_t(v >> 64);
    c <<= 64;
    c |= std::uint64_t(v);
    return c;
}

struct BinomTable {
    u64 c[65][65];
    constexpr BinomTable() : c{} {
        for (int i = 0; i <= 64; ++i) {
            c[i][0] = 1;
            for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
        }
    }
};
constexpr BinomTable kBinom;

// Next subset of the same cardinality in increasing numeric (= colex) order.
u64 next_same_popcount(u64 v) {
    const u64 c = v & (~v + 1);
    const u64 r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

// Subset of given cardinality at a colex rank.
u64 colex_unrank(int card, u64 rank) {
    u64 s = 0;
    for (int i = card; i >= 1; --i) {
        int v = i - 1;
        while (v + 1 < 64 && kBinom.c[v + 1][i] <= rank) ++v;
        s |= u64(1) << v;
        rank -= kBinom.c[v][i];
    }
    return s;
}

// dp[s * k + i], for i in s, counts directed Hamilton paths from the anchor
// through exactly s (a subset of the k non-anchor positions) ending at i.
template <class Acc>
void process_subset(u64 s, int k, const u64* adj, Acc* dp) {
    Acc* row = dp + static_cast<std::size_t>(s) * k;
    u64 rem = s;
    while (rem) {
        const int i = std::countr_zero(rem);
        rem &= rem - 1;
        const u64 prev = s ^ (u64(1) << i);
        const Acc* prow = dp + static_cast<std::size_t>(prev) * k;
        u64 js = prev & adj[i];
        Acc acc{};
        while (js) {
            acc += prow[std::countr_zero(js)];
            js &= js - 1;
        }
        row[i] = acc;
    }
}

template <class Acc>
void dp_serial(int k, const u64* adj, u64 anchor_adj, Acc* dp) {
    for (int i = 0; i < k; ++i)
        dp[(static_cast<std::size_t>(1) << i) * k + i] = Acc((anchor_adj >> i) & 1u);
    const u64 full = (u64(1) << k) - 1;
    // Increasing subset order: s \ {i} < s, so dependencies are already done.
    for (u64 s = 3; s <= full; ++s)
        if (s & (s - 1)) process_subset(s, k, adj, dp);
}

template <class Acc>
void dp_parallel(int k, const u64* adj, u64 anchor_adj, Acc* dp) {
    for (int i = 0; i < k; ++i)
        dp[(static_cast<std::size_t>(1) << i) * k + i] = Acc((anchor_adj >> i) & 1u);
    // Layer c only reads layer c-1, so subsets within a layer are
    // independent; each thread walks a contiguous rank range.
    for (int card = 2; card <= k; ++card) {
        const u64 layer = kBinom.c[k][card];
#pragma omp parallel
        {
            const u64 nt = static_cast<u64>(omp_get_num_threads());
            const u64 tid = static_cast<u64>(omp_get_thread_num());
            const u64 lo = layer * tid / nt;
            const u64 hi = layer * (tid + 1) / nt;
            if (lo < hi) {
                u64 s = colex_unrank(card, lo);
                for (u64 r = lo; r < hi; ++r) {
                    process_subset(s, k, adj, dp);
                    s = next_same_popcount(s);
                }
            }
        }
    }
}

// Full-set DP row: result[p] = directed Hamilton paths anchor -> vertex at
// position p, spanning the whole graph. Positions list the non-anchor
// vertices in increasing id order.
template <class Acc>
std::vector<Acc> path_count_row(const SimpleGraph& g, int anchor, DpKernel kernel) {
    const int n = g.order();
    const int k = n - 1;
    std::vector<int> id_at(k);
    int p = 0;
    for (int v = 0; v < n; ++v)
        if (v != anchor) id_at[p++] = v;

    std::vector<u64> adj(k, 0);
    u64 anchor_adj = 0;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j)
            if (i != j && g.adjacent(id_at[i], id_at[j])) adj[i] |= u64(1) << j;
        if (g.adjacent(anchor, id_at[i])) anchor_adj |= u64(1) << i;
    }

    std::vector<Acc> dp((static_cast<std::size_t>(1) << k) * k, Acc{});
    if (kernel == DpKernel::parallel)
        dp_parallel(k, adj.data(), anchor_adj, dp.data());
    else
        dp_serial(k, adj.data(), anchor_adj, dp.data());

    const std::size_t full = (static_cast<std::size_t>(1) << k) - 1;
    return std::vector<Acc>(dp.begin() + full * k, dp.begin() + (full + 1) * k);
}

void check_dp_capacity(int n, const CountOptions& opt) {
    if (n > opt.max_order)
        throw CapacityError("order " + std::to_string(n) + " exceeds the Hamilton-cycle DP cap " +
                            std::to_string(opt.max_order));
    if (n > kAccumulatorLimit)
        throw CapacityError("order " + std::to_string(n) + " exceeds the DP accumulator limit " +
                            std::to_string(kAccumulatorLimit));
}

template <class Acc>
HamiltonCount cycles_via_dp(const SimpleGraph& g, const CountOptions& opt) {
    const auto row = path_count_row<Acc>(g, 0, opt.kernel);
    Acc directed{};
    for (int v = 1; v < g.order(); ++v)
        if (g.adjacent(0, v)) directed += row[v - 1];
    // Each undirected cycle was traversed in both directions.
    return to_count(Acc(directed / 2));
}

// Depth-first Hamilton search shared by find/enumerate/existence. Works on
// word-packed availability masks; neighbours are tried in increasing id
// order, so anchored cycles come out in lexicographic canonical order.
class HamiltonSearch {
public:
    explicit HamiltonSearch(const SimpleGraph& g)
        : g_(g), n_(g.order()), words_(g.words_per_row()), avail_(words_, 0) {}

    // Cycles through vertex 0, canonical orientation (second id < last id).
    // Collects up to `limit` cycles (limit < 0: all).
    std::vector<HamiltonCycle> cycles(long long limit) {
        out_.clear();
        limit_ = limit;
        if (n_ < 3) return {};
        target_ = -1;
        init_avail(0);
        path_.assign(1, 0);
        extend(0);
        return std::move(out_);
    }

    // Hamilton paths from a to b, returned closed into a cycle through ab.
    std::vector<HamiltonCycle> cycles_through(int a, int b, long long limit) {
        out_.clear();
        limit_ = limit;
        if (n_ < 3) return {};
        target_ = b;
        init_avail(a);
        path_.assign(1, a);
        extend(a);
        return std::move(out_);
    }

private:
    void init_avail(int skip) {
        std::fill(avail_.begin(), avail_.end(), 0);
        for (int v = 0; v < n_; ++v)
            if (v != skip) avail_[v >> 6] |= u64(1) << (v & 63);
    }

    bool in_avail(int v) const { return (avail_[v >> 6] >> (v & 63)) & 1u; }

    // Necessary condition: every remaining vertex still needs two usable
    // links (the path target needs one).
    bool feasible(int cur) const {
        for (int w = 0; w < words_; ++w) {
            u64 bits = avail_[w];
            while (bits) {
                const int v = (w << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                int links = 0;
                const u64* rv = g_.row(v);
                for (int x = 0; x < words_; ++x) links += std::popcount(rv[x] & avail_[x]);
                if (g_.adjacent(v, cur)) ++links;
                const int need = (v == target_) ? 1 : 2;
                if (target_ < 0 && g_.adjacent(v, path_[0])) ++links;
                if (links < need) return false;
            }
        }
        return true;
    }

    // Returns true when the collection limit has been hit.
    bool extend(int cur) {
        if (static_cast<int>(path_.size()) == n_) {
            if (target_ < 0) {
                if (g_.adjacent(cur, 0) && path_[1] < path_.back()) emit(path_);
            } else {
                // target was consumed as the final step; close through ab
                emit(path_);
            }
            return limit_ >= 0 && static_cast<long long>(out_.size()) >= limit_;
        }
        if (!feasible(cur)) return false;
        const int remaining = n_ - static_cast<int>(path_.size());
        for (int w = 0; w < words_; ++w) {
            u64 bits = g_.row(cur)[w] & avail_[w];
            while (bits) {
                const int v = (w << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                if (v == target_ && remaining > 1) continue;  // target must come last
                avail_[v >> 6] &= ~(u64(1) << (v & 63));
                path_.push_back(v);
                const bool done = extend(v);
                path_.pop_back();
                avail_[v >> 6] |= u64(1) << (v & 63);
                if (done) return true;
            }
        }
        return false;
    }

    void emit(const std::vector<int>& cyc) {
        HamiltonCycle c;
        c.vertices = cyc;
        // Canonical form: rotate vertex 0 to the front, then orient so the
        // second vertex is the smaller neighbour of 0.
        auto zero = std::find(c.vertices.begin(), c.vertices.end(), 0);
        std::rotate(c.vertices.begin(), zero, c.vertices.end());
        if (c.vertices.size() > 2 && c.vertices[1] > c.vertices.back())
            std::reverse(c.vertices.begin() + 1, c.vertices.end());
        out_.push_back(std::move(c));
    }

    const SimpleGraph& g_;
    int n_;
    int words_;
    int target_ = -1;
    std::vector<u64> avail_;
    std::vector<int> path_;
    std::vector<HamiltonCycle> out_;
    long long limit_ = -1;
};

}  // namespace

HamiltonCount count_hamilton_cycles(const SimpleGraph& g, const CountOptions& opt) {
    const int n = g.order();
    if (n < 3) return HamiltonCount(0);
    check_dp_capacity(n, opt);
    // uint64 accumulators are exact while (n-1)! < 2^64, i.e. through n = 21.
    if (n <= 21) return cycles_via_dp<u64>(g, opt);
    return cycles_via_dp<u128>(g, opt);
}

HamiltonCount count_hamilton_cycles_through_edge(const SimpleGraph& g, int u, int v,
                                                 const CountOptions& opt) {
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order() || u == v)
        throw std::invalid_argument("edge endpoints must be distinct in-range vertices");
    if (!g.adjacent(u, v)) throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) + " is not in the graph");
    const int n = g.order();
    if (n < 3) return HamiltonCount(0);
    check_dp_capacity(n, opt);
    const int pos = v < u ? v : v - 1;
    if (n <= 21) return to_count(path_count_row<u64>(g, u, opt.kernel)[pos]);
    return to_count(path_count_row<u128>(g, u, opt.kernel)[pos]);
}

bool HamiltonCycle::contains_edge(int u, int v) const {
    const int n = static_cast<int>(vertices.size());
    for (int i = 0; i < n; ++i) {
        const int a = vertices[i];
        const int b = vertices[(i + 1) % n];
        if ((a == u && b == v) || (a == v && b == u)) return true;
    }
    return false;
}

std::optional<HamiltonCycle> find_hamilton_cycle(const SimpleGraph& g,
                                                 std::optional<std::pair<int, int>> required_edge) {
    HamiltonSearch search(g);
    std::vector<HamiltonCycle> found;
    if (required_edge) {
        const auto [a, b] = *required_edge;
        if (a < 0 || a >= g.order() || b < 0 || b >= g.order() || a == b || !g.adjacent(a, b))
            throw std::invalid_argument("required edge is not in the graph");
        found = search.cycles_through(a, b, 1);
    } else {
        found = search.cycles(1);
    }
    if (found.empty()) return std::nullopt;
    return found.front();
}

std::vector<HamiltonCycle> enumerate_hamilton_cycles(const SimpleGraph& g, int max_order) {
    if (g.order() > max_order)
        throw CapacityError("order " + std::to_string(g.order()) +
                            " exceeds the cycle enumeration cap " + std::to_string(max_order));
    return HamiltonSearch(g).cycles(-1);
}

bool brute_force_hamiltonian(const SimpleGraph& g, int max_order) {
    if (g.order() > max_order)
        throw CapacityError("order " + std::to_string(g.order()) +
                            " exceeds the brute-force oracle cap " + std::to_string(max_order));
    if (g.order() < 3) return false;
    return !HamiltonSearch(g).cycles(1).empty();
}

HamiltonicityVerdict hamiltonicity_from_partition(const DegreePartition& p) {
    using Reason = HamiltonicityVerdict::Reason;
    if (p.order() < 3) return {false, Reason::order_below_3, 0};
    if (!p.sets[0].empty()) return {false, Reason::isolated_vertices, 0};
    const int m = p.m;
    long long low = 0, high = 0;
    for (int k = 1; k <= (m - 1) / 2; ++k) {
        low += p.size_of(k);
        high += p.size_of(m + 1 - k);
        if (!(low < high)) return {false, Reason::prefix_sum_strict, k};
    }
    if (m % 2 == 0 && m > 0) {
        const int k = m / 2;
        low += p.size_of(k);
        high += p.size_of(m + 1 - k);
        if (!(low <= high)) return {false, Reason::prefix_sum_middle, k};
    }
    return {true, Reason::ok, 0};
}

bool is_hamiltonian(const DegreePartition& p) { return hamiltonicity_from_partition(p).hamiltonian; }

}  // namespace tg
