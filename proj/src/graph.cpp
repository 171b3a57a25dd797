#include "tg/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace tg {

SimpleGraph::SimpleGraph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
}

void SimpleGraph::require_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
}

bool SimpleGraph::adjacent(int u, int v) const {
    require_vertex(u);
    require_vertex(v);
    if (u == v) return false;
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
}

void SimpleGraph::add_edge(int u, int v) {
    require_vertex(u);
    require_vertex(v);
    if (u == v) throw std::invalid_argument("self loops are not allowed");
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t(1) << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t(1) << (u & 63);
}

void SimpleGraph::remove_edge(int u, int v) {
    require_vertex(u);
    require_vertex(v);
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t(1) << (v & 63));
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t(1) << (u & 63));
}

int SimpleGraph::degree(int v) const {
    require_vertex(v);
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

std::vector<int> SimpleGraph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

long long SimpleGraph::edge_count() const {
    long long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

bool SimpleGraph::connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n_; ++v) {
            if (!seen[v] && adjacent(u, v)) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n_;
}

SimpleGraph SimpleGraph::relabeled(const std::vector<int>& new_id) const {
    if (static_cast<int>(new_id.size()) != n_) throw std::invalid_argument("relabelling must cover every vertex");
    SimpleGraph out(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.add_edge(new_id[u], new_id[v]);
    return out;
}

SimpleGraph SimpleGraph::without_vertex(int v) const {
    require_vertex(v);
    SimpleGraph out(n_ - 1);
    for (int u = 0; u < n_; ++u) {
        if (u == v) continue;
        for (int w = u + 1; w < n_; ++w) {
            if (w == v || !adjacent(u, w)) continue;
            out.add_edge(u - (u > v), w - (w > v));
        }
    }
    return out;
}

SimpleGraph SimpleGraph::complete(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph SimpleGraph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    SimpleGraph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

SimpleGraph SimpleGraph::path(int n) {
    SimpleGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

CreationSequence CreationSequence::parse(std::string_view text) {
    CreationSequence seq;
    seq.symbols.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'I': case 'i': seq.symbols.push_back(CreationSymbol::isolated); break;
            case 'D': case 'd': seq.symbols.push_back(CreationSymbol::dominating); break;
            default: throw std::invalid_argument(std::string("creation sequence symbol must be I or D, got '") + c + "'");
        }
    }
    return seq;
}

std::string CreationSequence::str() const {
    std::string s;
    s.reserve(symbols.size());
    for (CreationSymbol sym : symbols) s.push_back(sym == CreationSymbol::dominating ? 'D' : 'I');
    return s;
}

DegreePartition degree_partition(const SimpleGraph& g) {
    const int n = g.order();
    const std::vector<int> deg = g.degrees();

    std::vector<int> distinct(deg);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (!distinct.empty() && distinct.front() == 0) distinct.erase(distinct.begin());

    DegreePartition p;
    p.m = static_cast<int>(distinct.size());
    p.delta.assign(p.m + 1, 0);
    for (int i = 1; i <= p.m; ++i) p.delta[i] = distinct[i - 1];
    p.sets.assign(p.m + 1, {});
    p.index_of.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        const int idx = deg[v] == 0
                            ? 0
                            : static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), deg[v]) - distinct.begin()) + 1;
        p.index_of[v] = idx;
        p.sets[idx].push_back(v);
    }
    return p;
}

std::optional<DegreePartition> recognize(const SimpleGraph& g) {
    DegreePartition p = degree_partition(g);
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const bool rule = p.index_of[u] + p.index_of[v] > p.m;
            if (rule != g.adjacent(u, v)) return std::nullopt;
        }
    }
    return p;
}

bool check_degree_recurrence(const DegreePartition& p) {
    for (int k = 0; k < p.m; ++k) {
        const int step = p.size_of(p.m - k) - (k == p.m / 2 ? 1 : 0);
        if (p.delta[k + 1] != p.delta[k] + step) return false;
    }
    return true;
}

namespace {

// Stable relabelling by partition index: canonical ids sort by (index, id).
SimpleGraph canonicalize(const SimpleGraph& g, const DegreePartition& p, std::vector<int>* canon_of_orig) {
    const int n = g.order();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return p.index_of[a] < p.index_of[b]; });
    std::vector<int> new_id(n);
    for (int i = 0; i < n; ++i) new_id[order[i]] = i;
    if (canon_of_orig) *canon_of_orig = new_id;
    return g.relabeled(new_id);
}

}  // namespace

ThresholdGraph ThresholdGraph::from_creation_sequence(const CreationSequence& seq) {
    const int n = seq.order();
    SimpleGraph g(n);
    for (int i = 0; i < n - 1; ++i)
        if (seq.symbols[i] == CreationSymbol::dominating)
            for (int v = 0; v <= i; ++v) g.add_edge(i + 1, v);
    auto t = from_graph(g);
    if (!t) throw std::logic_error("creation sequence produced a non-threshold graph");
    return *std::move(t);
}

std::optional<ThresholdGraph> ThresholdGraph::from_degree_sequence(std::vector<int> ds) {
    for (int d : ds)
        if (d < 0) throw std::invalid_argument("degrees must be nonnegative");
    const int n = static_cast<int>(ds.size());
    std::sort(ds.begin(), ds.end());

    std::vector<int> distinct(ds);
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (!distinct.empty() && distinct.front() == 0) distinct.erase(distinct.begin());
    const int m = static_cast<int>(distinct.size());

    std::vector<int> idx(n);
    for (int v = 0; v < n; ++v)
        idx[v] = ds[v] == 0
                     ? 0
                     : static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), ds[v]) - distinct.begin()) + 1;

    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (idx[u] + idx[v] > m) g.add_edge(u, v);

    // The wiring realizes ds iff ds is a threshold degree sequence.
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != ds[v]) return std::nullopt;

    return ThresholdGraph(g, degree_partition(g));
}

std::optional<ThresholdGraph> ThresholdGraph::from_graph(const SimpleGraph& g, std::vector<int>* canon_of_orig) {
    auto part = recognize(g);
    if (!part) return std::nullopt;
    SimpleGraph canon = canonicalize(g, *part, canon_of_orig);
    return ThresholdGraph(canon, degree_partition(canon));
}

bool ThresholdGraph::adjacent(int u, int v) const {
    if (u < 0 || u >= order() || v < 0 || v >= order())
        throw std::invalid_argument("vertex id out of range");
    if (u == v) throw std::invalid_argument("adjacency is irreflexive; u and v must differ");
    return part_.index_of[u] + part_.index_of[v] > part_.m;
}

long long ThresholdGraph::size() const {
    long long by_degrees = 0;
    for (int v = 0; v < order(); ++v) by_degrees += g_.degree(v);
    by_degrees /= 2;

    // Split view: D_{floor(m/2)+1}..D_m form a clique, the lower sets are
    // independent with neighbourhood = the top i sets.
    const int m = part_.m;
    long long clique = 0;
    for (int j = m / 2 + 1; j <= m; ++j) clique += part_.size_of(j);
    long long by_split = clique * (clique - 1) / 2;
    long long upper_tail = 0;  // |D_{m+1-i}| + ... + |D_m|, grows with i
    for (int i = 1; i <= m / 2; ++i) {
        upper_tail += part_.size_of(m + 1 - i);
        by_split += static_cast<long long>(part_.size_of(i)) * upper_tail;
    }

    if (by_degrees != by_split)
        throw std::logic_error("size mismatch between degree sum and split formula: " +
                               std::to_string(by_degrees) + " vs " + std::to_string(by_split));
    return by_degrees;
}

WeightRealization ThresholdGraph::realize_weights() const {
    WeightRealization wr;
    wr.weights = part_.index_of;
    wr.threshold = part_.m;
    for (int u = 0; u < order(); ++u)
        for (int v = u + 1; v < order(); ++v)
            if ((wr.weights[u] + wr.weights[v] > wr.threshold) != g_.adjacent(u, v))
                throw std::logic_error("weight realization disagrees with adjacency");
    return wr;
}

std::vector<int> ThresholdGraph::degree_sequence() const {
    std::vector<int> d = g_.degrees();
    std::sort(d.rbegin(), d.rend());
    return d;
}

CreationSequence ThresholdGraph::creation_sequence() const {
    // Peel the last-added vertex repeatedly: a dominating vertex if one
    // exists, otherwise an isolated one. Threshold graphs always offer one of
    // the two, and the resulting symbol string is unique.
    std::vector<int> deg = g_.degrees();
    std::vector<char> alive(order(), 1);
    int remaining = order();
    std::vector<CreationSymbol> reversed;
    while (remaining > 1) {
        int pick = -1;
        CreationSymbol sym{};
        for (int v = 0; v < order() && pick < 0; ++v) {
            if (!alive[v]) continue;
            if (deg[v] == remaining - 1) { pick = v; sym = CreationSymbol::dominating; }
        }
        for (int v = 0; v < order() && pick < 0; ++v) {
            if (!alive[v]) continue;
            if (deg[v] == 0) { pick = v; sym = CreationSymbol::isolated; }
        }
        if (pick < 0) throw std::logic_error("threshold graph without dominating or isolated vertex");
        alive[pick] = 0;
        --remaining;
        if (sym == CreationSymbol::dominating)
            for (int v = 0; v < order(); ++v)
                if (alive[v]) --deg[v];
        reversed.push_back(sym);
    }
    CreationSequence seq;
    seq.symbols.assign(reversed.rbegin(), reversed.rend());
    return seq;
}

bool ThresholdGraph::same_unlabeled(const ThresholdGraph& other) const {
    return degree_sequence() == other.degree_sequence();
}

}  // namespace tg
