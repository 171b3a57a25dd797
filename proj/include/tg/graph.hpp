#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tg {

/// Thrown when a requested order exceeds a configured cap.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices {0..n-1} with bit-set adjacency rows.
/// Rows are packed 64 bits per word so that adjacency tests and neighborhood
/// intersections are O(n/64).
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);

    int order() const noexcept { return n_; }
    int words_per_row() const noexcept { return words_; }
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

    bool adjacent(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    std::vector<int> degrees() const;
    long long edge_count() const;
    /// All edges as (u, v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    /// First adjacency word of v. Only meaningful when order() <= 64.
    std::uint64_t neighbors_word(int v) const { return words_ ? row(v)[0] : 0; }

    bool connected() const;

    /// Copy with vertex v relabelled to new_id[v].
    SimpleGraph relabeled(const std::vector<int>& new_id) const;
    /// Copy with vertex v removed; higher ids shift down by one.
    SimpleGraph without_vertex(int v) const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

    static SimpleGraph complete(int n);
    static SimpleGraph cycle(int n);
    static SimpleGraph path(int n);

private:
    void require_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

enum class CreationSymbol : std::uint8_t { isolated, dominating };

/// Build recipe for a threshold graph. Vertex 0 is implicit; symbols[i] tells
/// how vertex i+1 joins the graph built so far: `dominating` connects it to
/// every earlier vertex, `isolated` to none. A length-0 sequence is K_1.
struct CreationSequence {
    std::vector<CreationSymbol> symbols;

    int order() const noexcept { return static_cast<int>(symbols.size()) + 1; }

    /// Parse from a string of 'I'/'D' characters, leftmost = vertex 1.
    static CreationSequence parse(std::string_view text);
    std::string str() const;

    friend bool operator==(const CreationSequence&, const CreationSequence&) = default;
};

/// Vertices grouped by degree: D_0 holds the isolated vertices and D_1..D_m
/// the vertices of the i-th smallest distinct positive degree delta[i].
struct DegreePartition {
    int m = 0;                             ///< number of distinct positive degrees
    std::vector<int> delta;                ///< delta[i] for i = 0..m, delta[0] = 0
    std::vector<std::vector<int>> sets;    ///< sets[i] = D_i, ascending vertex ids
    std::vector<int> index_of;             ///< vertex -> its degree-set index

    int order() const noexcept { return static_cast<int>(index_of.size()); }
    int size_of(int i) const { return static_cast<int>(sets[i].size()); }
};

DegreePartition degree_partition(const SimpleGraph& g);

/// Threshold recognizer: the degree partition is returned iff for every pair
/// of distinct vertices, adjacency holds exactly when their partition indices
/// sum past m. Otherwise nullopt (the graph is not threshold).
std::optional<DegreePartition> recognize(const SimpleGraph& g);

/// True iff delta[k+1] = delta[k] + |D_{m-k}| for every k in 0..m-1, with the
/// extra -1 at k = floor(m/2). Holds for the partition of any threshold graph.
bool check_degree_recurrence(const DegreePartition& p);

/// Vertex weights plus a threshold t realizing adjacency as weight(u) + weight(v) > t.
struct WeightRealization {
    std::vector<int> weights;
    int threshold = 0;
};

/// An immutable threshold graph in canonical labelling: partition index is
/// non-decreasing with vertex id. Equality of unlabelled threshold graphs
/// reduces to equality of degree multisets, so canonical forms compare
/// directly.
class ThresholdGraph {
public:
    static ThresholdGraph from_creation_sequence(const CreationSequence& seq);

    /// The unique threshold realization of a degree multiset, or nullopt when
    /// none exists. Wires adjacency by the partition-index rule and accepts
    /// iff the realized degrees reproduce the input.
    static std::optional<ThresholdGraph> from_degree_sequence(std::vector<int> ds);

    /// Recognize an arbitrary simple graph and canonicalize its labels.
    /// When canon_of_orig is given it receives the relabelling map
    /// (original id -> canonical id).
    static std::optional<ThresholdGraph> from_graph(const SimpleGraph& g,
                                                    std::vector<int>* canon_of_orig = nullptr);

    int order() const noexcept { return g_.order(); }
    const SimpleGraph& graph() const noexcept { return g_; }
    const DegreePartition& partition() const noexcept { return part_; }

    /// Adjacency via the partition-index rule; throws std::invalid_argument
    /// on u == v or out-of-range ids.
    bool adjacent(int u, int v) const;

    /// Number of edges, computed from the degree sum and independently from
    /// the clique/independent-set split of the partition; the two must agree.
    long long size() const;

    /// weights(v) = partition index of v, threshold = m; verified against the
    /// adjacency relation for every pair before returning.
    WeightRealization realize_weights() const;

    /// Degrees in non-increasing order.
    std::vector<int> degree_sequence() const;

    /// The unique creation sequence, recovered by peeling dominating and
    /// isolated vertices off the degree sequence.
    CreationSequence creation_sequence() const;

    /// Unlabelled equality: degree multisets coincide.
    bool same_unlabeled(const ThresholdGraph& other) const;

private:
    ThresholdGraph(SimpleGraph g, DegreePartition p) : g_(std::move(g)), part_(std::move(p)) {}

    SimpleGraph g_;
    DegreePartition part_;
};

}  // namespace tg
