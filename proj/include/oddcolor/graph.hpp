#pragma once

#include "oddcolor/common.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oddcolor {

using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..n-1, stored as a dense
/// symmetric bit matrix (n <= kMaxSize).
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t size() const { return adjacency_.size(); }
    bool empty() const { return adjacency_.empty(); }

    bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].test(v); }
    const Bitset& neighbors(Vertex u) const { return adjacency_[u]; }
    std::size_t degree(Vertex u) const { return adjacency_[u].count(); }

    std::size_t edge_count() const;
    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    /// Adds edge uv. Throws on self-loops and out-of-range endpoints; adding
    /// an existing edge is a no-op.
    void add_edge(Vertex u, Vertex v);

    bool operator==(const Graph& other) const = default;

private:
    std::vector<Bitset> adjacency_;
};

inline constexpr int kUnreachable = -1;

/// Hop distances from u; unreachable vertices get kUnreachable.
std::vector<int> distances_from(const Graph& g, Vertex u);

/// All-pairs hop distances by repeated BFS.
std::vector<std::vector<int>> all_distances(const Graph& g);

/// r-th power: uv is an edge iff 0 < dist(u, v) <= r. Requires r >= 1.
Graph power(const Graph& g, std::size_t r);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_original;  // new index -> original vertex
};

/// G[a], reindexed densely in ascending order of original index.
InducedSubgraph induced_subgraph(const Graph& g, const Bitset& a);
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> a);

Graph complement(const Graph& g);

/// Smallest-last (degeneracy) order, ties broken by smallest vertex index.
std::vector<Vertex> degeneracy_order(const Graph& g);

/// First-fit coloring along the degeneracy order.
VertexColoring greedy_proper_coloring(const Graph& g);

bool is_proper_coloring(const Graph& g, const Coloring& c);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

struct Biclique {
    std::vector<Vertex> left;
    std::vector<Vertex> right;
};

struct BicliqueSearch {
    std::optional<Biclique> witness;
    bool exhausted = false;  // true when the node budget ran out before a verdict
};

/// Exhaustive search for an induced K_{t,t}: two disjoint independent t-sets
/// with every cross pair adjacent.
BicliqueSearch has_induced_biclique(const Graph& g, std::size_t t, SearchBudget budget = {});

bool is_induced_biclique(const Graph& g, const Biclique& b);

// --- generators ----------------------------------------------------------

enum class GraphKind { path, cycle, grid, complete, star, random_gnp, random_tree, random_outerplanar };

struct GeneratorParams {
    std::size_t n = 0;      // vertex count (rows for grid)
    std::size_t cols = 0;   // grid only
    double p = 0.5;         // edge / chord probability for random kinds
};

GraphKind parse_graph_kind(const std::string& name);
std::string to_string(GraphKind kind);
bool is_random_kind(GraphKind kind);

/// Deterministic for a fixed seed. Throws std::invalid_argument on bad params.
Graph generate(GraphKind kind, const GeneratorParams& params, std::uint64_t seed = 0);

}  // namespace oddcolor
