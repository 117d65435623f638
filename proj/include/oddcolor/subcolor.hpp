#pragma once

#include "oddcolor/common.hpp"
#include "oddcolor/graph.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oddcolor {

// --- cluster graphs and subcolorings ----------------------------------------

struct ClusterCheck {
    bool ok = true;
    /// Induced P_3 (a, b, c): ab and bc edges, ac a non-edge.
    std::optional<std::array<Vertex, 3>> p3;
};

ClusterCheck is_cluster_graph(const Graph& g);

struct SubcoloringViolation {
    std::size_t color;
    std::array<Vertex, 3> p3;
};

/// nullopt when every color class induces a cluster graph.
std::optional<SubcoloringViolation> verify_subcoloring(const Graph& g, const Subcoloring& c);

struct SubchromaticResult {
    std::size_t value = 0;
    Subcoloring coloring;
    bool exact = true;  // false: budget ran out, value is an upper bound
};

inline constexpr std::size_t kExactSubchromaticLimit = 16;

SubchromaticResult exact_subchromatic(const Graph& g, SearchBudget budget = {});

/// First-fit along the degeneracy order: the smallest color whose class stays
/// a cluster graph.
Subcoloring greedy_subcoloring(const Graph& g);

// --- cotrees -----------------------------------------------------------------

enum class CotreeNodeType { leaf, join, disjoint_union };

struct CotreeNode {
    CotreeNodeType type = CotreeNodeType::leaf;
    Vertex vertex = 0;  // leaves only
    std::vector<std::size_t> children;
};

/// Rooted join/union tree whose leaves carry vertex ids. Two leaves are
/// adjacent iff their lowest common ancestor is a join node. An empty cotree
/// (no nodes) stands for the empty graph.
class Cotree {
public:
    Cotree() = default;
    Cotree(std::vector<CotreeNode> nodes, std::size_t root);

    bool empty() const { return nodes_.empty(); }
    std::size_t root() const { return root_; }
    const CotreeNode& node(std::size_t id) const { return nodes_[id]; }
    const std::vector<CotreeNode>& nodes() const { return nodes_; }

    /// Maximum number of nodes on a root-to-leaf path; 0 when empty.
    std::size_t depth() const;
    /// Leaf vertex ids in ascending order.
    std::vector<Vertex> vertices() const;
    /// Leaf vertex ids below `id`, in tree order.
    std::vector<Vertex> leaves_below(std::size_t id) const;

    /// Graph on vertices() (dense, ascending) defined by the LCA rule.
    InducedSubgraph to_graph() const;

    /// Removes single-child internal nodes and merges a child into a parent
    /// of the same type.
    Cotree normalized() const;

private:
    std::vector<CotreeNode> nodes_;
    std::size_t root_ = 0;
};

struct CographRecognition {
    std::optional<Cotree> cotree;
    /// Induced P_4 in path order when g is not a cograph.
    std::optional<std::array<Vertex, 4>> p4;
};

/// Recursive component / co-component decomposition; the resulting cotree
/// alternates join and union levels.
CographRecognition recognize_cograph(const Graph& g);

std::size_t cograph_alpha(const Cotree& t);
/// A maximum independent set, read off the cotree.
std::vector<Vertex> cograph_independent_set(const Cotree& t);
/// Partition into cograph_alpha(t) cliques.
std::vector<std::vector<Vertex>> cograph_clique_cover(const Cotree& t);

/// Raised when a join node has two children with independent sets of size t;
/// carries the resulting induced K_{t,t}.
class BicliquePresent : public std::invalid_argument {
public:
    explicit BicliquePresent(Biclique witness);
    const Biclique& witness() const { return witness_; }

private:
    Biclique witness_;
};

/// Subcoloring of the cograph with at most 1 + (depth - 1)(t - 1) colors,
/// indexed by vertex id (colors for ids not in the cotree are 0).
/// Throws BicliquePresent when the K_{t,t}-freeness the bound needs fails.
Subcoloring cograph_subcoloring(const Cotree& t, std::size_t tt_bound);

inline std::size_t cograph_palette_bound(std::size_t depth, std::size_t t)
{
    return depth == 0 ? 0 : 1 + (depth - 1) * (t - 1);
}

// --- connection models ----------------------------------------------------------

struct ModelNode {
    std::optional<Vertex> vertex;  // set on leaves
    std::vector<std::size_t> children;
    std::vector<std::pair<std::size_t, std::size_t>> relation;  // internal nodes, symmetric
};

/// Labelled tree encoding adjacency: u ~ v iff (label(u), label(v)) is in the
/// relation of their lowest common ancestor.
class ConnectionModel {
public:
    ConnectionModel() = default;
    ConnectionModel(std::size_t label_count, std::vector<std::size_t> labels, std::vector<ModelNode> nodes,
                    std::size_t root);

    std::size_t label_count() const { return label_count_; }
    std::size_t vertex_count() const { return labels_.size(); }
    const std::vector<std::size_t>& labels() const { return labels_; }
    const std::vector<ModelNode>& nodes() const { return nodes_; }
    std::size_t root() const { return root_; }

    bool related(std::size_t node, std::size_t a, std::size_t b) const;
    std::size_t depth() const;
    Graph graph() const;

private:
    std::size_t label_count_ = 0;
    std::vector<std::size_t> labels_;
    std::vector<ModelNode> nodes_;
    std::size_t root_ = 0;
    std::vector<std::vector<bool>> relation_matrix_;  // per node, label_count^2
};

/// Cotree of G[label^-1(i)]: prune branches without label-i leaves, join iff
/// (i, i) is related at the node, then normalize.
Cotree extract_label_cotree(const ConnectionModel& m, std::size_t label);

/// Per-label cograph subcolorings on disjoint palettes.
Subcoloring shrubdepth_subcoloring(const ConnectionModel& m, std::size_t tt_bound);

}  // namespace oddcolor
