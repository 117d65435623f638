#pragma once

#include "oddcolor/common.hpp"
#include "oddcolor/graph.hpp"
#include "oddcolor/set_system.hpp"
#include "oddcolor/subcolor.hpp"

#include <optional>
#include <vector>

namespace oddcolor {

/// Coloring whose nonzero per-set color counts must be 1 mod `modulus`
/// (modulus 2 is the odd case).
struct ParityColoring {
    std::vector<std::size_t> colors;
    std::size_t palette_size = 0;
    std::size_t modulus = 2;

    std::size_t size() const { return colors.size(); }
    std::size_t operator[](std::size_t i) const { return colors[i]; }
    std::size_t used_colors() const;
};

/// Zero, or congruent to 1 modulo m.
inline bool parity_count_ok(std::size_t count, std::size_t m)
{
    return count == 0 || count % m == 1;
}

struct ParityViolation {
    std::optional<std::size_t> set;  // nullopt: the whole universe
    std::size_t color;
    std::size_t count;
};

std::optional<ParityViolation> verify_strong_parity(const SetSystem& s, const ParityColoring& c);
/// Strong parity plus the same condition over the whole universe.
std::optional<ParityViolation> verify_totally_strong_parity(const SetSystem& s, const ParityColoring& c);

struct GraphViolation {
    enum class Kind { improper_edge, bad_count } kind;
    Vertex u;              // edge endpoint, or the ball / neighbourhood centre
    Vertex v = 0;          // other endpoint (improper_edge)
    std::size_t color = 0;  // bad_count
    std::size_t count = 0;  // bad_count
};

/// Proper, and every radius-d ball holds each color 0 or 1 mod m times.
std::optional<GraphViolation> verify_graph_ball_coloring(const Graph& g, std::size_t d, const ParityColoring& c);
/// Proper, and every open neighbourhood holds each color 0 or 1 mod m times.
std::optional<GraphViolation> verify_strong_odd_graph(const Graph& g, const ParityColoring& c);

// --- covers -------------------------------------------------------------------------

struct CoverPart {
    std::vector<Element> elements;
    std::size_t set;  // covering family index
};

struct CoverResult {
    std::vector<CoverPart> parts;
    std::vector<Element> uncovered;
    bool minimum = false;  // true when an exact minimum cover was computed
};

inline constexpr std::size_t kExactCoverCandidates = 20;

/// Covers y with traces F ∩ y and splits y into parts, each element going to
/// the first chosen set (in pick order) that contains it.
CoverResult cover_within_clique(const SetSystem& s, std::span<const Element> y);

// --- refinement step ------------------------------------------------------------------

struct RefinedPart {
    std::vector<Element> elements;
    std::size_t set;      // covering family index; never the full universe
    std::size_t cluster;  // index into ClusterRefinement::clusters
    std::size_t color;    // refined color, dense over (cluster color, part index)
};

struct RefinementCluster {
    std::size_t color;  // subcoloring color of the cluster
    std::vector<Element> elements;
};

struct ClusterRefinement {
    Subcoloring subcoloring;  // of the Gaifman graph
    bool subcoloring_exact = false;
    std::vector<RefinementCluster> clusters;  // ordered by smallest element
    std::vector<RefinedPart> parts;           // ordered by smallest element
    std::vector<Element> uncovered;           // elements in no family set
    std::size_t refined_palette = 0;
};

/// One refinement step. Requires that no family set equals the universe.
ClusterRefinement refinement_step(const SetSystem& s);

// --- recursive coloring -----------------------------------------------------------------

/// Palette accounting aggregated over all recursive calls at one level.
struct LevelStats {
    std::size_t level = 0;
    std::size_t calls = 0;
    std::size_t base_cases = 0;
    std::size_t max_universe = 0;
    std::size_t max_k = 0;            // refined colors in a refinement step
    std::size_t max_p = 0;            // largest palette returned by a child call
    std::size_t max_used = 0;         // palette produced by a call
    std::size_t max_reserved = 0;     // colors spent on uncovered elements
    std::size_t max_subcoloring = 0;  // Gaifman subcoloring palette
    bool bound_holds = true;          // used - reserved <= k * p * 2^p * m on every call
};

struct EngineResult {
    ParityColoring coloring;
    std::vector<LevelStats> levels;
    std::size_t proper_palette = 0;  // graph pipeline only
};

/// Totally strong parity coloring of s (every set and the universe).
EngineResult strong_parity_color_system(const SetSystem& s, std::size_t modulus = 2);

/// Proper coloring of g in which every radius-d ball sees each color 0 or
/// 1 mod m times.
EngineResult strong_parity_color_graph(const Graph& g, std::size_t d, std::size_t modulus = 2);

/// Splits `count` items into groups of sizes 1 mod m: q-1 singletons first,
/// then one remainder group, with q = ((count - 1) mod m) + 1. Returns the
/// group index of each item.
std::vector<std::size_t> parity_groups(std::size_t count, std::size_t m);

}  // namespace oddcolor
