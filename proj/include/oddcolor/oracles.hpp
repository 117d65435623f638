#pragma once

#include "oddcolor/common.hpp"
#include "oddcolor/engine.hpp"
#include "oddcolor/graph.hpp"
#include "oddcolor/set_system.hpp"

#include <optional>

namespace oddcolor {

/// Exact minimum from exhaustive search, or a [lower, upper] interval when
/// the node budget ran out. The witness attains `upper`.
struct OracleResult {
    std::size_t lower = 0;
    std::size_t upper = 0;
    ParityColoring witness;

    bool exact() const { return lower == upper; }
    std::size_t value() const { return upper; }
};

/// Which neighbourhoods a graph parity oracle constrains.
enum class GraphNotion {
    open,  // N(u), the strong odd coloring condition
    ball,  // Ball_d(u)
};

/// Minimum colors of a proper coloring meeting the parity condition on the
/// chosen neighbourhoods.
OracleResult exact_parity_graph(const Graph& g, GraphNotion notion, std::size_t d, std::size_t modulus,
                                SearchBudget budget = {});

/// Strong odd chromatic number (open neighbourhoods, modulus 2).
OracleResult exact_strong_odd_graph(const Graph& g, SearchBudget budget = {});

/// Minimum colors of a strong parity coloring of s (sets only, no universe
/// condition and no properness).
OracleResult exact_strong_parity_system(const SetSystem& s, std::size_t modulus = 2, SearchBudget budget = {});

struct ChromaticResult {
    std::size_t lower = 0;
    std::size_t upper = 0;
    VertexColoring witness;

    bool exact() const { return lower == upper; }
    std::size_t value() const { return upper; }
};

ChromaticResult exact_chromatic(const Graph& g, SearchBudget budget = {});

}  // namespace oddcolor
