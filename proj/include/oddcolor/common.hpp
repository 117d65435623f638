#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace oddcolor {

using Bitset = boost::dynamic_bitset<std::uint64_t>;
using Vertex = std::size_t;
using Element = std::size_t;

// Hard desk-scale cap shared by graphs and set systems.
inline constexpr std::size_t kMaxSize = 4096;

/// Thrown when an input file or JSON document is malformed.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Node budget for exhaustive searches. A search that runs out reports an
/// inexact result instead of failing.
struct SearchBudget {
    std::uint64_t max_nodes = 20'000'000;
};

/// Plain coloring: one palette index per element, all below palette_size.
struct Coloring {
    std::vector<std::size_t> colors;
    std::size_t palette_size = 0;

    std::size_t size() const { return colors.size(); }
    std::size_t operator[](std::size_t i) const { return colors[i]; }
    /// Number of distinct colors actually assigned.
    std::size_t used_colors() const;
};

using VertexColoring = Coloring;
using Subcoloring = Coloring;

Bitset make_bitset(std::size_t size, std::span<const std::size_t> members);
std::vector<std::size_t> members(const Bitset& bits);

struct BitsetHash {
    std::size_t operator()(const Bitset& bits) const;
};

}  // namespace oddcolor
