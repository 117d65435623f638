#pragma once

#include "oddcolor/common.hpp"
#include "oddcolor/graph.hpp"

#include <string>
#include <vector>

namespace oddcolor {

/// A set system (U, F): universe 0..|U|-1 and an ordered family of subsets.
/// Duplicate sets are distinct family members. Labels are optional
/// provenance strings, either absent or one per set.
class SetSystem {
public:
    SetSystem() = default;
    explicit SetSystem(std::size_t universe_size);
    SetSystem(std::size_t universe_size, const std::vector<std::vector<Element>>& sets);

    std::size_t universe_size() const { return universe_size_; }
    std::size_t family_size() const { return family_.size(); }
    const Bitset& set(std::size_t index) const { return family_[index]; }
    const std::vector<Bitset>& family() const { return family_; }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }

    void add_set(Bitset set, std::string label = {});
    void add_set(const std::vector<Element>& elements, std::string label = {});

    /// Bitset with every universe element set.
    Bitset full() const;
    /// Union of all family members.
    Bitset covered() const;

    bool operator==(const SetSystem& other) const = default;

private:
    std::size_t universe_size_ = 0;
    std::vector<Bitset> family_;
    std::vector<std::string> labels_;
};

struct InducedSubsystem {
    SetSystem system;
    std::vector<Element> element_map;  // new element -> original element
    std::vector<std::size_t> set_map;  // new set index -> original set index
};

/// S[W, Q] = (W, {F ∩ W : F ∈ Q}); W reindexed ascending, Q kept in family order.
InducedSubsystem induced_subsystem(const SetSystem& s, const Bitset& w, std::span<const std::size_t> q);
/// S[W, F]: every set kept.
InducedSubsystem induced_subsystem(const SetSystem& s, const Bitset& w);

/// Elements adjacent iff some family set contains both.
Graph gaifman(const SetSystem& s);

/// Balls_d(G): one set per vertex, in vertex order, labelled "Ball_d(v)".
SetSystem balls(const Graph& g, std::size_t d);

}  // namespace oddcolor
