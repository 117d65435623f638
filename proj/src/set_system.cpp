#include "oddcolor/set_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace oddcolor {

SetSystem::SetSystem(std::size_t universe_size) : universe_size_(universe_size)
{
    if (universe_size > kMaxSize) throw std::invalid_argument("universe exceeds " + std::to_string(kMaxSize) + " elements");
}

SetSystem::SetSystem(std::size_t universe_size, const std::vector<std::vector<Element>>& sets)
    : SetSystem(universe_size)
{
    for (const auto& s : sets) add_set(s);
}

void SetSystem::add_set(Bitset set, std::string label)
{
    if (set.size() != universe_size_) throw std::invalid_argument("set bitset size does not match universe");
    if (family_.size() >= kMaxSize) throw std::invalid_argument("family exceeds " + std::to_string(kMaxSize) + " sets");
    // labels are all-or-nothing; the first set decides
    const bool labelled = family_.empty() ? !label.empty() : has_labels();
    if (labelled) {
        labels_.push_back(std::move(label));
    } else if (!label.empty()) {
        throw std::invalid_argument("labels must be given for all sets or none");
    }
    family_.push_back(std::move(set));
}

void SetSystem::add_set(const std::vector<Element>& elements, std::string label)
{
    add_set(make_bitset(universe_size_, elements), std::move(label));
}

Bitset SetSystem::full() const
{
    Bitset all(universe_size_);
    all.set();
    return all;
}

Bitset SetSystem::covered() const
{
    Bitset all(universe_size_);
    for (const auto& f : family_) all |= f;
    return all;
}

InducedSubsystem induced_subsystem(const SetSystem& s, const Bitset& w, std::span<const std::size_t> q)
{
    if (w.size() != s.universe_size()) throw std::invalid_argument("element selection does not match universe");
    InducedSubsystem out{SetSystem(w.count()), members(w), {}};
    std::vector<std::size_t> sets(q.begin(), q.end());
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    for (auto idx : sets) {
        if (idx >= s.family_size()) throw std::out_of_range("set index out of range");
        const auto& f = s.set(idx);
        Bitset trimmed(out.element_map.size());
        for (std::size_t i = 0; i < out.element_map.size(); ++i)
            if (f.test(out.element_map[i])) trimmed.set(i);
        out.system.add_set(std::move(trimmed), s.has_labels() ? s.labels()[idx] : std::string{});
        out.set_map.push_back(idx);
    }
    return out;
}

InducedSubsystem induced_subsystem(const SetSystem& s, const Bitset& w)
{
    std::vector<std::size_t> all(s.family_size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return induced_subsystem(s, w, all);
}

Graph gaifman(const SetSystem& s)
{
    Graph g(s.universe_size());
    for (const auto& f : s.family()) {
        auto elems = members(f);
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (std::size_t j = i + 1; j < elems.size(); ++j) g.add_edge(elems[i], elems[j]);
    }
    return g;
}

SetSystem balls(const Graph& g, std::size_t d)
{
    SetSystem s(g.size());
    for (Vertex u = 0; u < g.size(); ++u) {
        auto dist = distances_from(g, u);
        Bitset ball(g.size());
        for (Vertex v = 0; v < g.size(); ++v)
            if (dist[v] != kUnreachable && static_cast<std::size_t>(dist[v]) <= d) ball.set(v);
        s.add_set(std::move(ball), "Ball_" + std::to_string(d) + "(" + std::to_string(u) + ")");
    }
    return s;
}

}  // namespace oddcolor
