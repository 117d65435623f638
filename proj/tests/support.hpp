#pragma once

#include "oddcolor/graph.hpp"
#include "oddcolor/set_system.hpp"
#include "oddcolor/subcolor.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

namespace oddcolor::testing {

inline Graph make_graph(std::size_t n, std::initializer_list<Edge> edges)
{
    std::vector<Edge> e(edges);
    return Graph(n, e);
}

inline Graph path(std::size_t n) { return generate(GraphKind::path, {n}); }
inline Graph cycle(std::size_t n) { return generate(GraphKind::cycle, {n}); }
inline Graph clique(std::size_t n) { return generate(GraphKind::complete, {n}); }
inline Graph grid(std::size_t r, std::size_t c) { return generate(GraphKind::grid, {r, c}); }

inline Graph complete_bipartite(std::size_t a, std::size_t b)
{
    Graph g(a + b);
    for (std::size_t u = 0; u < a; ++u)
        for (std::size_t v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

inline SetSystem random_system(std::mt19937_64& rng, std::size_t n, std::size_t f, double p)
{
    std::bernoulli_distribution coin(p);
    SetSystem s(n);
    for (std::size_t i = 0; i < f; ++i) {
        Bitset b(n);
        for (std::size_t x = 0; x < n; ++x)
            if (coin(rng)) b.set(x);
        s.add_set(std::move(b));
    }
    return s;
}

inline Bitset random_subset(std::mt19937_64& rng, std::size_t n, double p)
{
    std::bernoulli_distribution coin(p);
    Bitset b(n);
    for (std::size_t x = 0; x < n; ++x)
        if (coin(rng)) b.set(x);
    return b;
}

// Mixed bounded-expansion style instances: grids, trees, outerplanar, cycles, gnp.
inline Graph random_sparse_graph(std::mt19937_64& rng, std::size_t max_n)
{
    std::uniform_int_distribution<std::size_t> kind_dist(0, 4);
    std::uniform_int_distribution<std::size_t> n_dist(1, max_n);
    const auto n = n_dist(rng);
    const auto seed = rng();
    switch (kind_dist(rng)) {
    case 0: {
        std::size_t rows = std::max<std::size_t>(1, n / 5);
        return generate(GraphKind::grid, {rows, std::max<std::size_t>(1, n / rows)});
    }
    case 1: return generate(GraphKind::random_tree, {n}, seed);
    case 2: return generate(GraphKind::random_outerplanar, {n, 0, 0.6}, seed);
    case 3: return generate(GraphKind::cycle, {std::max<std::size_t>(3, n)});
    default: return generate(GraphKind::random_gnp, {n, 0, std::min(1.0, 3.0 / static_cast<double>(n + 1))}, seed);
    }
}

// Random cotree with at most `levels` internal levels; returns the graph it encodes.
inline Graph random_cograph(std::mt19937_64& rng, std::size_t n, std::size_t levels)
{
    std::vector<CotreeNode> nodes;
    std::vector<Vertex> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    std::shuffle(pool.begin(), pool.end(), rng);

    std::function<std::size_t(std::vector<Vertex>, std::size_t, bool)> build =
        [&](std::vector<Vertex> verts, std::size_t left, bool join) -> std::size_t {
        if (verts.size() == 1 || left == 0) {
            if (verts.size() == 1) {
                nodes.push_back({CotreeNodeType::leaf, verts[0], {}});
                return nodes.size() - 1;
            }
            // out of levels: flat node over leaves
            std::vector<std::size_t> kids;
            for (auto v : verts) {
                nodes.push_back({CotreeNodeType::leaf, v, {}});
                kids.push_back(nodes.size() - 1);
            }
            nodes.push_back({join ? CotreeNodeType::join : CotreeNodeType::disjoint_union, 0, kids});
            return nodes.size() - 1;
        }
        std::uniform_int_distribution<std::size_t> parts_dist(2, std::min<std::size_t>(4, verts.size()));
        const auto parts = parts_dist(rng);
        std::vector<std::vector<Vertex>> groups(parts);
        for (std::size_t i = 0; i < verts.size(); ++i)
            groups[i < parts ? i : std::uniform_int_distribution<std::size_t>(0, parts - 1)(rng)].push_back(verts[i]);
        std::vector<std::size_t> kids;
        for (auto& grp : groups) kids.push_back(build(grp, left - 1, !join));
        nodes.push_back({join ? CotreeNodeType::join : CotreeNodeType::disjoint_union, 0, kids});
        return nodes.size() - 1;
    };
    if (n == 0) return Graph();
    const bool join = std::bernoulli_distribution(0.5)(rng);
    auto root = build(pool, levels, join);
    Cotree t(std::move(nodes), root);
    auto sub = t.to_graph();
    return sub.graph;
}

}  // namespace oddcolor::testing
