#include "oddcolor/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <random>
#include <stdexcept>

namespace oddcolor {

Graph::Graph(std::size_t n)
{
    if (n > kMaxSize) throw std::invalid_argument("graph exceeds " + std::to_string(kMaxSize) + " vertices");
    adjacency_.assign(n, Bitset(n));
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n)
{
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(Vertex u, Vertex v)
{
    if (u >= size() || v >= size()) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adjacency_[u].set(v);
    adjacency_[v].set(u);
}

std::size_t Graph::edge_count() const
{
    std::size_t total = 0;
    for (const auto& row : adjacency_) total += row.count();
    return total / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < size(); ++u)
        for (auto v = adjacency_[u].find_next(u); v != Bitset::npos; v = adjacency_[u].find_next(v))
            out.emplace_back(u, v);
    return out;
}

std::vector<int> distances_from(const Graph& g, Vertex u)
{
    if (u >= g.size()) throw std::out_of_range("source vertex out of range");
    std::vector<int> dist(g.size(), kUnreachable);
    std::deque<Vertex> queue{u};
    dist[u] = 0;
    while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        const auto& nb = g.neighbors(x);
        for (auto y = nb.find_first(); y != Bitset::npos; y = nb.find_next(y)) {
            if (dist[y] != kUnreachable) continue;
            dist[y] = dist[x] + 1;
            queue.push_back(y);
        }
    }
    return dist;
}

std::vector<std::vector<int>> all_distances(const Graph& g)
{
    std::vector<std::vector<int>> out;
    out.reserve(g.size());
    for (Vertex u = 0; u < g.size(); ++u) out.push_back(distances_from(g, u));
    return out;
}

Graph power(const Graph& g, std::size_t r)
{
    if (r == 0) throw std::invalid_argument("power radius must be >= 1");
    Graph out(g.size());
    for (Vertex u = 0; u < g.size(); ++u) {
        auto dist = distances_from(g, u);
        for (Vertex v = u + 1; v < g.size(); ++v)
            if (dist[v] != kUnreachable && static_cast<std::size_t>(dist[v]) <= r) out.add_edge(u, v);
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const Bitset& a)
{
    return induced_subgraph(g, members(a));
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> a)
{
    std::vector<Vertex> keep(a.begin(), a.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    if (!keep.empty() && keep.back() >= g.size()) throw std::out_of_range("induced vertex out of range");

    InducedSubgraph out{Graph(keep.size()), keep};
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j])) out.graph.add_edge(i, j);
    return out;
}

Graph complement(const Graph& g)
{
    Graph out(g.size());
    for (Vertex u = 0; u < g.size(); ++u)
        for (Vertex v = u + 1; v < g.size(); ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

std::vector<Vertex> degeneracy_order(const Graph& g)
{
    const auto n = g.size();
    std::vector<std::size_t> degree(n);
    for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
    std::vector<bool> removed(n, false);
    std::vector<Vertex> removal;
    removal.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = n;
        for (Vertex v = 0; v < n; ++v)
            if (!removed[v] && (best == n || degree[v] < degree[best])) best = v;
        removed[best] = true;
        removal.push_back(best);
        const auto& nb = g.neighbors(best);
        for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w))
            if (!removed[w]) --degree[w];
    }
    std::reverse(removal.begin(), removal.end());
    return removal;
}

VertexColoring greedy_proper_coloring(const Graph& g)
{
    VertexColoring out{std::vector<std::size_t>(g.size(), 0), 0};
    std::vector<bool> colored(g.size(), false);
    for (auto v : degeneracy_order(g)) {
        std::vector<bool> taken(out.palette_size + 1, false);
        const auto& nb = g.neighbors(v);
        for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w))
            if (colored[w]) taken[out.colors[w]] = true;
        std::size_t c = 0;
        while (taken[c]) ++c;
        out.colors[v] = c;
        colored[v] = true;
        out.palette_size = std::max(out.palette_size, c + 1);
    }
    return out;
}

bool is_proper_coloring(const Graph& g, const Coloring& c)
{
    if (c.size() != g.size()) return false;
    for (auto [u, v] : g.edges())
        if (c[u] == c[v]) return false;
    return true;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g)
{
    std::vector<std::vector<Vertex>> out;
    Bitset seen(g.size());
    for (Vertex s = 0; s < g.size(); ++s) {
        if (seen.test(s)) continue;
        Bitset comp(g.size());
        Bitset frontier(g.size());
        frontier.set(s);
        while (frontier.any()) {
            comp |= frontier;
            Bitset next(g.size());
            for (auto x = frontier.find_first(); x != Bitset::npos; x = frontier.find_next(x)) next |= g.neighbors(x);
            frontier = next - comp;
        }
        seen |= comp;
        out.push_back(members(comp));
    }
    return out;
}

namespace {

// Depth-first enumeration of independent sets of size `need` inside
// `candidates`, calling `visit` on each; stops when visit returns true.
class IndependentSetSearch {
public:
    IndependentSetSearch(const Graph& g, SearchBudget budget) : g_(g), budget_(budget) {}

    template <class Visit>
    bool run(const Bitset& candidates, std::size_t need, std::vector<Vertex>& chosen, Visit&& visit)
    {
        if (need == 0) return visit(chosen);
        if (candidates.count() < need) return false;
        for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
            if (++nodes_ > budget_.max_nodes) {
                exhausted_ = true;
                return false;
            }
            Bitset rest = candidates - g_.neighbors(v);
            // only vertices after v, to enumerate each set once
            for (auto w = rest.find_first(); w != Bitset::npos && w <= v; w = rest.find_next(w)) rest.reset(w);
            chosen.push_back(v);
            bool done = run(rest, need - 1, chosen, visit);
            chosen.pop_back();
            if (done || exhausted_) return done;
        }
        return false;
    }

    bool exhausted() const { return exhausted_; }

private:
    const Graph& g_;
    SearchBudget budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace

BicliqueSearch has_induced_biclique(const Graph& g, std::size_t t, SearchBudget budget)
{
    if (t == 0) throw std::invalid_argument("biclique size must be >= 1");
    BicliqueSearch result;
    IndependentSetSearch search(g, budget);
    Bitset all(g.size());
    all.set();
    std::vector<Vertex> left;
    search.run(all, t, left, [&](const std::vector<Vertex>& a) {
        Bitset common(g.size());
        common.set();
        for (auto v : a) common &= g.neighbors(v);
        // break the left/right symmetry: the right side starts after min(left)
        for (auto w = common.find_first(); w != Bitset::npos && w < a.front(); w = common.find_next(w)) common.reset(w);
        std::vector<Vertex> right;
        return search.run(common, t, right, [&](const std::vector<Vertex>& b) {
            result.witness = Biclique{a, b};
            return true;
        });
    });
    result.exhausted = !result.witness && search.exhausted();
    return result;
}

bool is_induced_biclique(const Graph& g, const Biclique& b)
{
    if (b.left.size() != b.right.size() || b.left.empty()) return false;
    for (std::size_t i = 0; i < b.left.size(); ++i)
        for (std::size_t j = 0; j < b.left.size(); ++j) {
            if (!g.adjacent(b.left[i], b.right[j])) return false;
            if (i != j && (g.adjacent(b.left[i], b.left[j]) || g.adjacent(b.right[i], b.right[j]))) return false;
            if (i != j && (b.left[i] == b.left[j] || b.right[i] == b.right[j])) return false;
        }
    return true;
}

// --- generators ----------------------------------------------------------

namespace {

// Unbiased integer in [0, bound) by rejection; avoids the implementation-
// defined behaviour of std::uniform_int_distribution across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

bool coin(std::mt19937_64& rng, double p)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

void require(bool ok, const char* msg)
{
    if (!ok) throw std::invalid_argument(msg);
}

Graph random_outerplanar(std::size_t n, double p, std::mt19937_64& rng)
{
    Graph g(n);
    if (n < 3) {
        for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
        return g;
    }
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    // Random triangulation of the polygon; each chord is kept with probability p,
    // so the result is a spanning subgraph of a maximal outerplanar graph.
    std::vector<std::vector<Vertex>> pending{{}};
    for (Vertex v = 0; v < n; ++v) pending.front().push_back(v);
    while (!pending.empty()) {
        auto poly = std::move(pending.back());
        pending.pop_back();
        if (poly.size() <= 3) continue;
        const auto k = poly.size();
        auto i = uniform_below(rng, k);
        auto j = (i + 2 + uniform_below(rng, k - 3)) % k;
        if (i > j) std::swap(i, j);
        if (coin(rng, p)) g.add_edge(poly[i], poly[j]);
        std::vector<Vertex> first(poly.begin() + static_cast<long>(i), poly.begin() + static_cast<long>(j) + 1);
        std::vector<Vertex> second(poly.begin() + static_cast<long>(j), poly.end());
        second.insert(second.end(), poly.begin(), poly.begin() + static_cast<long>(i) + 1);
        pending.push_back(std::move(first));
        pending.push_back(std::move(second));
    }
    return g;
}

}  // namespace

GraphKind parse_graph_kind(const std::string& name)
{
    static const std::pair<const char*, GraphKind> table[] = {
        {"path", GraphKind::path},
        {"cycle", GraphKind::cycle},
        {"grid", GraphKind::grid},
        {"complete", GraphKind::complete},
        {"star", GraphKind::star},
        {"random_gnp", GraphKind::random_gnp},
        {"random_tree", GraphKind::random_tree},
        {"random_outerplanar", GraphKind::random_outerplanar},
    };
    for (auto [key, kind] : table)
        if (name == key) return kind;
    throw std::invalid_argument("unknown graph kind '" + name + "'");
}

std::string to_string(GraphKind kind)
{
    switch (kind) {
    case GraphKind::path: return "path";
    case GraphKind::cycle: return "cycle";
    case GraphKind::grid: return "grid";
    case GraphKind::complete: return "complete";
    case GraphKind::star: return "star";
    case GraphKind::random_gnp: return "random_gnp";
    case GraphKind::random_tree: return "random_tree";
    case GraphKind::random_outerplanar: return "random_outerplanar";
    }
    return "?";
}

bool is_random_kind(GraphKind kind)
{
    return kind == GraphKind::random_gnp || kind == GraphKind::random_tree || kind == GraphKind::random_outerplanar;
}

Graph generate(GraphKind kind, const GeneratorParams& params, std::uint64_t seed)
{
    const auto n = params.n;
    std::mt19937_64 rng(seed);
    switch (kind) {
    case GraphKind::path: {
        Graph g(n);
        for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
        return g;
    }
    case GraphKind::cycle: {
        require(n >= 3, "cycle needs n >= 3");
        Graph g(n);
        for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
        return g;
    }
    case GraphKind::grid: {
        const auto rows = n, cols = params.cols;
        require(rows >= 1 && cols >= 1, "grid needs rows, cols >= 1");
        require(rows * cols <= kMaxSize, "grid too large");
        Graph g(rows * cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                auto v = r * cols + c;
                if (c + 1 < cols) g.add_edge(v, v + 1);
                if (r + 1 < rows) g.add_edge(v, v + cols);
            }
        return g;
    }
    case GraphKind::complete: {
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }
    case GraphKind::star: {
        require(n >= 1, "star needs n >= 1");
        Graph g(n);
        for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
        return g;
    }
    case GraphKind::random_gnp: {
        require(params.p >= 0.0 && params.p <= 1.0, "edge probability must lie in [0, 1]");
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng, params.p)) g.add_edge(u, v);
        return g;
    }
    case GraphKind::random_tree: {
        Graph g(n);
        for (Vertex v = 1; v < n; ++v) g.add_edge(v, uniform_below(rng, v));
        return g;
    }
    case GraphKind::random_outerplanar:
        require(params.p >= 0.0 && params.p <= 1.0, "chord probability must lie in [0, 1]");
        return random_outerplanar(n, params.p, rng);
    }
    throw std::invalid_argument("unknown graph kind");
}

}  // namespace oddcolor
