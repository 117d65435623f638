#include "oddcolor/subcolor.hpp"

#include <algorithm>
#include <functional>

namespace oddcolor {

// --- cluster graphs ------------------------------------------------------------

namespace {

// Induced P_3 centred at b inside `mask`, if any.
std::optional<std::array<Vertex, 3>> p3_at(const Graph& g, Vertex b, const Bitset& mask)
{
    Bitset nb = g.neighbors(b) & mask;
    for (auto a = nb.find_first(); a != Bitset::npos; a = nb.find_next(a)) {
        Bitset far = nb - g.neighbors(a);
        far.reset(a);
        if (auto c = far.find_first(); c != Bitset::npos) return std::array<Vertex, 3>{std::min(a, c), b, std::max(a, c)};
    }
    return std::nullopt;
}

// Whether adding v to the class `members` keeps it a cluster graph: v's
// neighbours inside the class must be exactly one whole cluster, or none.
bool fits_class(const Graph& g, Vertex v, const Bitset& members)
{
    Bitset nv = g.neighbors(v) & members;
    auto x = nv.find_first();
    if (x == Bitset::npos) return true;
    Bitset cluster = g.neighbors(x) & members;
    cluster.set(x);
    return nv == cluster;
}

}  // namespace

ClusterCheck is_cluster_graph(const Graph& g)
{
    Bitset all(g.size());
    all.set();
    for (Vertex b = 0; b < g.size(); ++b)
        if (auto p = p3_at(g, b, all)) return {false, p};
    return {};
}

std::optional<SubcoloringViolation> verify_subcoloring(const Graph& g, const Subcoloring& c)
{
    if (c.size() != g.size()) throw std::invalid_argument("coloring size does not match graph");
    std::vector<Bitset> classes;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (c[v] >= classes.size()) classes.resize(c[v] + 1, Bitset(g.size()));
        classes[c[v]].set(v);
    }
    for (Vertex b = 0; b < g.size(); ++b)
        if (auto p = p3_at(g, b, classes[c[b]])) return SubcoloringViolation{c[b], *p};
    return std::nullopt;
}

namespace {

struct SubcolorExhausted {};

class SubcoloringSearch {
public:
    SubcoloringSearch(const Graph& g, SearchBudget budget) : g_(g), budget_(budget) {}

    std::optional<Subcoloring> try_colors(std::size_t k)
    {
        k_ = k;
        classes_.assign(k, Bitset(g_.size()));
        colors_.assign(g_.size(), 0);
        if (!assign(0, 0)) return std::nullopt;
        return Subcoloring{colors_, k};
    }

private:
    bool assign(Vertex v, std::size_t used)
    {
        if (v == g_.size()) return true;
        if (++nodes_ > budget_.max_nodes) throw SubcolorExhausted{};
        // a fresh color is interchangeable with any other unused one
        const std::size_t limit = std::min(k_, used + 1);
        for (std::size_t c = 0; c < limit; ++c) {
            if (!fits_class(g_, v, classes_[c])) continue;
            classes_[c].set(v);
            colors_[v] = c;
            if (assign(v + 1, std::max(used, c + 1))) return true;
            classes_[c].reset(v);
        }
        return false;
    }

    const Graph& g_;
    SearchBudget budget_;
    std::uint64_t nodes_ = 0;
    std::size_t k_ = 0;
    std::vector<Bitset> classes_;
    std::vector<std::size_t> colors_;
};

}  // namespace

SubchromaticResult exact_subchromatic(const Graph& g, SearchBudget budget)
{
    if (g.empty()) return {0, {}, true};
    auto greedy = greedy_subcoloring(g);
    SubcoloringSearch search(g, budget);
    try {
        for (std::size_t k = 1; k < greedy.palette_size; ++k)
            if (auto found = search.try_colors(k)) return {k, std::move(*found), true};
    } catch (const SubcolorExhausted&) {
        return {greedy.palette_size, greedy, false};
    }
    return {greedy.palette_size, greedy, true};
}

Subcoloring greedy_subcoloring(const Graph& g)
{
    Subcoloring out{std::vector<std::size_t>(g.size(), 0), 0};
    std::vector<Bitset> classes;
    for (auto v : degeneracy_order(g)) {
        std::size_t c = 0;
        while (c < classes.size() && !fits_class(g, v, classes[c])) ++c;
        if (c == classes.size()) classes.emplace_back(g.size());
        classes[c].set(v);
        out.colors[v] = c;
    }
    out.palette_size = classes.size();
    return out;
}

// --- cotrees -------------------------------------------------------------------

Cotree::Cotree(std::vector<CotreeNode> nodes, std::size_t root) : nodes_(std::move(nodes)), root_(root)
{
    if (!nodes_.empty() && root_ >= nodes_.size()) throw std::invalid_argument("cotree root out of range");
    for (const auto& n : nodes_) {
        if ((n.type == CotreeNodeType::leaf) != n.children.empty())
            throw std::invalid_argument("cotree leaves must be exactly the childless nodes");
        for (auto c : n.children)
            if (c >= nodes_.size()) throw std::invalid_argument("cotree child out of range");
    }
}

std::size_t Cotree::depth() const
{
    if (empty()) return 0;
    std::function<std::size_t(std::size_t)> rec = [&](std::size_t id) -> std::size_t {
        std::size_t best = 0;
        for (auto c : nodes_[id].children) best = std::max(best, rec(c));
        return best + 1;
    };
    return rec(root_);
}

std::vector<Vertex> Cotree::leaves_below(std::size_t id) const
{
    std::vector<Vertex> out;
    std::vector<std::size_t> stack{id};
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        const auto& n = nodes_[x];
        if (n.type == CotreeNodeType::leaf) out.push_back(n.vertex);
        for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
    }
    return out;
}

std::vector<Vertex> Cotree::vertices() const
{
    if (empty()) return {};
    auto out = leaves_below(root_);
    std::sort(out.begin(), out.end());
    return out;
}

InducedSubgraph Cotree::to_graph() const
{
    auto verts = vertices();
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw std::invalid_argument("cotree repeats a vertex");
    InducedSubgraph out{Graph(verts.size()), verts};
    auto index = [&](Vertex v) {
        return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    std::vector<std::size_t> stack;
    if (!empty()) stack.push_back(root_);
    while (!stack.empty()) {
        const auto& n = nodes_[stack.back()];
        stack.pop_back();
        stack.insert(stack.end(), n.children.begin(), n.children.end());
        if (n.type != CotreeNodeType::join) continue;
        std::vector<std::vector<Vertex>> groups;
        for (auto c : n.children) groups.push_back(leaves_below(c));
        for (std::size_t a = 0; a < groups.size(); ++a)
            for (std::size_t b = a + 1; b < groups.size(); ++b)
                for (auto u : groups[a])
                    for (auto v : groups[b]) out.graph.add_edge(index(u), index(v));
    }
    return out;
}

Cotree Cotree::normalized() const
{
    if (empty()) return {};
    std::vector<CotreeNode> out;
    std::function<std::size_t(std::size_t)> rebuild = [&](std::size_t id) -> std::size_t {
        const auto& n = nodes_[id];
        if (n.type == CotreeNodeType::leaf) {
            out.push_back(n);
            return out.size() - 1;
        }
        if (n.children.size() == 1) return rebuild(n.children.front());
        std::vector<std::size_t> kids;
        for (auto c : n.children) {
            auto k = rebuild(c);
            if (out[k].type == n.type) {
                kids.insert(kids.end(), out[k].children.begin(), out[k].children.end());
            } else {
                kids.push_back(k);
            }
        }
        out.push_back({n.type, 0, std::move(kids)});
        return out.size() - 1;
    };
    auto root = rebuild(root_);
    // drop nodes orphaned by merging
    std::vector<CotreeNode> compact;
    std::function<std::size_t(std::size_t)> copy = [&](std::size_t id) -> std::size_t {
        CotreeNode n = out[id];
        for (auto& c : n.children) c = copy(c);
        compact.push_back(std::move(n));
        return compact.size() - 1;
    };
    auto new_root = copy(root);
    return Cotree(std::move(compact), new_root);
}

namespace {

// Connected components of g[mask] (or of its complement), each as a bitset.
std::vector<Bitset> components_within(const Graph& g, const Bitset& mask, bool in_complement)
{
    std::vector<Bitset> out;
    Bitset rest = mask;
    while (rest.any()) {
        Bitset comp(g.size());
        Bitset frontier(g.size());
        frontier.set(rest.find_first());
        while (frontier.any()) {
            comp |= frontier;
            Bitset next(g.size());
            for (auto x = frontier.find_first(); x != Bitset::npos; x = frontier.find_next(x))
                next |= in_complement ? (mask - g.neighbors(x)) : (g.neighbors(x) & mask);
            frontier = next - comp;
        }
        rest -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

std::optional<std::array<Vertex, 4>> find_p4(const Graph& g, const Bitset& mask)
{
    for (auto b = mask.find_first(); b != Bitset::npos; b = mask.find_next(b)) {
        Bitset nb = g.neighbors(b) & mask;
        for (auto c = nb.find_first(); c != Bitset::npos; c = nb.find_next(c)) {
            Bitset ends_a = nb - g.neighbors(c);
            ends_a.reset(c);
            Bitset ends_d = (g.neighbors(c) & mask) - g.neighbors(b);
            ends_d.reset(b);
            for (auto a = ends_a.find_first(); a != Bitset::npos; a = ends_a.find_next(a)) {
                Bitset d = ends_d - g.neighbors(a);
                d.reset(a);
                if (auto dv = d.find_first(); dv != Bitset::npos) return std::array<Vertex, 4>{a, b, c, dv};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

CographRecognition recognize_cograph(const Graph& g)
{
    CographRecognition result;
    if (g.empty()) {
        result.cotree = Cotree{};
        return result;
    }
    std::vector<CotreeNode> nodes;
    std::function<std::optional<std::size_t>(const Bitset&)> build = [&](const Bitset& mask) -> std::optional<std::size_t> {
        if (mask.count() == 1) {
            nodes.push_back({CotreeNodeType::leaf, mask.find_first(), {}});
            return nodes.size() - 1;
        }
        auto parts = components_within(g, mask, false);
        auto type = CotreeNodeType::disjoint_union;
        if (parts.size() == 1) {
            parts = components_within(g, mask, true);
            type = CotreeNodeType::join;
        }
        if (parts.size() == 1) {
            result.p4 = find_p4(g, mask);
            return std::nullopt;
        }
        std::vector<std::size_t> kids;
        for (const auto& p : parts) {
            auto k = build(p);
            if (!k) return std::nullopt;
            kids.push_back(*k);
        }
        nodes.push_back({type, 0, std::move(kids)});
        return nodes.size() - 1;
    };
    Bitset all(g.size());
    all.set();
    if (auto root = build(all)) result.cotree = Cotree(std::move(nodes), *root);
    return result;
}

namespace {

std::vector<std::size_t> alpha_table(const Cotree& t)
{
    std::vector<std::size_t> alpha(t.nodes().size(), 0);
    std::function<std::size_t(std::size_t)> rec = [&](std::size_t id) -> std::size_t {
        const auto& n = t.node(id);
        std::size_t value = 0;
        if (n.type == CotreeNodeType::leaf) value = 1;
        for (auto c : n.children) {
            auto a = rec(c);
            value = n.type == CotreeNodeType::join ? std::max(value, a) : value + a;
        }
        return alpha[id] = value;
    };
    if (!t.empty()) rec(t.root());
    return alpha;
}

std::vector<Vertex> independent_set_below(const Cotree& t, const std::vector<std::size_t>& alpha, std::size_t id)
{
    const auto& n = t.node(id);
    if (n.type == CotreeNodeType::leaf) return {n.vertex};
    std::vector<Vertex> out;
    if (n.type == CotreeNodeType::join) {
        std::size_t best = n.children.front();
        for (auto c : n.children)
            if (alpha[c] > alpha[best]) best = c;
        return independent_set_below(t, alpha, best);
    }
    for (auto c : n.children) {
        auto part = independent_set_below(t, alpha, c);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<std::vector<Vertex>> clique_cover_below(const Cotree& t, std::size_t id)
{
    const auto& n = t.node(id);
    if (n.type == CotreeNodeType::leaf) return {{n.vertex}};
    std::vector<std::vector<Vertex>> out;
    for (auto c : n.children) {
        auto parts = clique_cover_below(t, c);
        if (n.type == CotreeNodeType::disjoint_union) {
            for (auto& p : parts) out.push_back(std::move(p));
        } else {
            if (out.size() < parts.size()) out.resize(parts.size());
            for (std::size_t i = 0; i < parts.size(); ++i) out[i].insert(out[i].end(), parts[i].begin(), parts[i].end());
        }
    }
    return out;
}

}  // namespace

std::size_t cograph_alpha(const Cotree& t)
{
    return t.empty() ? 0 : alpha_table(t)[t.root()];
}

std::vector<Vertex> cograph_independent_set(const Cotree& t)
{
    if (t.empty()) return {};
    auto set = independent_set_below(t, alpha_table(t), t.root());
    std::sort(set.begin(), set.end());
    return set;
}

std::vector<std::vector<Vertex>> cograph_clique_cover(const Cotree& t)
{
    if (t.empty()) return {};
    return clique_cover_below(t, t.root());
}

BicliquePresent::BicliquePresent(Biclique witness)
    : std::invalid_argument("graph contains an induced K_{t,t}"), witness_(std::move(witness))
{
}

Subcoloring cograph_subcoloring(const Cotree& t, std::size_t tt_bound)
{
    if (tt_bound == 0) throw std::invalid_argument("biclique bound t must be >= 1");
    if (t.empty()) return {};
    const auto alpha = alpha_table(t);
    const auto verts = t.vertices();
    Subcoloring out{std::vector<std::size_t>(verts.back() + 1, 0), 0};

    // Colors the leaves below `id` from palette [0, returned size).
    std::function<std::size_t(std::size_t)> color = [&](std::size_t id) -> std::size_t {
        const auto& n = t.node(id);
        if (n.type == CotreeNodeType::leaf) {
            out.colors[n.vertex] = 0;
            return 1;
        }
        if (n.type == CotreeNodeType::disjoint_union) {
            std::size_t palette = 0;
            for (auto c : n.children) palette = std::max(palette, color(c));
            return palette;
        }
        std::vector<std::size_t> big;
        for (auto c : n.children)
            if (alpha[c] >= tt_bound) big.push_back(c);
        if (big.size() >= 2) {
            auto left = independent_set_below(t, alpha, big[0]);
            auto right = independent_set_below(t, alpha, big[1]);
            left.resize(tt_bound);
            right.resize(tt_bound);
            throw BicliquePresent({std::move(left), std::move(right)});
        }
        if (big.empty()) {
            // alpha < t here, so a clique cover alone stays within the bound
            auto parts = clique_cover_below(t, id);
            for (std::size_t i = 0; i < parts.size(); ++i)
                for (auto v : parts[i]) out.colors[v] = i;
            return parts.size();
        }
        // the unique child with a t-independent set keeps its own subcoloring
        const std::size_t keep = big.front();
        const auto base = color(keep);
        std::size_t extra = 0;
        for (auto c : n.children) {
            if (c == keep) continue;
            auto parts = clique_cover_below(t, c);
            extra = std::max(extra, parts.size());
            for (std::size_t i = 0; i < parts.size(); ++i)
                for (auto v : parts[i]) out.colors[v] = base + i;
        }
        return base + extra;
    };
    out.palette_size = color(t.root());
    return out;
}

// --- connection models ----------------------------------------------------------

ConnectionModel::ConnectionModel(std::size_t label_count, std::vector<std::size_t> labels,
                                 std::vector<ModelNode> nodes, std::size_t root)
    : label_count_(label_count), labels_(std::move(labels)), nodes_(std::move(nodes)), root_(root)
{
    const auto n = labels_.size();
    for (auto l : labels_)
        if (l >= label_count_) throw std::invalid_argument("vertex label out of range");
    if (n == 0) {
        if (!nodes_.empty()) throw std::invalid_argument("model of the empty graph must have no nodes");
        return;
    }
    if (root_ >= nodes_.size()) throw std::invalid_argument("model root out of range");

    std::vector<int> seen_vertex(n, 0);
    std::vector<int> seen_node(nodes_.size(), 0);
    std::vector<std::size_t> stack{root_};
    while (!stack.empty()) {
        auto id = stack.back();
        stack.pop_back();
        if (seen_node[id]++) throw std::invalid_argument("model tree is not a tree");
        const auto& node = nodes_[id];
        if (node.vertex) {
            if (!node.children.empty()) throw std::invalid_argument("model leaf with children");
            if (*node.vertex >= n) throw std::invalid_argument("model leaf vertex out of range");
            ++seen_vertex[*node.vertex];
        } else if (node.children.empty()) {
            throw std::invalid_argument("model internal node without children");
        }
        for (auto c : node.children) {
            if (c >= nodes_.size()) throw std::invalid_argument("model child out of range");
            stack.push_back(c);
        }
    }
    for (auto count : seen_vertex)
        if (count != 1) throw std::invalid_argument("model leaves must biject with vertices");

    relation_matrix_.assign(nodes_.size(), std::vector<bool>(label_count_ * label_count_, false));
    for (std::size_t id = 0; id < nodes_.size(); ++id)
        for (auto [a, b] : nodes_[id].relation) {
            if (a >= label_count_ || b >= label_count_) throw std::invalid_argument("relation label out of range");
            relation_matrix_[id][a * label_count_ + b] = true;
            relation_matrix_[id][b * label_count_ + a] = true;
        }
}

bool ConnectionModel::related(std::size_t node, std::size_t a, std::size_t b) const
{
    return relation_matrix_[node][a * label_count_ + b];
}

std::size_t ConnectionModel::depth() const
{
    if (nodes_.empty()) return 0;
    std::function<std::size_t(std::size_t)> rec = [&](std::size_t id) -> std::size_t {
        std::size_t best = 0;
        for (auto c : nodes_[id].children) best = std::max(best, rec(c));
        return best + 1;
    };
    return rec(root_);
}

Graph ConnectionModel::graph() const
{
    Graph g(vertex_count());
    std::function<std::vector<Vertex>(std::size_t)> leaves = [&](std::size_t id) -> std::vector<Vertex> {
        const auto& node = nodes_[id];
        if (node.vertex) return {*node.vertex};
        std::vector<std::vector<Vertex>> groups;
        for (auto c : node.children) groups.push_back(leaves(c));
        for (std::size_t a = 0; a < groups.size(); ++a)
            for (std::size_t b = a + 1; b < groups.size(); ++b)
                for (auto u : groups[a])
                    for (auto v : groups[b])
                        if (related(id, labels_[u], labels_[v])) g.add_edge(u, v);
        std::vector<Vertex> all;
        for (auto& grp : groups) all.insert(all.end(), grp.begin(), grp.end());
        return all;
    };
    if (!nodes_.empty()) leaves(root_);
    return g;
}

Cotree extract_label_cotree(const ConnectionModel& m, std::size_t label)
{
    if (m.nodes().empty()) return {};
    std::vector<CotreeNode> nodes;
    std::function<std::optional<std::size_t>(std::size_t)> prune = [&](std::size_t id) -> std::optional<std::size_t> {
        const auto& node = m.nodes()[id];
        if (node.vertex) {
            if (m.labels()[*node.vertex] != label) return std::nullopt;
            nodes.push_back({CotreeNodeType::leaf, *node.vertex, {}});
            return nodes.size() - 1;
        }
        std::vector<std::size_t> kids;
        for (auto c : node.children)
            if (auto k = prune(c)) kids.push_back(*k);
        if (kids.empty()) return std::nullopt;
        auto type = m.related(id, label, label) ? CotreeNodeType::join : CotreeNodeType::disjoint_union;
        nodes.push_back({type, 0, std::move(kids)});
        return nodes.size() - 1;
    };
    auto root = prune(m.root());
    if (!root) return {};
    return Cotree(std::move(nodes), *root).normalized();
}

Subcoloring shrubdepth_subcoloring(const ConnectionModel& m, std::size_t tt_bound)
{
    Subcoloring out{std::vector<std::size_t>(m.vertex_count(), 0), 0};
    for (std::size_t label = 0; label < m.label_count(); ++label) {
        auto cotree = extract_label_cotree(m, label);
        if (cotree.empty()) continue;
        auto part = cograph_subcoloring(cotree, tt_bound);
        for (auto v : cotree.vertices()) out.colors[v] = out.palette_size + part.colors[v];
        out.palette_size += part.palette_size;
    }
    return out;
}

}  // namespace oddcolor
