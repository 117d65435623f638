#include "oddcolor/subcolor.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace oddcolor;
using namespace oddcolor::testing;

namespace {

Subcoloring coloring(std::vector<std::size_t> colors)
{
    auto palette = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
    return {std::move(colors), palette};
}

bool is_clique(const Graph& g, const std::vector<Vertex>& part)
{
    for (auto u : part)
        for (auto v : part)
            if (u != v && !g.adjacent(u, v)) return false;
    return true;
}

bool induces_p4(const Graph& g, const std::array<Vertex, 4>& p)
{
    return g.adjacent(p[0], p[1]) && g.adjacent(p[1], p[2]) && g.adjacent(p[2], p[3]) && !g.adjacent(p[0], p[2]) &&
           !g.adjacent(p[0], p[3]) && !g.adjacent(p[1], p[3]);
}

// Graph of a cotree, indexed by original vertex ids.
Graph cotree_graph(const Cotree& t, std::size_t n)
{
    auto sub = t.to_graph();
    Graph g(n);
    for (auto [u, v] : sub.graph.edges()) g.add_edge(sub.to_original[u], sub.to_original[v]);
    return g;
}

ModelNode leaf(Vertex v) { return {v, {}, {}}; }

// K_{2,2}: vertices 0,1 carry label 0, vertices 2,3 label 1; one root relating the labels.
ConnectionModel k22_model()
{
    std::vector<ModelNode> nodes{leaf(0), leaf(1), leaf(2), leaf(3), {std::nullopt, {0, 1, 2, 3}, {{0, 1}}}};
    return ConnectionModel(2, {0, 0, 1, 1}, std::move(nodes), 4);
}

}  // namespace

TEST_CASE("is_cluster_graph", "[subcolor]")
{
    auto k3k1 = make_graph(4, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(is_cluster_graph(k3k1).ok);
    auto p3 = is_cluster_graph(path(3));
    CHECK_FALSE(p3.ok);
    REQUIRE(p3.p3);
    CHECK(*p3.p3 == std::array<Vertex, 3>{0, 1, 2});
    CHECK_FALSE(is_cluster_graph(cycle(4)).ok);
}

TEST_CASE("verify_subcoloring", "[subcolor]")
{
    CHECK_FALSE(verify_subcoloring(path(4), coloring({0, 0, 1, 1})));
    auto v = verify_subcoloring(path(3), coloring({0, 0, 0}));
    REQUIRE(v);
    CHECK(v->color == 0);
    CHECK_FALSE(verify_subcoloring(Graph(4), coloring({0, 0, 0, 0})));
}

TEST_CASE("exact_subchromatic", "[subcolor]")
{
    auto cluster = make_graph(5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}});
    CHECK(exact_subchromatic(cluster).value == 1);
    auto p4 = exact_subchromatic(path(4));
    CHECK(p4.value == 2);
    CHECK(p4.exact);
    CHECK_FALSE(verify_subcoloring(path(4), p4.coloring));

    auto c5 = exact_subchromatic(cycle(5));
    CHECK(c5.value == 2);
    CHECK_FALSE(verify_subcoloring(cycle(5), c5.coloring));
    CHECK_FALSE(verify_subcoloring(cycle(5), coloring({0, 0, 1, 0, 1})));
    CHECK(exact_subchromatic(Graph()).value == 0);
}

TEST_CASE("greedy_subcoloring", "[subcolor]")
{
    auto cluster = make_graph(5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}});
    CHECK(greedy_subcoloring(cluster).used_colors() == 1);
    auto p4 = greedy_subcoloring(path(4));
    CHECK_FALSE(verify_subcoloring(path(4), p4));
    CHECK(p4.used_colors() <= 2);
    CHECK(greedy_subcoloring(clique(6)).used_colors() == 1);

    std::mt19937_64 rng(4);
    for (int iter = 0; iter < 80; ++iter) {
        auto g = random_sparse_graph(rng, 14);
        auto greedy = greedy_subcoloring(g);
        REQUIRE_FALSE(verify_subcoloring(g, greedy));
        auto exact = exact_subchromatic(g);
        REQUIRE(exact.exact);
        REQUIRE_FALSE(verify_subcoloring(g, exact.coloring));
        REQUIRE(exact.value <= greedy.used_colors());
    }
}

TEST_CASE("recognize_cograph", "[subcolor]")
{
    auto p4 = recognize_cograph(path(4));
    CHECK_FALSE(p4.cotree);
    REQUIRE(p4.p4);
    CHECK(induces_p4(path(4), *p4.p4));

    auto k3 = recognize_cograph(clique(3));
    REQUIRE(k3.cotree);
    const auto& t = *k3.cotree;
    CHECK(t.node(t.root()).type == CotreeNodeType::join);
    CHECK(t.node(t.root()).children.size() == 3);
    CHECK(t.depth() == 2);

    auto k22 = recognize_cograph(complete_bipartite(2, 2));
    REQUIRE(k22.cotree);
    const auto& b = *k22.cotree;
    CHECK(b.node(b.root()).type == CotreeNodeType::join);
    REQUIRE(b.node(b.root()).children.size() == 2);
    for (auto c : b.node(b.root()).children) CHECK(b.node(c).type == CotreeNodeType::disjoint_union);
    CHECK(b.depth() == 3);
    CHECK(cotree_graph(b, 4) == complete_bipartite(2, 2));

    CHECK(recognize_cograph(Graph()).cotree->empty());
}

TEST_CASE("cotree round trip and perfection on random cographs", "[subcolor][prop]")
{
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 80; ++iter) {
        const std::size_t n = 1 + rng() % 20;
        auto g = random_cograph(rng, n, 1 + rng() % 4);
        auto rec = recognize_cograph(g);
        REQUIRE(rec.cotree);
        REQUIRE(cotree_graph(*rec.cotree, n) == g);

        auto alpha = cograph_alpha(*rec.cotree);
        auto cover = cograph_clique_cover(*rec.cotree);
        REQUIRE(cover.size() == alpha);
        std::vector<int> seen(n, 0);
        for (const auto& part : cover) {
            REQUIRE(is_clique(g, part));
            for (auto v : part) ++seen[v];
        }
        for (auto x : seen) REQUIRE(x == 1);

        auto is = cograph_independent_set(*rec.cotree);
        REQUIRE(is.size() == alpha);
        for (auto u : is)
            for (auto v : is) REQUIRE_FALSE(g.adjacent(u, v));
    }
}

TEST_CASE("non-cographs yield an induced P4", "[subcolor][prop]")
{
    std::mt19937_64 rng(12);
    int found = 0;
    for (int iter = 0; iter < 100; ++iter) {
        auto g = generate(GraphKind::random_gnp, {2 + rng() % 12, 0, 0.4}, rng());
        auto rec = recognize_cograph(g);
        REQUIRE(rec.cotree.has_value() != rec.p4.has_value());
        if (rec.p4) {
            ++found;
            REQUIRE(induces_p4(g, *rec.p4));
        } else {
            REQUIRE(cotree_graph(*rec.cotree, g.size()) == g);
        }
    }
    CHECK(found > 0);
}

TEST_CASE("cograph_alpha and clique cover", "[subcolor]")
{
    auto alpha_of = [](const Graph& g) { return cograph_alpha(*recognize_cograph(g).cotree); };
    CHECK(alpha_of(clique(5)) == 1);
    CHECK(alpha_of(Graph(4)) == 4);
    CHECK(alpha_of(complete_bipartite(2, 2)) == 2);

    CHECK(cograph_clique_cover(*recognize_cograph(clique(5)).cotree).size() == 1);
    CHECK(cograph_clique_cover(*recognize_cograph(Graph(4)).cotree).size() == 4);
    auto k22 = complete_bipartite(2, 2);
    auto cover = cograph_clique_cover(*recognize_cograph(k22).cotree);
    REQUIRE(cover.size() == 2);
    for (const auto& part : cover) {
        CHECK(part.size() == 2);
        CHECK(is_clique(k22, part));
    }
}

TEST_CASE("cograph_subcoloring", "[subcolor]")
{
    auto single = recognize_cograph(Graph(1));
    CHECK(cograph_subcoloring(*single.cotree, 1).used_colors() == 1);

    auto star = generate(GraphKind::star, {5});
    auto st = *recognize_cograph(star).cotree;
    CHECK(st.depth() == 3);
    auto sc = cograph_subcoloring(st, 2);
    CHECK_FALSE(verify_subcoloring(star, sc));
    CHECK(sc.used_colors() <= cograph_palette_bound(3, 2));
    CHECK(exact_subchromatic(star).value == 2);

    auto two_k3 = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto tt = *recognize_cograph(two_k3).cotree;
    auto c = cograph_subcoloring(tt, 2);
    CHECK_FALSE(verify_subcoloring(two_k3, c));
    CHECK(c.used_colors() <= 3);
    std::vector<std::size_t> left{c[0], c[1], c[2]}, right{c[3], c[4], c[5]};
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    CHECK(left == right);

    auto k22 = *recognize_cograph(complete_bipartite(2, 2)).cotree;
    try {
        cograph_subcoloring(k22, 2);
        FAIL("expected BicliquePresent");
    } catch (const BicliquePresent& e) {
        CHECK(is_induced_biclique(complete_bipartite(2, 2), e.witness()));
    }
    CHECK(cograph_subcoloring(Cotree(), 1).used_colors() == 0);
}

TEST_CASE("extract_label_cotree", "[subcolor]")
{
    // every node relates label 0 to itself: label-0 leaves form a clique
    std::vector<ModelNode> nodes{leaf(0), leaf(1), leaf(2), {std::nullopt, {0, 1}, {{0, 0}}},
                                 {std::nullopt, {3, 2}, {{0, 0}}}};
    ConnectionModel clique_model(1, {0, 0, 0}, nodes, 4);
    CHECK(clique_model.graph() == clique(3));
    auto ct = extract_label_cotree(clique_model, 0);
    CHECK(cotree_graph(ct, 3) == clique(3));
    CHECK(ct.depth() <= clique_model.depth());

    auto m = k22_model();
    CHECK(m.graph() == complete_bipartite(2, 2));
    auto side = extract_label_cotree(m, 0);
    CHECK(side.vertices() == std::vector<Vertex>{0, 1});
    CHECK(cotree_graph(side, 4) == Graph(4));

    std::vector<ModelNode> mixed{leaf(0), leaf(1), {std::nullopt, {0, 1}, {}}};
    ConnectionModel lone(2, {0, 1}, mixed, 2);
    auto one = extract_label_cotree(lone, 1);
    CHECK(one.vertices() == std::vector<Vertex>{1});
    CHECK(one.depth() == 1);
    CHECK(extract_label_cotree(lone, 5).empty());
}

TEST_CASE("shrubdepth_subcoloring", "[subcolor]")
{
    std::vector<ModelNode> nodes{leaf(0), leaf(1), leaf(2), leaf(3), {std::nullopt, {0, 1, 2, 3}, {{0, 0}}}};
    ConnectionModel kn(1, {0, 0, 0, 0}, nodes, 4);
    CHECK_THROWS_AS(shrubdepth_subcoloring(kn, 1), BicliquePresent);  // every edge is an induced K_{1,1}
    auto c = shrubdepth_subcoloring(kn, 2);
    CHECK_FALSE(verify_subcoloring(kn.graph(), c));
    CHECK(c.used_colors() == 1);

    auto m = k22_model();
    auto k22 = shrubdepth_subcoloring(m, 2);
    CHECK_FALSE(verify_subcoloring(m.graph(), k22));
    CHECK(k22.used_colors() <= 2 * cograph_palette_bound(2, 2));
    CHECK(exact_subchromatic(m.graph()).value == 2);

    std::vector<ModelNode> flat{leaf(0), leaf(1), leaf(2), {std::nullopt, {0, 1, 2}, {}}};
    ConnectionModel three(3, {0, 1, 2}, flat, 3);
    CHECK(shrubdepth_subcoloring(three, 1).used_colors() == 3);
}

TEST_CASE("extracted cotrees match the model on random models", "[subcolor][prop]")
{
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 60; ++iter) {
        const std::size_t n = 2 + rng() % 14, labels = 1 + rng() % 3;
        std::vector<std::size_t> lambda(n);
        for (auto& l : lambda) l = rng() % labels;
        // random tree of depth <= 4: group leaves repeatedly
        std::vector<ModelNode> nodes;
        std::vector<std::size_t> layer;
        for (Vertex v = 0; v < n; ++v) {
            nodes.push_back(leaf(v));
            layer.push_back(v);
        }
        for (int level = 0; level < 3 && layer.size() > 1; ++level) {
            std::vector<std::size_t> next;
            for (std::size_t i = 0; i < layer.size();) {
                std::size_t take = std::min<std::size_t>(layer.size() - i, 1 + rng() % 3);
                ModelNode node{std::nullopt, {}, {}};
                for (std::size_t k = 0; k < take; ++k) node.children.push_back(layer[i + k]);
                for (std::size_t a = 0; a < labels; ++a)
                    for (std::size_t b = a; b < labels; ++b)
                        if (rng() % 2) node.relation.emplace_back(a, b);
                nodes.push_back(node);
                next.push_back(nodes.size() - 1);
                i += take;
            }
            layer = next;
        }
        if (layer.size() > 1) {
            nodes.push_back({std::nullopt, layer, {}});
            layer = {nodes.size() - 1};
        }
        ConnectionModel m(labels, lambda, nodes, layer[0]);
        auto g = m.graph();
        for (std::size_t i = 0; i < labels; ++i) {
            std::vector<Vertex> cls;
            for (Vertex v = 0; v < n; ++v)
                if (lambda[v] == i) cls.push_back(v);
            auto t = extract_label_cotree(m, i);
            REQUIRE(t.vertices() == cls);
            REQUIRE(t.depth() <= m.depth());
            auto from_tree = cotree_graph(t, n);
            for (auto u : cls)
                for (auto v : cls) REQUIRE(from_tree.adjacent(u, v) == g.adjacent(u, v));
        }
        // the K_{t,t}-free bound needs the smallest t with no induced biclique
        std::size_t t = 1;
        while (has_induced_biclique(g, t).witness) ++t;
        auto c = shrubdepth_subcoloring(m, t);
        REQUIRE_FALSE(verify_subcoloring(g, c));
        REQUIRE(c.used_colors() <= labels * cograph_palette_bound(m.depth(), t));
        REQUIRE(exact_subchromatic(g).value <= c.used_colors());
    }
}
