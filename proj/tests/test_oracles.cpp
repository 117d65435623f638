#include "oddcolor/oracles.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace oddcolor;
using namespace oddcolor::testing;

namespace {

// Every k-coloring of n elements, no pruning at all.
template <class Accept>
bool any_coloring(std::size_t n, std::size_t k, Accept accept)
{
    if (k == 0) return n == 0 && accept(std::vector<std::size_t>{});
    std::vector<std::size_t> c(n, 0);
    while (true) {
        if (accept(c)) return true;
        std::size_t i = 0;
        while (i < n && ++c[i] == k) c[i++] = 0;
        if (i == n) return false;
    }
}

}  // namespace

TEST_CASE("strong odd chromatic anchors", "[oracles]")
{
    for (std::size_t n = 1; n <= 6; ++n) CHECK(exact_strong_odd_graph(clique(n)).value() == n);
    auto p3 = exact_strong_odd_graph(path(3));
    CHECK(p3.value() == 3);
    CHECK(p3.exact());
    CHECK(exact_strong_odd_graph(cycle(4)).value() == 4);
    CHECK(exact_strong_odd_graph(Graph()).value() == 0);
}

TEST_CASE("strong parity system anchors", "[oracles]")
{
    CHECK(exact_strong_parity_system(SetSystem(3)).value() == 1);
    CHECK(exact_strong_parity_system(SetSystem(2, {{0, 1}})).value() == 2);
    auto b = exact_strong_parity_system(balls(path(3), 1));
    CHECK(b.exact());
    CHECK_FALSE(verify_strong_parity(balls(path(3), 1), b.witness));
}

TEST_CASE("chromatic anchors", "[oracles]")
{
    CHECK(exact_chromatic(clique(4)).value() == 4);
    CHECK(exact_chromatic(cycle(5)).value() == 3);
    CHECK(exact_chromatic(grid(3, 4)).value() == 2);
    CHECK(exact_chromatic(path(2)).value() == 2);
}

TEST_CASE("oracle minimality is certified by exhaustive enumeration", "[oracles][prop]")
{
    std::mt19937_64 rng(44);
    for (int iter = 0; iter < 40; ++iter) {
        auto g = random_sparse_graph(rng, 7);
        auto o = exact_strong_odd_graph(g);
        REQUIRE(o.exact());
        REQUIRE_FALSE(verify_strong_odd_graph(g, o.witness));
        REQUIRE(o.value() >= exact_chromatic(g).value());
        const bool smaller = any_coloring(g.size(), o.value() - 1, [&](const std::vector<std::size_t>& c) {
            return !verify_strong_odd_graph(g, {c, o.value() - 1, 2});
        });
        REQUIRE_FALSE(smaller);
    }
    for (int iter = 0; iter < 40; ++iter) {
        auto s = random_system(rng, 1 + rng() % 7, rng() % 6, 0.5);
        const std::size_t m = 2 + iter % 2;
        auto o = exact_strong_parity_system(s, m);
        REQUIRE(o.exact());
        REQUIRE_FALSE(verify_strong_parity(s, o.witness));
        const bool smaller = any_coloring(s.universe_size(), o.value() - 1, [&](const std::vector<std::size_t>& c) {
            return !verify_strong_parity(s, {c, o.value() - 1, m});
        });
        REQUIRE_FALSE(smaller);
    }
}

TEST_CASE("oracle never exceeds the engine", "[oracles][prop]")
{
    std::mt19937_64 rng(45);
    for (int iter = 0; iter < 40; ++iter) {
        auto g = random_sparse_graph(rng, 9);
        for (std::size_t m : {2, 3}) {
            auto o = exact_parity_graph(g, GraphNotion::ball, 1, m);
            auto e = strong_parity_color_graph(g, 1, m);
            REQUIRE(o.exact());
            REQUIRE(o.value() <= e.coloring.used_colors());
        }
    }
}

TEST_CASE("exhausted budget reports an interval", "[oracles]")
{
    auto o = exact_strong_odd_graph(grid(4, 4), SearchBudget{50});
    CHECK_FALSE(o.exact());
    CHECK(o.lower < o.upper);
    CHECK_FALSE(verify_strong_odd_graph(grid(4, 4), o.witness));

    auto c = exact_chromatic(clique(30), SearchBudget{10});
    CHECK(c.upper == 30);
}
