#include "oddcolor/set_system.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace oddcolor;
using namespace oddcolor::testing;

namespace {

std::vector<std::vector<Element>> as_lists(const SetSystem& s)
{
    std::vector<std::vector<Element>> out;
    for (const auto& f : s.family()) out.push_back(members(f));
    return out;
}

}  // namespace

TEST_CASE("induced_subsystem", "[set_system]")
{
    SetSystem s(3, {{0, 1}, {1, 2}});
    std::vector<std::size_t> q{0, 1};
    auto sub = induced_subsystem(s, make_bitset(3, std::vector<std::size_t>{1, 2}), q);
    CHECK(sub.system.universe_size() == 2);
    CHECK(as_lists(sub.system) == std::vector<std::vector<Element>>{{0}, {0, 1}});
    CHECK(sub.element_map == std::vector<Element>{1, 2});
    CHECK(sub.set_map == std::vector<std::size_t>{0, 1});

    CHECK(induced_subsystem(s, s.full()).system == s);

    auto none = induced_subsystem(s, Bitset(3));
    CHECK(none.system.universe_size() == 0);
    CHECK(none.system.family_size() == 2);
    for (const auto& f : none.system.family()) CHECK(f.none());
}

TEST_CASE("induced_subsystem composes", "[set_system][prop]")
{
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 100; ++iter) {
        auto s = random_system(rng, 1 + rng() % 12, rng() % 8, 0.4);
        auto w1 = random_subset(rng, s.universe_size(), 0.7);
        std::vector<std::size_t> q1;
        for (std::size_t i = 0; i < s.family_size(); ++i)
            if (rng() % 3) q1.push_back(i);
        auto first = induced_subsystem(s, w1, q1);

        auto w2 = random_subset(rng, first.system.universe_size(), 0.7);
        std::vector<std::size_t> q2;
        for (std::size_t i = 0; i < first.system.family_size(); ++i)
            if (rng() % 3) q2.push_back(i);
        auto second = induced_subsystem(first.system, w2, q2);

        // compose the maps and apply once
        Bitset w(s.universe_size());
        for (auto x = w2.find_first(); x != Bitset::npos; x = w2.find_next(x)) w.set(first.element_map[x]);
        std::vector<std::size_t> q;
        for (auto i : q2) q.push_back(first.set_map[i]);
        auto direct = induced_subsystem(s, w, q);

        REQUIRE(direct.system == second.system);
        for (std::size_t x = 0; x < second.element_map.size(); ++x)
            REQUIRE(direct.element_map[x] == first.element_map[second.element_map[x]]);
    }
}

TEST_CASE("gaifman", "[set_system]")
{
    CHECK(gaifman(SetSystem(3, {{0, 1, 2}})) == clique(3));
    CHECK(gaifman(SetSystem(3)) == Graph(3));
    CHECK(gaifman(balls(path(3), 1)) == clique(3));
}

TEST_CASE("balls", "[set_system]")
{
    auto b = balls(path(3), 1);
    CHECK(as_lists(b) == std::vector<std::vector<Element>>{{0, 1}, {0, 1, 2}, {1, 2}});
    REQUIRE(b.has_labels());
    CHECK(b.labels()[2] == "Ball_1(2)");

    auto zero = balls(grid(2, 2), 0);
    for (std::size_t v = 0; v < 4; ++v) CHECK(members(zero.set(v)) == std::vector<Element>{v});

    auto c4 = balls(cycle(4), 2);
    CHECK(c4.family_size() == 4);
    for (const auto& f : c4.family()) CHECK(f.all());
}

TEST_CASE("Gaifman graph of balls is the 2d-th power", "[set_system][prop]")
{
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 60; ++iter) {
        auto g = random_sparse_graph(rng, 30);
        for (std::size_t d : {1, 2, 3}) REQUIRE(gaifman(balls(g, d)) == power(g, 2 * d));
    }
}

TEST_CASE("set system validation", "[set_system]")
{
    SetSystem s(2);
    CHECK_THROWS(s.add_set(std::vector<Element>{2}));
    CHECK_THROWS(s.add_set(Bitset(3)));
    s.add_set(std::vector<Element>{0, 1});
    CHECK(s.covered().all());
}
