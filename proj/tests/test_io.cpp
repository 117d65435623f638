#include "oddcolor/io.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace oddcolor;
using namespace oddcolor::testing;

TEST_CASE("graph JSON round trip", "[io]")
{
    auto g = grid(3, 3);
    auto j = to_json(g);
    CHECK(j["n"] == 9);
    CHECK(graph_from_json(j) == g);
    CHECK(graph_from_json(json::parse(j.dump())) == g);
}

TEST_CASE("graph JSON rejects malformed input", "[io]")
{
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 3, "edges": [[0, 1], [1, 0]]})")), FormatError);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 3, "edges": [[1, 1]]})")), FormatError);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 3, "edges": [[0, 3]]})")), FormatError);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": -1, "edges": []})")), FormatError);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"edges": []})")), FormatError);
}

TEST_CASE("DIMACS round trip", "[io]")
{
    auto g = cycle(5);
    std::stringstream out;
    write_dimacs(out, g);
    CHECK(out.str().rfind("p edge 5 5\n", 0) == 0);
    CHECK(read_dimacs(out) == g);

    std::istringstream with_comments("c hello\np edge 3 1\n\ne 1 3\n");
    CHECK(read_dimacs(with_comments) == make_graph(3, {{0, 2}}));

    std::istringstream dup("p edge 3 2\ne 1 2\ne 2 1\n");
    CHECK_THROWS_AS(read_dimacs(dup), FormatError);
    std::istringstream loop("p edge 3 1\ne 2 2\n");
    CHECK_THROWS_AS(read_dimacs(loop), FormatError);
    std::istringstream count("p edge 3 2\ne 1 2\n");
    CHECK_THROWS_AS(read_dimacs(count), FormatError);
    std::istringstream range("p edge 3 1\ne 0 2\n");
    CHECK_THROWS_AS(read_dimacs(range), FormatError);
}

TEST_CASE("set system JSON round trip", "[io]")
{
    auto s = balls(path(4), 1);
    s.add_set(s.set(1), "dup");
    auto back = set_system_from_json(json::parse(to_json(s).dump()));
    CHECK(back == s);

    SetSystem plain(3, {{0, 2}, {}});
    CHECK_FALSE(to_json(plain).contains("labels"));
    CHECK(set_system_from_json(to_json(plain)) == plain);

    CHECK_THROWS_AS(set_system_from_json(json::parse(R"({"universe": 2, "sets": [[0, 2]]})")), FormatError);
    CHECK_THROWS_AS(set_system_from_json(json::parse(R"({"universe": 2, "sets": [[0, 0]]})")), FormatError);
    CHECK_THROWS_AS(set_system_from_json(json::parse(R"({"universe": 2, "sets": [[0]], "labels": []})")), FormatError);
}

TEST_CASE("parity coloring JSON", "[io]")
{
    ParityColoring c{{0, 2, 1}, 3, 3};
    auto j = to_json(c);
    CHECK(j.dump() == R"({"colors":[0,2,1],"modulus":3,"palette":3})");
    auto back = parity_coloring_from_json(j);
    CHECK(back.colors == c.colors);
    CHECK(back.modulus == 3);
    CHECK_THROWS_AS(parity_coloring_from_json(json::parse(R"({"modulus": 2, "palette": 1, "colors": [1]})")),
                    FormatError);
    CHECK_THROWS_AS(parity_coloring_from_json(json::parse(R"({"modulus": 1, "palette": 1, "colors": [0]})")),
                    FormatError);
}

TEST_CASE("witness JSON round trip", "[io]")
{
    WitnessSequence w{WitnessKind::ladder, {0, 1}, {0, 1}};
    auto back = witness_sequence_from_json(to_json(w));
    CHECK(back.kind == WitnessKind::ladder);
    CHECK(back.elements == w.elements);
    CHECK(back.sets == w.sets);

    ShatterWitness sw{{0, 2}, {{0, 2, 1}}};
    CHECK(to_json(sw).dump() == R"({"elements":[0,2],"pairs":[{"pair":[0,2],"set":1}]})");
}

TEST_CASE("cotree JSON round trip", "[io]")
{
    auto t = *recognize_cograph(complete_bipartite(2, 3)).cotree;
    auto back = cotree_from_json(json::parse(to_json(t).dump()));
    CHECK(back.to_graph().graph == t.to_graph().graph);
    CHECK(back.depth() == t.depth());

    auto parsed = cotree_from_json(json::parse(R"({"tree": {"type": "join", "children": [{"vertex": 0}, {"vertex": 1}]}})"));
    CHECK(parsed.to_graph().graph == clique(2));
    CHECK_THROWS_AS(cotree_from_json(json::parse(R"({"tree": {"type": "meet", "children": [{"vertex": 0}]}})")),
                    FormatError);
    CHECK(cotree_from_json(json::parse(R"({"tree": null})")).empty());
}

TEST_CASE("connection model JSON round trip", "[io]")
{
    auto j = json::parse(R"({"labels": 2, "lambda": [0, 0, 1, 1],
        "tree": {"id": 7, "children": [{"vertex": 0}, {"vertex": 1}, {"vertex": 2}, {"vertex": 3}]},
        "relations": {"7": [[0, 1]]}})");
    auto m = connection_model_from_json(j);
    CHECK(m.graph() == complete_bipartite(2, 2));
    auto again = connection_model_from_json(json::parse(to_json(m).dump()));
    CHECK(again.graph() == m.graph());
    CHECK(again.depth() == m.depth());

    j["relations"] = json::parse(R"({"8": [[0, 1]]})");
    CHECK_THROWS_AS(connection_model_from_json(j), FormatError);
}

TEST_CASE("load_instance sniffs the format", "[io]")
{
    auto dir = std::filesystem::temp_directory_path() / "oddcolor_io_test";
    std::filesystem::create_directories(dir);
    write_text_file(dir / "g.json", to_json(path(3)).dump());
    write_text_file(dir / "s.json", to_json(balls(path(3), 1)).dump());
    std::ostringstream dimacs;
    write_dimacs(dimacs, cycle(4));
    write_text_file(dir / "c.dimacs", dimacs.str());
    write_text_file(dir / "bad.json", "{\"n\": 2, ");

    CHECK(std::get<Graph>(load_instance(dir / "g.json")) == path(3));
    CHECK(std::get<SetSystem>(load_instance(dir / "s.json")) == balls(path(3), 1));
    CHECK(std::get<Graph>(load_instance(dir / "c.dimacs")) == cycle(4));
    CHECK_THROWS_AS(load_instance(dir / "bad.json"), FormatError);
    CHECK_THROWS_AS(load_instance(dir / "missing.json"), FormatError);
    std::filesystem::remove_all(dir);
}
