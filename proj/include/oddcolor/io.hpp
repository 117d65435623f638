#pragma once

#include "oddcolor/engine.hpp"
#include "oddcolor/graph.hpp"
#include "oddcolor/set_system.hpp"
#include "oddcolor/structure_params.hpp"
#include "oddcolor/subcolor.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>

namespace oddcolor {

using json = nlohmann::json;

// Graphs: {"n": int, "edges": [[u, v], ...]}, 0-indexed.
Graph graph_from_json(const json& j);
json to_json(const Graph& g);

// DIMACS: "p edge n m" header and "e u v" lines, 1-indexed; "c" lines are comments.
Graph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

// Set systems: {"universe": int, "sets": [[elem, ...], ...], "labels": [...]?}.
SetSystem set_system_from_json(const json& j);
json to_json(const SetSystem& s);

// {"modulus": m, "palette": p, "colors": [c_0, ...]}
ParityColoring parity_coloring_from_json(const json& j);
json to_json(const ParityColoring& c);

// {"palette": p, "colors": [...]}
json to_json(const Coloring& c);

json to_json(const WitnessSequence& w);
json to_json(const ShatterWitness& w);
WitnessSequence witness_sequence_from_json(const json& j);

// Cotrees: {"tree": node}, node = {"type": "join"|"union", "children": [...]} or {"vertex": v}.
Cotree cotree_from_json(const json& j);
json to_json(const Cotree& t);

// Connection models: {"labels": L, "lambda": [...], "tree": node,
// "relations": {"<node id>": [[a, b], ...]}}, internal node = {"id": k, "children": [...]},
// leaf = {"vertex": v}.
ConnectionModel connection_model_from_json(const json& j);
json to_json(const ConnectionModel& m);

json to_json(const LevelStats& s);
json to_json(const StructureReport& r);

/// Reads a graph (JSON or DIMACS) or a set system (JSON), deciding by content.
using Instance = std::variant<Graph, SetSystem>;
Instance load_instance(const std::filesystem::path& path);

json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace oddcolor
