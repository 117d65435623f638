#include "oddcolor/engine.hpp"
#include "oddcolor/io.hpp"
#include "oddcolor/oracles.hpp"
#include "oddcolor/structure_params.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace oddcolor;

namespace {

// Report structures cross the boundary as plain dicts, via the JSON forms.
py::object to_py(const json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

ParityColoring make_coloring(const std::vector<std::size_t>& colors, std::size_t modulus)
{
    ParityColoring c;
    c.colors = colors;
    c.modulus = modulus;
    for (auto x : colors) c.palette_size = std::max(c.palette_size, x + 1);
    return c;
}

py::dict engine_result(const EngineResult& r)
{
    py::dict d;
    d["colors"] = r.coloring.colors;
    d["used_colors"] = r.coloring.used_colors();
    d["modulus"] = r.coloring.modulus;
    py::list levels;
    for (const auto& l : r.levels) levels.append(to_py(to_json(l)));
    d["levels"] = levels;
    d["proper_palette"] = r.proper_palette;
    return d;
}

py::dict oracle_result(const OracleResult& r)
{
    py::dict d;
    d["lower"] = r.lower;
    d["upper"] = r.upper;
    d["exact"] = r.exact();
    d["witness"] = r.witness.colors;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("n") = 0)
        .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"),
             py::arg("edges"))
        .def("__len__", &Graph::size)
        .def("add_edge", &Graph::add_edge)
        .def("adjacent", &Graph::adjacent)
        .def("edges", &Graph::edges)
        .def("edge_count", &Graph::edge_count)
        .def("to_json", [](const Graph& g) { return to_py(to_json(g)); })
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.size()) + ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<SetSystem>(m, "SetSystem")
        .def(py::init<std::size_t, const std::vector<std::vector<Element>>&>(), py::arg("universe"),
             py::arg("sets") = std::vector<std::vector<Element>>{})
        .def_property_readonly("universe_size", &SetSystem::universe_size)
        .def("__len__", &SetSystem::family_size)
        .def("sets", [](const SetSystem& s) {
            std::vector<std::vector<Element>> out;
            for (const auto& f : s.family()) out.push_back(members(f));
            return out;
        })
        .def("to_json", [](const SetSystem& s) { return to_py(to_json(s)); })
        .def(py::self == py::self)
        .def("__repr__", [](const SetSystem& s) {
            return "SetSystem(universe=" + std::to_string(s.universe_size()) + ", sets=" +
                   std::to_string(s.family_size()) + ")";
        });

    m.def("generate", [](const std::string& kind, std::size_t a, std::size_t b, double p, std::uint64_t seed) {
        return generate(parse_graph_kind(kind), {a, b, p}, seed);
    }, py::arg("kind"), py::arg("a"), py::arg("b") = 0, py::arg("p") = 0.5, py::arg("seed") = 0);
    m.def("power", &power, py::arg("g"), py::arg("r"));
    m.def("balls", &balls, py::arg("g"), py::arg("d"));
    m.def("gaifman", &gaifman, py::arg("s"));
    m.def("load", [](const std::string& path) -> py::object {
        auto inst = load_instance(path);
        if (auto* g = std::get_if<Graph>(&inst)) return py::cast(*g);
        return py::cast(std::get<SetSystem>(inst));
    }, py::arg("path"));

    m.def("structure_report", [](const SetSystem& s, std::size_t cap, std::uint64_t budget) {
        auto j = to_json(structure_report(s, cap, {budget}));
        return to_py(j);
    }, py::arg("s"), py::arg("cap") = kDefaultOrderCap, py::arg("budget") = SearchBudget{}.max_nodes);

    m.def("color_system", [](const SetSystem& s, std::size_t modulus) {
        return engine_result(strong_parity_color_system(s, modulus));
    }, py::arg("s"), py::arg("modulus") = 2);
    m.def("color_graph", [](const Graph& g, std::size_t d, std::size_t modulus) {
        return engine_result(strong_parity_color_graph(g, d, modulus));
    }, py::arg("g"), py::arg("d") = 1, py::arg("modulus") = 2);

    m.def("verify_system", [](const SetSystem& s, const std::vector<std::size_t>& colors, std::size_t modulus) {
        if (colors.size() != s.universe_size()) throw std::invalid_argument("coloring length differs from universe size");
        return !verify_totally_strong_parity(s, make_coloring(colors, modulus)).has_value();
    }, py::arg("s"), py::arg("colors"), py::arg("modulus") = 2);
    m.def("verify_graph", [](const Graph& g, const std::vector<std::size_t>& colors, std::size_t d, std::size_t modulus) {
        if (colors.size() != g.size()) throw std::invalid_argument("coloring length differs from vertex count");
        return !verify_graph_ball_coloring(g, d, make_coloring(colors, modulus)).has_value();
    }, py::arg("g"), py::arg("colors"), py::arg("d") = 1, py::arg("modulus") = 2);
    m.def("verify_strong_odd", [](const Graph& g, const std::vector<std::size_t>& colors) {
        if (colors.size() != g.size()) throw std::invalid_argument("coloring length differs from vertex count");
        return !verify_strong_odd_graph(g, make_coloring(colors, 2)).has_value();
    }, py::arg("g"), py::arg("colors"));

    m.def("strong_odd_chromatic", [](const Graph& g, std::uint64_t budget) {
        return oracle_result(exact_strong_odd_graph(g, {budget}));
    }, py::arg("g"), py::arg("budget") = SearchBudget{}.max_nodes);
    m.def("ball_parity_chromatic", [](const Graph& g, std::size_t d, std::size_t modulus, std::uint64_t budget) {
        return oracle_result(exact_parity_graph(g, GraphNotion::ball, d, modulus, {budget}));
    }, py::arg("g"), py::arg("d") = 1, py::arg("modulus") = 2, py::arg("budget") = SearchBudget{}.max_nodes);
    m.def("system_parity_chromatic", [](const SetSystem& s, std::size_t modulus, std::uint64_t budget) {
        return oracle_result(exact_strong_parity_system(s, modulus, {budget}));
    }, py::arg("s"), py::arg("modulus") = 2, py::arg("budget") = SearchBudget{}.max_nodes);
}
