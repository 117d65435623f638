#include "oddcolor/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace oddcolor {

namespace {

[[noreturn]] void fail(const std::string& msg)
{
    throw FormatError(msg);
}

std::size_t as_index(const json& j, const char* what)
{
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

}  // namespace

// --- graphs ------------------------------------------------------------------------

Graph graph_from_json(const json& j)
{
    const auto n = as_index(field(j, "n"), "n");
    if (n > kMaxSize) fail("graph exceeds vertex cap");
    const auto& edges = field(j, "edges");
    if (!edges.is_array()) fail("\"edges\" must be an array");
    Graph g(n);
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2) fail("each edge must be a pair [u, v]");
        auto u = as_index(e[0], "edge endpoint");
        auto v = as_index(e[1], "edge endpoint");
        if (u >= n || v >= n) fail("edge endpoint out of range");
        if (u == v) fail("self-loop at vertex " + std::to_string(u));
        if (g.adjacent(u, v)) fail("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        g.add_edge(u, v);
    }
    return g;
}

json to_json(const Graph& g)
{
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.size()}, {"edges", std::move(edges)}};
}

Graph read_dimacs(std::istream& in)
{
    std::string line;
    std::optional<Graph> g;
    std::size_t declared = 0;
    std::size_t seen = 0;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        auto where = " (line " + std::to_string(line_no) + ")";
        if (tag == "p") {
            std::string kind;
            long long n = -1, m = -1;
            if (g || !(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0) fail("bad problem line" + where);
            if (static_cast<std::size_t>(n) > kMaxSize) fail("graph exceeds vertex cap" + where);
            g.emplace(static_cast<std::size_t>(n));
            declared = static_cast<std::size_t>(m);
        } else if (tag == "e") {
            long long u = 0, v = 0;
            if (!g || !(ls >> u >> v)) fail("bad edge line" + where);
            if (u < 1 || v < 1 || static_cast<std::size_t>(u) > g->size() || static_cast<std::size_t>(v) > g->size())
                fail("edge endpoint out of range" + where);
            if (u == v) fail("self-loop" + where);
            if (g->adjacent(u - 1, v - 1)) fail("duplicate edge" + where);
            g->add_edge(u - 1, v - 1);
            ++seen;
        } else {
            fail("unknown line tag '" + tag + "'" + where);
        }
    }
    if (!g) fail("missing \"p edge n m\" header");
    if (seen != declared) fail("header declares " + std::to_string(declared) + " edges, found " + std::to_string(seen));
    return std::move(*g);
}

void write_dimacs(std::ostream& out, const Graph& g)
{
    out << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

// --- set systems ---------------------------------------------------------------------

SetSystem set_system_from_json(const json& j)
{
    const auto n = as_index(field(j, "universe"), "universe");
    if (n > kMaxSize) fail("universe exceeds cap");
    const auto& sets = field(j, "sets");
    if (!sets.is_array()) fail("\"sets\" must be an array");
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        const auto& l = j.at("labels");
        if (!l.is_array() || l.size() != sets.size()) fail("\"labels\" must list one string per set");
        for (const auto& x : l) {
            if (!x.is_string()) fail("labels must be strings");
            labels.push_back(x.get<std::string>());
        }
    }
    if (sets.size() > kMaxSize) fail("family exceeds cap");
    SetSystem s(n);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (!sets[i].is_array()) fail("each set must be an array of elements");
        Bitset bits(n);
        for (const auto& e : sets[i]) {
            auto x = as_index(e, "element");
            if (x >= n) fail("element " + std::to_string(x) + " out of range in set " + std::to_string(i));
            if (bits.test(x)) fail("element " + std::to_string(x) + " repeated in set " + std::to_string(i));
            bits.set(x);
        }
        s.add_set(std::move(bits), labels.empty() ? std::string{} : labels[i]);
    }
    return s;
}

json to_json(const SetSystem& s)
{
    json sets = json::array();
    for (const auto& f : s.family()) sets.push_back(members(f));
    json out = {{"universe", s.universe_size()}, {"sets", std::move(sets)}};
    if (s.has_labels()) out["labels"] = s.labels();
    return out;
}

// --- colorings -----------------------------------------------------------------------

ParityColoring parity_coloring_from_json(const json& j)
{
    ParityColoring c;
    c.modulus = as_index(field(j, "modulus"), "modulus");
    if (c.modulus < 2) fail("modulus must be >= 2");
    c.palette_size = as_index(field(j, "palette"), "palette");
    const auto& colors = field(j, "colors");
    if (!colors.is_array()) fail("\"colors\" must be an array");
    for (const auto& x : colors) {
        auto color = as_index(x, "color");
        if (color >= c.palette_size) fail("color " + std::to_string(color) + " outside palette");
        c.colors.push_back(color);
    }
    return c;
}

json to_json(const ParityColoring& c)
{
    return {{"modulus", c.modulus}, {"palette", c.palette_size}, {"colors", c.colors}};
}

json to_json(const Coloring& c)
{
    return {{"palette", c.palette_size}, {"colors", c.colors}};
}

// --- witnesses ------------------------------------------------------------------------

json to_json(const WitnessSequence& w)
{
    return {{"kind", to_string(w.kind)}, {"elements", w.elements}, {"sets", w.sets}};
}

json to_json(const ShatterWitness& w)
{
    json pairs = json::array();
    for (const auto& p : w.pair_witnesses) pairs.push_back({{"pair", {p.x, p.y}}, {"set", p.set}});
    return {{"elements", w.elements}, {"pairs", std::move(pairs)}};
}

WitnessSequence witness_sequence_from_json(const json& j)
{
    WitnessSequence w;
    const auto& kind = field(j, "kind");
    if (!kind.is_string()) fail("witness kind must be a string");
    auto k = kind.get<std::string>();
    if (k == "semi_ladder") w.kind = WitnessKind::semi_ladder;
    else if (k == "ladder") w.kind = WitnessKind::ladder;
    else if (k == "comatching") w.kind = WitnessKind::comatching;
    else fail("unknown witness kind '" + k + "'");
    for (const auto& x : field(j, "elements")) w.elements.push_back(as_index(x, "element"));
    for (const auto& x : field(j, "sets")) w.sets.push_back(as_index(x, "set index"));
    return w;
}

// --- cotrees and connection models ------------------------------------------------------

namespace {

std::size_t read_cotree_node(const json& j, std::vector<CotreeNode>& nodes)
{
    if (!j.is_object()) fail("cotree node must be an object");
    if (j.contains("vertex")) {
        nodes.push_back({CotreeNodeType::leaf, as_index(j.at("vertex"), "vertex"), {}});
        return nodes.size() - 1;
    }
    const auto& type = field(j, "type");
    CotreeNodeType t;
    if (type == "join") t = CotreeNodeType::join;
    else if (type == "union") t = CotreeNodeType::disjoint_union;
    else fail("cotree node type must be \"join\" or \"union\"");
    const auto& children = field(j, "children");
    if (!children.is_array() || children.empty()) fail("internal cotree node needs children");
    std::vector<std::size_t> kids;
    for (const auto& c : children) kids.push_back(read_cotree_node(c, nodes));
    nodes.push_back({t, 0, std::move(kids)});
    return nodes.size() - 1;
}

json write_cotree_node(const Cotree& t, std::size_t id)
{
    const auto& n = t.node(id);
    if (n.type == CotreeNodeType::leaf) return {{"vertex", n.vertex}};
    json children = json::array();
    for (auto c : n.children) children.push_back(write_cotree_node(t, c));
    return {{"type", n.type == CotreeNodeType::join ? "join" : "union"}, {"children", std::move(children)}};
}

std::size_t read_model_node(const json& j, std::vector<ModelNode>& nodes, std::map<std::size_t, std::size_t>& ids)
{
    if (!j.is_object()) fail("model node must be an object");
    if (j.contains("vertex")) {
        nodes.push_back({as_index(j.at("vertex"), "vertex"), {}, {}});
        return nodes.size() - 1;
    }
    const auto external = as_index(field(j, "id"), "node id");
    const auto& children = field(j, "children");
    if (!children.is_array() || children.empty()) fail("internal model node needs children");
    std::vector<std::size_t> kids;
    for (const auto& c : children) kids.push_back(read_model_node(c, nodes, ids));
    nodes.push_back({std::nullopt, std::move(kids), {}});
    if (!ids.emplace(external, nodes.size() - 1).second) fail("duplicate model node id " + std::to_string(external));
    return nodes.size() - 1;
}

json write_model_node(const ConnectionModel& m, std::size_t id)
{
    const auto& n = m.nodes()[id];
    if (n.vertex) return {{"vertex", *n.vertex}};
    json children = json::array();
    for (auto c : n.children) children.push_back(write_model_node(m, c));
    return {{"id", id}, {"children", std::move(children)}};
}

}  // namespace

Cotree cotree_from_json(const json& j)
{
    const auto& tree = field(j, "tree");
    if (tree.is_null()) return {};
    std::vector<CotreeNode> nodes;
    auto root = read_cotree_node(tree, nodes);
    try {
        return Cotree(std::move(nodes), root);
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
}

json to_json(const Cotree& t)
{
    return {{"tree", t.empty() ? json(nullptr) : write_cotree_node(t, t.root())}};
}

ConnectionModel connection_model_from_json(const json& j)
{
    const auto labels = as_index(field(j, "labels"), "labels");
    std::vector<std::size_t> lambda;
    for (const auto& x : field(j, "lambda")) lambda.push_back(as_index(x, "label"));
    std::vector<ModelNode> nodes;
    std::map<std::size_t, std::size_t> ids;
    const auto& tree = field(j, "tree");
    std::size_t root = 0;
    if (!tree.is_null()) root = read_model_node(tree, nodes, ids);
    if (j.contains("relations")) {
        const auto& rel = j.at("relations");
        if (!rel.is_object()) fail("\"relations\" must be an object keyed by node id");
        for (const auto& [key, pairs] : rel.items()) {
            std::size_t external = 0;
            try {
                external = std::stoul(key);
            } catch (const std::exception&) {
                fail("relation key '" + key + "' is not a node id");
            }
            auto it = ids.find(external);
            if (it == ids.end()) fail("relation for unknown node id " + key);
            for (const auto& p : pairs) {
                if (!p.is_array() || p.size() != 2) fail("relation entries must be label pairs");
                nodes[it->second].relation.emplace_back(as_index(p[0], "label"), as_index(p[1], "label"));
            }
        }
    }
    try {
        return ConnectionModel(labels, std::move(lambda), std::move(nodes), root);
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
}

json to_json(const ConnectionModel& m)
{
    json relations = json::object();
    for (std::size_t id = 0; id < m.nodes().size(); ++id) {
        const auto& n = m.nodes()[id];
        if (n.vertex) continue;
        json pairs = json::array();
        for (auto [a, b] : n.relation) pairs.push_back({a, b});
        relations[std::to_string(id)] = std::move(pairs);
    }
    return {{"labels", m.label_count()},
            {"lambda", m.labels()},
            {"tree", m.nodes().empty() ? json(nullptr) : write_model_node(m, m.root())},
            {"relations", std::move(relations)}};
}

// --- reports -----------------------------------------------------------------------------

json to_json(const LevelStats& s)
{
    return {{"level", s.level},
            {"calls", s.calls},
            {"base_cases", s.base_cases},
            {"max_universe", s.max_universe},
            {"max_k", s.max_k},
            {"max_p", s.max_p},
            {"max_used", s.max_used},
            {"max_reserved", s.max_reserved},
            {"max_subcoloring", s.max_subcoloring},
            {"bound_holds", s.bound_holds}};
}

json to_json(const StructureReport& r)
{
    return {{"semi_ladder", r.semi_ladder.value},
            {"ladder", r.ladder.value},
            {"comatching", r.comatching.value},
            {"two_vc", r.two_vc.value},
            {"exact",
             {{"semi_ladder", r.semi_ladder.exact},
              {"ladder", r.ladder.exact},
              {"comatching", r.comatching.exact},
              {"two_vc", r.two_vc.exact}}},
            {"witnesses",
             {{"semi_ladder", to_json(r.semi_ladder.witness)},
              {"ladder", to_json(r.ladder.witness)},
              {"comatching", to_json(r.comatching.witness)},
              {"two_vc", to_json(r.two_vc.witness)}}}};
}

// --- files -------------------------------------------------------------------------------

json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) fail("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

Instance load_instance(const std::filesystem::path& path)
{
    // read once so pipes and stdin work
    std::ifstream file(path, std::ios::binary);
    if (!file) fail("cannot open " + path.string());
    std::ostringstream buf;
    buf << file.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{') {
        std::istringstream in(text);
        return read_dimacs(in);
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(path.string() + ": " + e.what());
    }
    if (j.contains("universe")) return set_system_from_json(j);
    if (j.contains("n")) return graph_from_json(j);
    fail(path.string() + ": neither a graph nor a set system");
}

}  // namespace oddcolor
