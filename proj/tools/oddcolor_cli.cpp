// oddcolor: generate, analyze, color, verify and brute-force instances.
//
// Exit codes: 0 ok / valid, 1 invalid coloring, 2 usage or input error,
// 3 search budget or order cap reached (result is a bound), 4 internal error.

#include "oddcolor/engine.hpp"
#include "oddcolor/io.hpp"
#include "oddcolor/oracles.hpp"
#include "oddcolor/structure_params.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace oddcolor;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kUsage = 2, kBudget = 3, kInternal = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr const char* kCsvColumns =
    "instance,n,edges,radius,modulus,semi_ladder,ladder,comatching,two_vc,params_exact,engine_palette,"
    "oracle_lower,oracle_upper,oracle_exact,wall_ms";

void emit(const json& j, const std::string& out)
{
    const auto text = j.dump() + "\n";
    if (out.empty() || out == "-") std::cout << text;
    else write_text_file(out, text);
}

SetSystem system_of(const Instance& inst, std::size_t radius)
{
    if (auto* g = std::get_if<Graph>(&inst)) return balls(*g, radius);
    return std::get<SetSystem>(inst);
}

// A coloring file is either a bare ParityColoring or the output of `color`.
ParityColoring load_coloring(const std::string& path)
{
    auto j = read_json_file(path);
    if (j.is_object() && j.contains("coloring")) return parity_coloring_from_json(j.at("coloring"));
    return parity_coloring_from_json(j);
}

json violation_json(const ParityViolation& v)
{
    return {{"set", v.set ? json(*v.set) : json("universe")}, {"color", v.color}, {"count", v.count}};
}

json violation_json(const GraphViolation& v)
{
    if (v.kind == GraphViolation::Kind::improper_edge)
        return {{"kind", "improper_edge"}, {"u", v.u}, {"v", v.v}};
    return {{"kind", "bad_count"}, {"vertex", v.u}, {"color", v.color}, {"count", v.count}};
}

json levels_json(const std::vector<LevelStats>& levels)
{
    json out = json::array();
    for (const auto& l : levels) out.push_back(to_json(l));
    return out;
}

json oracle_json(const OracleResult& r)
{
    return {{"value", r.value()}, {"lower", r.lower}, {"upper", r.upper}, {"exact", r.exact()}, {"witness", to_json(r.witness)}};
}

// --- gen ------------------------------------------------------------------------------

struct GenOptions {
    std::string kind;
    std::vector<std::size_t> sizes;
    double p = -1;
    std::optional<std::uint64_t> seed;
    std::string format = "json";
    std::string out;
};

int run_gen(const GenOptions& o)
{
    const auto kind = parse_graph_kind(o.kind);
    GeneratorParams params;
    if (o.sizes.empty()) throw UsageError("gen needs a size");
    params.n = o.sizes[0];
    if (kind == GraphKind::grid) {
        if (o.sizes.size() != 2) throw UsageError("grid needs ROWS COLS");
        params.cols = o.sizes[1];
    } else if (o.sizes.size() != 1) {
        throw UsageError(o.kind + " takes a single size");
    }
    if (is_random_kind(kind)) {
        if (!o.seed) throw UsageError(o.kind + " is random and needs --seed");
        if (o.p >= 0) params.p = o.p;
    }
    const auto g = generate(kind, params, o.seed.value_or(0));
    if (o.format == "dimacs") {
        std::ostringstream text;
        write_dimacs(text, g);
        if (o.out.empty() || o.out == "-") std::cout << text.str();
        else write_text_file(o.out, text.str());
    } else {
        emit(to_json(g), o.out);
    }
    return kOk;
}

// --- params ------------------------------------------------------------------------------

struct ParamsOptions {
    std::string file;
    std::size_t radius = 1;
    std::size_t cap = kDefaultOrderCap;
    std::uint64_t budget = SearchBudget{}.max_nodes;
    std::string out;
};

int run_params(const ParamsOptions& o)
{
    const auto inst = load_instance(o.file);
    const auto s = system_of(inst, o.radius);
    const auto report = structure_report(s, o.cap, {o.budget});
    auto j = to_json(report);
    j["universe"] = s.universe_size();
    j["family"] = s.family_size();
    j["cap"] = o.cap;
    if (std::holds_alternative<Graph>(inst)) j["radius"] = o.radius;
    emit(j, o.out);
    return report.exact() ? kOk : kBudget;
}

// --- color -------------------------------------------------------------------------------

struct ColorOptions {
    std::string file;
    std::size_t radius = 1;
    std::size_t modulus = 2;
    std::string out;
};

int run_color(const ColorOptions& o)
{
    const auto inst = load_instance(o.file);
    EngineResult r;
    json j;
    if (auto* g = std::get_if<Graph>(&inst)) {
        r = strong_parity_color_graph(*g, o.radius, o.modulus);
        j["radius"] = o.radius;
        j["proper_palette"] = r.proper_palette;
    } else {
        r = strong_parity_color_system(std::get<SetSystem>(inst), o.modulus);
    }
    j["coloring"] = to_json(r.coloring);
    j["used_colors"] = r.coloring.used_colors();
    j["levels"] = levels_json(r.levels);
    if (!o.out.empty() && o.out != "-") {
        write_text_file(o.out, to_json(r.coloring).dump() + "\n");
        j.erase("coloring");
    }
    std::cout << j.dump() << "\n";
    return kOk;
}

// --- verify ------------------------------------------------------------------------------

struct VerifyOptions {
    std::string file;
    std::string coloring;
    std::size_t radius = 1;
    std::optional<std::size_t> modulus;
    std::string notion;
};

int run_verify(const VerifyOptions& o)
{
    const auto inst = load_instance(o.file);
    auto c = load_coloring(o.coloring);
    if (o.modulus) {
        if (*o.modulus < 2) throw UsageError("--mod must be >= 2");
        c.modulus = *o.modulus;
    }
    const bool is_graph = std::holds_alternative<Graph>(inst);
    const auto notion = o.notion.empty() ? std::string(is_graph ? "ball" : "total") : o.notion;
    const std::size_t n = is_graph ? std::get<Graph>(inst).size() : std::get<SetSystem>(inst).universe_size();
    if (c.size() != n)
        throw UsageError("coloring has " + std::to_string(c.size()) + " entries for " + std::to_string(n) + " elements");

    json verdict;
    if (notion == "ball" || notion == "open") {
        if (!is_graph) throw UsageError("--notion " + notion + " needs a graph, not a set system");
        const auto& g = std::get<Graph>(inst);
        auto v = notion == "ball" ? verify_graph_ball_coloring(g, o.radius, c) : verify_strong_odd_graph(g, c);
        verdict = v ? json{{"valid", false}, {"violation", violation_json(*v)}} : json{{"valid", true}};
    } else if (notion == "system" || notion == "total") {
        const auto s = system_of(inst, o.radius);
        auto v = notion == "system" ? verify_strong_parity(s, c) : verify_totally_strong_parity(s, c);
        verdict = v ? json{{"valid", false}, {"violation", violation_json(*v)}} : json{{"valid", true}};
    } else {
        throw UsageError("unknown notion '" + notion + "'");
    }
    verdict["notion"] = notion;
    std::cout << verdict.dump() << "\n";
    return verdict["valid"].get<bool>() ? kOk : kInvalid;
}

// --- oracle ------------------------------------------------------------------------------

struct OracleOptions {
    std::string file;
    std::string notion;
    std::size_t radius = 1;
    std::size_t modulus = 2;
    std::uint64_t budget = SearchBudget{}.max_nodes;
    std::string out;
};

int run_oracle(const OracleOptions& o)
{
    const auto inst = load_instance(o.file);
    const bool is_graph = std::holds_alternative<Graph>(inst);
    const auto notion = o.notion.empty() ? std::string(is_graph ? "open" : "system") : o.notion;
    const SearchBudget budget{o.budget};
    json j;
    bool exact = true;
    if (notion == "open" || notion == "ball" || notion == "chromatic") {
        if (!is_graph) throw UsageError("--notion " + notion + " needs a graph, not a set system");
        const auto& g = std::get<Graph>(inst);
        if (notion == "chromatic") {
            auto r = exact_chromatic(g, budget);
            exact = r.exact();
            j = {{"value", r.value()}, {"lower", r.lower}, {"upper", r.upper}, {"exact", exact}, {"witness", to_json(r.witness)}};
        } else {
            auto r = exact_parity_graph(g, notion == "open" ? GraphNotion::open : GraphNotion::ball, o.radius,
                                        o.modulus, budget);
            exact = r.exact();
            j = oracle_json(r);
        }
    } else if (notion == "system") {
        auto r = exact_strong_parity_system(system_of(inst, o.radius), o.modulus, budget);
        exact = r.exact();
        j = oracle_json(r);
    } else {
        throw UsageError("unknown notion '" + notion + "'");
    }
    j["notion"] = notion;
    if (!o.out.empty() && o.out != "-") write_text_file(o.out, j["witness"].dump() + "\n");
    std::cout << j.dump() << "\n";
    return exact ? kOk : kBudget;
}

// --- report ------------------------------------------------------------------------------

struct ReportOptions {
    std::string dir;
    std::size_t radius = 1;
    std::size_t modulus = 2;
    std::size_t cap = kDefaultOrderCap;
    std::uint64_t budget = 2'000'000;
    std::size_t oracle_limit = 12;
    std::size_t jobs = 1;
    bool timing = false;
    std::string out;
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

std::string report_row(const std::filesystem::path& file, const ReportOptions& o)
{
    const auto start = std::chrono::steady_clock::now();
    const auto inst = load_instance(file);
    const auto* g = std::get_if<Graph>(&inst);
    const auto s = system_of(inst, o.radius);
    const auto params = structure_report(s, o.cap, {o.budget});
    const auto engine = g ? strong_parity_color_graph(*g, o.radius, o.modulus)
                          : strong_parity_color_system(s, o.modulus);

    std::string oracle_lower, oracle_upper, oracle_exact;
    if (s.universe_size() <= o.oracle_limit) {
        auto r = g ? exact_parity_graph(*g, GraphNotion::ball, o.radius, o.modulus, {o.budget})
                   : exact_strong_parity_system(s, o.modulus, {o.budget});
        oracle_lower = std::to_string(r.lower);
        oracle_upper = std::to_string(r.upper);
        oracle_exact = r.exact() ? "1" : "0";
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    std::ostringstream row;
    row << csv_field(file.filename().string()) << ',' << s.universe_size() << ',' << (g ? std::to_string(g->edge_count()) : "")
        << ',' << (g ? std::to_string(o.radius) : "") << ',' << o.modulus << ',' << params.semi_ladder.value << ','
        << params.ladder.value << ',' << params.comatching.value << ',' << params.two_vc.value << ','
        << (params.exact() ? 1 : 0) << ',' << engine.coloring.used_colors() << ',' << oracle_lower << ','
        << oracle_upper << ',' << oracle_exact << ',';
    if (o.timing) row << static_cast<long long>(ms + 0.5);
    return row.str();
}

int run_report(const ReportOptions& o)
{
    if (!std::filesystem::is_directory(o.dir)) throw UsageError(o.dir + " is not a directory");
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(o.dir)) {
        const auto ext = entry.path().extension();
        if (entry.is_regular_file() && (ext == ".json" || ext == ".dimacs" || ext == ".col")) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    std::vector<std::string> rows(files.size());
    std::vector<std::string> errors(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < files.size();) {
            try {
                rows[i] = report_row(files[i], o);
            } catch (const std::exception& e) {
                errors[i] = files[i].string() + ": " + e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    const auto jobs = std::max<std::size_t>(1, std::min(o.jobs, files.size()));
    for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (!e.empty()) throw FormatError(e);

    std::ostringstream csv;
    csv << kCsvColumns << '\n';
    for (const auto& r : rows) csv << r << '\n';
    if (o.out.empty() || o.out == "-") std::cout << csv.str();
    else write_text_file(o.out, csv.str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Strong odd colorings of graphs and set systems"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph (JSON on stdout unless -o)");
    gen_cmd->add_option("kind", gen.kind, "path|cycle|grid|complete|star|random_gnp|random_tree|random_outerplanar")
        ->required();
    gen_cmd->add_option("sizes", gen.sizes, "N, or ROWS COLS for grid")->required();
    gen_cmd->add_option("--p", gen.p, "Edge probability (gnp) or chord probability (outerplanar), default 0.5");
    gen_cmd->add_option("--seed", gen.seed, "Seed; mandatory for random kinds");
    gen_cmd->add_option("--format", gen.format, "json or dimacs")->check(CLI::IsMember({"json", "dimacs"}));
    gen_cmd->add_option("-o,--out", gen.out, "Output file");

    ParamsOptions params;
    auto* params_cmd = app.add_subcommand("params", "Semi-ladder, ladder, comatching indices and 2VC dimension");
    params_cmd->add_option("file", params.file, "Graph (analyzed via its radius-d balls) or set system")->required();
    params_cmd->add_option("--radius", params.radius, "Ball radius for graphs")->check(CLI::NonNegativeNumber);
    params_cmd->add_option("--cap", params.cap, "Order cap for the sequence searches");
    params_cmd->add_option("--budget", params.budget, "Node budget per search");
    params_cmd->add_option("-o,--out", params.out, "Output file");

    ColorOptions color;
    auto* color_cmd = app.add_subcommand("color", "Color a graph (ball notion) or a set system (totally strong)");
    color_cmd->add_option("file", color.file, "Graph or set system")->required();
    color_cmd->add_option("--radius", color.radius, "Ball radius d >= 1")->check(CLI::PositiveNumber);
    color_cmd->add_option("--mod", color.modulus, "Modulus m >= 2")->check(CLI::Range(2, 1 << 30));
    color_cmd->add_option("-o,--out", color.out, "Write the bare coloring here; accounting still goes to stdout");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check a coloring; exit 0 if valid, 1 with the first violation");
    verify_cmd->add_option("file", verify.file, "Graph or set system")->required();
    verify_cmd->add_option("coloring", verify.coloring, "Coloring JSON (bare or `color` output)")->required();
    verify_cmd->add_option("--radius", verify.radius, "Ball radius")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--mod", verify.modulus, "Override the coloring's modulus");
    verify_cmd->add_option("--notion", verify.notion, "ball|open (graphs), system|total (default: ball / total)")
        ->check(CLI::IsMember({"ball", "open", "system", "total"}));

    OracleOptions oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exact minimum by exhaustive search; exit 3 with bounds if over budget");
    oracle_cmd->add_option("file", oracle.file, "Graph or set system")->required();
    oracle_cmd->add_option("--notion", oracle.notion, "open|ball|chromatic (graphs), system (default: open / system)")
        ->check(CLI::IsMember({"open", "ball", "system", "chromatic"}));
    oracle_cmd->add_option("--radius", oracle.radius, "Ball radius")->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--mod", oracle.modulus, "Modulus m >= 2")->check(CLI::Range(2, 1 << 30));
    oracle_cmd->add_option("--budget,--cap", oracle.budget, "Search node budget");
    oracle_cmd->add_option("-o,--out", oracle.out, "Write the witness coloring here");

    ReportOptions report;
    auto* report_cmd = app.add_subcommand(
        "report", std::string("Batch CSV over a directory of .json/.dimacs/.col files, sorted by name.\nColumns: ") +
                      kCsvColumns +
                      "\nGraphs are analyzed via their radius-d balls; oracle columns are empty above --oracle-limit "
                      "elements; wall_ms is empty unless --timing.");
    report_cmd->add_option("dir", report.dir, "Instance directory")->required();
    report_cmd->add_option("--radius", report.radius, "Ball radius d >= 1")->check(CLI::PositiveNumber);
    report_cmd->add_option("--mod", report.modulus, "Modulus m >= 2")->check(CLI::Range(2, 1 << 30));
    report_cmd->add_option("--cap", report.cap, "Order cap for parameter searches");
    report_cmd->add_option("--budget", report.budget, "Node budget for each search");
    report_cmd->add_option("--oracle-limit", report.oracle_limit, "Largest universe handed to the oracle");
    report_cmd->add_option("--jobs", report.jobs, "Worker threads")->check(CLI::PositiveNumber);
    report_cmd->add_flag("--timing", report.timing, "Fill the wall_ms column (breaks byte-identical reruns)");
    report_cmd->add_option("-o,--out", report.out, "Output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*params_cmd) return run_params(params);
        if (*color_cmd) return run_color(color);
        if (*verify_cmd) return run_verify(verify);
        if (*oracle_cmd) return run_oracle(oracle);
        if (*report_cmd) return run_report(report);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
