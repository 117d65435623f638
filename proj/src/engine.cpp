#include "oddcolor/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace oddcolor {

std::size_t ParityColoring::used_colors() const
{
    return Coloring{colors, palette_size}.used_colors();
}

namespace {

void check_modulus(std::size_t m)
{
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");
}

// Per-color counts of c inside `set`.
std::map<std::size_t, std::size_t> color_counts(const Bitset& set, const ParityColoring& c)
{
    std::map<std::size_t, std::size_t> counts;
    for (auto x = set.find_first(); x != Bitset::npos; x = set.find_next(x)) ++counts[c[x]];
    return counts;
}

std::optional<std::pair<std::size_t, std::size_t>> first_bad_count(const Bitset& set, const ParityColoring& c)
{
    for (auto [color, count] : color_counts(set, c))
        if (!parity_count_ok(count, c.modulus)) return std::pair{color, count};
    return std::nullopt;
}

}  // namespace

std::optional<ParityViolation> verify_strong_parity(const SetSystem& s, const ParityColoring& c)
{
    check_modulus(c.modulus);
    if (c.size() != s.universe_size()) throw std::invalid_argument("coloring size does not match universe");
    for (std::size_t i = 0; i < s.family_size(); ++i)
        if (auto bad = first_bad_count(s.set(i), c)) return ParityViolation{i, bad->first, bad->second};
    return std::nullopt;
}

std::optional<ParityViolation> verify_totally_strong_parity(const SetSystem& s, const ParityColoring& c)
{
    if (auto v = verify_strong_parity(s, c)) return v;
    if (auto bad = first_bad_count(s.full(), c)) return ParityViolation{std::nullopt, bad->first, bad->second};
    return std::nullopt;
}

namespace {

std::optional<GraphViolation> check_proper(const Graph& g, const ParityColoring& c)
{
    if (c.size() != g.size()) throw std::invalid_argument("coloring size does not match graph");
    for (auto [u, v] : g.edges())
        if (c[u] == c[v]) return GraphViolation{GraphViolation::Kind::improper_edge, u, v};
    return std::nullopt;
}

}  // namespace

std::optional<GraphViolation> verify_graph_ball_coloring(const Graph& g, std::size_t d, const ParityColoring& c)
{
    check_modulus(c.modulus);
    if (auto v = check_proper(g, c)) return v;
    for (Vertex u = 0; u < g.size(); ++u) {
        auto dist = distances_from(g, u);
        Bitset ball(g.size());
        for (Vertex v = 0; v < g.size(); ++v)
            if (dist[v] != kUnreachable && static_cast<std::size_t>(dist[v]) <= d) ball.set(v);
        if (auto bad = first_bad_count(ball, c))
            return GraphViolation{GraphViolation::Kind::bad_count, u, 0, bad->first, bad->second};
    }
    return std::nullopt;
}

std::optional<GraphViolation> verify_strong_odd_graph(const Graph& g, const ParityColoring& c)
{
    check_modulus(c.modulus);
    if (auto v = check_proper(g, c)) return v;
    for (Vertex u = 0; u < g.size(); ++u)
        if (auto bad = first_bad_count(g.neighbors(u), c))
            return GraphViolation{GraphViolation::Kind::bad_count, u, 0, bad->first, bad->second};
    return std::nullopt;
}

// --- covers ---------------------------------------------------------------------------

namespace {

struct Candidate {
    Bitset trace;
    std::size_t set;
};

// Candidates with a nonempty trace on y, deduplicated (smallest index kept)
// and with traces strictly inside another trace removed.
std::vector<Candidate> cover_candidates(const SetSystem& s, const Bitset& y)
{
    std::vector<Candidate> all;
    for (std::size_t i = 0; i < s.family_size(); ++i) {
        Bitset trace = s.set(i) & y;
        if (trace.none()) continue;
        bool seen = std::any_of(all.begin(), all.end(), [&](const Candidate& c) { return c.trace == trace; });
        if (!seen) all.push_back({std::move(trace), i});
    }
    std::vector<Candidate> kept;
    for (const auto& c : all) {
        bool dominated = std::any_of(all.begin(), all.end(),
                                     [&](const Candidate& o) { return c.trace.is_proper_subset_of(o.trace); });
        if (!dominated) kept.push_back(c);
    }
    return kept;
}

// Iterative deepening: branch on the candidates covering the smallest
// uncovered element, so the first cover found at depth k is minimum.
bool exact_cover(const std::vector<Candidate>& cands, const Bitset& uncovered, std::size_t depth,
                 std::vector<std::size_t>& chosen)
{
    auto e = uncovered.find_first();
    if (e == Bitset::npos) return true;
    if (depth == 0) return false;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (!cands[i].trace.test(e)) continue;
        chosen.push_back(i);
        if (exact_cover(cands, uncovered - cands[i].trace, depth - 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

CoverResult cover_within_clique(const SetSystem& s, std::span<const Element> y)
{
    const Bitset target_all = make_bitset(s.universe_size(), y);
    auto cands = cover_candidates(s, target_all);
    Bitset coverable(s.universe_size());
    for (const auto& c : cands) coverable |= c.trace;

    CoverResult out;
    out.uncovered = members(target_all - coverable);

    std::vector<std::size_t> picks;  // indices into cands, in pick order
    if (cands.size() <= kExactCoverCandidates) {
        for (std::size_t k = 0; k <= cands.size(); ++k) {
            picks.clear();
            if (exact_cover(cands, coverable, k, picks)) break;
        }
        std::sort(picks.begin(), picks.end(), [&](auto a, auto b) { return cands[a].set < cands[b].set; });
        out.minimum = true;
    } else {
        Bitset left = coverable;
        while (left.any()) {
            std::size_t best = cands.size();
            std::size_t best_gain = 0;
            for (std::size_t i = 0; i < cands.size(); ++i) {
                auto gain = (cands[i].trace & left).count();
                if (gain > best_gain) {
                    best_gain = gain;
                    best = i;
                }
            }
            picks.push_back(best);
            left -= cands[best].trace;
        }
    }

    Bitset left = coverable;
    for (auto i : picks) {
        Bitset part = cands[i].trace & left;
        left -= part;
        if (part.any()) out.parts.push_back({members(part), cands[i].set});
    }
    return out;
}

// --- refinement step ------------------------------------------------------------------

ClusterRefinement refinement_step(const SetSystem& s)
{
    const Bitset full = s.full();
    for (std::size_t i = 0; i < s.family_size(); ++i)
        if (s.set(i) == full) throw std::invalid_argument("refinement_step: family contains the full universe (set " +
                                                          std::to_string(i) + ")");

    ClusterRefinement out;
    const Graph gaif = gaifman(s);
    if (gaif.size() <= kExactSubchromaticLimit) {
        auto exact = exact_subchromatic(gaif);
        out.subcoloring = std::move(exact.coloring);
        out.subcoloring_exact = exact.exact;
    } else {
        out.subcoloring = greedy_subcoloring(gaif);
    }

    // clusters: components of each color class
    std::vector<Bitset> classes(out.subcoloring.palette_size, Bitset(s.universe_size()));
    for (Element x = 0; x < s.universe_size(); ++x) classes[out.subcoloring[x]].set(x);
    for (std::size_t color = 0; color < classes.size(); ++color) {
        for (auto& comp : connected_components(induced_subgraph(gaif, classes[color]).graph)) {
            auto members_of = members(classes[color]);
            RefinementCluster cluster{color, {}};
            for (auto local : comp) cluster.elements.push_back(members_of[local]);
            out.clusters.push_back(std::move(cluster));
        }
    }
    std::sort(out.clusters.begin(), out.clusters.end(),
              [](const auto& a, const auto& b) { return a.elements.front() < b.elements.front(); });

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> refined;  // (cluster color, part index)
    for (std::size_t ci = 0; ci < out.clusters.size(); ++ci) {
        const auto& cluster = out.clusters[ci];
        auto cover = cover_within_clique(s, cluster.elements);
        out.uncovered.insert(out.uncovered.end(), cover.uncovered.begin(), cover.uncovered.end());
        for (std::size_t j = 0; j < cover.parts.size(); ++j) {
            refined.emplace(std::pair{cluster.color, j}, 0);
            out.parts.push_back({std::move(cover.parts[j].elements), cover.parts[j].set, ci, j});
        }
    }
    std::size_t next = 0;
    for (auto& [key, index] : refined) index = next++;
    out.refined_palette = next;
    for (auto& part : out.parts) part.color = refined.at({out.clusters[part.cluster].color, part.color});

    std::sort(out.parts.begin(), out.parts.end(),
              [](const auto& a, const auto& b) { return a.elements.front() < b.elements.front(); });
    std::sort(out.uncovered.begin(), out.uncovered.end());
    return out;
}

std::vector<std::size_t> parity_groups(std::size_t count, std::size_t m)
{
    check_modulus(m);
    std::vector<std::size_t> group(count, 0);
    if (count == 0) return group;
    const std::size_t q = (count - 1) % m + 1;
    for (std::size_t i = 0; i < count; ++i) group[i] = std::min(i, q - 1);
    return group;
}

// --- recursive coloring ----------------------------------------------------------------

namespace {

// Final color of an element before dense renumbering: (child color, refined
// color, child color set, group) for covered elements, or a reserved group
// for elements in no set.
struct ColorKey {
    bool reserved = false;
    std::size_t child = 0;
    std::size_t refined = 0;
    std::vector<std::size_t> present;
    std::size_t group = 0;

    auto operator<=>(const ColorKey&) const = default;
};

std::size_t bound_saturated(std::size_t k, std::size_t p, std::size_t m)
{
    long double bound = static_cast<long double>(k) * p * std::pow(2.0L, static_cast<long double>(p)) * m;
    return bound >= 1e18L ? std::numeric_limits<std::size_t>::max() : static_cast<std::size_t>(bound);
}

class Engine {
public:
    explicit Engine(std::size_t modulus) : m_(modulus) {}

    ParityColoring color(const SetSystem& s, std::size_t level)
    {
        // recursion may grow levels_; stats is re-fetched after the recursive calls
        auto* stats = &level_stats(level);
        ++stats->calls;
        stats->max_universe = std::max(stats->max_universe, s.universe_size());

        // sets equal to the universe or empty impose nothing beyond the
        // universe condition, which a totally strong coloring meets anyway
        const Bitset full = s.full();
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < s.family_size(); ++i)
            if (s.set(i).any() && s.set(i) != full) keep.push_back(i);
        const SetSystem reduced = induced_subsystem(s, full, keep).system;

        if (reduced.family_size() == 0) {
            ++stats->base_cases;
            auto groups = parity_groups(s.universe_size(), m_);
            ParityColoring out{std::move(groups), 0, m_};
            out.palette_size = out.colors.empty() ? 0 : out.colors.back() + 1;
            stats->max_used = std::max(stats->max_used, out.palette_size);
            return out;
        }

        const auto refinement = refinement_step(reduced);
        stats->max_subcoloring = std::max(stats->max_subcoloring, refinement.subcoloring.palette_size);
        stats->max_k = std::max(stats->max_k, refinement.refined_palette);

        // color every part recursively
        std::vector<ParityColoring> child(refinement.parts.size());
        std::vector<std::vector<std::size_t>> present(refinement.parts.size());
        std::size_t p = 0;
        for (std::size_t i = 0; i < refinement.parts.size(); ++i) {
            const auto& part = refinement.parts[i];
            const Bitset x = make_bitset(s.universe_size(), part.elements);
            if (!x.is_subset_of(reduced.set(part.set)))
                throw std::logic_error("refinement part escapes its covering set");
            child[i] = color(induced_subsystem(reduced, x).system, level + 1);
            p = std::max(p, child[i].palette_size);
            present[i] = child[i].colors;
            std::sort(present[i].begin(), present[i].end());
            present[i].erase(std::unique(present[i].begin(), present[i].end()), present[i].end());
        }

        stats = &level_stats(level);

        // classify parts by (refined color, color set) and split each class
        // into groups of 1 mod m parts
        std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::vector<std::size_t>> classes;
        for (std::size_t i = 0; i < refinement.parts.size(); ++i)
            classes[{refinement.parts[i].color, present[i]}].push_back(i);
        std::vector<std::size_t> group_of(refinement.parts.size());
        std::vector<std::size_t> class_of(refinement.parts.size());
        std::size_t class_index = 0;
        for (const auto& [key, members_of] : classes) {
            auto groups = parity_groups(members_of.size(), m_);
            for (std::size_t j = 0; j < members_of.size(); ++j) {
                group_of[members_of[j]] = groups[j];
                class_of[members_of[j]] = class_index;
            }
            ++class_index;
        }

        check_locality(reduced, refinement, class_of, group_of);

        std::vector<ColorKey> keys(s.universe_size());
        for (std::size_t i = 0; i < refinement.parts.size(); ++i) {
            const auto& part = refinement.parts[i];
            for (std::size_t j = 0; j < part.elements.size(); ++j)
                keys[part.elements[j]] = {false, child[i].colors[j], part.color, present[i], group_of[i]};
        }
        auto reserved_groups = parity_groups(refinement.uncovered.size(), m_);
        for (std::size_t j = 0; j < refinement.uncovered.size(); ++j)
            keys[refinement.uncovered[j]] = ColorKey{true, 0, 0, {}, reserved_groups[j]};
        const std::size_t reserved = reserved_groups.empty() ? 0 : reserved_groups.back() + 1;

        auto out = renumber(keys);
        stats->max_p = std::max(stats->max_p, p);
        stats->max_used = std::max(stats->max_used, out.palette_size);
        stats->max_reserved = std::max(stats->max_reserved, reserved);
        if (out.palette_size - reserved > bound_saturated(refinement.refined_palette, p, m_)) stats->bound_holds = false;
        return out;
    }

    std::vector<LevelStats> levels() const { return levels_; }

private:
    LevelStats& level_stats(std::size_t level)
    {
        while (levels_.size() <= level) levels_.push_back({levels_.size()});
        return levels_[level];
    }

    ParityColoring renumber(const std::vector<ColorKey>& keys) const
    {
        std::map<ColorKey, std::size_t> dense;
        for (const auto& k : keys) dense.emplace(k, 0);
        std::size_t next = 0;
        for (auto& [k, index] : dense) index = next++;
        ParityColoring out{std::vector<std::size_t>(keys.size()), next, m_};
        for (std::size_t x = 0; x < keys.size(); ++x) out.colors[x] = dense.at(keys[x]);
        return out;
    }

    // Every set meets at most one part of each (class, group) bucket.
    static void check_locality(const SetSystem& s, const ClusterRefinement& r, const std::vector<std::size_t>& class_of,
                               const std::vector<std::size_t>& group_of)
    {
        std::vector<std::size_t> part_of(s.universe_size(), r.parts.size());
        for (std::size_t i = 0; i < r.parts.size(); ++i)
            for (auto x : r.parts[i].elements) part_of[x] = i;
        for (std::size_t f = 0; f < s.family_size(); ++f) {
            std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
            const auto& set = s.set(f);
            for (auto x = set.find_first(); x != Bitset::npos; x = set.find_next(x)) {
                auto part = part_of[x];
                if (part == r.parts.size()) continue;
                auto [it, inserted] = seen.emplace(std::pair{class_of[part], group_of[part]}, part);
                if (!inserted && it->second != part) {
                    std::ostringstream msg;
                    msg << "set " << f << " meets parts " << it->second << " and " << part << " of one color group";
                    throw std::logic_error(msg.str());
                }
            }
        }
    }

    std::size_t m_;
    std::vector<LevelStats> levels_;
};

}  // namespace

EngineResult strong_parity_color_system(const SetSystem& s, std::size_t modulus)
{
    check_modulus(modulus);
    Engine engine(modulus);
    EngineResult out{engine.color(s, 0), engine.levels(), 0};
    if (auto v = verify_totally_strong_parity(s, out.coloring)) {
        std::ostringstream msg;
        msg << "engine produced an invalid coloring: color " << v->color << " appears " << v->count << " times in "
            << (v->set ? "set " + std::to_string(*v->set) : std::string("the universe"));
        throw std::logic_error(msg.str());
    }
    return out;
}

EngineResult strong_parity_color_graph(const Graph& g, std::size_t d, std::size_t modulus)
{
    check_modulus(modulus);
    if (d == 0) throw std::invalid_argument("radius must be >= 1");
    const auto proper = greedy_proper_coloring(g);
    const auto system = balls(g, d);

    EngineResult out;
    out.proper_palette = proper.palette_size;
    std::vector<std::pair<std::size_t, std::size_t>> keys(g.size());
    for (std::size_t cls = 0; cls < proper.palette_size; ++cls) {
        Bitset members_of(g.size());
        for (Vertex v = 0; v < g.size(); ++v)
            if (proper[v] == cls) members_of.set(v);
        auto sub = induced_subsystem(system, members_of);
        auto part = strong_parity_color_system(sub.system, modulus);
        for (std::size_t j = 0; j < sub.element_map.size(); ++j) keys[sub.element_map[j]] = {cls, part.coloring[j]};
        for (const auto& lv : part.levels) {
            while (out.levels.size() <= lv.level) out.levels.push_back({out.levels.size()});
            auto& agg = out.levels[lv.level];
            agg.calls += lv.calls;
            agg.base_cases += lv.base_cases;
            agg.max_universe = std::max(agg.max_universe, lv.max_universe);
            agg.max_k = std::max(agg.max_k, lv.max_k);
            agg.max_p = std::max(agg.max_p, lv.max_p);
            agg.max_used = std::max(agg.max_used, lv.max_used);
            agg.max_reserved = std::max(agg.max_reserved, lv.max_reserved);
            agg.max_subcoloring = std::max(agg.max_subcoloring, lv.max_subcoloring);
            agg.bound_holds = agg.bound_holds && lv.bound_holds;
        }
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> dense;
    for (const auto& k : keys) dense.emplace(k, 0);
    std::size_t next = 0;
    for (auto& [k, index] : dense) index = next++;
    out.coloring = {std::vector<std::size_t>(g.size()), next, modulus};
    for (Vertex v = 0; v < g.size(); ++v) out.coloring.colors[v] = dense.at(keys[v]);

    if (auto v = verify_graph_ball_coloring(g, d, out.coloring))
        throw std::logic_error("graph pipeline produced an invalid coloring at vertex " + std::to_string(v->u));
    return out;
}

}  // namespace oddcolor
