#include "oddcolor/oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace oddcolor {

namespace {

struct OracleExhausted {};

// Backtracking over colorings of 0..n-1 with colors introduced in first-use
// order (element 0 always gets color 0). A constraint set is checked only once
// all its elements are colored, since parity is not monotone under extension.
class ColoringSearch {
public:
    ColoringSearch(std::size_t n, std::vector<Bitset> sets, const Graph* proper, std::size_t modulus,
                   SearchBudget budget)
        : n_(n), sets_(std::move(sets)), proper_(proper), m_(modulus), budget_(budget), sets_of_(n)
    {
        for (std::size_t i = 0; i < sets_.size(); ++i)
            for (auto x = sets_[i].find_first(); x != Bitset::npos; x = sets_[i].find_next(x)) sets_of_[x].push_back(i);
    }

    std::optional<std::vector<std::size_t>> try_colors(std::size_t k)
    {
        k_ = k;
        colors_.assign(n_, 0);
        counts_.assign(sets_.size(), std::vector<std::size_t>(k, 0));
        remaining_.resize(sets_.size());
        for (std::size_t i = 0; i < sets_.size(); ++i) remaining_[i] = sets_[i].count();
        // sets with no elements are vacuous
        if (!assign(0, 0)) return std::nullopt;
        return colors_;
    }

private:
    bool assign(std::size_t x, std::size_t used)
    {
        if (x == n_) return true;
        if (++nodes_ > budget_.max_nodes) throw OracleExhausted{};
        const std::size_t limit = std::min(k_, used + 1);
        for (std::size_t c = 0; c < limit; ++c) {
            if (proper_ && clashes(x, c)) continue;
            colors_[x] = c;
            bool ok = true;
            for (auto s : sets_of_[x]) {
                ++counts_[s][c];
                if (--remaining_[s] == 0 && !complete_ok(s)) ok = false;
            }
            if (ok && assign(x + 1, std::max(used, c + 1))) return true;
            for (auto s : sets_of_[x]) {
                --counts_[s][c];
                ++remaining_[s];
            }
        }
        return false;
    }

    bool clashes(std::size_t x, std::size_t c) const
    {
        const auto& nb = proper_->neighbors(x);
        for (auto y = nb.find_first(); y != Bitset::npos && y < x; y = nb.find_next(y))
            if (colors_[y] == c) return true;
        return false;
    }

    bool complete_ok(std::size_t s) const
    {
        for (auto count : counts_[s])
            if (!parity_count_ok(count, m_)) return false;
        return true;
    }

    std::size_t n_;
    std::vector<Bitset> sets_;
    const Graph* proper_;
    std::size_t m_;
    SearchBudget budget_;
    std::vector<std::vector<std::size_t>> sets_of_;
    std::uint64_t nodes_ = 0;
    std::size_t k_ = 0;
    std::vector<std::size_t> colors_;
    std::vector<std::vector<std::size_t>> counts_;
    std::vector<std::size_t> remaining_;
};

OracleResult minimize(ColoringSearch& search, std::size_t n, std::size_t modulus, std::size_t start)
{
    OracleResult out;
    if (n == 0) {
        out.witness.modulus = modulus;
        return out;
    }
    out.lower = start;
    try {
        for (std::size_t k = start; k <= n; ++k) {
            if (auto found = search.try_colors(k)) {
                out.upper = k;
                out.witness = {std::move(*found), k, modulus};
                return out;
            }
            out.lower = k + 1;
        }
    } catch (const OracleExhausted&) {
    }
    // each element its own color meets every parity condition
    out.upper = n;
    out.witness = {std::vector<std::size_t>(n), n, modulus};
    for (std::size_t x = 0; x < n; ++x) out.witness.colors[x] = x;
    out.lower = std::min(out.lower, out.upper);
    return out;
}

}  // namespace

OracleResult exact_parity_graph(const Graph& g, GraphNotion notion, std::size_t d, std::size_t modulus,
                                SearchBudget budget)
{
    if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
    std::vector<Bitset> sets;
    if (notion == GraphNotion::open) {
        for (Vertex u = 0; u < g.size(); ++u) sets.push_back(g.neighbors(u));
    } else {
        if (d == 0) throw std::invalid_argument("radius must be >= 1");
        sets = balls(g, d).family();
    }
    ColoringSearch search(g.size(), std::move(sets), &g, modulus, budget);
    return minimize(search, g.size(), modulus, 1);
}

OracleResult exact_strong_odd_graph(const Graph& g, SearchBudget budget)
{
    return exact_parity_graph(g, GraphNotion::open, 1, 2, budget);
}

OracleResult exact_strong_parity_system(const SetSystem& s, std::size_t modulus, SearchBudget budget)
{
    if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
    ColoringSearch search(s.universe_size(), s.family(), nullptr, modulus, budget);
    return minimize(search, s.universe_size(), modulus, 1);
}

ChromaticResult exact_chromatic(const Graph& g, SearchBudget budget)
{
    ChromaticResult out;
    if (g.empty()) return out;
    auto greedy = greedy_proper_coloring(g);
    ColoringSearch search(g.size(), {}, &g, 2, budget);
    out.lower = 1;
    out.upper = greedy.palette_size;
    out.witness = greedy;
    try {
        for (std::size_t k = 1; k < greedy.palette_size; ++k) {
            if (auto found = search.try_colors(k)) {
                out.upper = k;
                out.witness = {std::move(*found), k};
                break;
            }
            out.lower = k + 1;
        }
    } catch (const OracleExhausted&) {
        return out;
    }
    out.lower = out.upper;
    return out;
}

}  // namespace oddcolor
