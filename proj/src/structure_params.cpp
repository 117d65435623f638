#include "oddcolor/structure_params.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace oddcolor {

std::string to_string(WitnessKind kind)
{
    switch (kind) {
    case WitnessKind::semi_ladder: return "semi_ladder";
    case WitnessKind::ladder: return "ladder";
    case WitnessKind::comatching: return "comatching";
    }
    return "?";
}

namespace {

struct BudgetExhausted {};

class NodeCounter {
public:
    explicit NodeCounter(SearchBudget budget) : budget_(budget) {}
    void tick()
    {
        if (++nodes_ > budget_.max_nodes) throw BudgetExhausted{};
    }

private:
    SearchBudget budget_;
    std::uint64_t nodes_ = 0;
};

// Searches run to cap + 1 so that reaching the cap is distinguishable from
// proving the cap is the maximum; this trims an over-long witness back to cap.
std::size_t search_limit(std::size_t cap)
{
    return cap == std::numeric_limits<std::size_t>::max() ? cap : cap + 1;
}

ParamResult<WitnessSequence> finish(WitnessSequence best, std::size_t cap, bool exhausted)
{
    ParamResult<WitnessSequence> out;
    out.exact = !exhausted;
    if (best.order() > cap) {
        best.elements.resize(cap);
        best.sets.resize(cap);
        out.exact = false;
    }
    out.value = best.order();
    out.witness = std::move(best);
    return out;
}

// --- semi-ladder -----------------------------------------------------------
//
// Appending (u, F) needs F ⊇ {chosen elements} and u ∉ F. Feasibility of every
// extension depends only on the chosen element set, so the best extension
// length is memoized on that set.
class SemiLadderSearch {
public:
    SemiLadderSearch(const SetSystem& s, std::size_t limit, SearchBudget budget)
        : s_(s), limit_(limit), counter_(budget)
    {
    }

    WitnessSequence run(bool& exhausted)
    {
        Bitset start(s_.universe_size());
        try {
            best_from(start, path_);
            exhausted = false;
            best_ = reconstruct(start, {});
        } catch (const BudgetExhausted&) {
            exhausted = true;
        }
        return best_;
    }

private:
    struct Entry {
        std::size_t value;
        Element next;
    };

    Bitset candidates(const Bitset& chosen) const
    {
        Bitset out(s_.universe_size());
        for (const auto& f : s_.family())
            if (chosen.is_subset_of(f)) out |= ~f;
        return out;
    }

    std::size_t witness_set(const Bitset& chosen, Element u) const
    {
        for (std::size_t i = 0; i < s_.family_size(); ++i)
            if (!s_.set(i).test(u) && chosen.is_subset_of(s_.set(i))) return i;
        return s_.family_size();
    }

    WitnessSequence reconstruct(Bitset chosen, std::vector<Element> prefix) const
    {
        WitnessSequence w{WitnessKind::semi_ladder, {}, {}};
        Bitset state(s_.universe_size());
        for (auto u : prefix) {
            w.elements.push_back(u);
            w.sets.push_back(witness_set(state, u));
            state.set(u);
        }
        for (auto it = memo_.find(chosen); it != memo_.end() && it->second.value > 0; it = memo_.find(chosen)) {
            auto u = it->second.next;
            w.elements.push_back(u);
            w.sets.push_back(witness_set(chosen, u));
            chosen.set(u);
        }
        return w;
    }

    std::size_t best_from(const Bitset& chosen, std::vector<Element>& path)
    {
        if (auto it = memo_.find(chosen); it != memo_.end()) {
            note_lower_bound(chosen, path, it->second.value);
            return it->second.value;
        }
        counter_.tick();
        const std::size_t depth = path.size();
        note_lower_bound(chosen, path, 0);
        Entry entry{0, 0};
        if (depth < limit_) {
            auto cand = candidates(chosen);
            const std::size_t ceiling = std::min(limit_ - depth, cand.count());
            for (auto u = cand.find_first(); u != Bitset::npos && entry.value < ceiling; u = cand.find_next(u)) {
                Bitset next = chosen;
                next.set(u);
                path.push_back(u);
                auto value = 1 + best_from(next, path);
                path.pop_back();
                if (value > entry.value) entry = {value, u};
            }
        }
        memo_.emplace(chosen, entry);
        return entry.value;
    }

    void note_lower_bound(const Bitset& chosen, const std::vector<Element>& path, std::size_t extension)
    {
        if (path.size() + extension <= best_.order()) return;
        best_ = reconstruct(chosen, path);
    }

    const SetSystem& s_;
    std::size_t limit_;
    NodeCounter counter_;
    std::unordered_map<Bitset, Entry, BitsetHash> memo_;
    std::vector<Element> path_;
    WitnessSequence best_{WitnessKind::semi_ladder, {}, {}};
};

// --- ladder ------------------------------------------------------------------
//
// Appending (u, F) needs F ⊇ {chosen elements}, u ∉ F, and u outside every
// previously chosen set. For a fixed u only inclusion-minimal values of
// (F ∪ previous sets) matter.
class LadderSearch {
public:
    LadderSearch(const SetSystem& s, std::size_t limit, SearchBudget budget)
        : s_(s), limit_(limit), counter_(budget)
    {
    }

    WitnessSequence run(bool& exhausted)
    {
        Bitset chosen(s_.universe_size());
        Bitset used(s_.universe_size());
        try {
            dfs(chosen, used);
            exhausted = false;
        } catch (const BudgetExhausted&) {
            exhausted = true;
        }
        return best_;
    }

private:
    void dfs(const Bitset& chosen, const Bitset& used)
    {
        counter_.tick();
        if (current_.order() > best_.order()) best_ = current_;
        if (current_.order() >= limit_) return;
        const Bitset free = ~(chosen | used);
        if (current_.order() + free.count() <= best_.order()) return;

        for (auto u = free.find_first(); u != Bitset::npos; u = free.find_next(u)) {
            // inclusion-minimal F ∪ used over admissible F
            std::vector<std::pair<Bitset, std::size_t>> options;
            for (std::size_t i = 0; i < s_.family_size(); ++i) {
                const auto& f = s_.set(i);
                if (f.test(u) || !chosen.is_subset_of(f)) continue;
                Bitset grown = f | used;
                bool dominated = false;
                for (auto& [g, idx] : options) {
                    if (g.is_subset_of(grown)) {
                        dominated = true;
                        break;
                    }
                }
                if (dominated) continue;
                std::erase_if(options, [&](const auto& o) { return grown.is_proper_subset_of(o.first); });
                options.emplace_back(std::move(grown), i);
            }
            for (const auto& [grown, idx] : options) {
                Bitset next = chosen;
                next.set(u);
                current_.elements.push_back(u);
                current_.sets.push_back(idx);
                dfs(next, grown);
                current_.elements.pop_back();
                current_.sets.pop_back();
                if (best_.order() >= limit_) return;
            }
        }
    }

    const SetSystem& s_;
    std::size_t limit_;
    NodeCounter counter_;
    WitnessSequence current_{WitnessKind::ladder, {}, {}};
    WitnessSequence best_{WitnessKind::ladder, {}, {}};
};

// --- comatching --------------------------------------------------------------
//
// The pattern is symmetric under permuting pairs, so elements are chosen in
// ascending order. Appending (u, F) needs u in every previous set, u ∉ F and
// F ⊇ {chosen elements}; only inclusion-maximal F ∩ (intersection so far) matter.
class ComatchingSearch {
public:
    ComatchingSearch(const SetSystem& s, std::size_t limit, SearchBudget budget)
        : s_(s), limit_(limit), counter_(budget)
    {
    }

    WitnessSequence run(bool& exhausted)
    {
        Bitset chosen(s_.universe_size());
        Bitset common = s_.full();
        try {
            dfs(chosen, common, 0);
            exhausted = false;
        } catch (const BudgetExhausted&) {
            exhausted = true;
        }
        return best_;
    }

private:
    void dfs(const Bitset& chosen, const Bitset& common, std::size_t from)
    {
        counter_.tick();
        if (current_.order() > best_.order()) best_ = current_;
        if (current_.order() >= limit_) return;
        Bitset open = common;
        for (auto x = open.find_first(); x != Bitset::npos && x < from; x = open.find_next(x)) open.reset(x);
        if (current_.order() + open.count() <= best_.order()) return;

        for (auto u = open.find_first(); u != Bitset::npos; u = open.find_next(u)) {
            std::vector<std::pair<Bitset, std::size_t>> options;
            for (std::size_t i = 0; i < s_.family_size(); ++i) {
                const auto& f = s_.set(i);
                if (f.test(u) || !chosen.is_subset_of(f)) continue;
                Bitset kept = f & common;
                bool dominated = false;
                for (auto& [g, idx] : options) {
                    if (kept.is_subset_of(g)) {
                        dominated = true;
                        break;
                    }
                }
                if (dominated) continue;
                std::erase_if(options, [&](const auto& o) { return o.first.is_proper_subset_of(kept); });
                options.emplace_back(std::move(kept), i);
            }
            for (const auto& [kept, idx] : options) {
                Bitset next = chosen;
                next.set(u);
                current_.elements.push_back(u);
                current_.sets.push_back(idx);
                dfs(next, kept, u + 1);
                current_.elements.pop_back();
                current_.sets.pop_back();
                if (best_.order() >= limit_) return;
            }
        }
    }

    const SetSystem& s_;
    std::size_t limit_;
    NodeCounter counter_;
    WitnessSequence current_{WitnessKind::comatching, {}, {}};
    WitnessSequence best_{WitnessKind::comatching, {}, {}};
};

// --- 2VC ---------------------------------------------------------------------

// Pair witnesses for X, or nullopt if some pair of X is not cut out exactly.
std::optional<std::vector<PairWitness>> shatter_pairs(const SetSystem& s, const std::vector<Element>& x)
{
    const auto k = x.size();
    std::vector<std::size_t> witness(k * k, s.family_size());
    std::size_t missing = k * (k - (k > 0 ? 1 : 0)) / 2;
    for (std::size_t f = 0; f < s.family_size() && missing > 0; ++f) {
        std::size_t hits[3];
        std::size_t count = 0;
        for (std::size_t i = 0; i < k && count < 3; ++i)
            if (s.set(f).test(x[i])) hits[count++] = i;
        if (count != 2) continue;
        auto& slot = witness[hits[0] * k + hits[1]];
        if (slot == s.family_size()) {
            slot = f;
            --missing;
        }
    }
    if (missing > 0) return std::nullopt;
    std::vector<PairWitness> out;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) out.push_back({x[i], x[j], witness[i * k + j]});
    return out;
}

class ShatterSearch {
public:
    ShatterSearch(const SetSystem& s, SearchBudget budget) : s_(s), counter_(budget) {}

    ShatterWitness run(bool& exhausted)
    {
        try {
            dfs(0);
            exhausted = false;
        } catch (const BudgetExhausted&) {
            exhausted = true;
        }
        return best_;
    }

private:
    void dfs(Element from)
    {
        counter_.tick();
        const auto n = s_.universe_size();
        if (current_.size() + (n - std::min(n, from)) <= best_.elements.size()) return;
        for (Element z = from; z < n; ++z) {
            if (current_.size() + (n - z) <= best_.elements.size()) return;
            current_.push_back(z);
            if (auto pairs = shatter_pairs(s_, current_)) {
                if (current_.size() > best_.elements.size()) best_ = {current_, std::move(*pairs)};
                dfs(z + 1);
            }
            current_.pop_back();
        }
    }

    const SetSystem& s_;
    NodeCounter counter_;
    std::vector<Element> current_;
    ShatterWitness best_;
};

}  // namespace

ParamResult<WitnessSequence> semi_ladder_index(const SetSystem& s, std::size_t cap, SearchBudget budget)
{
    bool exhausted = false;
    auto best = SemiLadderSearch(s, search_limit(cap), budget).run(exhausted);
    return finish(std::move(best), cap, exhausted);
}

ParamResult<WitnessSequence> ladder_index(const SetSystem& s, std::size_t cap, SearchBudget budget)
{
    bool exhausted = false;
    auto best = LadderSearch(s, search_limit(cap), budget).run(exhausted);
    return finish(std::move(best), cap, exhausted);
}

ParamResult<WitnessSequence> comatching_index(const SetSystem& s, std::size_t cap, SearchBudget budget)
{
    bool exhausted = false;
    auto best = ComatchingSearch(s, search_limit(cap), budget).run(exhausted);
    return finish(std::move(best), cap, exhausted);
}

ParamResult<ShatterWitness> two_vc_dimension(const SetSystem& s, SearchBudget budget)
{
    bool exhausted = false;
    auto best = ShatterSearch(s, budget).run(exhausted);
    ParamResult<ShatterWitness> out;
    out.value = best.elements.size();
    out.witness = std::move(best);
    out.exact = !exhausted;
    return out;
}

bool verify_witness(const SetSystem& s, const WitnessSequence& w)
{
    const auto len = w.elements.size();
    if (w.sets.size() != len) return false;
    for (std::size_t i = 0; i < len; ++i)
        if (w.elements[i] >= s.universe_size() || w.sets[i] >= s.family_size()) return false;
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = 0; j < len; ++j) {
            const bool member = s.set(w.sets[j]).test(w.elements[i]);
            bool ok = true;
            switch (w.kind) {
            case WitnessKind::semi_ladder:
                if (i == j) ok = !member;
                else if (i < j) ok = member;
                break;
            case WitnessKind::comatching:
                ok = (i == j) ? !member : member;
                break;
            case WitnessKind::ladder:
                ok = (i >= j) ? !member : member;
                break;
            }
            if (!ok) return false;
        }
    }
    return true;
}

bool verify_witness(const SetSystem& s, const ShatterWitness& w)
{
    auto x = w.elements;
    std::sort(x.begin(), x.end());
    if (std::adjacent_find(x.begin(), x.end()) != x.end()) return false;
    for (auto e : x)
        if (e >= s.universe_size()) return false;
    Bitset xs = make_bitset(s.universe_size(), x);
    const auto k = x.size();
    if (w.pair_witnesses.size() != k * (k - (k > 0 ? 1 : 0)) / 2) return false;
    std::vector<std::pair<Element, Element>> seen;
    for (const auto& p : w.pair_witnesses) {
        if (p.set >= s.family_size() || p.x == p.y || !xs.test(p.x) || !xs.test(p.y)) return false;
        Bitset cut = s.set(p.set) & xs;
        if (cut.count() != 2 || !cut.test(p.x) || !cut.test(p.y)) return false;
        seen.emplace_back(std::min(p.x, p.y), std::max(p.x, p.y));
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

WitnessSequence relax(WitnessSequence w, WitnessKind kind)
{
    w.kind = kind;
    return w;
}

StructureReport structure_report(const SetSystem& s, std::size_t cap, SearchBudget budget)
{
    return {semi_ladder_index(s, cap, budget), ladder_index(s, cap, budget), comatching_index(s, cap, budget),
            two_vc_dimension(s, budget)};
}

}  // namespace oddcolor
