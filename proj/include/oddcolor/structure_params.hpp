#pragma once

#include "oddcolor/common.hpp"
#include "oddcolor/set_system.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace oddcolor {

enum class WitnessKind { semi_ladder, ladder, comatching };

std::string to_string(WitnessKind kind);

/// Paired sequences u_1..u_l and F_1..F_l (family indices).
struct WitnessSequence {
    WitnessKind kind = WitnessKind::semi_ladder;
    std::vector<Element> elements;
    std::vector<std::size_t> sets;

    std::size_t order() const { return elements.size(); }
};

struct PairWitness {
    Element x;
    Element y;
    std::size_t set;  // family index F with F ∩ X = {x, y}
};

struct ShatterWitness {
    std::vector<Element> elements;
    std::vector<PairWitness> pair_witnesses;
};

/// Outcome of a maximum-obstruction search. `exact` is false when the
/// search hit its order cap or node budget; `value` is then a lower bound.
template <class Witness>
struct ParamResult {
    std::size_t value = 0;
    Witness witness;
    bool exact = true;
};

inline constexpr std::size_t kDefaultOrderCap = 16;

ParamResult<WitnessSequence> semi_ladder_index(const SetSystem& s, std::size_t cap = kDefaultOrderCap,
                                               SearchBudget budget = {});
ParamResult<WitnessSequence> ladder_index(const SetSystem& s, std::size_t cap = kDefaultOrderCap,
                                          SearchBudget budget = {});
ParamResult<WitnessSequence> comatching_index(const SetSystem& s, std::size_t cap = kDefaultOrderCap,
                                              SearchBudget budget = {});
ParamResult<ShatterWitness> two_vc_dimension(const SetSystem& s, SearchBudget budget = {});

/// Definitional checks, written independently of the searches.
bool verify_witness(const SetSystem& s, const WitnessSequence& w);
bool verify_witness(const SetSystem& s, const ShatterWitness& w);

/// The same pattern reinterpreted under a weaker kind (e.g. a ladder read as
/// a semi-ladder).
WitnessSequence relax(WitnessSequence w, WitnessKind kind);

struct StructureReport {
    ParamResult<WitnessSequence> semi_ladder;
    ParamResult<WitnessSequence> ladder;
    ParamResult<WitnessSequence> comatching;
    ParamResult<ShatterWitness> two_vc;

    bool exact() const { return semi_ladder.exact && ladder.exact && comatching.exact && two_vc.exact; }
};

StructureReport structure_report(const SetSystem& s, std::size_t cap = kDefaultOrderCap, SearchBudget budget = {});

}  // namespace oddcolor
