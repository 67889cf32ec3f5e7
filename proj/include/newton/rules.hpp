#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "newton/cubic.hpp"
#include "newton/elements.hpp"

namespace newton {

struct RootBoundReport {
    std::string method;
    int max_positive = 0;
    int max_negative = 0;
    int min_complex = 0;
    SuccessionTally tally;
    // inclusive index ranges whose quadratic-element signs were flipped
    std::vector<std::pair<int, int>> modified_flips;
    std::optional<std::set<int>> positive_set;  // feasible counts after Descartes
    std::optional<std::set<int>> negative_set;
};

// Original Newton Complete Rule plus the Incomplete Rule's complex lower
// bound. Requires a regularized input of degree >= 2.
RootBoundReport newton_complete(const BinomialForm& bf);

struct ModifiedResult {
    ElementTable table;
    std::vector<std::pair<int, int>> flips;
};

// Flip each maximal run of falsely positive elements whose both neighbors
// (end caps included) carry positive sign. Status must be fully classified.
ModifiedResult modified_sequence(const ElementTable& table);

// Complete Rule applied to the modified element sequence. Degree 2 inputs
// bypass sector analysis (there is nothing to reclassify).
RootBoundReport newton_modified(const BinomialForm& bf);

struct RealityWitness {
    bool all_real_possible = false;
    int element_index = -1;          // first offending element, when any
    std::string reason;
    Rat shift;                       // applied when the input needed regularizing
};

// Necessary condition for all roots real: no negative, vanishing, or
// falsely positive quadratic element. Degree >= 3.
RealityWitness necessary_condition_all_real(const BinomialForm& bf);

RootBoundReport combine_with_descartes(RootBoundReport report, int descartes_pos,
                                       int descartes_neg);

}  // namespace newton
