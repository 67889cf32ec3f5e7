#pragma once

#include <vector>

#include "newton/polynomial.hpp"

namespace newton {

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

inline Sign sign_of(const Rat& r) { return static_cast<Sign>(sgn(r)); }

enum class ElementStatus { Negative, Zero, TrulyPositive, FalselyPositive, EndCap };

/// Double sequence of simple elements a_m and quadratic elements A_m,
/// indices 0..n. Status starts sign-only; cubic-analysis refines the
/// positive interior entries into truly/falsely positive.
struct ElementTable {
    std::vector<Rat> simple;
    std::vector<Rat> quadratic;
    std::vector<Sign> simple_signs;
    std::vector<Sign> quadratic_signs;
    std::vector<ElementStatus> status;

    int degree() const { return static_cast<int>(simple.size()) - 1; }
};

struct SuccessionTally {
    int pP = 0, vV = 0, pV = 0, vP = 0;
    int total() const { return pP + vV + pV + vP; }
    friend bool operator==(const SuccessionTally&, const SuccessionTally&) = default;
};

// A_0 = a_0^2, A_m = a_m^2 - a_{m-1} a_{m+1}, A_n = a_n^2. Degree >= 2.
ElementTable quadratic_elements(const BinomialForm& bf);

// Tally over the n adjacent couples of successions. Rejects zero signs.
SuccessionTally successions(const ElementTable& table);

// Maximal runs of negative quadratic elements; complex roots >= 2 * this.
int negative_groups(const ElementTable& table);

}  // namespace newton
