#include "newton/elements.hpp"

#include <cstdlib>

#include "newton/errors.hpp"

namespace newton {

ElementTable quadratic_elements(const BinomialForm& bf) {
    const int n = bf.degree();
    if (n < 2) throw DegreeError("quadratic_elements: degree >= 2 required");
    ElementTable t;
    t.simple = bf.a;
    t.quadratic.resize(n + 1);
    t.quadratic[0] = bf.a[0] * bf.a[0];
    t.quadratic[n] = bf.a[n] * bf.a[n];
    for (int m = 1; m <= n - 1; ++m)
        t.quadratic[m] = bf.a[m] * bf.a[m] - bf.a[m - 1] * bf.a[m + 1];
    t.simple_signs.resize(n + 1);
    t.quadratic_signs.resize(n + 1);
    t.status.resize(n + 1);
    for (int m = 0; m <= n; ++m) {
        t.simple_signs[m] = sign_of(t.simple[m]);
        t.quadratic_signs[m] = sign_of(t.quadratic[m]);
        if (m == 0 || m == n) {
            t.status[m] = ElementStatus::EndCap;
        } else
            switch (t.quadratic_signs[m]) {
                case Sign::Negative: t.status[m] = ElementStatus::Negative; break;
                case Sign::Zero: t.status[m] = ElementStatus::Zero; break;
                // placeholder until cubic-analysis classifies it
                case Sign::Positive: t.status[m] = ElementStatus::TrulyPositive; break;
            }
    }
    return t;
}

SuccessionTally successions(const ElementTable& table) {
    const int n = table.degree();
    for (int m = 0; m <= n; ++m)
        if (table.simple_signs[m] == Sign::Zero || table.quadratic_signs[m] == Sign::Zero)
            throw NotRegularizedError("successions: zero sign at index " + std::to_string(m));
    // vector arithmetic over the n couples: s, S in {0,1}, q = s - S, Q = s + S - 1
    SuccessionTally tally;
    for (int j = 1; j <= n; ++j) {
        int s = std::abs(static_cast<int>(table.simple_signs[j]) -
                         static_cast<int>(table.simple_signs[j - 1])) / 2;
        int S = std::abs(static_cast<int>(table.quadratic_signs[j]) -
                         static_cast<int>(table.quadratic_signs[j - 1])) / 2;
        int q = s - S;
        int Q = s + S - 1;
        tally.pV += (std::abs(q) - q) / 2;
        tally.vP += (q + std::abs(q)) / 2;
        tally.vV += (Q + std::abs(Q)) / 2;
        tally.pP += (std::abs(Q) - Q) / 2;
    }
    return tally;
}

int negative_groups(const ElementTable& table) {
    int groups = 0;
    bool in_run = false;
    for (Sign s : table.quadratic_signs) {
        if (s == Sign::Negative) {
            if (!in_run) ++groups;
            in_run = true;
        } else {
            in_run = false;
        }
    }
    return groups;
}

}  // namespace newton
