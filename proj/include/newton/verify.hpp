#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "newton/cubic.hpp"
#include "newton/polynomial.hpp"

namespace newton {

struct AuditFinding {
    Polynomial polynomial;
    std::string check;
    std::string detail;  // expected vs actual, for reproduction
    bool pass = true;
};

// Root-difference-sum scalings of A_{n-1} via p, p', p''. Degree >= 3.
AuditFinding check_eq12_chain(const Polynomial& p);

// Cross-multiplied ratio identities A_1/A_{n-1}, A_2/A_{n-1}, A_3/A_{n-1}
// through the reciprocals of p, p', p''. Skips sides with vanishing
// denominators, noting the skip in the detail.
AuditFinding check_ratio_identities(const Polynomial& p);

// Rosset's cubic-inequality left-hand side equals disc/27 of the sector.
AuditFinding check_rosset(const CubicSector& sector);

enum class DiscKind { Cubic, Quartic };

// Discriminant-of-discriminant identities on a binomial-form cubic
// (a3, a2, a1, a0) or quartic (a4..a0). Exact on every rational instance.
AuditFinding check_disc_of_disc(DiscKind kind, const std::vector<Rat>& a);

// Soundness of every bound against exact Sturm counts, plus the structural
// falsely-positive properties. Regularizes internally.
std::vector<AuditFinding> audit_bounds(const Polynomial& p);

// Seeded generator for the audit corpus: random rational coefficients with
// numerators and denominators bounded by max_abs.
Polynomial random_polynomial(std::mt19937_64& rng, int degree, int max_abs);

struct AuditSummary {
    int checked = 0;
    int skipped = 0;  // polynomials no shift can regularize (A_{n-1} == 0 invariantly)
    std::vector<AuditFinding> failures;
};
AuditSummary run_audit(std::uint64_t seed, int count, int max_degree, int max_abs);

}  // namespace newton
