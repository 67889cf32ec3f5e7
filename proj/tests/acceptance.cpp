// Acceptance gate: one printed line per criterion, nonzero exit on failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "newton/classical.hpp"
#include "newton/cubic.hpp"
#include "newton/parser.hpp"
#include "newton/rules.hpp"
#include "newton/threshold.hpp"
#include "newton/verify.hpp"

using namespace newton;

namespace {

int g_failures = 0;

struct Criterion {
    int number;
    std::string title;
    std::ostringstream detail;
    bool ok = true;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    Criterion(int n, std::string t) : number(n), title(std::move(t)) {}

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            detail << (detail.str().empty() ? "" : "; ") << what;
        }
    }
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
    void finish(double budget_ms = 0) {
        double ms = elapsed_ms();
        if (budget_ms > 0)
            require(ms < budget_ms,
                    "runtime " + std::to_string(ms) + " ms exceeds " +
                        std::to_string(budget_ms) + " ms");
        if (!ok) ++g_failures;
        std::printf("%s criterion %d: %s (%.0f ms)%s%s\n", ok ? "PASS" : "FAIL", number,
                    title.c_str(), ms, detail.str().empty() ? "" : " -- ",
                    detail.str().c_str());
    }
};

bool near(const Rat& v, double target, double tol) {
    Rat t = Rat(target * 1000000) / 1000000;
    return rat_abs(v - t) <= Rat(tol * 1000000) / 1000000;
}

void criterion1() {
    Criterion c(1, "degree-8 worked example, exact elements and stricter bounds");
    Polynomial p = parse_polynomial(
        "x^8 - 16x^7 + 28x^6 + 112x^5 - 70x^4 + (28/5)x^3 + 28x^2 + 16x + 1");
    BinomialForm bf = BinomialForm::of(p);
    std::vector<Rat> a{Rat(1), Rat(2), Rat(1), Rat(1, 10), Rat(-1), Rat(2), Rat(1), Rat(-2),
                       Rat(1)};
    c.require(bf.a == a, "binomial coefficients differ");

    ElementTable t = classify_elements(bf);
    std::vector<Rat> A{Rat(1), Rat(3), Rat(4, 5), Rat(101, 100), Rat(4, 5),
                       Rat(5), Rat(5), Rat(3),    Rat(1)};
    c.require(t.quadratic == A, "quadratic elements differ");

    std::set<int> falsely;
    for (int j = 1; j <= 7; ++j)
        if (t.status[j] == ElementStatus::FalselyPositive) falsely.insert(j);
    c.require(falsely == std::set<int>{2, 3, 4}, "falsely positive set is not {A2, A3, A4}");

    RootBoundReport complete = newton_complete(bf);
    c.require(complete.max_positive == 4 && complete.max_negative == 4,
              "original bounds are not (4, 4)");
    RootBoundReport modified = newton_modified(bf);
    c.require(modified.max_positive == 3 && modified.max_negative == 3,
              "modified bounds are not (3, 3)");

    int dpos = descartes_positive(p), dneg = descartes_negative(p);
    c.require(dpos == 4 && dneg == 4, "Descartes counts are not 4/4");
    RootBoundReport combined = combine_with_descartes(modified, dpos, dneg);
    c.require(*combined.positive_set == std::set<int>{0, 2} &&
                  *combined.negative_set == std::set<int>{0, 2},
              "combined parity sets are not {2, 0}/{2, 0}");

    c.require(sturm_count(p, Bound::at(Rat(-3)), Bound::at(Rat(0))) == 2,
              "Sturm count on (-3, 0) is not 2");
    c.require(sturm_count(p, Bound::at(Rat(0)), Bound::at(Rat(15))) == 2,
              "Sturm count on (0, 15) is not 2");

    auto signs = [](const std::vector<Sign>& s) {
        std::string out;
        for (Sign x : s) out += x == Sign::Positive ? '+' : (x == Sign::Negative ? '-' : '0');
        return out;
    };
    c.require(signs(fourier_signs(p, Rat(-3))) == "+-+-+-+-+", "Fourier signs at -3 differ");
    c.require(signs(fourier_signs(p, Rat(0))) == "++++-++-+", "Fourier signs at 0 differ");
    c.finish(1000);
}

void criterion2() {
    Criterion c(2, "all-real quintic: exact elements, printed prescribed intervals");
    Polynomial p = parse_polynomial("x^5 + x^4 - 28x^3 + 32x^2 + 96x - 144");
    BinomialForm bf = BinomialForm::of(p);
    ElementTable t = quadratic_elements(bf);
    std::vector<Rat> A{Rat(20736), Rat(20736, 25), Rat(64), Rat(36, 5), Rat(71, 25), Rat(1)};
    c.require(t.quadratic == A, "quadratic elements differ");

    auto sectors = cubic_sectors(bf);
    struct Printed {
        int sector;
        IntervalSide side;
        double lo, hi;
    };
    const Printed printed[] = {
        {0, IntervalSide::High, -4.267, 0.341},  {0, IntervalSide::Low, -204.800, 56.424},
        {1, IntervalSide::High, -4.356, 1.200},  {1, IntervalSide::Low, -2.781, 1929.182},
        {2, IntervalSide::High, -0.011, 7.536},  {2, IntervalSide::Low, -11.268, 7.876},
    };
    for (const Printed& e : printed) {
        auto [lo, hi] = prescribed_interval(sectors[e.sector], e.side).bracket(Rat(1, 1000000));
        c.require(near(lo, e.lo, 0.001) && near(hi, e.hi, 0.001),
                  "prescribed interval for sector " + std::to_string(e.sector) +
                      " deviates beyond 1e-3");
    }
    c.require(necessary_condition_all_real(bf).all_real_possible,
              "necessary condition should hold");
    for (const CubicSector& s : sectors)
        c.require(has_three_real_roots(classify_cubic(s)),
                  "sector " + std::to_string(s.index) + " should have three real roots");
    c.finish();
}

void criterion3() {
    Criterion c(3, "parametric cubic family: regimes, threshold, 74-point sweep");
    ParametricPolynomial pp =
        parse_parametric("x^3 - 8x^2 + 8(3 - 2q)x - 16(1 - q)", "q");

    auto real_roots = [](const Polynomial& inst) {
        RootCounts rc = count_real_roots(inst);
        return rc.positive + rc.negative + rc.at_zero;
    };
    auto all_truly_positive = [](const Polynomial& inst) {
        ElementTable t = classify_elements(BinomialForm::of(inst));
        for (int j = 1; j <= inst.degree() - 1; ++j)
            if (t.status[j] != ElementStatus::TrulyPositive) return false;
        return true;
    };

    Polynomial below = pp.instantiate(Rat(321, 1000));
    RootBoundReport mod = newton_modified(BinomialForm::of(below));
    c.require(mod.max_positive == 1 && mod.max_negative == 0,
              "q = 0.321: modified bounds are not (1, 0)");
    c.require(real_roots(below) == 1, "q = 0.321: Sturm does not confirm 1 real root");

    Polynomial above = pp.instantiate(Rat(322, 1000));
    c.require(all_truly_positive(above), "q = 0.322: not all elements truly positive");
    c.require(real_roots(above) == 3, "q = 0.322: Sturm does not confirm 3 real roots");

    // falsely-positive boundary vs. the cubic whose root is the boundary
    auto not_all_truly = [&](const Rat& q) {
        Polynomial inst = pp.instantiate(q);
        BinomialForm bf = BinomialForm::of(inst);
        for (int j = 1; j <= 2; ++j)
            if (bf.a[j] * bf.a[j] - bf.a[j - 1] * bf.a[j + 1] <= 0) return true;
        return !all_truly_positive(inst);
    };
    auto [lo, hi] = isolate_threshold(not_all_truly, Rat(1, 5), Rat(3, 4), Rat(1, 100000));
    c.require(rat_abs((lo + hi) / 2 - Rat(3215, 10000)) <= Rat(1, 10000),
              "threshold bracket is not within 1e-4 of 0.3215");

    Polynomial boundary = parse_polynomial("64q^3 - 107q^2 + 62q - 11");
    auto isolated = isolate_real_roots(boundary, Rat(1, 100000));
    c.require(isolated.size() == 1, "boundary cubic should have one real root");
    if (isolated.size() == 1)
        c.require(isolated[0].lo <= hi && lo <= isolated[0].hi,
                  "threshold bracket disagrees with Sturm isolation of the boundary cubic");

    // the A2 sign boundary is exactly q = 1/6
    auto a2_positive = [&](const Rat& q) {
        BinomialForm bf = BinomialForm::of(pp.instantiate(q));
        return bf.a[2] * bf.a[2] - bf.a[1] * bf.a[3] > 0;
    };
    auto [alo, ahi] = isolate_threshold(a2_positive, Rat(0), Rat(1), Rat(1, 1000000));
    c.require(alo <= Rat(1, 6) && Rat(1, 6) <= ahi, "A2 boundary bracket misses 1/6");
    BinomialForm at_sixth = BinomialForm::of(pp.instantiate(Rat(1, 6)));
    c.require(at_sixth.a[2] * at_sixth.a[2] - at_sixth.a[1] * at_sixth.a[3] == 0,
              "A2 does not vanish exactly at q = 1/6");

    // 74-point sweep within budget
    int one_real = 0, three_real = 0;
    for (int k = 1; k <= 74; ++k) {
        Polynomial inst = pp.instantiate(Rat(k, 100));
        (void)not_all_truly(Rat(k, 100));
        int r = real_roots(inst);
        if (r == 1) ++one_real;
        if (r == 3) ++three_real;
    }
    c.require(one_real + three_real == 74, "sweep produced an unexpected root count");
    c.require(three_real == 74 - 32, "regime boundary at q-tilde not reflected in the sweep");
    c.finish(5000);
}

void criterion4() {
    Criterion c(4, "privileged free terms reproduce all four band figures");
    struct Fig {
        const char* expr;
        std::vector<double> terms;
    };
    const Fig figs[] = {
        {"x^5 - 3x^4 - x^3 + 7x^2 - (3/2)x", {0.082, -0.944, -2.837, -5.530}},
        {"5x^5 + (1/10)x^4 - 8x^3 - (1/4)x^2 + 4x", {1.215, 0.834, -0.572, -1.117}},
        {"x^3 - 5x^2 - x", {21.901, -0.049}},
    };
    for (const Fig& f : figs) {
        auto terms = privileged_free_terms(parse_polynomial(f.expr), 3);
        c.require(terms.size() == f.terms.size(),
                  std::string(f.expr) + ": wrong number of privileged terms");
        if (terms.size() != f.terms.size()) continue;
        for (size_t i = 0; i < terms.size(); ++i)
            c.require(near(terms[i].lo, f.terms[i], 0.001) &&
                          near(terms[i].hi, f.terms[i], 0.001),
                      std::string(f.expr) + ": term " + std::to_string(i) +
                          " deviates beyond 1e-3");
    }
    c.require(privileged_free_terms(parse_polynomial("x^3 - x^2 + x"), 3).empty(),
              "monotone family should have no privileged polynomials");
    c.finish();
}

void criterion5() {
    Criterion c(5,
                "identity suite, 1000 seeded instances, exact (pinned constants "
                "+36*A2, +576*A3, 764411904*A3^3)");
    std::mt19937_64 rng(20260823);
    std::uniform_int_distribution<int> deg(3, 6);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    auto rnd = [&] { return Rat(num(rng)) / den(rng); };
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
        Polynomial p = random_polynomial(rng, deg(rng), 9);
        if (!check_eq12_chain(p).pass) ++bad;
        if (!check_ratio_identities(p).pass) ++bad;
        std::vector<Rat> cubic{rnd(), rnd(), rnd(), rnd()};
        if (cubic[3] == 0) cubic[3] = 1;
        if (!check_disc_of_disc(DiscKind::Cubic, cubic).pass) ++bad;
        std::vector<Rat> quartic{rnd(), rnd(), rnd(), rnd(), rnd()};
        if (quartic[4] == 0) quartic[4] = 1;
        if (!check_disc_of_disc(DiscKind::Quartic, quartic).pass) ++bad;
        CubicSector s{cubic[3], cubic[2], cubic[1], cubic[0], 0};
        if (!check_rosset(s).pass) ++bad;
    }
    c.require(bad == 0, std::to_string(bad) + " identity failures");
    c.finish();
}

void criterion6() {
    Criterion c(6, "soundness suite, 1000 seeded random polynomials, degrees 3-8");
    AuditSummary s = run_audit(20260823, 1000, 8, 50);
    c.require(s.failures.empty(), std::to_string(s.failures.size()) + " audit failures out of " +
                                      std::to_string(s.checked) + " checks");
    for (size_t i = 0; i < s.failures.size() && i < 3; ++i)
        std::cerr << "  audit failure: " << s.failures[i].check << " on "
                  << to_string(s.failures[i].polynomial) << ": " << s.failures[i].detail << "\n";
    c.finish(60000);
}

void criterion7() {
    Criterion c(7, "motivating counterexample: positive elements yet no real roots");
    Polynomial p = parse_polynomial("x^4 - 2x^3 - 2x^2 + 5x + 10");
    BinomialForm bf = BinomialForm::of(p);
    ElementTable t = quadratic_elements(bf);
    for (int j = 0; j <= 4; ++j)
        c.require(t.quadratic[j] > 0, "A_" + std::to_string(j) + " is not positive");
    RootCounts rc = count_real_roots(p);
    c.require(rc.positive + rc.negative + rc.at_zero == 0, "Sturm count should be 0 real roots");
    c.require(!necessary_condition_all_real(bf).all_real_possible,
              "necessary condition should fail at the cubic-sector level");
    c.finish();
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    if (g_failures == 0) {
        std::printf("all 7 acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", g_failures);
    return 1;
}
