#include "newton/rules.hpp"

#include "newton/errors.hpp"

namespace newton {

namespace {

RootBoundReport report_from_table(const ElementTable& table, std::string method) {
    RootBoundReport r;
    r.method = std::move(method);
    r.tally = successions(table);
    r.max_positive = r.tally.vP;
    r.max_negative = r.tally.pP;
    r.min_complex = 2 * negative_groups(table);
    return r;
}

bool positive_neighbor(const ElementTable& t, int idx) {
    return t.quadratic_signs[idx] == Sign::Positive;
}

}  // namespace

RootBoundReport newton_complete(const BinomialForm& bf) {
    return report_from_table(quadratic_elements(bf), "newton-complete");
}

ModifiedResult modified_sequence(const ElementTable& table) {
    ModifiedResult out{table, {}};
    const int n = table.degree();
    int j = 1;
    while (j <= n - 1) {
        if (table.status[j] != ElementStatus::FalselyPositive) {
            ++j;
            continue;
        }
        int lo = j;
        while (j <= n - 1 && table.status[j] == ElementStatus::FalselyPositive) ++j;
        int hi = j - 1;
        // flip only runs bounded by positive elements on both sides (end caps
        // are squares and count as positive neighbors)
        if (positive_neighbor(table, lo - 1) && positive_neighbor(table, hi + 1)) {
            for (int m = lo; m <= hi; ++m) {
                out.table.quadratic[m] = -out.table.quadratic[m];
                out.table.quadratic_signs[m] = Sign::Negative;
                out.table.status[m] = ElementStatus::Negative;
            }
            out.flips.emplace_back(lo, hi);
        }
    }
    return out;
}

RootBoundReport newton_modified(const BinomialForm& bf) {
    if (bf.degree() < 3) {
        // a quadratic is its own (degenerate) sector: sign(A_1) already decides
        RootBoundReport r = newton_complete(bf);
        r.method = "newton-modified";
        return r;
    }
    ModifiedResult mod = modified_sequence(classify_elements(bf));
    RootBoundReport r = report_from_table(mod.table, "newton-modified");
    r.modified_flips = mod.flips;
    return r;
}

RealityWitness necessary_condition_all_real(const BinomialForm& bf) {
    if (bf.degree() < 3)
        throw DegreeError("necessary_condition_all_real: degree >= 3 required");
    RealityWitness w;
    w.shift = 0;
    const int n = bf.degree();
    ElementTable raw = quadratic_elements(bf);
    for (int j = 1; j <= n - 1; ++j) {
        if (raw.quadratic_signs[j] == Sign::Negative) {
            w.element_index = j;
            w.reason = "quadratic element A_" + std::to_string(j) + " is negative";
            return w;
        }
        if (raw.quadratic_signs[j] == Sign::Zero) {
            w.element_index = j;
            w.reason = "quadratic element A_" + std::to_string(j) + " vanishes";
            return w;
        }
    }
    // the interval tests need nonzero coefficients; a translation preserves
    // realness of all roots, so the regularized polynomial decides
    BinomialForm work = bf;
    Polynomial p = bf.to_polynomial();
    if (!is_regular(p)) {
        Regularized reg = regularize(p);
        w.shift = reg.beta;
        work = BinomialForm::of(reg.poly);
        RealityWitness inner = necessary_condition_all_real(work);
        inner.shift = reg.beta;
        return inner;
    }
    ElementTable t = classify_elements(work);
    for (int j = 1; j <= n - 1; ++j)
        if (t.status[j] == ElementStatus::FalselyPositive) {
            w.element_index = j;
            w.reason = "quadratic element A_" + std::to_string(j) + " is falsely positive";
            return w;
        }
    w.all_real_possible = true;
    w.reason = "all interior quadratic elements truly positive";
    return w;
}

RootBoundReport combine_with_descartes(RootBoundReport report, int descartes_pos,
                                       int descartes_neg) {
    auto parity_set = [](int bound, int descartes) {
        std::set<int> s;
        for (int c = descartes; c >= 0; c -= 2)
            if (c <= bound) s.insert(c);
        return s;
    };
    report.positive_set = parity_set(report.max_positive, descartes_pos);
    report.negative_set = parity_set(report.max_negative, descartes_neg);
    return report;
}

}  // namespace newton
