#include <cstdio>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "newton/classical.hpp"
#include "newton/cubic.hpp"
#include "newton/errors.hpp"
#include "newton/parser.hpp"
#include "newton/polynomial.hpp"
#include "newton/rules.hpp"
#include "newton/threshold.hpp"
#include "newton/verify.hpp"

using json = nlohmann::json;
using namespace newton;

namespace {

Rat parse_rat_arg(const std::string& s) {
    Polynomial p = parse_polynomial(s);
    if (p.degree() > 0) throw ParseError(0, "expected a rational number, got '" + s + "'");
    return p[0];
}

std::string decimal(const Rat& r, unsigned digits) {
    bool exact = decimal_round(r, digits, Round::Nearest) == r;
    return (exact ? "= " : "~ ") + decimal_string(r, digits);
}

const char* status_name(ElementStatus s) {
    switch (s) {
        case ElementStatus::Negative: return "negative";
        case ElementStatus::Zero: return "zero";
        case ElementStatus::TrulyPositive: return "truly-positive";
        case ElementStatus::FalselyPositive: return "falsely-positive";
        case ElementStatus::EndCap: return "end-cap";
    }
    return "?";
}

const char* class_name(CubicRootClass c) {
    switch (c) {
        case CubicRootClass::ThreeRealDistinct: return "three-real-distinct";
        case CubicRootClass::ThreeRealWithDouble: return "three-real-with-double";
        case CubicRootClass::TripleRoot: return "triple-root";
        case CubicRootClass::OneRealOneComplexPair: return "one-real-one-complex-pair";
    }
    return "?";
}

std::string sign_char(Sign s) { return s == Sign::Positive ? "+" : (s == Sign::Negative ? "-" : "0"); }

struct Methods {
    bool newton = false, modified = false, descartes = false, fourier = false;
    bool sturm = false, disc = false, bands = false;
};

Methods parse_methods(const std::string& spec) {
    Methods m;
    std::string item;
    auto apply = [&](const std::string& name) {
        if (name == "all") {
            m = {true, true, true, true, true, true, true};
        } else if (name == "newton") {
            m.newton = true;
        } else if (name == "modified") {
            m.modified = true;
        } else if (name == "descartes") {
            m.descartes = true;
        } else if (name == "fourier") {
            m.fourier = true;
        } else if (name == "sturm") {
            m.sturm = true;
        } else if (name == "discriminant") {
            m.disc = true;
        } else if (name == "bands") {
            m.bands = true;
        } else {
            throw CLI::ValidationError("--methods", "unknown method '" + name + "'");
        }
    };
    for (size_t i = 0, j; i <= spec.size(); i = j + 1) {
        j = spec.find(',', i);
        if (j == std::string::npos) j = spec.size();
        if (j > i) apply(spec.substr(i, j - i));
        if (j == spec.size()) break;
    }
    return m;
}

json tally_json(const SuccessionTally& t) {
    return {{"pP", t.pP}, {"vV", t.vV}, {"pV", t.pV}, {"vP", t.vP}};
}

json bounds_json(const RootBoundReport& r) {
    json j{{"method", r.method},
           {"max_positive", r.max_positive},
           {"max_negative", r.max_negative},
           {"max_real_total", r.max_positive + r.max_negative},
           {"min_complex", r.min_complex},
           {"tally", tally_json(r.tally)}};
    if (!r.modified_flips.empty()) {
        json flips = json::array();
        for (auto& [lo, hi] : r.modified_flips) flips.push_back({lo, hi});
        j["flipped_runs"] = flips;
    }
    return j;
}

json interval_json(const PrescribedInterval& iv, unsigned digits) {
    if (iv.empty()) return "empty";
    auto [lo, hi] = iv.decimal_endpoints(digits);
    return {{"lo", lo}, {"hi", hi}};
}

int run_analyze(const std::string& expr, const std::string& methods_spec,
                const std::string& interval_spec, bool as_json, unsigned digits) {
    Methods m = parse_methods(methods_spec);
    Polynomial p = parse_polynomial(expr);
    if (p.is_zero()) throw ParseError(0, "the zero polynomial has no root structure");
    const int n = p.degree();

    std::optional<std::pair<Rat, Rat>> interval;
    if (!interval_spec.empty()) {
        size_t comma = interval_spec.find(',');
        if (comma == std::string::npos)
            throw ParseError(0, "--interval expects 'q,r'");
        Rat q = parse_rat_arg(interval_spec.substr(0, comma));
        Rat r = parse_rat_arg(interval_spec.substr(comma + 1));
        if (!(q < r)) throw ParseError(0, "--interval requires q < r");
        interval = {q, r};
    }

    json rep;
    rep["schema"] = 1;
    rep["input"] = expr;
    rep["polynomial"] = to_string(p);
    rep["degree"] = n;

    // Newton analysis works on a regularized copy; classical methods on the input.
    std::optional<Regularized> reg;
    std::optional<ElementTable> table;
    std::optional<RootBoundReport> complete, modified;
    if ((m.newton || m.modified || m.descartes) && n >= 2) {
        reg = is_regular(p) ? Regularized{p, Rat(0)} : regularize(p);
        BinomialForm bf = BinomialForm::of(reg->poly);
        table = n >= 3 ? classify_elements(bf) : quadratic_elements(bf);
        complete = newton_complete(bf);
        modified = newton_modified(bf);
        if (reg->beta != 0) rep["regularization"] = {{"beta", rat_string(reg->beta)}};

        json elems;
        json simple = json::array(), quad = json::array(), status = json::array();
        for (const Rat& a : table->simple) simple.push_back(rat_string(a));
        for (const Rat& A : table->quadratic) quad.push_back(rat_string(A));
        for (ElementStatus s : table->status) status.push_back(status_name(s));
        elems["simple"] = simple;
        elems["quadratic"] = quad;
        elems["status"] = status;
        rep["elements"] = elems;

        if (m.newton) rep["newton"] = bounds_json(*complete);
        if (m.modified) {
            rep["modified"] = bounds_json(*modified);
            if (n >= 3) {
                json sectors = json::array();
                for (const CubicSector& s : cubic_sectors(bf)) {
                    sectors.push_back(
                        {{"index", s.index},
                         {"class", class_name(classify_cubic(s))},
                         {"low_interval",
                          interval_json(prescribed_interval(s, IntervalSide::Low), digits)},
                         {"high_interval",
                          interval_json(prescribed_interval(s, IntervalSide::High), digits)}});
                }
                rep["sectors"] = sectors;
            }
            RealityWitness w = n >= 3 ? necessary_condition_all_real(bf)
                                      : RealityWitness{true, -1, "degree < 3", Rat(0)};
            rep["all_real_possible"] = w.all_real_possible;
            if (!w.reason.empty()) rep["all_real_reason"] = w.reason;
        }
    } else if ((m.newton || m.modified) && n < 2) {
        rep["note"] = "degree < 2: element analysis not applicable";
    }

    if (m.descartes) {
        int dpos = descartes_positive(p), dneg = descartes_negative(p);
        json d{{"positive", dpos}, {"negative", dneg}};
        if (modified) {
            int rpos = descartes_positive(reg->poly), rneg = descartes_negative(reg->poly);
            RootBoundReport combined = combine_with_descartes(*modified, rpos, rneg);
            d["combined_positive_set"] = *combined.positive_set;
            d["combined_negative_set"] = *combined.negative_set;
        }
        rep["descartes"] = d;
    }

    if (m.fourier) {
        Rat q = interval ? interval->first : Rat(0);
        Rat r = interval ? interval->second : cauchy_root_bound(p);
        json signs_q = json::array(), signs_r = json::array();
        for (Sign s : fourier_signs(p, q)) signs_q.push_back(sign_char(s));
        for (Sign s : fourier_signs(p, r)) signs_r.push_back(sign_char(s));
        rep["fourier"] = {{"q", rat_string(q)},
                          {"r", rat_string(r)},
                          {"signs_at_q", signs_q},
                          {"signs_at_r", signs_r},
                          {"bound", fourier_bound(p, q, r)}};
    }

    if (m.sturm) {
        RootCounts counts = count_real_roots(p);
        json s{{"real_roots", counts.positive + counts.negative + counts.at_zero},
               {"distinct_real_roots",
                sturm_count(p, Bound::neg_inf(), Bound::pos_inf())},
               {"positive", counts.positive},
               {"negative", counts.negative},
               {"at_zero", counts.at_zero}};
        if (interval)
            s["interval_count"] = sturm_count(p, Bound::at(interval->first),
                                              Bound::at(interval->second));
        rep["sturm"] = s;
    }

    if (m.disc && n >= 2) {
        Rat delta = discriminant(p);
        ComplexCountConstraint c = discriminant_interpretation(delta, n);
        json d{{"value", rat_string(delta)},
               {"decimal", decimal(delta, digits)},
               {"repeated_root", c.repeated_root}};
        if (!c.repeated_root) d["allowed_complex_counts"] = c.allowed_complex_counts;
        rep["discriminant"] = d;
    }

    if (m.bands) {
        json bands = json::array();
        for (const PrivilegedFreeTerm& t : privileged_free_terms(p, digits))
            bands.push_back({{"lo", rat_string(t.lo)}, {"hi", rat_string(t.hi)},
                             {"display", t.display}});
        rep["privileged_free_terms"] = bands;
    }

    if (as_json) {
        std::cout << rep.dump(2) << "\n";
        return 0;
    }

    std::cout << "polynomial: " << rep["polynomial"].get<std::string>() << "  (degree " << n
              << ")\n";
    if (rep.contains("regularization"))
        std::cout << "regularized: analysis below applies to p(x + "
                  << rep["regularization"]["beta"].get<std::string>() << ")\n";
    if (rep.contains("note")) std::cout << rep["note"].get<std::string>() << "\n";
    if (table) {
        std::cout << "simple elements   a_k:";
        for (const Rat& a : table->simple) std::cout << " " << rat_string(a);
        std::cout << "\nquadratic elements A_k:";
        for (const Rat& A : table->quadratic) std::cout << " " << rat_string(A);
        std::cout << "\nstatus:";
        for (int j = 1; j < n; ++j)
            if (table->status[j] != ElementStatus::TrulyPositive)
                std::cout << " A_" << j << "=" << status_name(table->status[j]);
        std::cout << "\n";
    }
    auto print_bounds = [&](const char* label, const RootBoundReport& r) {
        std::cout << label << ": max " << r.max_positive << " positive, max " << r.max_negative
                  << " negative, max " << r.max_positive + r.max_negative << " real total, min "
                  << r.min_complex << " complex  (pP=" << r.tally.pP
                  << " vV=" << r.tally.vV << " pV=" << r.tally.pV << " vP=" << r.tally.vP << ")";
        for (auto& [lo, hi] : r.modified_flips)
            std::cout << "  flipped A_" << lo << "..A_" << hi;
        std::cout << "\n";
    };
    if (m.newton && complete) print_bounds("newton (complete rule)", *complete);
    if (m.modified && modified) {
        print_bounds("newton (modified)", *modified);
        if (rep.contains("sectors"))
            for (auto& s : rep["sectors"])
                std::cout << "  sector " << s["index"].get<int>() << ": "
                          << s["class"].get<std::string>() << "\n";
        if (rep.contains("all_real_possible"))
            std::cout << "all roots real possible: "
                      << (rep["all_real_possible"].get<bool>() ? "yes" : "no")
                      << (rep.contains("all_real_reason")
                              ? "  (" + rep["all_real_reason"].get<std::string>() + ")"
                              : "")
                      << "\n";
    }
    if (rep.contains("descartes")) {
        auto& d = rep["descartes"];
        std::cout << "descartes: " << d["positive"].get<int>() << " positive, "
                  << d["negative"].get<int>() << " negative";
        if (d.contains("combined_positive_set"))
            std::cout << "  combined parity sets: positive " << d["combined_positive_set"].dump()
                      << ", negative " << d["combined_negative_set"].dump();
        std::cout << "\n";
    }
    if (rep.contains("fourier")) {
        auto& f = rep["fourier"];
        auto join = [](const json& arr) {
            std::string s;
            for (auto& e : arr) s += e.get<std::string>();
            return s;
        };
        std::cout << "fourier on (" << f["q"].get<std::string>() << ", "
                  << f["r"].get<std::string>() << "]: bound " << f["bound"].get<int>()
                  << "  signs " << join(f["signs_at_q"]) << " / " << join(f["signs_at_r"]) << "\n";
    }
    if (rep.contains("sturm")) {
        auto& s = rep["sturm"];
        std::cout << "sturm: " << s["real_roots"].get<int>() << " real roots ("
                  << s["distinct_real_roots"].get<int>() << " distinct; "
                  << s["positive"].get<int>() << " positive, " << s["negative"].get<int>()
                  << " negative, " << s["at_zero"].get<int>() << " at zero)";
        if (s.contains("interval_count"))
            std::cout << "  in interval: " << s["interval_count"].get<int>();
        std::cout << "\n";
    }
    if (rep.contains("discriminant")) {
        auto& d = rep["discriminant"];
        std::cout << "discriminant: " << d["value"].get<std::string>() << "  "
                  << d["decimal"].get<std::string>();
        if (d["repeated_root"].get<bool>())
            std::cout << "  (repeated root)";
        else
            std::cout << "  complex-pair counts allowed: " << d["allowed_complex_counts"].dump();
        std::cout << "\n";
    }
    if (rep.contains("privileged_free_terms")) {
        std::cout << "privileged free terms:";
        if (rep["privileged_free_terms"].empty()) std::cout << " (none: no stationary points)";
        for (auto& t : rep["privileged_free_terms"])
            std::cout << " " << t["display"].get<std::string>();
        std::cout << "\n";
    }
    return 0;
}

std::string element_summary(const Polynomial& inst) {
    BinomialForm bf = BinomialForm::of(inst);
    const int n = bf.degree();
    std::string neg, zero;
    for (int j = 1; j < n; ++j) {
        Rat A = bf.a[j] * bf.a[j] - bf.a[j - 1] * bf.a[j + 1];
        if (A < 0) neg += (neg.empty() ? "" : ",") + ("A" + std::to_string(j));
        if (A == 0) zero += (zero.empty() ? "" : ",") + ("A" + std::to_string(j));
    }
    if (!zero.empty()) return "zero {" + zero + "}" + (neg.empty() ? "" : " negative {" + neg + "}");
    if (!neg.empty()) return "negative {" + neg + "}";
    ElementTable t = classify_elements(bf);
    std::string falsely;
    for (int j = 1; j < n; ++j)
        if (t.status[j] == ElementStatus::FalselyPositive)
            falsely += (falsely.empty() ? "" : ",") + ("A" + std::to_string(j));
    return falsely.empty() ? "all truly positive" : "falsely positive {" + falsely + "}";
}

int run_sweep(const std::string& expr, const std::string& param, const std::string& from_s,
              const std::string& to_s, const std::string& step_s, unsigned digits) {
    ParametricPolynomial pp = parse_parametric(expr, param);
    Rat from = parse_rat_arg(from_s), to = parse_rat_arg(to_s), step = parse_rat_arg(step_s);
    if (step <= 0) throw ParseError(0, "--step must be positive");
    for (Rat q = from; q <= to; q += step) {
        Polynomial inst = pp.instantiate(q);
        std::cout << param << " = " << rat_string(q) << " (" << decimal(q, digits) << ")";
        if (inst.degree() < 1) {
            std::cout << "  degenerate (degree " << inst.degree() << ")\n";
            continue;
        }
        RootCounts counts = count_real_roots(inst);
        std::cout << "  real roots: " << counts.positive + counts.negative + counts.at_zero;
        if (inst.degree() >= 3) {
            std::cout << "  elements: " << element_summary(inst);
            Regularized reg = is_regular(inst) ? Regularized{inst, Rat(0)} : regularize(inst);
            RootBoundReport mod = newton_modified(BinomialForm::of(reg.poly));
            std::cout << "  modified bounds: " << mod.max_positive << "+/" << mod.max_negative
                      << "-";
        }
        std::cout << "\n";
    }
    return 0;
}

int run_threshold(const std::string& expr, const std::string& param,
                  const std::string& predicate, const std::string& lo_s, const std::string& hi_s,
                  const std::string& width_s, unsigned digits) {
    ParametricPolynomial pp = parse_parametric(expr, param);
    Rat lo = parse_rat_arg(lo_s), hi = parse_rat_arg(hi_s), width = parse_rat_arg(width_s);

    std::function<bool(const Rat&)> verdict;
    if (predicate == "falsely-positive") {
        verdict = [&pp](const Rat& q) {
            Polynomial inst = pp.instantiate(q);
            if (inst.degree() < 3)
                throw AnalysisError("threshold: degree >= 3 required at " + rat_string(q));
            BinomialForm bf = BinomialForm::of(inst);
            const int n = bf.degree();
            for (int j = 1; j < n; ++j)
                if (bf.a[j] * bf.a[j] - bf.a[j - 1] * bf.a[j + 1] <= 0) return true;
            ElementTable t = classify_elements(bf);
            for (ElementStatus s : t.status)
                if (s == ElementStatus::FalselyPositive) return true;
            return false;
        };
    } else if (predicate.rfind("sign:A", 0) == 0) {
        int k = std::stoi(predicate.substr(6));
        verdict = [&pp, k](const Rat& q) {
            BinomialForm bf = BinomialForm::of(pp.instantiate(q));
            if (k < 0 || k > bf.degree())
                throw AnalysisError("threshold: element index out of range");
            Rat A = bf.a[k] * bf.a[k];
            if (k > 0 && k < bf.degree()) A -= bf.a[k - 1] * bf.a[k + 1];
            return A > 0;
        };
    } else {
        throw CLI::ValidationError("--predicate", "expected falsely-positive or sign:A<k>");
    }

    auto [a, b] = isolate_threshold(verdict, lo, hi, width);
    std::cout << "threshold of '" << predicate << "' in [" << rat_string(a) << ", "
              << rat_string(b) << "]\n"
              << "  " << decimal(a, digits) << " .. " << decimal(b, digits) << "  (width "
              << rat_string(b - a) << ")\n";
    return 0;
}

int run_audit_cmd(std::uint64_t seed, int count, int max_degree) {
    AuditSummary bounds = run_audit(seed, count, max_degree, 50);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> deg(3, std::max(4, max_degree));
    int identity_checked = 0;
    std::vector<AuditFinding> identity_failures;
    auto record = [&](AuditFinding f) {
        ++identity_checked;
        if (!f.pass) identity_failures.push_back(std::move(f));
    };
    for (int i = 0; i < count; ++i) {
        Polynomial p = random_polynomial(rng, deg(rng), 20);
        record(check_eq12_chain(p));
        record(check_ratio_identities(p));
        Polynomial cubic = random_polynomial(rng, 3, 20);
        record(check_rosset(cubic_sectors(BinomialForm::of(cubic))[0]));
        record(check_disc_of_disc(DiscKind::Cubic, BinomialForm::of(cubic).a));
        record(check_disc_of_disc(DiscKind::Quartic,
                                  BinomialForm::of(random_polynomial(rng, 4, 20)).a));
    }
    int failures = static_cast<int>(bounds.failures.size() + identity_failures.size());
    std::cout << "audit: " << bounds.checked << " soundness checks, " << identity_checked
              << " identity checks, " << failures << " failures (seed " << seed << ")\n";
    auto dump = [](const AuditFinding& f) {
        std::cerr << "FAIL " << f.check << " on " << to_string(f.polynomial) << ": " << f.detail
                  << "\n";
    };
    for (const AuditFinding& f : bounds.failures) dump(f);
    for (const AuditFinding& f : identity_failures) dump(f);
    return failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact root-bound analysis via the modified Newton rule of signs"};
    app.require_subcommand(1);

    std::string expr, methods = "all", interval, param, predicate;
    std::string from_s, to_s, step_s, lo_s, hi_s, width_s = "1/10000";
    bool as_json = false;
    unsigned digits = 3;
    std::uint64_t seed = 42;
    int count = 1000, max_degree = 8;

    auto* analyze = app.add_subcommand(
        "analyze", "Run selected root-counting methods on one polynomial");
    analyze->add_option("expr", expr, "polynomial, e.g. \"x^3 - (1/2)x + 0.25\"")->required();
    analyze->add_option("--methods", methods,
                        "comma list of newton,modified,descartes,fourier,sturm,discriminant,"
                        "bands,all");
    analyze->add_option("--interval", interval, "half-open interval 'q,r' for sturm/fourier");
    analyze->add_flag("--json", as_json, "machine-readable report (schema 1)");
    analyze->add_option("--digits", digits, "decimal digits for displays")->check(CLI::Range(1, 50));

    auto* sweep = app.add_subcommand("sweep", "Classify a parametric family over a grid");
    sweep->add_option("expr", expr, "parametric polynomial")->required();
    sweep->add_option("--param", param, "parameter name")->required();
    sweep->add_option("--from", from_s)->required();
    sweep->add_option("--to", to_s)->required();
    sweep->add_option("--step", step_s)->required();
    sweep->add_option("--digits", digits)->check(CLI::Range(1, 50));

    auto* threshold = app.add_subcommand(
        "threshold", "Bisect a classification boundary of a parametric family");
    threshold->add_option("expr", expr, "parametric polynomial")->required();
    threshold->add_option("--param", param)->required();
    threshold->add_option("--predicate", predicate, "falsely-positive or sign:A<k>")->required();
    threshold->add_option("--lo", lo_s)->required();
    threshold->add_option("--hi", hi_s)->required();
    threshold->add_option("--width", width_s, "bracket width (default 1/10000)");
    threshold->add_option("--digits", digits)->check(CLI::Range(1, 50));

    auto* audit = app.add_subcommand("audit", "Seeded identity and soundness audit");
    audit->add_option("--count", count)->check(CLI::PositiveNumber);
    audit->add_option("--seed", seed);
    audit->add_option("--max-degree", max_degree)->check(CLI::Range(3, 12));

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze))
            return run_analyze(expr, methods, interval, as_json, digits);
        if (app.got_subcommand(sweep))
            return run_sweep(expr, param, from_s, to_s, step_s, digits);
        if (app.got_subcommand(threshold))
            return run_threshold(expr, param, predicate, lo_s, hi_s, width_s, digits);
        if (app.got_subcommand(audit)) return run_audit_cmd(seed, count, max_degree);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const AnalysisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
