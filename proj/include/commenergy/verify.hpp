#ifndef COMMENERGY_VERIFY_HPP
#define COMMENERGY_VERIFY_HPP

// Cross-checks every registry formula against direct computation on witness
// groups. Hypotheses are verified computationally before a (group, formula)
// pair is admitted: quotient recognition, centralizer counts and
// commutativity degrees are measured on the witness, never assumed.
//
// Predictions come only from the formulas registry; computed values come only
// from the commgraph/spectra/energies pipeline. Before any mismatch is
// reported, the three computation routes (clique closed form, exact
// characteristic polynomial, floating-point Jacobi) are required to agree
// among themselves; disagreement is an internal error, not an erratum.

#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "commenergy/energies.hpp"
#include "commenergy/formulas.hpp"

namespace commenergy {

struct GroupFacts {
    GroupFamilySpec spec;
    long order = 0;
    long center_size = 0;
    long cent_count = 0;
    mpq_class pr;  // commutativity degree
    QuotientTag quotient;
};

inline GroupFacts group_facts(const FiniteGroup& g) {
    GroupFacts f;
    f.spec = g.family;
    f.order = g.order;
    f.center_size = static_cast<long>(center(g).size());
    f.cent_count = centralizer_count(g);
    f.pr = commutativity_degree(g);
    f.quotient = recognize_quotient(g);
    return f;
}

// Hypothesis check: binds formula parameters from measured group facts, or
// refuses the pairing.
inline std::optional<FormulaParams> formula_applicable(const std::string& id, const GroupFacts& f) {
    FormulaParams p;
    auto set = [&](const char* k, long v) { p.kv[k] = v; };
    const Family fam = f.spec.family;
    if (id == "F1") {
        if (f.quotient.kind != QuotientKind::Suzuki2) return std::nullopt;
        set("z", f.center_size);
        return p;
    }
    if (id == "F2") {
        if (f.quotient.kind != QuotientKind::ElemAbelianPSquared) return std::nullopt;
        set("p", f.quotient.p);
        set("z", f.center_size);
        return p;
    }
    if (id == "F3") {
        for (long pr2 = 2; pr2 * pr2 * pr2 <= f.order; ++pr2)
            if (is_prime_long(pr2) && pr2 * pr2 * pr2 == f.order) {
                set("p", pr2);
                return p;
            }
        return std::nullopt;
    }
    if (id == "F4") {
        if (f.quotient.kind == QuotientKind::Dihedral)
            set("m", f.quotient.m);
        else if (f.quotient.kind == QuotientKind::ElemAbelianPSquared && f.quotient.p == 2)
            set("m", 2);  // D4 is the Klein group
        else
            return std::nullopt;
        set("z", f.center_size);
        return p;
    }
    if (id == "F5") {
        if (fam != Family::Metacyclic) return std::nullopt;
        set("m", f.spec.m);
        set("n", f.spec.n);
        return p;
    }
    if (id == "F6") {
        if (fam != Family::Dihedral || f.spec.m <= 2) return std::nullopt;
        set("m", f.spec.m);
        return p;
    }
    if (id == "F7") {
        if (fam != Family::Dicyclic) return std::nullopt;
        set("m", f.spec.m);
        return p;
    }
    if (id == "F8") {
        if (fam != Family::FrobeniusPQ) return std::nullopt;
        set("p", f.spec.p);
        set("q", f.spec.q);
        return p;
    }
    if (id == "F9") {
        if (fam != Family::Quasidihedral) return std::nullopt;
        set("n", f.spec.n);
        return p;
    }
    if (id == "F10") {
        if (fam != Family::PSL2 || f.spec.k < 2) return std::nullopt;
        set("k", f.spec.k);
        return p;
    }
    if (id == "F11") {
        if (fam != Family::GL2) return std::nullopt;
        long q = 1;
        for (long i = 0; i < f.spec.n; ++i) q *= f.spec.p;
        if (q <= 2) return std::nullopt;
        set("q", q);
        return p;
    }
    if (id == "F12a") {
        if (fam != Family::HanakiU) return std::nullopt;
        set("n", f.spec.n);
        return p;
    }
    if (id == "F12b") {
        if (fam != Family::HanakiV) return std::nullopt;
        set("p", f.spec.p);
        set("n", f.spec.n);
        return p;
    }
    if (id == "F13") {
        if (f.cent_count != 4) return std::nullopt;
        set("z", f.center_size);
        return p;
    }
    if (id == "F14") {
        long o = f.order, base = 0;
        for (long pr2 = 2; pr2 <= o; ++pr2)
            if (o % pr2 == 0) {
                base = pr2;
                break;
            }
        while (o % base == 0) o /= base;
        if (o != 1) return std::nullopt;  // not a p-group
        if (f.cent_count != base + 2) return std::nullopt;
        set("p", base);
        set("z", f.center_size);
        return p;
    }
    if (id == "F15") {
        if (f.cent_count != 5) return std::nullopt;
        if (f.quotient.kind == QuotientKind::ElemAbelianPSquared && f.quotient.p == 3)
            set("b", 0);
        else if (f.quotient.kind == QuotientKind::Dihedral && f.quotient.m == 3)
            set("b", 1);
        else
            return std::nullopt;
        set("z", f.center_size);
        return p;
    }
    if (id == "F16") {
        long sp = 0;
        for (long pr2 = 2; pr2 <= f.order; ++pr2)
            if (f.order % pr2 == 0) {
                sp = pr2;
                break;
            }
        mpq_class want = rat(sp * sp + sp - 1, sp * sp * sp);
        if (f.pr != want) return std::nullopt;
        set("p", sp);
        set("z", f.center_size);
        return p;
    }
    if (id == "F17") {
        if (f.pr != rat(5, 8)) return std::nullopt;
        set("z", f.center_size);
        return p;
    }
    if (id == "F18") {
        static const std::vector<mpq_class> prs{rat(5, 14), rat(2, 5), rat(11, 27), rat(1, 2)};
        for (const auto& v : prs)
            if (f.pr == v) return p;  // no bound parameters
        return std::nullopt;
    }
    if (id == "F19" || id == "F20") {
        std::string d = f.spec.descriptor();
        for (const auto& row : formula(id).per_group)
            for (const auto& alias : row.descriptors)
                if (alias == d) return p;
        return std::nullopt;
    }
    return std::nullopt;
}

enum class MatchStatus { ExactMatch, IntervalMatch, Mismatch };

inline const char* status_name(MatchStatus s) {
    switch (s) {
        case MatchStatus::ExactMatch: return "ExactMatch";
        case MatchStatus::IntervalMatch: return "IntervalMatch";
        case MatchStatus::Mismatch: return "Mismatch";
    }
    return "?";
}

struct QuantityCheck {
    std::string quantity;    // E / LE / LE+
    std::string case_label;  // printed case condition (or "set" / "row")
    std::string predicted;
    std::string computed;
    MatchStatus status = MatchStatus::ExactMatch;
    std::string delta;  // exact predicted - computed when both are exact
};

// Comparison of one printed value against one computed energy. Interval
// comparisons refine both sides to width 1e-10 and call them Mismatch only
// when the enclosures are disjoint.
inline QuantityCheck compare_value(const std::string& quantity, const std::string& case_label,
                                   const PrintedValue& pred, const ExactOrInterval& comp) {
    QuantityCheck c;
    c.quantity = quantity;
    c.case_label = case_label;
    c.predicted = pred.str();
    c.computed = comp.str();
    if (pred.is_rational() && comp.exact) {
        if (pred.rat == comp.value) {
            c.status = MatchStatus::ExactMatch;
        } else {
            c.status = MatchStatus::Mismatch;
            c.delta = rat_str(mpq_class(pred.rat - comp.value));
        }
        return c;
    }
    auto [plo, phi] = pred.enclosure();
    mpq_class clo = comp.low(), chi = comp.high();
    bool overlap = phi >= clo && chi >= plo;
    if (overlap) {
        c.status = MatchStatus::IntervalMatch;
    } else {
        c.status = MatchStatus::Mismatch;
        mpq_class gap_lo = clo - phi, gap_hi = plo - chi;
        c.delta = "enclosures disjoint; |gap| >= " + rat_decimal(std::max(gap_lo, gap_hi), 6);
    }
    return c;
}

struct VerificationRecord {
    std::string descriptor;
    std::string formula_id;
    std::string params;
    std::vector<QuantityCheck> checks;
    std::string spectrum_note;
    std::string clique_sizes;  // evidence: computed decomposition, or "not a clique union"
    long vertices = 0;
    long edges = 0;
    bool mismatch() const {
        for (const auto& c : checks)
            if (c.status == MatchStatus::Mismatch) return true;
        return false;
    }
};

namespace detail {

inline std::string sizes_str(const std::optional<std::vector<long>>& sizes) {
    if (!sizes) return "not a clique union";
    std::string s = "{";
    for (size_t i = 0; i < sizes->size(); ++i) {
        if (i) s += ",";
        s += std::to_string((*sizes)[i]);
    }
    return s + "}";
}

}  // namespace detail

// Everything computed once per witness group and shared across its records.
struct WitnessComputation {
    GroupFacts facts;
    long vertices = 0, edges = 0;
    std::optional<std::vector<long>> cliques;
    EnergyReport report;  // at verification tolerance 1e-10

    static WitnessComputation run(const FiniteGroup& g, bool cross_check = true) {
        WitnessComputation w;
        w.facts = group_facts(g);
        CommutingGraph cg = commuting_graph(g);
        w.vertices = cg.n;
        w.edges = cg.edges;
        w.cliques = clique_decomposition(cg);
        mpq_class tol(mpz_class(1), zpow(10, 10));
        w.report = energy_report_from_graph(cg, tol);
        if (cross_check) {
            // Internal consistency gate: the fast path, the exact path and the
            // float oracle must agree before any record may call out a
            // mismatch against a printed value.
            FourMatrices m = matrices(cg);
            SpectrumTriple exact = spectrum_triple(cg, SpectraPath::ForceExact);
            mpq_class w2(mpz_class(1), zpow(2, 40));
            if (w.cliques) {
                SpectrumTriple fast = spectrum_triple(cg, SpectraPath::Auto);
                if (!spectra_equal(fast.A, exact.A, w2) || !spectra_equal(fast.L, exact.L, w2) ||
                    !spectra_equal(fast.Q, exact.Q, w2))
                    throw InternalInconsistency("fast path and exact path disagree on " +
                                                g.family.descriptor());
                EnergyReport er = energy_report_from_graph(cg, tol, SpectraPath::ForceExact);
                if (!(er.E.exact && w.report.E.exact && er.E.value == w.report.E.value) ||
                    !(er.LE.exact && w.report.LE.exact && er.LE.value == w.report.LE.value) ||
                    !(er.LEplus.exact && w.report.LEplus.exact && er.LEplus.value == w.report.LEplus.value))
                    throw InternalInconsistency("fast/exact energy disagreement on " + g.family.descriptor());
            }
            if (!spectra_agree(exact.A, float_eigensolve(m.A), 1e-8) ||
                !spectra_agree(exact.L, float_eigensolve(m.L), 1e-8) ||
                !spectra_agree(exact.Q, float_eigensolve(m.Q), 1e-8))
                throw InternalInconsistency("float oracle disagrees with exact spectra on " +
                                            g.family.descriptor());
        }
        return w;
    }
};

inline VerificationRecord verify_with(const WitnessComputation& w, const std::string& id,
                                      const FormulaParams& params) {
    const FormulaEntry& entry = formula(id);
    VerificationRecord rec;
    rec.descriptor = w.facts.spec.descriptor();
    rec.formula_id = id;
    rec.params = params.str();
    rec.vertices = w.vertices;
    rec.edges = w.edges;
    rec.clique_sizes = detail::sizes_str(w.cliques);

    const std::array<const ExactOrInterval*, 3> computed{&w.report.E, &w.report.LE, &w.report.LEplus};
    const std::array<const char*, 3> names{"E", "LE", "LE+"};

    if (!entry.set_valued) {
        FormulaPrediction pred = evaluate(id, params);
        for (int i = 0; i < 3; ++i)
            rec.checks.push_back(
                compare_value(names[static_cast<size_t>(i)], pred.case_labels[static_cast<size_t>(i)],
                              pred.values[static_cast<size_t>(i)], *computed[static_cast<size_t>(i)]));
        // spectrum-consistency note: printed multiplicities vs vertex count
        if (entry.spectra) {
            auto printed = entry.spectra(params);
            std::string note;
            const std::array<const char*, 3> kinds{"adjacency", "laplacian", "signless"};
            for (int i = 0; i < 3; ++i) {
                long sum = 0;
                for (const auto& e : printed[static_cast<size_t>(i)].entries) sum += e.mult;
                if (sum != w.vertices) {
                    if (!note.empty()) note += "; ";
                    note += std::string("printed ") + kinds[static_cast<size_t>(i)] + " multiplicities sum to " +
                            std::to_string(sum) + ", graph has " + std::to_string(w.vertices) + " vertices";
                }
            }
            rec.spectrum_note = note;
        }
    } else if (!entry.per_group.empty()) {
        // list-style result with per-group printed triples
        const PerGroupRow* row = nullptr;
        for (const auto& r : entry.per_group)
            for (const auto& alias : r.descriptors)
                if (alias == rec.descriptor) row = &r;
        if (!row) throw InapplicableFormula(id + " has no row for " + rec.descriptor);
        for (int i = 0; i < 3; ++i)
            rec.checks.push_back(compare_value(names[static_cast<size_t>(i)], "row " + row->display,
                                               row->printed[static_cast<size_t>(i)],
                                               *computed[static_cast<size_t>(i)]));
        // note when a computed value escapes the statement's value set
        std::string note;
        for (int i = 0; i < 3; ++i) {
            bool member = false;
            for (const auto& v : entry.value_sets[static_cast<size_t>(i)])
                if (compare_value("", "", v, *computed[static_cast<size_t>(i)]).status != MatchStatus::Mismatch)
                    member = true;
            if (!member) {
                if (!note.empty()) note += "; ";
                note += std::string("computed ") + names[static_cast<size_t>(i)] + " not in the printed value set";
            }
        }
        rec.spectrum_note = note;
    } else {
        // pure value-set result (F18): set membership per quantity
        for (int i = 0; i < 3; ++i) {
            QuantityCheck best;
            best.quantity = names[static_cast<size_t>(i)];
            best.case_label = "set membership";
            best.computed = computed[static_cast<size_t>(i)]->str();
            best.status = MatchStatus::Mismatch;
            std::string setrepr;
            for (const auto& v : entry.value_sets[static_cast<size_t>(i)]) {
                if (!setrepr.empty()) setrepr += ", ";
                setrepr += v.str();
                QuantityCheck c = compare_value("", "", v, *computed[static_cast<size_t>(i)]);
                if (c.status != MatchStatus::Mismatch) {
                    best.status = c.status;
                    best.delta.clear();
                }
            }
            best.predicted = "{" + setrepr + "}";
            if (best.status == MatchStatus::Mismatch) best.delta = "no printed set element matches";
            rec.checks.push_back(best);
        }
    }
    return rec;
}

inline VerificationRecord verify_group(const GroupFamilySpec& spec, const std::string& id,
                                       long max_order = kDefaultOrderCap) {
    FiniteGroup g = build(spec, max_order);
    WitnessComputation w = WitnessComputation::run(g);
    auto params = formula_applicable(id, w.facts);
    if (!params)
        throw InapplicableFormula("formula " + id + " is not applicable to " + spec.descriptor() +
                                  " (hypothesis check failed)");
    return verify_with(w, id, *params);
}

// ---- scanning -----------------------------------------------------------------

// Built-in witness pool exercised by `verify --all`, in canonical order.
inline std::vector<std::string> default_witness_pool() {
    std::vector<std::string> pool;
    for (long m = 3; m <= 10; ++m) pool.push_back("dihedral:m=" + std::to_string(m));
    for (long m = 2; m <= 8; ++m) pool.push_back("dicyclic:m=" + std::to_string(m));
    for (long m = 3; m <= 8; ++m)
        for (long n = 1; n <= 3; ++n)
            pool.push_back("metacyclic:m=" + std::to_string(m) + ",n=" + std::to_string(n));
    for (long n = 4; n <= 6; ++n) pool.push_back("quasidihedral:n=" + std::to_string(n));
    for (auto [p, q] : {std::pair<long, long>{2, 3}, {2, 5}, {2, 7}, {3, 7}, {2, 11}, {2, 13}, {3, 13}})
        pool.push_back("frobenius:p=" + std::to_string(p) + ",q=" + std::to_string(q));
    pool.push_back("suzuki2");
    for (long c = 2; c <= 5; ++c) pool.push_back("product:inner=suzuki2,k=" + std::to_string(c));
    pool.push_back("psl2:k=2");
    pool.push_back("psl2:k=3");
    pool.push_back("gl2:p=3,n=1");
    pool.push_back("gl2:p=2,n=2");
    pool.push_back("gl2:p=5,n=1");
    pool.push_back("hanakiU:n=2");
    pool.push_back("hanakiU:n=3");
    for (auto [p, n] : {std::pair<long, long>{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}})
        pool.push_back("hanakiV:p=" + std::to_string(p) + ",n=" + std::to_string(n));
    for (long p : {2L, 3L, 5L})
        for (long mult = 1; mult <= 3; ++mult)
            pool.push_back("elementary:p=" + std::to_string(p) + ",z=" + std::to_string(mult * p));
    pool.push_back("s4");
    pool.push_back("a4");
    pool.push_back("a5");
    pool.push_back("sl23");
    pool.push_back("modular16");
    pool.push_back("pauli16");
    pool.push_back("sg16");
    pool.push_back("product:inner=dihedral:m=4,k=2");
    pool.push_back("product:inner=dicyclic:m=2,k=2");
    pool.push_back("product:inner=dihedral:m=3,k=3");
    pool.push_back("product:inner=a4,k=2");
    return pool;
}

inline std::vector<std::string> formula_ids() {
    std::vector<std::string> ids;
    for (const auto& f : registry()) ids.push_back(f.id);
    return ids;
}

struct ScanOptions {
    std::vector<std::string> formulas;     // empty = all
    std::vector<std::string> descriptors;  // empty = default pool
    int threads = 1;
    long max_order = kDefaultOrderCap;
};

struct ScanResult {
    std::vector<VerificationRecord> records;
    std::vector<std::string> skipped;  // descriptors skipped with reason
};

inline ScanResult scan_all(const ScanOptions& opt) {
    std::vector<std::string> pool = opt.descriptors.empty() ? default_witness_pool() : opt.descriptors;
    std::vector<std::string> wanted = opt.formulas.empty() ? formula_ids() : opt.formulas;

    struct Slot {
        std::vector<VerificationRecord> records;
        std::string skip;
    };
    std::vector<Slot> slots(pool.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= pool.size()) break;
            try {
                GroupFamilySpec spec = GroupFamilySpec::parse(pool[i]);
                FiniteGroup g = build(spec, opt.max_order);
                WitnessComputation w = WitnessComputation::run(g);
                for (const auto& id : wanted)
                    if (auto params = formula_applicable(id, w.facts))
                        slots[i].records.push_back(verify_with(w, id, *params));
            } catch (const CapExceeded& e) {
                slots[i].skip = pool[i] + ": " + e.what();
            } catch (const AbelianGroupError& e) {
                slots[i].skip = pool[i] + ": " + e.what();
            }
        }
    };
    int nthreads = std::max(1, opt.threads);
    std::vector<std::thread> threads;
    for (int t = 1; t < nthreads; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();

    ScanResult out;
    for (auto& s : slots) {
        if (!s.skip.empty()) out.skipped.push_back(s.skip);
        for (auto& r : s.records) out.records.push_back(std::move(r));
    }
    return out;
}

// ---- reporting -----------------------------------------------------------------

inline nlohmann::ordered_json record_json(const VerificationRecord& r) {
    nlohmann::ordered_json j;
    j["group"] = r.descriptor;
    j["formula"] = r.formula_id;
    j["params"] = r.params;
    j["vertices"] = r.vertices;
    j["edges"] = r.edges;
    j["cliqueDecomposition"] = r.clique_sizes;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json cj;
        cj["quantity"] = c.quantity;
        cj["case"] = c.case_label;
        cj["predicted"] = c.predicted;
        cj["computed"] = c.computed;
        cj["status"] = status_name(c.status);
        if (!c.delta.empty()) cj["delta"] = c.delta;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    if (!r.spectrum_note.empty()) j["spectrumNote"] = r.spectrum_note;
    return j;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string records_csv(const std::vector<VerificationRecord>& records) {
    std::string out = "group,formula,params,quantity,case,predicted,computed,status,delta,note\n";
    for (const auto& r : records)
        for (const auto& c : r.checks) {
            out += csv_escape(r.descriptor) + "," + r.formula_id + "," + csv_escape(r.params) + "," + c.quantity +
                   "," + csv_escape(c.case_label) + "," + csv_escape(c.predicted) + "," + csv_escape(c.computed) +
                   "," + status_name(c.status) + "," + csv_escape(c.delta) + "," + csv_escape(r.spectrum_note) +
                   "\n";
        }
    return out;
}

// Static notes about the printed statements themselves, surfaced with every
// errata report next to the per-formula annotations.
inline std::vector<std::string> presentation_notes() {
    return {
        "dicyclic presentation: the printed third relation conjugates the wrong generator (y x y^-1 = y^-1 is "
        "degenerate); the standard relations x^2 = y^m, x y x^-1 = y^-1 are used and give |Q_4m| = 4m with "
        "Z = {1, y^m}",
    };
}

struct ErrataReport {
    // formula id -> mismatching records (only quantities with Mismatch status)
    std::vector<std::pair<std::string, std::vector<VerificationRecord>>> by_formula;
    std::vector<std::string> notes;        // presentation notes + registry annotations
    std::vector<std::string> spectrum_notes;
};

inline ErrataReport errata_report(const std::vector<VerificationRecord>& records) {
    ErrataReport rep;
    for (const auto& id : formula_ids()) {
        std::vector<VerificationRecord> bad;
        for (const auto& r : records)
            if (r.formula_id == id && r.mismatch()) bad.push_back(r);
        if (!bad.empty()) rep.by_formula.push_back({id, std::move(bad)});
    }
    rep.notes = presentation_notes();
    for (const auto& f : registry())
        for (const auto& a : f.annotations) rep.notes.push_back(f.id + ": " + a);
    for (const auto& r : records)
        if (!r.spectrum_note.empty())
            rep.spectrum_notes.push_back(r.descriptor + " / " + r.formula_id + ": " + r.spectrum_note);
    return rep;
}

inline nlohmann::ordered_json errata_json(const ErrataReport& rep) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json by = nlohmann::ordered_json::array();
    for (const auto& [id, recs] : rep.by_formula) {
        nlohmann::ordered_json fj;
        fj["formula"] = id;
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& r : recs) rows.push_back(record_json(r));
        fj["mismatches"] = rows;
        by.push_back(fj);
    }
    j["errata"] = by;
    j["notes"] = rep.notes;
    j["spectrumNotes"] = rep.spectrum_notes;
    return j;
}

// ---- census ----------------------------------------------------------------------

struct CensusRow {
    std::string descriptor;
    bool adjacency_integral = false;
    bool laplacian_integral = false;
    bool signless_integral = false;
    bool super = false;
};

inline std::vector<CensusRow> super_integral_census(const std::vector<std::string>& descriptors,
                                                    long max_order = kDefaultOrderCap) {
    std::vector<CensusRow> rows;
    for (const auto& d : descriptors) {
        FiniteGroup g = build(GroupFamilySpec::parse(d), max_order);
        CommutingGraph cg = commuting_graph(g);
        SpectrumTriple t = spectrum_triple(cg);
        CensusRow r;
        r.descriptor = d;
        r.adjacency_integral = is_integral(t.A);
        r.laplacian_integral = is_integral(t.L);
        r.signless_integral = is_integral(t.Q);
        r.super = r.adjacency_integral && r.laplacian_integral && r.signless_integral;
        rows.push_back(r);
    }
    return rows;
}

}  // namespace commenergy

#endif
