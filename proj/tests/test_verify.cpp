#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "commenergy/verify.hpp"

using namespace commenergy;

namespace {

const QuantityCheck& check_of(const VerificationRecord& rec, const std::string& quantity) {
    for (const auto& c : rec.checks)
        if (c.quantity == quantity) return c;
    REQUIRE(false);
    return rec.checks.front();
}

}  // namespace

TEST_CASE("D6 against the dihedral corollary: LE matches, E off by one") {
    VerificationRecord rec = verify_group(GroupFamilySpec::parse("dihedral:m=3"), "F6");
    CHECK(check_of(rec, "LE").status == MatchStatus::ExactMatch);
    CHECK(check_of(rec, "LE").predicted == "16/5");
    CHECK(check_of(rec, "LE+").status == MatchStatus::ExactMatch);
    CHECK(check_of(rec, "E").status == MatchStatus::Mismatch);
    CHECK(check_of(rec, "E").predicted == "3");
    CHECK(check_of(rec, "E").computed == "2");
    CHECK(check_of(rec, "E").delta == "1");
}

TEST_CASE("GL(2,3): printed E is 21/2, computation gives 66") {
    VerificationRecord rec = verify_group(GroupFamilySpec::parse("gl2:p=3,n=1"), "F11");
    const auto& e = check_of(rec, "E");
    CHECK(e.status == MatchStatus::Mismatch);
    CHECK(e.predicted == "21/2");
    CHECK(e.computed == "66");
    CHECK(rec.clique_sizes == "{2,2,2,2,2,2,4,4,4,4,6,6,6}");
}

TEST_CASE("Q8 against the dicyclic corollary: all three match at 6") {
    VerificationRecord rec = verify_group(GroupFamilySpec::parse("dicyclic:m=2"), "F7");
    for (const auto& c : rec.checks) {
        CHECK(c.status == MatchStatus::ExactMatch);
        CHECK(c.computed == "6");
    }
}

TEST_CASE("inapplicable pairings are refused") {
    CHECK_THROWS_AS(verify_group(GroupFamilySpec::parse("dihedral:m=3"), "F11"), InapplicableFormula);
    CHECK_THROWS_AS(verify_group(GroupFamilySpec::parse("s4"), "F1"), InapplicableFormula);
}

TEST_CASE("dihedral scan m = 3..10 yields one record per group") {
    ScanOptions opt;
    opt.formulas = {"F6"};
    for (long m = 3; m <= 10; ++m) opt.descriptors.push_back("dihedral:m=" + std::to_string(m));
    ScanResult res = scan_all(opt);
    CHECK(res.records.size() == 8);
    for (const auto& r : res.records) CHECK(r.checks.size() == 3);
}

TEST_CASE("elementary witnesses all match the elementary-abelian formula") {
    ScanOptions opt;
    opt.formulas = {"F2"};
    for (long z : {3L, 6L, 9L}) opt.descriptors.push_back("elementary:p=3,z=" + std::to_string(z));
    ScanResult res = scan_all(opt);
    CHECK(res.records.size() == 3);
    for (const auto& r : res.records)
        for (const auto& c : r.checks) CHECK(c.status == MatchStatus::ExactMatch);
}

TEST_CASE("Sz(2) central products: printed LE+ fails for z > 1") {
    ScanOptions opt;
    opt.formulas = {"F1"};
    opt.descriptors = {"suzuki2", "product:inner=suzuki2,k=2", "product:inner=suzuki2,k=3",
                       "product:inner=suzuki2,k=5"};
    ScanResult res = scan_all(opt);
    REQUIRE(res.records.size() == 4);
    CHECK(check_of(res.records[0], "LE+").status == MatchStatus::ExactMatch);
    for (size_t i = 1; i < 4; ++i) {
        CHECK(check_of(res.records[i], "E").status == MatchStatus::ExactMatch);
        CHECK(check_of(res.records[i], "LE").status == MatchStatus::ExactMatch);
        CHECK(check_of(res.records[i], "LE+").status == MatchStatus::Mismatch);
    }
    // z = 2 witness: printed -770/19 against computed 1350/19
    CHECK(check_of(res.records[1], "LE+").predicted == "-770/19");
    CHECK(check_of(res.records[1], "LE+").computed == "1350/19");
}

TEST_CASE("F4 matches where its printed cases are right and fails on the m >= 5 signless case") {
    VerificationRecord d6z3 = verify_group(GroupFamilySpec::parse("product:inner=dihedral:m=3,k=3"), "F4");
    for (const auto& c : d6z3.checks) CHECK(c.status == MatchStatus::ExactMatch);

    VerificationRecord d10 = verify_group(GroupFamilySpec::parse("dihedral:m=5"), "F4");
    CHECK(check_of(d10, "E").status == MatchStatus::ExactMatch);
    CHECK(check_of(d10, "LE").status == MatchStatus::ExactMatch);
    CHECK(check_of(d10, "LE+").status == MatchStatus::Mismatch);  // printed 6, true 40/3
    CHECK(check_of(d10, "LE+").computed == "40/3");
}

TEST_CASE("F18 set membership flags the witnesses the sets miss") {
    VerificationRecord d6 = verify_group(GroupFamilySpec::parse("dihedral:m=3"), "F18");
    CHECK(check_of(d6, "E").status == MatchStatus::Mismatch);      // computed 2 not in {11,7,6,3}
    CHECK(check_of(d6, "LE").status == MatchStatus::ExactMatch);   // 16/5 in set
    CHECK(check_of(d6, "LE+").status == MatchStatus::ExactMatch);  // 16/5 in set

    // Pr(D8) = 5/8 is outside the printed Pr set, so F18 does not pair with D8
    CHECK_THROWS_AS(verify_group(GroupFamilySpec::parse("dihedral:m=4"), "F18"), InapplicableFormula);

    VerificationRecord d10 = verify_group(GroupFamilySpec::parse("dihedral:m=5"), "F18");
    CHECK(check_of(d10, "E").status == MatchStatus::ExactMatch);   // 6 in set
    CHECK(check_of(d10, "LE").status == MatchStatus::ExactMatch);  // 16 in set
    CHECK(check_of(d10, "LE+").status == MatchStatus::Mismatch);   // computed 40/3 not in set

    // the Heisenberg group of order 27 has Pr = 11/27 and energies far outside the sets
    VerificationRecord h27 = verify_group(GroupFamilySpec::parse("hanakiV:p=3,n=1"), "F18");
    CHECK(check_of(h27, "E").status == MatchStatus::Mismatch);  // computed 40
}

TEST_CASE("F8 spectrum note at (3,7)") {
    VerificationRecord rec = verify_group(GroupFamilySpec::parse("frobenius:p=3,q=7"), "F8");
    CHECK(rec.spectrum_note.find("21") != std::string::npos);
    CHECK(rec.spectrum_note.find("20") != std::string::npos);
    CHECK(check_of(rec, "E").status == MatchStatus::Mismatch);  // printed 25, computed 24
    CHECK(check_of(rec, "E").computed == "24");
}

TEST_CASE("F8 at (2,3): printed LE+ is 3, computed 16/5") {
    VerificationRecord rec = verify_group(GroupFamilySpec::parse("frobenius:p=2,q=3"), "F8");
    const auto& c = check_of(rec, "LE+");
    CHECK(c.status == MatchStatus::Mismatch);
    CHECK(c.predicted == "3");
    CHECK(c.computed == "16/5");
}

TEST_CASE("errata report groups mismatches by formula") {
    ScanOptions opt;
    opt.formulas = {"F11"};
    opt.descriptors = {"gl2:p=3,n=1", "gl2:p=2,n=2"};
    ScanResult res = scan_all(opt);
    ErrataReport rep = errata_report(res.records);
    REQUIRE(rep.by_formula.size() == 1);
    CHECK(rep.by_formula[0].first == "F11");
    CHECK(rep.by_formula[0].second.size() == 2);
    CHECK_FALSE(rep.notes.empty());  // presentation + registry annotations
}

TEST_CASE("errata report is empty on the formulas that check out") {
    ScanOptions opt;
    opt.formulas = {"F2", "F13", "F17"};
    opt.descriptors = {"elementary:p=2,z=2", "elementary:p=2,z=4", "elementary:p=3,z=3",
                       "dihedral:m=4",       "dicyclic:m=2",       "hanakiU:n=2"};
    ScanResult res = scan_all(opt);
    CHECK_FALSE(res.records.empty());
    ErrataReport rep = errata_report(res.records);
    CHECK(rep.by_formula.empty());
}

TEST_CASE("hypothesis checks gate the section-3 formulas") {
    FiniteGroup d8 = build(GroupFamilySpec::parse("dihedral:m=4"));
    GroupFacts f8 = group_facts(d8);
    CHECK(f8.cent_count == 4);
    CHECK(f8.pr == rat(5, 8));
    CHECK(formula_applicable("F13", f8).has_value());
    CHECK(formula_applicable("F17", f8).has_value());
    CHECK_FALSE(formula_applicable("F15", f8).has_value());

    FiniteGroup d6 = build(GroupFamilySpec::parse("dihedral:m=3"));
    GroupFacts f6 = group_facts(d6);
    CHECK(f6.cent_count == 5);
    CHECK(f6.pr == rat(1, 2));
    auto p15 = formula_applicable("F15", f6);
    REQUIRE(p15.has_value());
    CHECK(p15->at("b") == 1);  // dihedral branch

    FiniteGroup h27 = build(GroupFamilySpec::parse("hanakiV:p=3,n=1"));
    GroupFacts f27 = group_facts(h27);
    CHECK(f27.cent_count == 5);
    CHECK(f27.pr == rat(11, 27));
    auto p15b = formula_applicable("F15", f27);
    REQUIRE(p15b.has_value());
    CHECK(p15b->at("b") == 0);  // elementary-abelian branch
    CHECK(formula_applicable("F14", f27).has_value());  // (p+2)-centralizer p-group

    // Frobenius group of order 21: Pr = 5/21, outside every Pr-styled hypothesis
    FiniteGroup f21 = build(GroupFamilySpec::parse("frobenius:p=3,q=7"));
    GroupFacts ff = group_facts(f21);
    CHECK(ff.pr == rat(5, 21));
    CHECK_FALSE(formula_applicable("F16", ff).has_value());
    CHECK_FALSE(formula_applicable("F17", ff).has_value());
    CHECK_FALSE(formula_applicable("F18", ff).has_value());
}

TEST_CASE("cap-violating scan entries are skipped with notice") {
    ScanOptions opt;
    opt.descriptors = {"dihedral:m=3", "psl2:k=4"};  // PSL(2,16) has order 4080
    ScanResult res = scan_all(opt);
    REQUIRE(res.skipped.size() == 1);
    CHECK(res.skipped[0].find("psl2:k=4") != std::string::npos);
    CHECK_FALSE(res.records.empty());
}

TEST_CASE("super integral census") {
    auto rows = super_integral_census({"sl23", "s4", "dicyclic:m=2", "suzuki2", "gl2:p=3,n=1"});
    CHECK(rows[0].super);        // SL(2,3)
    CHECK_FALSE(rows[1].super);  // S4
    CHECK_FALSE(rows[1].adjacency_integral);
    CHECK(rows[2].super);
    CHECK(rows[3].super);
    CHECK(rows[4].super);
}

TEST_CASE("scan output is deterministic across thread counts") {
    ScanOptions opt1;
    opt1.descriptors = {"dihedral:m=3", "dihedral:m=4", "dicyclic:m=2", "suzuki2", "a4", "frobenius:p=2,q=5"};
    opt1.threads = 1;
    ScanOptions opt4 = opt1;
    opt4.threads = 4;
    ScanResult r1 = scan_all(opt1);
    ScanResult r4 = scan_all(opt4);
    std::string csv1 = records_csv(r1.records);
    std::string csv4 = records_csv(r4.records);
    CHECK(csv1 == csv4);
    CHECK(records_csv(scan_all(opt4).records) == csv4);  // stable across repeated runs
    // json route too, byte for byte
    auto dump = [](const std::vector<VerificationRecord>& recs) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : recs) arr.push_back(record_json(r));
        return arr.dump();
    };
    CHECK(dump(r1.records) == dump(r4.records));
}

TEST_CASE("printed-spectra invariant: consistent multiplicities mean equal energies iff equal spectra") {
    // For witnesses where the printed lists are complete (mult sum == |v|),
    // energies recomputed from the printed spectra agree with energies from
    // the computed spectra exactly when the spectra agree as multisets.
    struct Case {
        const char* desc;
        const char* id;
        bool spectra_should_match;
    };
    for (const Case& c : {Case{"suzuki2", "F1", true}, Case{"hanakiV:p=3,n=1", "F12b", true},
                          Case{"elementary:p=2,z=2", "F2", true}, Case{"quasidihedral:n=4", "F9", true}}) {
        FiniteGroup g = build(GroupFamilySpec::parse(c.desc));
        WitnessComputation w = WitnessComputation::run(g, false);
        auto params = formula_applicable(c.id, w.facts);
        REQUIRE(params.has_value());
        auto printed = predicted_spectra(c.id, *params);
        REQUIRE(printed.has_value());
        CommutingGraph cg = commuting_graph(g);
        SpectrumTriple computed = spectrum_triple(cg);
        mpq_class dbar = mean_degree(cg);
        mpq_class width(mpz_class(1), zpow(2, 30));
        const std::array<const ExactSpectrum*, 3> comp{&computed.A, &computed.L, &computed.Q};
        for (int i = 0; i < 3; ++i) {
            const ExactSpectrum& ps = (*printed)[static_cast<size_t>(i)];
            long sum = 0;
            for (const auto& e : ps.entries) sum += e.mult;
            REQUIRE(sum == cg.n);  // complete printed lists on these witnesses
            bool eq = spectra_equal(ps, *comp[static_cast<size_t>(i)], width);
            CHECK(eq == c.spectra_should_match);
            ExactOrInterval from_printed, from_computed;
            if (i == 0) {
                from_printed = energy(ps);
                from_computed = energy(*comp[0]);
            } else if (i == 1) {
                from_printed = laplacian_energy(ps, dbar);
                from_computed = laplacian_energy(*comp[1], dbar);
            } else {
                from_printed = signless_energy(ps, dbar);
                from_computed = signless_energy(*comp[2], dbar);
            }
            CHECK((from_printed.value == from_computed.value) == eq);
        }
    }
}
