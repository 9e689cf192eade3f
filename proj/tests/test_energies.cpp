#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "commenergy/energies.hpp"

using namespace commenergy;

namespace {

EnergyReport report_of(const std::string& desc, const char* tol = "1e-9",
                       SpectraPath path = SpectraPath::Auto) {
    FiniteGroup g = build(GroupFamilySpec::parse(desc));
    return energy_report(g, tolerance_parse(tol), path);
}

}  // namespace

TEST_CASE("mean degree") {
    CHECK(mean_degree(commuting_graph(build(GroupFamilySpec::parse("suzuki2")))) == rat(42, 19));
    CHECK(mean_degree(commuting_graph(build(GroupFamilySpec::parse("a4")))) == rat(14, 11));
    // complete graph on n vertices has mean degree n-1
    CommutingGraph kn;
    kn.n = 7;
    kn.words = 1;
    kn.bits.assign(7, 0);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if (i != j) kn.bits[static_cast<size_t>(i)] |= 1ull << j;
    kn.edges = 21;
    CHECK(mean_degree(kn) == 6);
}

TEST_CASE("energy examples") {
    CHECK(report_of("suzuki2").E.value == 26);
    // edgeless spectrum: zero matrix
    IntMatrix z;
    z.n = 5;
    z.kind = MatrixKind::Adjacency;
    z.a.assign(25, 0);
    CHECK(energy(exact_spectrum(z)).value == 0);
    // edgeless Laplacian energy with dbar = 0
    IntMatrix zl = z;
    zl.kind = MatrixKind::Laplacian;
    CHECK(laplacian_energy(exact_spectrum(zl), mpq_class(0)).value == 0);
}

TEST_CASE("S4 energies are certified enclosures of the surd values") {
    EnergyReport rep = report_of("s4", "1e-9");
    CHECK_FALSE(rep.E.exact);
    CHECK(rep.E.width() <= rat(1, 1000000000));
    double e_truth = 17 + 4 * std::sqrt(5.0) + std::sqrt(17.0);
    CHECK(rep.E.low().get_d() <= e_truth);
    CHECK(rep.E.high().get_d() >= e_truth);
    double le_truth = (526 + 92 * std::sqrt(13.0)) / 23;
    CHECK(std::abs(rep.LE.approx() - le_truth) < 1e-8);
    double lep_truth = (588 + 92 * std::sqrt(5.0)) / 23;
    CHECK(std::abs(rep.LEplus.approx() - lep_truth) < 1e-8);
}

TEST_CASE("laplacian and signless energies on golden groups") {
    EnergyReport d6 = report_of("dihedral:m=3");
    CHECK(d6.LE.value == rat(16, 5));
    CHECK(d6.LEplus.value == rat(16, 5));
    CHECK(d6.E.value == 2);

    EnergyReport sz = report_of("suzuki2");
    CHECK(sz.LE.value == rat(504, 19));
    CHECK(sz.LEplus.value == rat(484, 19));

    EnergyReport q8 = report_of("dicyclic:m=2");
    CHECK(q8.E.value == 6);
    CHECK(q8.LE.value == 6);
    CHECK(q8.LEplus.value == 6);

    EnergyReport a4 = report_of("a4");
    CHECK(a4.E.value == 12);
    CHECK(a4.LE.value == rat(140, 11));
    CHECK(a4.LEplus.value == rat(124, 11));
}

TEST_CASE("energy_report on matrix-family groups") {
    EnergyReport sl = report_of("sl23");
    CHECK(sl.E.value == 30);
    CHECK(sl.LE.value == rat(408, 11));
    CHECK(sl.LEplus.value == rat(312, 11));

    EnergyReport hu = report_of("hanakiU:n=2");
    CHECK(hu.E.value == 18);
    CHECK(hu.LE.value == 18);
    CHECK(hu.LEplus.value == 18);

    EnergyReport hv = report_of("hanakiV:p=3,n=1");
    CHECK(hv.E.value == 40);
    CHECK(hv.LE.value == 40);
    CHECK(hv.LEplus.value == 40);
}

TEST_CASE("regular clique unions: E = LE = LE+ exactly") {
    for (long p : {2L, 3L, 5L})
        for (long mult = 1; mult <= 3; ++mult) {
            long z = p * mult;
            EnergyReport r =
                report_of("elementary:p=" + std::to_string(p) + ",z=" + std::to_string(z));
            REQUIRE(r.E.exact);
            CHECK(r.E.value == r.LE.value);
            CHECK(r.E.value == r.LEplus.value);
            CHECK(r.E.value == 2 * (p * p - 1) * z - 2 * (p + 1));
        }
}

TEST_CASE("fast path equals general exact path on clique unions") {
    for (const char* d : {"suzuki2", "a4", "sl23", "gl2:p=3,n=1", "dicyclic:m=4", "quasidihedral:n=4",
                          "product:inner=suzuki2,k=2"}) {
        EnergyReport fast = report_of(d, "1e-9", SpectraPath::Auto);
        EnergyReport exact = report_of(d, "1e-9", SpectraPath::ForceExact);
        CHECK(fast.used_clique_fast_path);
        CHECK_FALSE(exact.used_clique_fast_path);
        CHECK(fast.E.value == exact.E.value);
        CHECK(fast.LE.value == exact.LE.value);
        CHECK(fast.LEplus.value == exact.LEplus.value);
    }
}

TEST_CASE("energy dominates the largest adjacency eigenvalue") {
    for (const char* d : {"suzuki2", "s4", "a4", "gl2:p=3,n=1"}) {
        FiniteGroup g = build(GroupFamilySpec::parse(d));
        CommutingGraph cg = commuting_graph(g);
        ExactSpectrum a = exact_spectrum(matrices(cg).A);
        EnergyReport r = energy_report_from_graph(cg);
        CHECK(r.E.high() >= a.entries[0].midpoint());
    }
}

TEST_CASE("tolerance shrink keeps enclosures nested") {
    EnergyReport coarse = report_of("s4", "1e-9");
    EnergyReport fine = report_of("s4", "1e-12");
    CHECK(fine.E.low() >= coarse.E.low());
    CHECK(fine.E.high() <= coarse.E.high());
    CHECK(fine.LE.low() >= coarse.LE.low());
    CHECK(fine.LE.high() <= coarse.LE.high());
    CHECK(fine.LEplus.low() >= coarse.LEplus.low());
    CHECK(fine.LEplus.high() <= coarse.LEplus.high());
    CHECK(fine.E.width() <= rat(1, 1) / rat_z(zpow(10, 12)));
}

TEST_CASE("LE and LE+ invariant under vertex permutation") {
    FiniteGroup g = build(GroupFamilySpec::parse("s4"));
    FourMatrices m = matrices(commuting_graph(g));
    std::mt19937 rng(17);
    std::vector<int> perm(static_cast<size_t>(m.L.n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (const IntMatrix* mm : {&m.L, &m.Q}) {
        IntMatrix pm = *mm;
        for (int i = 0; i < mm->n; ++i)
            for (int j = 0; j < mm->n; ++j)
                pm.at(i, j) = mm->at(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
        ExactSpectrum s1 = exact_spectrum(*mm);
        ExactSpectrum s2 = exact_spectrum(pm);
        CHECK(spectra_equal(s1, s2, mpq_class(mpz_class(1), zpow(2, 30))));
    }
}

TEST_CASE("report json matches the documented schema") {
    EnergyReport rep = report_of("suzuki2");
    std::string dumped = rep.json().dump();
    CHECK(dumped ==
          R"({"E":{"exact":"26"},"LE":{"exact":"504/19"},"LEplus":{"exact":"484/19"},"meanDegree":"42/19","vertices":19,"edges":21})");
}

TEST_CASE("abelian group is rejected") {
    FiniteGroup klein = central_quotient(build(GroupFamilySpec::parse("hanakiV:p=2,n=1")));
    CHECK_THROWS_AS(energy_report(klein), AbelianGroupError);
}
