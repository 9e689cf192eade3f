#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "commenergy/energies.hpp"
#include "commenergy/spectra.hpp"

using namespace commenergy;

namespace {

IntMatrix make(MatrixKind kind, std::vector<std::vector<long long>> rows) {
    IntMatrix m;
    m.kind = kind;
    m.n = static_cast<int>(rows.size());
    for (const auto& r : rows)
        for (long long v : r) m.a.push_back(v);
    return m;
}

// Independent oracle: char poly by cofactor expansion of xI - M over Z[x].
ZPoly charpoly_bruteforce(const IntMatrix& m) {
    int n = m.n;
    std::vector<std::vector<ZPoly>> entry(static_cast<size_t>(n), std::vector<ZPoly>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ZPoly p{mpz_class(static_cast<long>(-m.at(i, j)))};
            if (i == j) p.push_back(1);
            ztrim(p);
            entry[static_cast<size_t>(i)][static_cast<size_t>(j)] = p;
        }
    std::function<ZPoly(std::vector<int>, std::vector<int>)> det = [&](std::vector<int> rows,
                                                                       std::vector<int> cols) -> ZPoly {
        if (rows.empty()) return ZPoly{1};
        ZPoly acc;
        for (size_t k = 0; k < cols.size(); ++k) {
            const ZPoly& e = entry[static_cast<size_t>(rows[0])][static_cast<size_t>(cols[k])];
            if (e.empty()) continue;
            std::vector<int> r2(rows.begin() + 1, rows.end());
            std::vector<int> c2 = cols;
            c2.erase(c2.begin() + static_cast<long>(k));
            ZPoly sub = zmul(e, det(r2, c2));
            if (k % 2)
                for (auto& c : sub) c = -c;
            if (acc.size() < sub.size()) acc.resize(sub.size());
            for (size_t i = 0; i < sub.size(); ++i) acc[i] += sub[i];
            ztrim(acc);
        }
        return acc;
    };
    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    return det(idx, idx);
}

IntMatrix clique_union_matrix(const std::vector<long>& sizes, MatrixKind kind) {
    long n = 0;
    for (long a : sizes) n += a;
    IntMatrix m;
    m.kind = kind;
    m.n = static_cast<int>(n);
    m.a.assign(static_cast<size_t>(n) * n, 0);
    long start = 0;
    for (long a : sizes) {
        for (long i = start; i < start + a; ++i)
            for (long j = start; j < start + a; ++j) {
                if (i == j) {
                    if (kind == MatrixKind::Laplacian || kind == MatrixKind::Signless || kind == MatrixKind::Degree)
                        m.at(static_cast<int>(i), static_cast<int>(j)) = a - 1;
                } else {
                    if (kind == MatrixKind::Adjacency || kind == MatrixKind::Signless)
                        m.at(static_cast<int>(i), static_cast<int>(j)) = 1;
                    else if (kind == MatrixKind::Laplacian)
                        m.at(static_cast<int>(i), static_cast<int>(j)) = -1;
                }
            }
        start += a;
    }
    return m;
}

void all_partitions(long n, long maxpart, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (long a = std::min(n, maxpart); a >= 1; --a) {
        cur.push_back(a);
        all_partitions(n - a, a, cur, out);
        cur.pop_back();
    }
}

mpq_class entry_sum(const ExactSpectrum& s, int power) {
    // returns midpoint-based sum for intervals; exact for integers
    mpq_class lo = 0;
    for (const auto& e : s.entries) {
        mpq_class v = e.midpoint();
        mpq_class t = 1;
        for (int i = 0; i < power; ++i) t *= v;
        lo += t * e.mult;
    }
    return lo;
}

}  // namespace

TEST_CASE("char poly of tiny named matrices") {
    // A(K2) = x^2 - 1
    auto k2 = make(MatrixKind::Adjacency, {{0, 1}, {1, 0}});
    CHECK(char_poly(k2).coeffs == ZPoly{-1, 0, 1});
    // A(K3) = x^3 - 3x - 2
    auto k3 = make(MatrixKind::Adjacency, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK(char_poly(k3).coeffs == ZPoly{-2, -3, 0, 1});
    // L(K2) = x^2 - 2x
    auto lk2 = make(MatrixKind::Laplacian, {{1, -1}, {-1, 1}});
    CHECK(char_poly(lk2).coeffs == ZPoly{0, -2, 1});
}

TEST_CASE("Berkowitz agrees with cofactor-expansion oracle on random symmetric matrices") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int n = 1; n <= 6; ++n) {
        for (int t = 0; t < 30; ++t) {
            IntMatrix m;
            m.n = n;
            m.kind = MatrixKind::Adjacency;
            m.a.assign(static_cast<size_t>(n) * n, 0);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    long long v = d(rng);
                    m.at(i, j) = v;
                    m.at(j, i) = v;
                }
            REQUIRE(char_poly(m).coeffs == charpoly_bruteforce(m));
        }
    }
}

TEST_CASE("coefficient of x^{d-1} is -trace") {
    FiniteGroup g = build(GroupFamilySpec::parse("suzuki2"));
    FourMatrices m = matrices(commuting_graph(g));
    for (const IntMatrix* mm : {&m.A, &m.L, &m.Q}) {
        CharPoly cp = char_poly(*mm);
        CHECK(cp.coeffs[static_cast<size_t>(cp.degree() - 1)] == static_cast<long>(-mm->trace()));
        CHECK(cp.coeffs.back() == 1);  // monic
    }
}

TEST_CASE("exact spectrum of Sz(2)") {
    FiniteGroup g = build(GroupFamilySpec::parse("suzuki2"));
    FourMatrices m = matrices(commuting_graph(g));
    ExactSpectrum s = exact_spectrum(m.A);
    REQUIRE(s.entries.size() == 3);
    CHECK(s.entries[0].value == 3);
    CHECK(s.entries[0].mult == 1);
    CHECK(s.entries[1].value == 2);
    CHECK(s.entries[1].mult == 5);
    CHECK(s.entries[2].value == -1);
    CHECK(s.entries[2].mult == 13);
}

TEST_CASE("zero matrix spectrum") {
    IntMatrix z;
    z.n = 4;
    z.kind = MatrixKind::Adjacency;
    z.a.assign(16, 0);
    ExactSpectrum s = exact_spectrum(z);
    REQUIRE(s.entries.size() == 1);
    CHECK(s.entries[0].value == 0);
    CHECK(s.entries[0].mult == 4);
}

TEST_CASE("S4 spectrum has sqrt(5) pair with multiplicity 2") {
    FiniteGroup g = build(GroupFamilySpec::parse("s4"));
    FourMatrices m = matrices(commuting_graph(g));
    ExactSpectrum s = exact_spectrum(m.A);
    int found = 0;
    for (const auto& e : s.entries)
        if (!e.is_int && e.minpoly == ZPoly{-5, 0, 1}) {
            CHECK(e.mult == 2);
            ++found;
        }
    CHECK(found == 2);  // +sqrt5 and -sqrt5
    // largest eigenvalue is (3+sqrt17)/2
    CHECK_FALSE(s.entries[0].is_int);
    CHECK(s.entries[0].minpoly == ZPoly{-2, -3, 1});
    CHECK(std::abs(s.entries[0].midpoint().get_d() - 3.5615528128) < 1e-6);
}

TEST_CASE("clique union closed forms") {
    auto a = clique_union_spectrum({4, 3, 3, 3, 3, 3}, MatrixKind::Adjacency);
    REQUIRE(a.entries.size() == 3);
    CHECK(a.entries[0].value == 3);
    CHECK(a.entries[0].mult == 1);
    CHECK(a.entries[1].value == 2);
    CHECK(a.entries[1].mult == 5);
    CHECK(a.entries[2].value == -1);
    CHECK(a.entries[2].mult == 13);

    auto l = clique_union_spectrum({2, 2, 2}, MatrixKind::Laplacian);
    REQUIRE(l.entries.size() == 2);
    CHECK(l.entries[0].value == 2);
    CHECK(l.entries[0].mult == 3);
    CHECK(l.entries[1].value == 0);
    CHECK(l.entries[1].mult == 3);

    auto q = clique_union_spectrum({4, 3, 3, 3, 3, 3}, MatrixKind::Signless);
    REQUIRE(q.entries.size() == 4);
    CHECK(q.entries[0].value == 6);
    CHECK(q.entries[0].mult == 1);
    CHECK(q.entries[1].value == 4);
    CHECK(q.entries[1].mult == 5);
    CHECK(q.entries[2].value == 2);
    CHECK(q.entries[2].mult == 3);
    CHECK(q.entries[3].value == 1);
    CHECK(q.entries[3].mult == 10);
}

TEST_CASE("clique closed form == exact char-poly spectrum, all partitions up to 10") {
    std::vector<std::vector<long>> parts;
    std::vector<long> cur;
    for (long n = 1; n <= 10; ++n) all_partitions(n, n, cur, parts);
    mpq_class w(mpz_class(1), zpow(2, 30));
    for (const auto& sizes : parts)
        for (MatrixKind kind : {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::Signless}) {
            ExactSpectrum closed = clique_union_spectrum(sizes, kind);
            ExactSpectrum direct = exact_spectrum(clique_union_matrix(sizes, kind));
            REQUIRE(spectra_equal(closed, direct, w));
        }
}

TEST_CASE("clique closed form == exact on the family multisets") {
    mpq_class w(mpz_class(1), zpow(2, 30));
    for (const auto& sizes : std::vector<std::vector<long>>{
             {4, 3, 3, 3, 3, 3},                      // Sz(2)
             {2, 2, 2, 2, 2, 2, 4, 4, 4, 4, 6, 6, 6}, // GL(2,3)
             {3, 2, 2, 2, 2},                          // A4
             {8, 6, 6, 6, 6, 6},                       // Sz(2) x Z2
             {2, 2, 2, 4, 4, 4, 4},                    // SL(2,3)
         })
        for (MatrixKind kind : {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::Signless}) {
            ExactSpectrum closed = clique_union_spectrum(sizes, kind);
            ExactSpectrum direct = exact_spectrum(clique_union_matrix(sizes, kind));
            REQUIRE(spectra_equal(closed, direct, w));
        }
}

TEST_CASE("sum rules: multiplicities, trace, trace of square") {
    for (const char* d : {"suzuki2", "a4", "s4", "sl23", "dicyclic:m=3"}) {
        FiniteGroup g = build(GroupFamilySpec::parse(d));
        CommutingGraph cg = commuting_graph(g);
        FourMatrices m = matrices(cg);
        size_t ncomp = components(cg).size();
        for (const IntMatrix* mm : {&m.A, &m.L, &m.Q}) {
            ExactSpectrum s = exact_spectrum(*mm);
            long mult = 0;
            for (const auto& e : s.entries) mult += e.mult;
            CHECK(mult == mm->n);
            // Horner at integer eigenvalues gives exactly 0
            CharPoly cp = char_poly(*mm);
            for (const auto& e : s.entries)
                if (e.is_int) CHECK(zeval(cp.coeffs, e.value) == 0);
            // trace identities via midpoints (enclosures are tiny)
            long long tr = mm->trace();
            long long tr2 = 0;
            for (int i = 0; i < mm->n; ++i)
                for (int j = 0; j < mm->n; ++j) tr2 += mm->at(i, j) * mm->at(j, i);
            CHECK(std::abs(entry_sum(s, 1).get_d() - static_cast<double>(tr)) < 1e-6);
            CHECK(std::abs(entry_sum(s, 2).get_d() - static_cast<double>(tr2)) < 1e-6);
            if (mm->kind == MatrixKind::Laplacian) {
                // eigenvalue 0 multiplicity = number of components
                for (const auto& e : s.entries)
                    if (e.is_int && e.value == 0) CHECK(e.mult == static_cast<long>(ncomp));
            }
            if (mm->kind == MatrixKind::Laplacian || mm->kind == MatrixKind::Signless) {
                for (const auto& e : s.entries) {
                    if (e.is_int)
                        CHECK(e.value >= 0);
                    else
                        CHECK(e.lo > 0);
                }
            }
        }
    }
}

TEST_CASE("integrality predicates") {
    FiniteGroup sl = build(GroupFamilySpec::parse("sl23"));
    CHECK(super_integral(sl));
    FiniteGroup s4 = build(GroupFamilySpec::parse("s4"));
    CHECK_FALSE(super_integral(s4));
    FiniteGroup q8 = build(GroupFamilySpec::parse("dicyclic:m=2"));
    CHECK(super_integral(q8));
    // adjacency is the failing kind for S4
    FourMatrices m = matrices(commuting_graph(s4));
    CHECK_FALSE(is_integral(exact_spectrum(m.A)));
}

TEST_CASE("float oracle on K3 and commuting graphs") {
    auto k3 = make(MatrixKind::Adjacency, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    FloatSpectrum fs = float_eigensolve(k3);
    REQUIRE(fs.values.size() == 3);
    CHECK(std::abs(fs.values[0] - 2.0) < 1e-10);
    CHECK(std::abs(fs.values[1] + 1.0) < 1e-10);
    CHECK(std::abs(fs.values[2] + 1.0) < 1e-10);

    for (const char* d : {"a4", "s4", "suzuki2"}) {
        FiniteGroup g = build(GroupFamilySpec::parse(d));
        FourMatrices m = matrices(commuting_graph(g));
        for (const IntMatrix* mm : {&m.A, &m.L, &m.Q}) {
            ExactSpectrum s = exact_spectrum(*mm);
            FloatSpectrum f = float_eigensolve(*mm);
            REQUIRE(spectra_agree(s, f, 1e-8));
            double norm = 0;
            for (long long v : mm->a) norm += static_cast<double>(v) * v;
            CHECK(f.residual <= 1e-10 * std::sqrt(norm));
        }
    }
    // largest eigenvalue of A(S4) is about (3+sqrt17)/2
    FourMatrices m = matrices(commuting_graph(build(GroupFamilySpec::parse("s4"))));
    CHECK(std::abs(float_eigensolve(m.A).values[0] - 3.5615528128) < 1e-8);
}

TEST_CASE("exact and float paths agree on random symmetric matrices") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int n = 5; n <= 12; ++n) {
        IntMatrix m;
        m.n = n;
        m.kind = MatrixKind::Adjacency;
        m.a.assign(static_cast<size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                long long v = d(rng);
                m.at(i, j) = v;
                m.at(j, i) = v;
            }
        ExactSpectrum s = exact_spectrum(m);
        long mult = 0;
        for (const auto& e : s.entries) mult += e.mult;
        REQUIRE(mult == n);
        REQUIRE(spectra_agree(s, float_eigensolve(m), 1e-8));
    }
}

TEST_CASE("spectrum json encoding") {
    FiniteGroup g = build(GroupFamilySpec::parse("suzuki2"));
    FourMatrices m = matrices(commuting_graph(g));
    auto j = spectrum_json(exact_spectrum(m.A));
    CHECK(j[0]["value"] == "3");
    CHECK(j[0]["mult"] == 1);

    FiniteGroup s4 = build(GroupFamilySpec::parse("s4"));
    auto j2 = spectrum_json(exact_spectrum(matrices(commuting_graph(s4)).A));
    // top entry is the isolated root of x^2 - 3x - 2
    CHECK(j2[0]["value"].contains("poly"));
    CHECK(j2[0]["value"]["poly"] == nlohmann::ordered_json::array({-2, -3, 1}));
    CHECK(j2[0]["value"].contains("lo"));
}

TEST_CASE("exact path dimension cap") {
    IntMatrix m;
    m.n = kExactDimensionCap + 1;
    CHECK_THROWS_AS(char_poly(m), CapExceeded);
}
