#ifndef COMMENERGY_SPECTRA_HPP
#define COMMENERGY_SPECTRA_HPP

// Exact spectra of integer symmetric matrices. The characteristic polynomial
// is computed by the division-free Berkowitz scheme over GMP integers, block
// by block over the connected components of the support pattern (the
// determinant of a block-diagonal matrix is the product of block
// determinants, so this is a pure speedup). Integer eigenvalues are stripped
// by synthetic division against the Gershgorin bound; the remaining roots are
// isolated by Sturm bisection on the square-free factors. A cyclic Jacobi
// eigensolver provides the independent floating-point oracle.

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "commenergy/commgraph.hpp"
#include "commenergy/poly.hpp"

namespace commenergy {

constexpr int kExactDimensionCap = 1024;
constexpr int kFloatDimensionCap = 4096;

struct CharPoly {
    ZPoly coeffs;  // ascending, monic, degree = matrix dimension
    long degree() const { return zdeg(coeffs); }
};

namespace detail {

// Berkowitz division-free characteristic polynomial of a dense block,
// returned with coefficients in descending power order.
inline std::vector<mpz_class> berkowitz(const std::vector<mpz_class>& a, int n) {
    std::vector<mpz_class> p{1};
    for (int i = 1; i <= n; ++i) {
        int r = i - 1;
        std::vector<mpz_class> q(static_cast<size_t>(i) + 1);
        q[0] = 1;
        q[1] = -a[static_cast<size_t>(r) * n + r];
        if (r > 0) {
            std::vector<mpz_class> v(static_cast<size_t>(r));
            for (int t = 0; t < r; ++t) v[static_cast<size_t>(t)] = a[static_cast<size_t>(t) * n + r];
            for (int j = 2; j <= i; ++j) {
                mpz_class s = 0;
                for (int t = 0; t < r; ++t) s += a[static_cast<size_t>(r) * n + t] * v[static_cast<size_t>(t)];
                q[static_cast<size_t>(j)] = -s;
                if (j < i) {
                    std::vector<mpz_class> w(static_cast<size_t>(r));
                    for (int row = 0; row < r; ++row) {
                        mpz_class acc = 0;
                        for (int col = 0; col < r; ++col)
                            acc += a[static_cast<size_t>(row) * n + col] * v[static_cast<size_t>(col)];
                        w[static_cast<size_t>(row)] = acc;
                    }
                    v.swap(w);
                }
            }
        }
        std::vector<mpz_class> np(static_cast<size_t>(i) + 1);
        for (size_t row = 0; row < np.size(); ++row) {
            mpz_class acc = 0;
            for (size_t col = 0; col < p.size() && col <= row; ++col)
                if (row - col < q.size()) acc += q[row - col] * p[col];
            np[row] = acc;
        }
        p.swap(np);
    }
    return p;
}

inline std::vector<std::vector<int>> support_components(const IntMatrix& m) {
    std::vector<int> comp(static_cast<size_t>(m.n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < m.n; ++s) {
        if (comp[static_cast<size_t>(s)] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[static_cast<size_t>(s)] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int u = 0; u < m.n; ++u)
                if (u != v && comp[static_cast<size_t>(u)] < 0 && (m.at(v, u) != 0 || m.at(u, v) != 0)) {
                    comp[static_cast<size_t>(u)] = static_cast<int>(out.size());
                    stack.push_back(u);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

}  // namespace detail

// det(xI - M) with exact integer coefficients.
inline CharPoly char_poly(const IntMatrix& m) {
    if (m.n > kExactDimensionCap) throw CapExceeded("exact path dimension cap exceeded");
    ZPoly acc{1};
    std::map<std::vector<long long>, ZPoly> seen;  // identical blocks share one computation
    for (const auto& block : detail::support_components(m)) {
        int bn = static_cast<int>(block.size());
        std::vector<long long> key(static_cast<size_t>(bn) * bn);
        for (int i = 0; i < bn; ++i)
            for (int j = 0; j < bn; ++j)
                key[static_cast<size_t>(i) * bn + j] =
                    m.at(block[static_cast<size_t>(i)], block[static_cast<size_t>(j)]);
        auto it = seen.find(key);
        if (it == seen.end()) {
            std::vector<mpz_class> sub(key.size());
            for (size_t i = 0; i < key.size(); ++i) sub[i] = static_cast<long>(key[i]);
            std::vector<mpz_class> desc = detail::berkowitz(sub, bn);
            it = seen.emplace(std::move(key), ZPoly(desc.rbegin(), desc.rend())).first;
        }
        acc = zmul(acc, it->second);
    }
    return CharPoly{std::move(acc)};
}

struct SpectrumEntry {
    bool is_int = true;
    mpz_class value;   // when is_int
    ZPoly minpoly;     // square-free integer factor, when !is_int
    mpq_class lo, hi;  // open isolating interval, when !is_int
    long mult = 0;

    mpq_class midpoint() const { return is_int ? mpq_class(value) : mpq_class((lo + hi) / 2); }
    mpq_class width() const { return is_int ? mpq_class(0) : mpq_class(hi - lo); }
};

struct ExactSpectrum {
    MatrixKind kind = MatrixKind::Adjacency;
    long dim = 0;
    std::vector<SpectrumEntry> entries;  // sorted descending by midpoint

    bool all_integer() const {
        for (const auto& e : entries)
            if (!e.is_int) return false;
        return true;
    }
    void refine(const mpq_class& width) {
        for (auto& e : entries)
            if (!e.is_int && e.hi - e.lo > width) {
                RootInterval iv{e.lo, e.hi};
                refine_root(e.minpoly, iv, width);
                e.lo = iv.lo;
                e.hi = iv.hi;
            }
    }
    void sort_entries() {
        std::sort(entries.begin(), entries.end(),
                  [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.midpoint() > b.midpoint(); });
    }
};

inline ExactSpectrum exact_spectrum(const IntMatrix& m) {
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j)
            if (m.at(i, j) != m.at(j, i)) throw ParseError("exact_spectrum requires a symmetric matrix");
    CharPoly cp = char_poly(m);
    ZPoly f = cp.coeffs;
    ExactSpectrum spec;
    spec.kind = m.kind;
    spec.dim = m.n;

    // Gershgorin: every eigenvalue satisfies |x| <= max row abs sum.
    long long bound = 0;
    for (int i = 0; i < m.n; ++i) {
        long long row = 0;
        for (int j = 0; j < m.n; ++j) row += std::llabs(m.at(i, j));
        bound = std::max(bound, row);
    }

    std::map<long long, long> int_roots;
    // strip x^k
    while (f.size() > 1 && f[0] == 0) {
        ++int_roots[0];
        f.erase(f.begin());
    }
    for (long long k = -bound; k <= bound; ++k) {
        if (k == 0) continue;
        ZPoly q;
        while (zdeg(f) >= 1 && zdiv_linear(f, mpz_class(static_cast<long>(k)), q)) {
            ++int_roots[k];
            f = q;
        }
    }
    for (const auto& [val, mult] : int_roots) {
        SpectrumEntry e;
        e.is_int = true;
        e.value = static_cast<long>(val);
        e.mult = mult;
        spec.entries.push_back(e);
    }

    long isolated = 0;
    if (zdeg(f) > 0) {
        for (const auto& [factor, mult] : squarefree_decomposition(f)) {
            for (const auto& iv : isolate_real_roots(factor)) {
                SpectrumEntry e;
                e.is_int = false;
                e.minpoly = factor;
                e.lo = iv.lo;
                e.hi = iv.hi;
                e.mult = mult;
                spec.entries.push_back(e);
                isolated += mult;
            }
        }
    }
    long total = isolated;
    for (const auto& [val, mult] : int_roots) total += mult;
    if (total != m.n)
        throw InternalInconsistency("spectrum multiplicities sum to " + std::to_string(total) + " of " +
                                    std::to_string(m.n));

    // default certified width 2^-40, then separate enclosures pairwise
    mpq_class w(mpz_class(1), zpow(2, 40));
    spec.refine(w);
    bool again = true;
    while (again) {
        again = false;
        for (size_t i = 0; i < spec.entries.size(); ++i)
            for (size_t j = i + 1; j < spec.entries.size(); ++j) {
                auto& a = spec.entries[i];
                auto& b = spec.entries[j];
                if (a.is_int && b.is_int) continue;
                mpq_class alo = a.is_int ? mpq_class(a.value) : a.lo;
                mpq_class ahi = a.is_int ? mpq_class(a.value) : a.hi;
                mpq_class blo = b.is_int ? mpq_class(b.value) : b.lo;
                mpq_class bhi = b.is_int ? mpq_class(b.value) : b.hi;
                if (ahi >= blo && bhi >= alo) {
                    mpq_class half = std::min(a.width(), b.width());
                    if (half == 0) half = std::max(a.width(), b.width());
                    half /= 2;
                    if (!a.is_int) {
                        RootInterval iv{a.lo, a.hi};
                        refine_root(a.minpoly, iv, half);
                        a.lo = iv.lo;
                        a.hi = iv.hi;
                    }
                    if (!b.is_int) {
                        RootInterval iv{b.lo, b.hi};
                        refine_root(b.minpoly, iv, half);
                        b.lo = iv.lo;
                        b.hi = iv.hi;
                    }
                    again = true;
                }
            }
    }
    spec.sort_entries();
    return spec;
}

// Closed-form spectra of disjoint unions of complete graphs.
//   adjacency: K_a -> (a-1)^1, (-1)^{a-1}
//   laplacian: K_a -> 0^1, a^{a-1}
//   signless:  K_a -> (2a-2)^1, (a-2)^{a-1}
inline ExactSpectrum clique_union_spectrum(const std::vector<long>& sizes, MatrixKind kind) {
    if (sizes.empty()) throw ParseError("clique_union_spectrum: empty size list");
    std::map<long, long> mult;
    long dim = 0;
    for (long a : sizes) {
        if (a < 1) throw ParseError("clique sizes must be >= 1");
        dim += a;
        switch (kind) {
            case MatrixKind::Adjacency:
                mult[a - 1] += 1;
                if (a > 1) mult[-1] += a - 1;
                break;
            case MatrixKind::Laplacian:
                mult[0] += 1;
                if (a > 1) mult[a] += a - 1;
                break;
            case MatrixKind::Signless:
                mult[2 * a - 2] += 1;
                if (a > 1) mult[a - 2] += a - 1;
                break;
            case MatrixKind::Degree:
                mult[a - 1] += a;
                break;
        }
    }
    ExactSpectrum spec;
    spec.kind = kind;
    spec.dim = dim;
    for (const auto& [val, m] : mult) {
        SpectrumEntry e;
        e.is_int = true;
        e.value = val;
        e.mult = m;
        spec.entries.push_back(e);
    }
    spec.sort_entries();
    return spec;
}

inline bool is_integral(const ExactSpectrum& s) { return s.all_integer(); }

struct FloatSpectrum {
    std::vector<double> values;  // sorted descending
    double residual = 0;         // max |off-diagonal| at convergence
};

inline FloatSpectrum float_eigensolve(const IntMatrix& m) {
    if (m.n > kFloatDimensionCap) throw CapExceeded("float path dimension cap exceeded");
    int n = m.n;
    std::vector<double> a(static_cast<size_t>(n) * n);
    double norm = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a[static_cast<size_t>(i) * n + j] = static_cast<double>(m.at(i, j));
            norm += static_cast<double>(m.at(i, j)) * static_cast<double>(m.at(i, j));
        }
    norm = std::sqrt(norm);
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

    double off = 0;
    const double target = norm == 0 ? 0 : 1e-13 * norm;
    for (int sweep = 0; sweep < 100; ++sweep) {
        off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::fabs(at(p, q)));
        if (off <= target) break;
        if (sweep == 99) throw InternalInconsistency("Jacobi eigensolver failed to converge");
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (std::fabs(apq) <= target / (8.0 * n)) continue;
                double theta = (at(q, q) - at(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }
    FloatSpectrum fs;
    fs.residual = off;
    fs.values.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) fs.values[static_cast<size_t>(i)] = at(i, i);
    std::sort(fs.values.begin(), fs.values.end(), std::greater<>());
    return fs;
}

// Entrywise agreement: float eigenvalues, by multiplicity-sorted position,
// must land within tol of the exact enclosures.
inline bool spectra_agree(const ExactSpectrum& exact, const FloatSpectrum& approx, double tol) {
    std::vector<std::pair<double, double>> encl;
    for (const auto& e : exact.entries) {
        double lo = e.is_int ? e.value.get_d() : e.lo.get_d();
        double hi = e.is_int ? e.value.get_d() : e.hi.get_d();
        for (long k = 0; k < e.mult; ++k) encl.push_back({lo, hi});
    }
    std::sort(encl.begin(), encl.end(), [](auto& x, auto& y) { return x.first > y.first; });
    if (encl.size() != approx.values.size()) return false;
    for (size_t i = 0; i < encl.size(); ++i) {
        double v = approx.values[i];
        if (v < encl[i].first - tol || v > encl[i].second + tol) return false;
    }
    return true;
}

// Multiset equality of two spectra: integer entries match exactly; interval
// entries must share the (normalized) minimal factor and overlap after
// refinement to the given width.
inline bool spectra_equal(ExactSpectrum a, ExactSpectrum b, const mpq_class& width) {
    if (a.dim != b.dim) return false;
    a.refine(width);
    b.refine(width);
    a.sort_entries();
    b.sort_entries();
    if (a.entries.size() != b.entries.size()) return false;
    for (size_t i = 0; i < a.entries.size(); ++i) {
        const auto& x = a.entries[i];
        const auto& y = b.entries[i];
        if (x.mult != y.mult || x.is_int != y.is_int) return false;
        if (x.is_int) {
            if (x.value != y.value) return false;
        } else {
            if (x.minpoly != y.minpoly) return false;
            if (x.hi < y.lo || y.hi < x.lo) return false;
        }
    }
    return true;
}

inline nlohmann::ordered_json spectrum_json(const ExactSpectrum& s) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : s.entries) {
        nlohmann::ordered_json entry;
        if (e.is_int) {
            entry["value"] = e.value.get_str();
        } else {
            nlohmann::ordered_json v;
            nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
            for (const auto& c : e.minpoly) {
                if (c.fits_slong_p())
                    coeffs.push_back(c.get_si());
                else
                    coeffs.push_back(c.get_str());
            }
            v["poly"] = coeffs;
            v["lo"] = rat_str(e.lo);
            v["hi"] = rat_str(e.hi);
            entry["value"] = v;
        }
        entry["mult"] = e.mult;
        arr.push_back(entry);
    }
    return arr;
}

}  // namespace commenergy

#endif
