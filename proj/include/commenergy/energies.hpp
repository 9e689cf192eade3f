#ifndef COMMENERGY_ENERGIES_HPP
#define COMMENERGY_ENERGIES_HPP

// Graph energy, Laplacian energy and signless Laplacian energy of commuting
// graphs: exact rationals whenever the spectrum is integral, certified
// rational enclosures otherwise. Interval eigenvalues enter through interval
// arithmetic with exact rational endpoints.

#include <string>
#include <utility>

#include "json.hpp"

#include "commenergy/spectra.hpp"

namespace commenergy {

struct ExactOrInterval {
    bool exact = true;
    mpq_class value;    // when exact
    mpq_class lo, hi;   // when interval

    mpq_class low() const { return exact ? value : lo; }
    mpq_class high() const { return exact ? value : hi; }
    mpq_class width() const { return exact ? mpq_class(0) : mpq_class(hi - lo); }
    bool contains(const mpq_class& q) const { return exact ? value == q : (lo <= q && q <= hi); }
    double approx() const { return exact ? value.get_d() : mpq_class((lo + hi) / 2).get_d(); }

    std::string str() const {
        if (exact) return rat_str(value);
        return rat_decimal((lo + hi) / 2, 12) + " +/- " + rat_decimal((hi - lo) / 2, 12);
    }
    nlohmann::ordered_json json() const {
        nlohmann::ordered_json j;
        if (exact) {
            j["exact"] = rat_str(value);
        } else {
            nlohmann::ordered_json iv;
            iv["lo"] = rat_str(lo);
            iv["hi"] = rat_str(hi);
            j["interval"] = iv;
        }
        return j;
    }
    std::string csv() const { return exact ? rat_str(value) : rat_str(lo) + ".." + rat_str(hi); }

    static ExactOrInterval from_exact(const mpq_class& v) {
        ExactOrInterval e;
        e.exact = true;
        e.value = v;
        return e;
    }
};

inline mpq_class default_tolerance() { return mpq_class(mpz_class(1), zpow(10, 9)); }

inline mpq_class mean_degree(const CommutingGraph& cg) {
    if (cg.n == 0) throw AbelianGroupError("mean degree of empty graph");
    return rat_z(mpz_class(2) * cg.edges, cg.n);
}

namespace detail {

// Interval |x - shift| for an entry enclosure.
inline std::pair<mpq_class, mpq_class> abs_shifted(const mpq_class& lo, const mpq_class& hi, const mpq_class& shift) {
    mpq_class a = lo - shift, b = hi - shift;
    if (a >= 0) return {a, b};
    if (b <= 0) return {-b, -a};
    return {mpq_class(0), std::max(mpq_class(-a), b)};
}

inline ExactOrInterval sum_abs_shifted(ExactSpectrum spec, const mpq_class& shift, const mpq_class& tolerance) {
    if (tolerance <= 0) throw ParseError("tolerance must be positive");
    long interval_mult = 0;
    for (const auto& e : spec.entries)
        if (!e.is_int) interval_mult += e.mult;
    if (interval_mult > 0) {
        mpq_class per = tolerance / interval_mult / 2;
        spec.refine(per);
    }
    mpq_class lo = 0, hi = 0;
    bool exact = true;
    for (const auto& e : spec.entries) {
        if (e.is_int) {
            mpq_class term = rat_abs(mpq_class(e.value) - shift) * e.mult;
            lo += term;
            hi += term;
        } else {
            exact = false;
            auto [a, b] = abs_shifted(e.lo, e.hi, shift);
            lo += a * e.mult;
            hi += b * e.mult;
        }
    }
    ExactOrInterval out;
    out.exact = exact;
    if (exact)
        out.value = lo;
    else {
        out.lo = lo;
        out.hi = hi;
    }
    return out;
}

}  // namespace detail

// E = sum |lambda| over the adjacency spectrum.
inline ExactOrInterval energy(const ExactSpectrum& s, const mpq_class& tolerance = default_tolerance()) {
    if (s.kind != MatrixKind::Adjacency) throw ParseError("energy expects an adjacency spectrum");
    return detail::sum_abs_shifted(s, mpq_class(0), tolerance);
}

// LE = sum |mu - 2e/v| over the Laplacian spectrum.
inline ExactOrInterval laplacian_energy(const ExactSpectrum& s, const mpq_class& dbar,
                                        const mpq_class& tolerance = default_tolerance()) {
    if (s.kind != MatrixKind::Laplacian) throw ParseError("laplacian_energy expects a Laplacian spectrum");
    return detail::sum_abs_shifted(s, dbar, tolerance);
}

// LE+ = sum |nu - 2e/v| over the signless Laplacian spectrum.
inline ExactOrInterval signless_energy(const ExactSpectrum& s, const mpq_class& dbar,
                                       const mpq_class& tolerance = default_tolerance()) {
    if (s.kind != MatrixKind::Signless) throw ParseError("signless_energy expects a signless spectrum");
    return detail::sum_abs_shifted(s, dbar, tolerance);
}

struct EnergyReport {
    ExactOrInterval E, LE, LEplus;
    mpq_class meandeg;
    long vertices = 0;
    long edges = 0;
    bool used_clique_fast_path = false;

    nlohmann::ordered_json json() const {
        nlohmann::ordered_json j;
        j["E"] = E.json();
        j["LE"] = LE.json();
        j["LEplus"] = LEplus.json();
        j["meanDegree"] = rat_str(meandeg);
        j["vertices"] = vertices;
        j["edges"] = edges;
        return j;
    }
};

enum class SpectraPath { Auto, ForceExact };

struct SpectrumTriple {
    ExactSpectrum A, L, Q;
    bool from_clique_fast_path = false;
};

inline SpectrumTriple spectrum_triple(const CommutingGraph& cg, SpectraPath path = SpectraPath::Auto) {
    SpectrumTriple t;
    auto cliques = clique_decomposition(cg);
    if (cliques && path == SpectraPath::Auto) {
        t.A = clique_union_spectrum(*cliques, MatrixKind::Adjacency);
        t.L = clique_union_spectrum(*cliques, MatrixKind::Laplacian);
        t.Q = clique_union_spectrum(*cliques, MatrixKind::Signless);
        t.from_clique_fast_path = true;
    } else {
        FourMatrices m = matrices(cg);
        t.A = exact_spectrum(m.A);
        t.L = exact_spectrum(m.L);
        t.Q = exact_spectrum(m.Q);
    }
    return t;
}

inline EnergyReport energy_report_from_graph(const CommutingGraph& cg,
                                             const mpq_class& tolerance = default_tolerance(),
                                             SpectraPath path = SpectraPath::Auto) {
    SpectrumTriple t = spectrum_triple(cg, path);
    EnergyReport r;
    r.vertices = cg.n;
    r.edges = cg.edges;
    r.meandeg = mean_degree(cg);
    r.E = energy(t.A, tolerance);
    r.LE = laplacian_energy(t.L, r.meandeg, tolerance);
    r.LEplus = signless_energy(t.Q, r.meandeg, tolerance);
    r.used_clique_fast_path = t.from_clique_fast_path;
    return r;
}

inline EnergyReport energy_report(const FiniteGroup& g, const mpq_class& tolerance = default_tolerance(),
                                  SpectraPath path = SpectraPath::Auto) {
    CommutingGraph cg = commuting_graph(g);
    return energy_report_from_graph(cg, tolerance, path);
}

// A group is super integral when all three spectra of its commuting graph
// contain only integers.
inline bool super_integral(const FiniteGroup& g) {
    CommutingGraph cg = commuting_graph(g);
    SpectrumTriple t = spectrum_triple(cg);
    return is_integral(t.A) && is_integral(t.L) && is_integral(t.Q);
}

}  // namespace commenergy

#endif
