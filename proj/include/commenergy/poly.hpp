#ifndef COMMENERGY_POLY_HPP
#define COMMENERGY_POLY_HPP

// Exact univariate polynomial machinery over Z and Q: arithmetic, synthetic
// division, Yun square-free decomposition, Sturm sequences and certified real
// root isolation by rational bisection.

#include <algorithm>
#include <vector>

#include "commenergy/rat.hpp"

namespace commenergy {

// Coefficients ascending; empty vector is the zero polynomial.
using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

inline void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
inline void qtrim(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline long zdeg(const ZPoly& f) { return static_cast<long>(f.size()) - 1; }
inline long qdeg(const QPoly& f) { return static_cast<long>(f.size()) - 1; }

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline mpz_class zeval(const ZPoly& f, const mpz_class& x) {
    mpz_class r = 0;
    for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}

inline mpq_class qeval_z(const ZPoly& f, const mpq_class& x) {
    mpq_class r = 0;
    for (size_t i = f.size(); i-- > 0;) r = r * x + mpq_class(f[i]);
    return r;
}

inline mpq_class qeval(const QPoly& f, const mpq_class& x) {
    mpq_class r = 0;
    for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}

inline ZPoly zderiv(const ZPoly& f) {
    ZPoly d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<long>(i));
    return d;
}

// Divide f by (x - r); returns quotient if the remainder is zero.
inline bool zdiv_linear(const ZPoly& f, const mpz_class& r, ZPoly& quotient) {
    if (f.empty()) return false;
    ZPoly q(f.size() - 1);
    mpz_class carry = 0;
    for (size_t i = f.size(); i-- > 1;) {
        carry = f[i] + carry * r;
        q[i - 1] = carry;
    }
    mpz_class rem = f[0] + carry * r;
    if (rem != 0) return false;
    quotient = std::move(q);
    return true;
}

inline QPoly q_of_z(const ZPoly& f) {
    QPoly g;
    g.reserve(f.size());
    for (const auto& c : f) g.emplace_back(c);
    return g;
}

// Primitive integer polynomial proportional to f, positive leading coeff.
inline ZPoly z_of_q_primitive(const QPoly& f) {
    if (f.empty()) return {};
    mpz_class den = 1;
    for (const auto& c : f) {
        mpz_class d;
        mpz_lcm(d.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
        den = d;
    }
    ZPoly g(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        mpq_class scaled = f[i] * mpq_class(den);
        g[i] = scaled.get_num();
    }
    mpz_class content = 0;
    for (const auto& c : g) {
        mpz_class d;
        mpz_gcd(d.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
        content = d;
    }
    if (content > 1)
        for (auto& c : g) c /= content;
    if (!g.empty() && g.back() < 0)
        for (auto& c : g) c = -c;
    return g;
}

// Polynomial remainder over Q.
inline QPoly qrem(QPoly a, const QPoly& b) {
    qtrim(a);
    while (qdeg(a) >= qdeg(b) && !a.empty()) {
        mpq_class factor = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        qtrim(a);
    }
    return a;
}

inline ZPoly zgcd(const ZPoly& a, const ZPoly& b) {
    QPoly x = q_of_z(a), y = q_of_z(b);
    qtrim(x);
    qtrim(y);
    while (!y.empty()) {
        QPoly r = qrem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return z_of_q_primitive(x);
}

// Exact polynomial quotient over Z when b | a (coefficientwise exact).
inline ZPoly zdivexact(const ZPoly& a, const ZPoly& b) {
    QPoly x = q_of_z(a);
    QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
    qtrim(x);
    while (qdeg(x) >= zdeg(b) && !x.empty()) {
        mpq_class factor = x.back() / mpq_class(b.back());
        size_t shift = x.size() - b.size();
        q[shift] = factor;
        for (size_t i = 0; i < b.size(); ++i) x[shift + i] -= factor * mpq_class(b[i]);
        qtrim(x);
    }
    if (!x.empty()) throw InternalInconsistency("zdivexact: nonzero remainder");
    ZPoly out(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        if (q[i].get_den() != 1) throw InternalInconsistency("zdivexact: fractional quotient");
        out[i] = q[i].get_num();
    }
    ztrim(out);
    return out;
}

// Yun square-free decomposition: f = prod factors[i].first ^ factors[i].second,
// with each factor square-free and pairwise coprime. Requires f nonzero.
inline std::vector<std::pair<ZPoly, long>> squarefree_decomposition(const ZPoly& f) {
    std::vector<std::pair<ZPoly, long>> out;
    ZPoly g = zgcd(f, zderiv(f));
    if (zdeg(g) <= 0) {
        out.push_back({f, 1});
        return out;
    }
    ZPoly w = zdivexact(f, g);
    ZPoly y = zdivexact(zderiv(f), g);
    long mult = 1;
    while (true) {
        // z = y - w'
        ZPoly wd = zderiv(w);
        ZPoly z(std::max(y.size(), wd.size()), mpz_class(0));
        for (size_t i = 0; i < y.size(); ++i) z[i] += y[i];
        for (size_t i = 0; i < wd.size(); ++i) z[i] -= wd[i];
        ztrim(z);
        if (z.empty()) {
            if (zdeg(w) > 0) out.push_back({w, mult});
            break;
        }
        ZPoly fac = zgcd(w, z);
        if (zdeg(fac) > 0) out.push_back({fac, mult});
        w = zdivexact(w, fac);
        y = zdivexact(z, fac);
        ++mult;
    }
    return out;
}

// ---- Sturm isolation ---------------------------------------------------------

struct SturmChain {
    std::vector<QPoly> seq;

    explicit SturmChain(const ZPoly& f) {
        QPoly a = q_of_z(f), b = q_of_z(zderiv(f));
        qtrim(a);
        qtrim(b);
        seq.push_back(a);
        if (!b.empty()) seq.push_back(b);
        while (seq.size() >= 2 && !seq.back().empty()) {
            QPoly r = qrem(seq[seq.size() - 2], seq.back());
            if (r.empty()) break;
            for (auto& c : r) c = -c;
            seq.push_back(std::move(r));
        }
    }

    long variations(const mpq_class& x) const {
        long v = 0;
        int prev = 0;
        for (const auto& p : seq) {
            mpq_class val = qeval(p, x);
            int s = val == 0 ? 0 : (val > 0 ? 1 : -1);
            if (s != 0) {
                if (prev != 0 && s != prev) ++v;
                prev = s;
            }
        }
        return v;
    }

    // Number of real roots in the half-open interval (a, b].
    long count_roots(const mpq_class& a, const mpq_class& b) const { return variations(a) - variations(b); }
};

struct RootInterval {
    mpq_class lo, hi;  // open interval (lo, hi) containing exactly one root
};

// Cauchy bound: all real roots lie in (-B, B).
inline mpq_class cauchy_bound(const ZPoly& f) {
    mpq_class maxratio = 0;
    mpq_class lead = mpq_class(f.back());
    for (size_t i = 0; i + 1 < f.size(); ++i) {
        mpq_class r = rat_abs(mpq_class(f[i]) / lead);
        if (r > maxratio) maxratio = r;
    }
    return maxratio + 1;
}

// Isolates all real roots of a square-free integer polynomial with no rational
// roots (monic factors of char polys qualify once integer roots are stripped).
inline std::vector<RootInterval> isolate_real_roots(const ZPoly& f) {
    std::vector<RootInterval> out;
    if (zdeg(f) <= 0) return out;
    SturmChain chain(f);
    mpq_class bound = cauchy_bound(f);
    std::vector<std::pair<mpq_class, mpq_class>> work{{-bound, bound}};
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        long cnt = chain.count_roots(lo, hi);
        if (cnt == 0) continue;
        if (cnt == 1) {
            out.push_back({lo, hi});
            continue;
        }
        mpq_class mid = (lo + hi) / 2;
        work.push_back({lo, mid});
        work.push_back({mid, hi});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

// Bisection refinement; the polynomial must change sign on the interval (true
// for a square-free polynomial with exactly one root inside and non-root
// endpoints).
inline void refine_root(const ZPoly& f, RootInterval& iv, const mpq_class& width) {
    mpq_class flo = qeval_z(f, iv.lo);
    if (flo == 0) throw InternalInconsistency("refine_root: rational endpoint is a root");
    int slo = flo > 0 ? 1 : -1;
    while (iv.hi - iv.lo > width) {
        mpq_class mid = (iv.lo + iv.hi) / 2;
        mpq_class fm = qeval_z(f, mid);
        if (fm == 0) throw InternalInconsistency("refine_root: hit exact rational root");
        if ((fm > 0 ? 1 : -1) == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
}

}  // namespace commenergy

#endif
