#ifndef COMMENERGY_GROUPS_HPP
#define COMMENERGY_GROUPS_HPP

// Explicit finite-group engine: every supported family is realized as a full
// multiplication table with deterministic element order and labels, then the
// table invariants (Latin square, identity, associativity, inverses) are
// verified at construction time.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "commenergy/algebra.hpp"
#include "commenergy/rat.hpp"

namespace commenergy {

constexpr long kDefaultOrderCap = 2048;

enum class Family {
    Dihedral,         // D_{2m}, m >= 3
    Dicyclic,         // Q_{4m}, m >= 2
    Metacyclic,       // M_{2mn} = <a,b : a^m = b^{2n} = 1, bab^-1 = a^-1>, m > 2
    Quasidihedral,    // QD_{2^n}, n >= 4
    FrobeniusPQ,      // <a,b : a^q = b^p = 1, bab^-1 = a^t>, p | q-1
    Suzuki2,          // <a,b : a^5 = b^4 = 1, b^-1 a b = a^2>, order 20
    PSL2,             // PSL(2, 2^k) = SL(2, 2^k), k >= 2 (k >= 1 allowed)
    GL2,              // GL(2, p^n)
    HanakiU,          // upper unitriangular U(a,b) over GF(2^n), n >= 2
    HanakiV,          // unitriangular V(a,b,c) over GF(p^n)
    SymmetricS4,
    AlternatingA4,
    AlternatingA5,
    SpecialLinear23,  // SL(2,3)
    Modular16,        // <a,b : a^8 = b^2 = 1, bab = a^5>
    CentralProdD8Z4,  // <a,b,c : a^4 = b^2 = c^2 = 1, ab=ba, ac=ca, bc = a^2 cb>
    SG16_3,           // <a,b : a^4 = b^4 = 1, ab = b^-1 a^-1, a b^-1 = b a^-1>
    DirectProductWithCyclic,
    ElementaryWitness,  // HanakiV(p,1) x Z_{z/p}, requires p | z
    Derived,            // internal tag for quotient groups
};

struct GroupFamilySpec {
    Family family = Family::Derived;
    long m = 0, n = 0, p = 0, q = 0, k = 0, z = 0;
    std::shared_ptr<GroupFamilySpec> inner;
    std::string derived_note;

    std::string descriptor() const;
    static GroupFamilySpec parse(const std::string& text);
};

struct FiniteGroup {
    int order = 0;
    int identity = 0;
    std::vector<uint16_t> table;    // row-major order x order
    std::vector<uint16_t> inverse;  // two-sided inverses
    std::vector<std::string> labels;
    GroupFamilySpec family;

    int mul(int i, int j) const { return table[static_cast<size_t>(i) * order + j]; }
    int inv(int i) const { return inverse[static_cast<size_t>(i)]; }
    bool commute(int i, int j) const { return mul(i, j) == mul(j, i); }

    int element_order(int x) const {
        int r = x, ord = 1;
        while (r != identity) {
            r = mul(r, x);
            ++ord;
        }
        return ord;
    }
    bool is_abelian() const {
        for (int i = 0; i < order; ++i)
            for (int j = i + 1; j < order; ++j)
                if (!commute(i, j)) return false;
        return true;
    }
};

// ---- descriptor grammar ----------------------------------------------------

namespace detail {

inline std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

inline long parse_long(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw ParseError("");
        return v;
    } catch (...) {
        throw ParseError("bad integer for " + what + ": '" + s + "'");
    }
}

}  // namespace detail

inline std::string GroupFamilySpec::descriptor() const {
    auto kv = [](const char* key, long v) { return std::string(key) + "=" + std::to_string(v); };
    switch (family) {
        case Family::Dihedral: return "dihedral:" + kv("m", m);
        case Family::Dicyclic: return "dicyclic:" + kv("m", m);
        case Family::Metacyclic: return "metacyclic:" + kv("m", m) + "," + kv("n", n);
        case Family::Quasidihedral: return "quasidihedral:" + kv("n", n);
        case Family::FrobeniusPQ: return "frobenius:" + kv("p", p) + "," + kv("q", q);
        case Family::Suzuki2: return "suzuki2";
        case Family::PSL2: return "psl2:" + kv("k", k);
        case Family::GL2: return "gl2:" + kv("p", p) + "," + kv("n", n);
        case Family::HanakiU: return "hanakiU:" + kv("n", n);
        case Family::HanakiV: return "hanakiV:" + kv("p", p) + "," + kv("n", n);
        case Family::SymmetricS4: return "s4";
        case Family::AlternatingA4: return "a4";
        case Family::AlternatingA5: return "a5";
        case Family::SpecialLinear23: return "sl23";
        case Family::Modular16: return "modular16";
        case Family::CentralProdD8Z4: return "pauli16";
        case Family::SG16_3: return "sg16";
        case Family::DirectProductWithCyclic: {
            std::string in = inner ? inner->descriptor() : "?";
            if (in.find(',') != std::string::npos) in = "(" + in + ")";
            return "product:inner=" + in + "," + kv("k", k);
        }
        case Family::ElementaryWitness: return "elementary:" + kv("p", p) + "," + kv("z", z);
        case Family::Derived: return "derived(" + derived_note + ")";
    }
    return "?";
}

inline GroupFamilySpec GroupFamilySpec::parse(const std::string& text) {
    GroupFamilySpec spec;
    std::string name = text;
    std::map<std::string, std::string> args;
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        name = text.substr(0, colon);
        for (const auto& piece : detail::split_top_level(text.substr(colon + 1), ',')) {
            auto eq = piece.find('=');
            if (eq == std::string::npos) throw ParseError("bad descriptor argument '" + piece + "'");
            args[piece.substr(0, eq)] = piece.substr(eq + 1);
        }
    }
    auto need = [&](const char* key) -> std::string {
        auto it = args.find(key);
        if (it == args.end()) throw ParseError("descriptor '" + name + "' needs argument " + key);
        return it->second;
    };
    auto geti = [&](const char* key) { return detail::parse_long(need(key), key); };

    if (name == "dihedral") {
        spec.family = Family::Dihedral;
        spec.m = geti("m");
        if (spec.m < 3) throw ParseError("dihedral requires m >= 3");
    } else if (name == "dicyclic") {
        spec.family = Family::Dicyclic;
        spec.m = geti("m");
        if (spec.m < 2) throw ParseError("dicyclic requires m >= 2");
    } else if (name == "metacyclic") {
        spec.family = Family::Metacyclic;
        spec.m = geti("m");
        spec.n = geti("n");
        if (spec.m <= 2 || spec.n < 1) throw ParseError("metacyclic requires m > 2, n >= 1");
    } else if (name == "quasidihedral") {
        spec.family = Family::Quasidihedral;
        spec.n = geti("n");
        if (spec.n < 4) throw ParseError("quasidihedral requires n >= 4");
    } else if (name == "frobenius") {
        spec.family = Family::FrobeniusPQ;
        spec.p = geti("p");
        spec.q = geti("q");
        if (!is_prime_long(spec.p) || !is_prime_long(spec.q)) throw ParseError("frobenius requires prime p, q");
        if ((spec.q - 1) % spec.p != 0) throw ParseError("frobenius requires p | q-1");
    } else if (name == "suzuki2") {
        spec.family = Family::Suzuki2;
    } else if (name == "psl2") {
        spec.family = Family::PSL2;
        spec.k = geti("k");
        if (spec.k < 1) throw ParseError("psl2 requires k >= 1");
    } else if (name == "gl2") {
        spec.family = Family::GL2;
        spec.p = geti("p");
        spec.n = geti("n");
        if (!is_prime_long(spec.p) || spec.n < 1) throw ParseError("gl2 requires prime p and n >= 1");
    } else if (name == "hanakiU") {
        spec.family = Family::HanakiU;
        spec.n = geti("n");
        if (spec.n < 2) throw ParseError("hanakiU requires n >= 2");
    } else if (name == "hanakiV") {
        spec.family = Family::HanakiV;
        spec.p = geti("p");
        spec.n = geti("n");
        if (!is_prime_long(spec.p) || spec.n < 1) throw ParseError("hanakiV requires prime p and n >= 1");
    } else if (name == "s4") {
        spec.family = Family::SymmetricS4;
    } else if (name == "a4") {
        spec.family = Family::AlternatingA4;
    } else if (name == "a5") {
        spec.family = Family::AlternatingA5;
    } else if (name == "sl23") {
        spec.family = Family::SpecialLinear23;
    } else if (name == "modular16") {
        spec.family = Family::Modular16;
    } else if (name == "pauli16") {
        spec.family = Family::CentralProdD8Z4;
    } else if (name == "sg16") {
        spec.family = Family::SG16_3;
    } else if (name == "product") {
        spec.family = Family::DirectProductWithCyclic;
        std::string in = need("inner");
        if (!in.empty() && in.front() == '(' && in.back() == ')') in = in.substr(1, in.size() - 2);
        spec.inner = std::make_shared<GroupFamilySpec>(parse(in));
        spec.k = geti("k");
        if (spec.k < 1) throw ParseError("product requires k >= 1");
    } else if (name == "elementary") {
        spec.family = Family::ElementaryWitness;
        spec.p = geti("p");
        spec.z = geti("z");
        if (!is_prime_long(spec.p)) throw ParseError("elementary requires prime p");
        if (spec.z < spec.p || spec.z % spec.p != 0) throw ParseError("elementary requires p | z");
    } else {
        throw ParseError("unknown group family '" + name + "'");
    }
    return spec;
}

// ---- construction helpers --------------------------------------------------

namespace detail {

struct TableBuilder {
    int order;
    std::vector<uint16_t> table;
    std::vector<std::string> labels;
    int identity = 0;

    explicit TableBuilder(long n) : order(static_cast<int>(n)) {
        table.assign(static_cast<size_t>(n) * n, 0);
        labels.assign(static_cast<size_t>(n), "");
    }
    void set(int i, int j, long v) { table[static_cast<size_t>(i) * order + j] = static_cast<uint16_t>(v); }
};

inline std::string word_label(const char* g1, long i, const char* g2, long j) {
    std::string s;
    if (i == 1)
        s += g1;
    else if (i > 1)
        s += std::string(g1) + "^" + std::to_string(i);
    if (j > 0) {
        if (!s.empty()) s += " ";
        if (j == 1)
            s += g2;
        else
            s += std::string(g2) + "^" + std::to_string(j);
    }
    if (s.empty()) s = "1";
    return s;
}

// Groups <a,b : a^M = b^N = 1, b a b^-1 = a^t> with t^N = 1 (mod M);
// elements a^i b^j indexed i*N + j.
inline void twisted_product(TableBuilder& tb, long M, long N, long t, const char* g1 = "a", const char* g2 = "b") {
    std::vector<long> tpow(static_cast<size_t>(N));
    tpow[0] = 1 % M;
    for (long j = 1; j < N; ++j) tpow[static_cast<size_t>(j)] = (tpow[static_cast<size_t>(j - 1)] * t) % M;
    for (long i = 0; i < M; ++i)
        for (long j = 0; j < N; ++j) {
            long me = i * N + j;
            tb.labels[static_cast<size_t>(me)] = word_label(g1, i, g2, j);
            for (long k2 = 0; k2 < M; ++k2)
                for (long l = 0; l < N; ++l) {
                    long ri = (i + tpow[static_cast<size_t>(j)] * k2) % M;
                    long rj = (j + l) % N;
                    tb.set(static_cast<int>(me), static_cast<int>(k2 * N + l), ri * N + rj);
                }
        }
}

inline std::vector<std::vector<int>> permutations_of(int n, bool even_only) {
    std::vector<int> base(static_cast<size_t>(n));
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        if (even_only) {
            int inv = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (base[static_cast<size_t>(i)] > base[static_cast<size_t>(j)]) ++inv;
            if (inv % 2) continue;
        }
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

inline std::string perm_label(const std::vector<int>& img) {
    std::string s = "(";
    for (size_t i = 0; i < img.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(img[i]);
    }
    return s + ")";
}

}  // namespace detail

inline void verify_group_invariants(const FiniteGroup& g) {
    const int n = g.order;
    // identity
    for (int j = 0; j < n; ++j)
        if (g.mul(g.identity, j) != j || g.mul(j, g.identity) != j)
            throw InternalInconsistency("identity axiom fails in " + g.family.descriptor());
    // Latin square
    std::vector<char> seen(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) seen[static_cast<size_t>(g.mul(i, j))] = 1;
        for (char c : seen)
            if (!c) throw InternalInconsistency("row not a permutation in " + g.family.descriptor());
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) seen[static_cast<size_t>(g.mul(j, i))] = 1;
        for (char c : seen)
            if (!c) throw InternalInconsistency("column not a permutation in " + g.family.descriptor());
    }
    // associativity: exhaustive up to order 512, sampled above
    if (n <= 512) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k)))
                        throw InternalInconsistency("associativity fails in " + g.family.descriptor());
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> d(0, n - 1);
        for (int s = 0; s < 100000; ++s) {
            int i = d(rng), j = d(rng), k = d(rng);
            if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k)))
                throw InternalInconsistency("associativity fails in " + g.family.descriptor());
        }
    }
    // inverses
    for (int i = 0; i < n; ++i)
        if (g.mul(i, g.inv(i)) != g.identity || g.mul(g.inv(i), i) != g.identity)
            throw InternalInconsistency("inverse axiom fails in " + g.family.descriptor());
}

inline FiniteGroup build(const GroupFamilySpec& spec, long max_order = kDefaultOrderCap);

namespace detail {

inline FiniteGroup finish(TableBuilder&& tb, const GroupFamilySpec& spec) {
    FiniteGroup g;
    g.order = tb.order;
    g.identity = tb.identity;
    g.table = std::move(tb.table);
    g.labels = std::move(tb.labels);
    g.family = spec;
    g.inverse.assign(static_cast<size_t>(g.order), 0);
    for (int i = 0; i < g.order; ++i) {
        int found = -1;
        for (int j = 0; j < g.order; ++j)
            if (g.mul(i, j) == g.identity && g.mul(j, i) == g.identity) {
                found = j;
                break;
            }
        if (found < 0) throw InternalInconsistency("element without two-sided inverse in " + spec.descriptor());
        g.inverse[static_cast<size_t>(i)] = static_cast<uint16_t>(found);
    }
    verify_group_invariants(g);
    return g;
}

inline FiniteGroup build_matrix_group(const GroupFamilySpec& spec, const FiniteField& F, bool special, long cap) {
    auto mats = special ? sl2_enumerate(F, cap) : gl2_enumerate(F, cap);
    long n = static_cast<long>(mats.size());
    if (n > cap) throw CapExceeded("group order " + std::to_string(n) + " exceeds cap");
    std::map<long, int> index;
    for (int i = 0; i < n; ++i) index[mats[static_cast<size_t>(i)].key(F)] = i;
    TableBuilder tb(n);
    for (int i = 0; i < n; ++i) {
        tb.labels[static_cast<size_t>(i)] = mats[static_cast<size_t>(i)].str();
        for (int j = 0; j < n; ++j)
            tb.set(i, j, index.at(mats[static_cast<size_t>(i)].mul(mats[static_cast<size_t>(j)], F).key(F)));
    }
    tb.identity = index.at(Mat2::identity().key(F));
    return finish(std::move(tb), spec);
}

inline FiniteGroup build_permutation_group(const GroupFamilySpec& spec, int pts, bool even_only, long cap) {
    auto perms = permutations_of(pts, even_only);
    long n = static_cast<long>(perms.size());
    if (n > cap) throw CapExceeded("group order exceeds cap");
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[perms[static_cast<size_t>(i)]] = i;
    TableBuilder tb(n);
    for (int i = 0; i < n; ++i) {
        tb.labels[static_cast<size_t>(i)] = perm_label(perms[static_cast<size_t>(i)]);
        for (int j = 0; j < n; ++j) {
            // composition: (pq)(x) = p(q(x))
            std::vector<int> comp(static_cast<size_t>(pts));
            for (int x = 0; x < pts; ++x)
                comp[static_cast<size_t>(x)] =
                    perms[static_cast<size_t>(i)][static_cast<size_t>(perms[static_cast<size_t>(j)][static_cast<size_t>(x)])];
            tb.set(i, j, index.at(comp));
        }
    }
    std::vector<int> id(static_cast<size_t>(pts));
    std::iota(id.begin(), id.end(), 0);
    tb.identity = index.at(id);
    return finish(std::move(tb), spec);
}

}  // namespace detail

inline FiniteGroup build(const GroupFamilySpec& spec, long max_order) {
    using detail::TableBuilder;
    auto check_cap = [&](long n) {
        if (n > max_order)
            throw CapExceeded("group order " + std::to_string(n) + " exceeds cap " + std::to_string(max_order));
        return n;
    };
    switch (spec.family) {
        case Family::Dihedral: {
            long n = check_cap(2 * spec.m);
            TableBuilder tb(n);
            detail::twisted_product(tb, spec.m, 2, spec.m - 1);
            return detail::finish(std::move(tb), spec);
        }
        case Family::Metacyclic: {
            long n = check_cap(2 * spec.m * spec.n);
            TableBuilder tb(n);
            detail::twisted_product(tb, spec.m, 2 * spec.n, spec.m - 1);
            return detail::finish(std::move(tb), spec);
        }
        case Family::Quasidihedral: {
            long M = 1L << (spec.n - 1);
            long n = check_cap(2 * M);
            TableBuilder tb(n);
            detail::twisted_product(tb, M, 2, M / 2 - 1);
            return detail::finish(std::move(tb), spec);
        }
        case Family::FrobeniusPQ: {
            long n = check_cap(spec.p * spec.q);
            // smallest multiplier > 1 of multiplicative order p mod q
            long t = 0;
            for (long c = 2; c < spec.q; ++c) {
                long r = 1, ord = 0;
                do {
                    r = (r * c) % spec.q;
                    ++ord;
                } while (r != 1);
                if (ord == spec.p) {
                    t = c;
                    break;
                }
            }
            if (t == 0) throw ParseError("no multiplier of order p mod q");
            TableBuilder tb(n);
            detail::twisted_product(tb, spec.q, spec.p, t);
            return detail::finish(std::move(tb), spec);
        }
        case Family::Suzuki2: {
            long n = check_cap(20);
            // b^-1 a b = a^2 is equivalent to b a b^-1 = a^3 (3 = 2^-1 mod 5)
            TableBuilder tb(n);
            detail::twisted_product(tb, 5, 4, 3);
            return detail::finish(std::move(tb), spec);
        }
        case Family::Modular16: {
            long n = check_cap(16);
            TableBuilder tb(n);
            detail::twisted_product(tb, 8, 2, 5);
            return detail::finish(std::move(tb), spec);
        }
        case Family::Dicyclic: {
            long m = spec.m;
            long n = check_cap(4 * m);
            TableBuilder tb(n);
            // elements y^i x^j, i < 2m, j < 2; x^2 = y^m, x y x^-1 = y^-1
            for (long i = 0; i < 2 * m; ++i)
                for (long j = 0; j < 2; ++j) {
                    long me = i * 2 + j;
                    tb.labels[static_cast<size_t>(me)] = detail::word_label("y", i, "x", j);
                    for (long k2 = 0; k2 < 2 * m; ++k2)
                        for (long l = 0; l < 2; ++l) {
                            long ri = j == 0 ? (i + k2) % (2 * m) : ((i - k2) % (2 * m) + 2 * m) % (2 * m);
                            long rj = j + l;
                            if (rj == 2) {
                                rj = 0;
                                ri = (ri + m) % (2 * m);
                            }
                            tb.set(static_cast<int>(me), static_cast<int>(k2 * 2 + l), ri * 2 + rj);
                        }
                }
            return detail::finish(std::move(tb), spec);
        }
        case Family::CentralProdD8Z4: {
            long n = check_cap(16);
            TableBuilder tb(n);
            // a^i b^j c^k, a central of order 4; c b = a^2 b c
            auto idx = [](long i, long j, long k2) { return (i * 2 + j) * 2 + k2; };
            for (long i = 0; i < 4; ++i)
                for (long j = 0; j < 2; ++j)
                    for (long k2 = 0; k2 < 2; ++k2) {
                        long me = idx(i, j, k2);
                        std::string lab = detail::word_label("a", i, "b", j);
                        if (k2) lab = lab == "1" ? "c" : lab + " c";
                        tb.labels[static_cast<size_t>(me)] = lab;
                        for (long i2 = 0; i2 < 4; ++i2)
                            for (long j2 = 0; j2 < 2; ++j2)
                                for (long k3 = 0; k3 < 2; ++k3)
                                    tb.set(static_cast<int>(me), static_cast<int>(idx(i2, j2, k3)),
                                           idx((i + i2 + 2 * k2 * j2) % 4, (j + j2) % 2, (k2 + k3) % 2));
                    }
            return detail::finish(std::move(tb), spec);
        }
        case Family::SG16_3: {
            long n = check_cap(16);
            TableBuilder tb(n);
            // a^i b^j with b^j a^k = a^{(-1)^j k} b^{(-1)^k j} (j odd flips both)
            auto idx = [](long i, long j) { return i * 4 + j; };
            for (long i = 0; i < 4; ++i)
                for (long j = 0; j < 4; ++j) {
                    long me = idx(i, j);
                    tb.labels[static_cast<size_t>(me)] = detail::word_label("a", i, "b", j);
                    for (long k2 = 0; k2 < 4; ++k2)
                        for (long l = 0; l < 4; ++l) {
                            long ri, rj;
                            if (j % 2 == 0) {
                                ri = (i + k2) % 4;
                                rj = (j + l) % 4;
                            } else {
                                ri = ((i - k2) % 4 + 4) % 4;
                                long jj = (k2 % 2 == 0) ? j : (4 - j) % 4;
                                rj = (jj + l) % 4;
                            }
                            tb.set(static_cast<int>(me), static_cast<int>(idx(k2, l)), idx(ri, rj));
                        }
                }
            return detail::finish(std::move(tb), spec);
        }
        case Family::HanakiU: {
            FiniteField F(2, spec.n);
            long q = F.size();
            long n = check_cap(q * q);
            TableBuilder tb(n);
            auto idx = [&](long a, long b) { return a * q + b; };
            for (long a = 0; a < q; ++a)
                for (long b = 0; b < q; ++b) {
                    long me = idx(a, b);
                    tb.labels[static_cast<size_t>(me)] = "U(" + std::to_string(a) + "," + std::to_string(b) + ")";
                    for (long a2 = 0; a2 < q; ++a2)
                        for (long b2 = 0; b2 < q; ++b2)
                            tb.set(static_cast<int>(me), static_cast<int>(idx(a2, b2)),
                                   idx(F.add(a, a2), F.add(F.add(b, b2), F.mul(a2, F.frobenius(a)))));
                }
            return detail::finish(std::move(tb), spec);
        }
        case Family::HanakiV: {
            FiniteField F(spec.p, spec.n);
            long q = F.size();
            long n = check_cap(q * q * q);
            TableBuilder tb(n);
            auto idx = [&](long a, long b, long c) { return (a * q + b) * q + c; };
            for (long a = 0; a < q; ++a)
                for (long b = 0; b < q; ++b)
                    for (long c = 0; c < q; ++c) {
                        long me = idx(a, b, c);
                        tb.labels[static_cast<size_t>(me)] =
                            "V(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
                        for (long a2 = 0; a2 < q; ++a2)
                            for (long b2 = 0; b2 < q; ++b2)
                                for (long c2 = 0; c2 < q; ++c2)
                                    tb.set(static_cast<int>(me), static_cast<int>(idx(a2, b2, c2)),
                                           idx(F.add(a, a2), F.add(F.add(b, b2), F.mul(c, a2)), F.add(c, c2)));
                    }
            return detail::finish(std::move(tb), spec);
        }
        case Family::PSL2: {
            FiniteField F(2, spec.k);
            long q = F.size();
            check_cap(q * q * q - q);
            return detail::build_matrix_group(spec, F, true, max_order);
        }
        case Family::GL2: {
            FiniteField F(spec.p, spec.n);
            long q = F.size();
            check_cap((q * q - 1) * (q * q - q));
            return detail::build_matrix_group(spec, F, false, max_order);
        }
        case Family::SpecialLinear23: {
            FiniteField F(3, 1);
            check_cap(24);
            return detail::build_matrix_group(spec, F, true, max_order);
        }
        case Family::SymmetricS4:
            check_cap(24);
            return detail::build_permutation_group(spec, 4, false, max_order);
        case Family::AlternatingA4:
            check_cap(12);
            return detail::build_permutation_group(spec, 4, true, max_order);
        case Family::AlternatingA5:
            check_cap(60);
            return detail::build_permutation_group(spec, 5, true, max_order);
        case Family::DirectProductWithCyclic: {
            FiniteGroup in = build(*spec.inner, max_order);
            long k = spec.k;
            long n = check_cap(static_cast<long>(in.order) * k);
            TableBuilder tb(n);
            auto idx = [&](long g, long j) { return g * k + j; };
            for (long g = 0; g < in.order; ++g)
                for (long j = 0; j < k; ++j) {
                    long me = idx(g, j);
                    tb.labels[static_cast<size_t>(me)] =
                        "(" + in.labels[static_cast<size_t>(g)] + ",z^" + std::to_string(j) + ")";
                    for (long g2 = 0; g2 < in.order; ++g2)
                        for (long j2 = 0; j2 < k; ++j2)
                            tb.set(static_cast<int>(me), static_cast<int>(idx(g2, j2)),
                                   idx(in.mul(static_cast<int>(g), static_cast<int>(g2)), (j + j2) % k));
                }
            tb.identity = static_cast<int>(idx(in.identity, 0));
            return detail::finish(std::move(tb), spec);
        }
        case Family::ElementaryWitness: {
            GroupFamilySpec heis;
            heis.family = Family::HanakiV;
            heis.p = spec.p;
            heis.n = 1;
            GroupFamilySpec prod;
            prod.family = Family::DirectProductWithCyclic;
            prod.inner = std::make_shared<GroupFamilySpec>(heis);
            prod.k = spec.z / spec.p;
            FiniteGroup g = build(prod, max_order);
            g.family = spec;  // keep the requested descriptor
            return g;
        }
        case Family::Derived:
            throw ParseError("derived specs cannot be rebuilt");
    }
    throw ParseError("unhandled family");
}

// ---- structural utilities ---------------------------------------------------

inline std::vector<int> center(const FiniteGroup& g) {
    std::vector<int> z;
    for (int x = 0; x < g.order; ++x) {
        bool central = true;
        for (int y = 0; y < g.order && central; ++y) central = g.commute(x, y);
        if (central) z.push_back(x);
    }
    return z;
}

inline std::vector<int> centralizer(const FiniteGroup& g, int x) {
    if (x < 0 || x >= g.order) throw ParseError("element index out of range");
    std::vector<int> c;
    for (int y = 0; y < g.order; ++y)
        if (g.commute(x, y)) c.push_back(y);
    return c;
}

inline long centralizer_count(const FiniteGroup& g) {
    std::set<std::vector<int>> distinct;
    for (int x = 0; x < g.order; ++x) distinct.insert(centralizer(g, x));
    return static_cast<long>(distinct.size());
}

inline mpq_class commutativity_degree(const FiniteGroup& g) {
    long pairs = 0;
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            if (g.commute(x, y)) ++pairs;
    return rat_z(pairs, mpz_class(g.order) * g.order);
}

// Independent route used by tests: Pr(G) = (sum_x |C_G(x)|) / |G|^2.
inline mpq_class commutativity_degree_via_centralizers(const FiniteGroup& g) {
    mpz_class total = 0;
    for (int x = 0; x < g.order; ++x) total += static_cast<long>(centralizer(g, x).size());
    return rat_z(total, mpz_class(g.order) * g.order);
}

inline FiniteGroup central_quotient(const FiniteGroup& g) {
    std::vector<int> z = center(g);
    std::vector<char> in_z(static_cast<size_t>(g.order), 0);
    for (int x : z) in_z[static_cast<size_t>(x)] = 1;
    // canonical coset representative: smallest element index in the coset
    std::vector<int> coset_of(static_cast<size_t>(g.order), -1);
    std::vector<int> reps;
    for (int x = 0; x < g.order; ++x) {
        if (coset_of[static_cast<size_t>(x)] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int c : z) coset_of[static_cast<size_t>(g.mul(x, c))] = id;
    }
    detail::TableBuilder tb(static_cast<long>(reps.size()));
    for (size_t i = 0; i < reps.size(); ++i) {
        tb.labels[i] = g.labels[static_cast<size_t>(reps[i])] + " Z";
        for (size_t j = 0; j < reps.size(); ++j)
            tb.set(static_cast<int>(i), static_cast<int>(j),
                   coset_of[static_cast<size_t>(g.mul(reps[i], reps[j]))]);
    }
    tb.identity = coset_of[static_cast<size_t>(g.identity)];
    GroupFamilySpec spec;
    spec.family = Family::Derived;
    spec.derived_note = "quotient of " + g.family.descriptor();
    return detail::finish(std::move(tb), spec);
}

enum class QuotientKind { ElemAbelianPSquared, Dihedral, Suzuki2, Other };

struct QuotientTag {
    QuotientKind kind = QuotientKind::Other;
    long p = 0;  // for ElemAbelianPSquared
    long m = 0;  // for Dihedral (order 2m)
    std::string str() const {
        switch (kind) {
            case QuotientKind::ElemAbelianPSquared: return "Z" + std::to_string(p) + "xZ" + std::to_string(p);
            case QuotientKind::Dihedral: return "D" + std::to_string(2 * m);
            case QuotientKind::Suzuki2: return "Sz(2)";
            case QuotientKind::Other: return "other";
        }
        return "?";
    }
};

inline QuotientTag recognize_quotient(const FiniteGroup& g) {
    FiniteGroup quo = central_quotient(g);
    QuotientTag tag;
    long n = quo.order;
    // elementary abelian of order p^2
    for (long p = 2; p * p <= n; ++p) {
        if (!is_prime_long(p) || p * p != n) continue;
        bool elem = quo.is_abelian();
        for (int x = 0; elem && x < quo.order; ++x)
            if (x != quo.identity && quo.element_order(x) != static_cast<int>(p)) elem = false;
        if (elem) {
            tag.kind = QuotientKind::ElemAbelianPSquared;
            tag.p = p;
            return tag;
        }
    }
    // dihedral of order 2m, m >= 3: search generators r (order m), s with
    // s^2 = 1, s r s^-1 = r^-1, s outside <r>
    if (n % 2 == 0 && n >= 6) {
        long m = n / 2;
        for (int r = 0; r < quo.order; ++r) {
            if (quo.element_order(r) != static_cast<int>(m)) continue;
            std::vector<char> in_r(static_cast<size_t>(n), 0);
            int cur = quo.identity;
            for (long i = 0; i < m; ++i) {
                in_r[static_cast<size_t>(cur)] = 1;
                cur = quo.mul(cur, r);
            }
            for (int s = 0; s < quo.order; ++s) {
                if (in_r[static_cast<size_t>(s)] || quo.element_order(s) != 2) continue;
                if (quo.mul(quo.mul(s, r), s) == quo.inv(r)) {
                    tag.kind = QuotientKind::Dihedral;
                    tag.m = m;
                    return tag;
                }
            }
        }
    }
    // Suzuki group of order 20: a^5 = b^4 = 1, b^-1 a b = a^2
    if (n == 20) {
        for (int a = 0; a < quo.order; ++a) {
            if (quo.element_order(a) != 5) continue;
            int a2 = quo.mul(a, a);
            for (int b = 0; b < quo.order; ++b) {
                if (quo.element_order(b) != 4) continue;
                if (quo.mul(quo.mul(quo.inv(b), a), b) == a2) {
                    tag.kind = QuotientKind::Suzuki2;
                    return tag;
                }
            }
        }
    }
    return tag;
}

inline nlohmann::ordered_json group_json(const FiniteGroup& g) {
    nlohmann::ordered_json j;
    j["order"] = g.order;
    j["identity"] = g.identity;
    j["labels"] = g.labels;
    std::vector<std::vector<int>> rows(static_cast<size_t>(g.order));
    for (int i = 0; i < g.order; ++i) {
        rows[static_cast<size_t>(i)].resize(static_cast<size_t>(g.order));
        for (int k = 0; k < g.order; ++k) rows[static_cast<size_t>(i)][static_cast<size_t>(k)] = g.mul(i, k);
    }
    j["table"] = rows;
    return j;
}

}  // namespace commenergy

#endif
