#ifndef COMMENERGY_ALGEBRA_HPP
#define COMMENERGY_ALGEBRA_HPP

// Finite-field arithmetic GF(p^n) plus the small matrix machinery the group
// constructors need (GL(2,q), SL(2,q), 3x3 unitriangular representatives).
//
// Field elements are integers in [0, p^n) encoding the coefficient vector of
// the residue polynomial base p, c0 least significant. The modulus is the
// lexicographically smallest monic irreducible of degree n over Z/p, comparing
// coefficient tuples (c0, c1, ...) from c0 up, so element labels are
// reproducible across runs and platforms.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "commenergy/rat.hpp"

namespace commenergy {

inline bool is_prime_long(long v) {
    if (v < 2) return false;
    for (long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

class FiniteField {
public:
    static constexpr long kCardinalityCap = 1L << 16;

    FiniteField(long p, long n) : p_(p), n_(n) {
        if (!is_prime_long(p)) throw ParseError("field characteristic must be prime, got " + std::to_string(p));
        if (n < 1) throw ParseError("field extension degree must be >= 1");
        q_ = 1;
        for (long i = 0; i < n; ++i) {
            q_ *= p;
            if (q_ > kCardinalityCap) throw CapExceeded("field cardinality exceeds 2^16");
        }
        modulus_ = canonical_modulus();
        if (q_ <= kTableCap) build_tables();
    }

    long p() const { return p_; }
    long n() const { return n_; }
    long size() const { return q_; }
    // Monus coefficients c0..cn of the modulus, ascending degree, monic.
    const std::vector<int>& modulus() const { return modulus_; }

    long zero() const { return 0; }
    long one() const { return 1; }

    long add(long x, long y) const {
        if (!mul_table_.empty()) return add_table_[static_cast<size_t>(x) * q_ + y];
        return add_slow(x, y);
    }
    long neg(long x) const {
        std::vector<int> c = decode(x);
        for (auto& v : c) v = (p_ - v) % static_cast<int>(p_);
        return encode(c);
    }
    long sub(long x, long y) const { return add(x, neg(y)); }
    long mul(long x, long y) const {
        if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(x) * q_ + y];
        return mul_slow(x, y);
    }
    long pow(long x, long e) const {
        long r = 1, b = x;
        long m = e % (q_ - 1);
        if (m < 0) m += q_ - 1;
        if (x == 0) return e == 0 ? 1 : 0;
        while (m) {
            if (m & 1) r = mul(r, b);
            b = mul(b, b);
            m >>= 1;
        }
        return r;
    }
    long inv(long x) const {
        if (x == 0) throw ParseError("inverse of zero field element");
        return pow(x, q_ - 2);
    }
    // x -> x^2; the Frobenius map when the characteristic is 2.
    long frobenius(long x) const { return mul(x, x); }

    long element_order(long x) const {
        if (x == 0) throw ParseError("order of zero field element");
        long r = x, ord = 1;
        while (r != 1) {
            r = mul(r, x);
            ++ord;
        }
        return ord;
    }

    std::vector<int> decode(long x) const {
        std::vector<int> c(static_cast<size_t>(n_));
        for (long i = 0; i < n_; ++i) {
            c[static_cast<size_t>(i)] = static_cast<int>(x % p_);
            x /= p_;
        }
        return c;
    }
    long encode(const std::vector<int>& c) const {
        long x = 0;
        for (long i = n_ - 1; i >= 0; --i) x = x * p_ + c[static_cast<size_t>(i)];
        return x;
    }

private:
    static constexpr long kTableCap = 1024;

    long add_slow(long x, long y) const {
        std::vector<int> a = decode(x), b = decode(y);
        for (size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % static_cast<int>(p_);
        return encode(a);
    }

    long mul_slow(long x, long y) const {
        std::vector<int> a = decode(x), b = decode(y);
        std::vector<int> prod(static_cast<size_t>(2 * n_ - 1), 0);
        for (long i = 0; i < n_; ++i)
            for (long j = 0; j < n_; ++j)
                prod[static_cast<size_t>(i + j)] =
                    static_cast<int>((prod[static_cast<size_t>(i + j)] +
                                      static_cast<long>(a[static_cast<size_t>(i)]) * b[static_cast<size_t>(j)]) %
                                     p_);
        // Reduce modulo the monic modulus.
        for (long d = 2 * n_ - 2; d >= n_; --d) {
            int lead = prod[static_cast<size_t>(d)];
            if (lead == 0) continue;
            prod[static_cast<size_t>(d)] = 0;
            for (long i = 0; i < n_; ++i) {
                long idx = d - n_ + i;
                long v = prod[static_cast<size_t>(idx)] - static_cast<long>(lead) * modulus_[static_cast<size_t>(i)];
                v %= p_;
                if (v < 0) v += p_;
                prod[static_cast<size_t>(idx)] = static_cast<int>(v);
            }
        }
        prod.resize(static_cast<size_t>(n_));
        return encode(prod);
    }

    // Polynomial arithmetic over Z/p on raw coefficient vectors (ascending).
    static std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, long p) {
        long dm = static_cast<long>(m.size()) - 1;
        while (static_cast<long>(a.size()) - 1 >= dm) {
            long da = static_cast<long>(a.size()) - 1;
            int lead = a.back();
            if (lead != 0) {
                // m is monic
                for (long i = 0; i <= dm; ++i) {
                    long idx = da - dm + i;
                    long v = a[static_cast<size_t>(idx)] - static_cast<long>(lead) * m[static_cast<size_t>(i)];
                    v %= p;
                    if (v < 0) v += p;
                    a[static_cast<size_t>(idx)] = static_cast<int>(v);
                }
            }
            a.pop_back();
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (a.empty()) break;
        }
        return a;
    }

    static bool divides(const std::vector<int>& d, const std::vector<int>& f, long p) {
        return poly_mod(f, d, p).empty();
    }

    std::vector<int> canonical_modulus() const {
        if (n_ == 1) return {0, 1};  // modulus x: prime field
        // Enumerate monic degree-n polynomials in lex order of (c0, c1, ...)
        // with c0 the most significant comparison key.
        std::vector<int> c(static_cast<size_t>(n_), 0);
        auto next = [&]() {
            for (long i = n_ - 1; i >= 0; --i) {
                if (++c[static_cast<size_t>(i)] < p_) return true;
                c[static_cast<size_t>(i)] = 0;
            }
            return false;
        };
        do {
            if (c[0] == 0) continue;  // divisible by x
            std::vector<int> f = c;
            f.push_back(1);
            if (irreducible(f)) return f;
        } while (next());
        throw InternalInconsistency("no irreducible modulus found");  // unreachable
    }

    bool irreducible(const std::vector<int>& f) const {
        // Trial division by every monic polynomial of degree 1..n/2.
        long half = n_ / 2;
        for (long d = 1; d <= half; ++d) {
            long count = 1;
            for (long i = 0; i < d; ++i) count *= p_;
            for (long v = 0; v < count; ++v) {
                std::vector<int> g(static_cast<size_t>(d) + 1);
                long t = v;
                for (long i = 0; i < d; ++i) {
                    g[static_cast<size_t>(i)] = static_cast<int>(t % p_);
                    t /= p_;
                }
                g[static_cast<size_t>(d)] = 1;
                if (divides(g, f, p_)) return false;
            }
        }
        return true;
    }

    void build_tables() {
        add_table_.resize(static_cast<size_t>(q_) * q_);
        mul_table_.resize(static_cast<size_t>(q_) * q_);
        for (long x = 0; x < q_; ++x)
            for (long y = 0; y < q_; ++y) {
                add_table_[static_cast<size_t>(x) * q_ + y] = static_cast<uint16_t>(add_slow(x, y));
                mul_table_[static_cast<size_t>(x) * q_ + y] = static_cast<uint16_t>(mul_slow(x, y));
            }
    }

    long p_, n_, q_;
    std::vector<int> modulus_;
    std::vector<uint16_t> add_table_, mul_table_;
};

inline FiniteField field_make(long p, long n) { return FiniteField(p, n); }

struct Mat2 {
    std::array<uint16_t, 4> e{};  // row major: [a b; c d]

    long det(const FiniteField& F) const {
        return F.sub(F.mul(e[0], e[3]), F.mul(e[1], e[2]));
    }
    Mat2 mul(const Mat2& o, const FiniteField& F) const {
        Mat2 r;
        r.e[0] = static_cast<uint16_t>(F.add(F.mul(e[0], o.e[0]), F.mul(e[1], o.e[2])));
        r.e[1] = static_cast<uint16_t>(F.add(F.mul(e[0], o.e[1]), F.mul(e[1], o.e[3])));
        r.e[2] = static_cast<uint16_t>(F.add(F.mul(e[2], o.e[0]), F.mul(e[3], o.e[2])));
        r.e[3] = static_cast<uint16_t>(F.add(F.mul(e[2], o.e[1]), F.mul(e[3], o.e[3])));
        return r;
    }
    bool operator==(const Mat2&) const = default;
    // Row-major field-index key; fixes the deterministic enumeration order.
    long key(const FiniteField& F) const {
        long k = 0;
        for (auto v : e) k = k * F.size() + v;
        return k;
    }
    std::string str() const {
        return "[[" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "],[" + std::to_string(e[2]) + "," +
               std::to_string(e[3]) + "]]";
    }
    static Mat2 identity() { return Mat2{{1, 0, 0, 1}}; }
};

struct Mat3 {
    std::array<uint16_t, 9> e{};

    Mat3 mul(const Mat3& o, const FiniteField& F) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                long s = 0;
                for (int k = 0; k < 3; ++k) s = F.add(s, F.mul(e[static_cast<size_t>(3 * i + k)], o.e[static_cast<size_t>(3 * k + j)]));
                r.e[static_cast<size_t>(3 * i + j)] = static_cast<uint16_t>(s);
            }
        return r;
    }
    bool operator==(const Mat3&) const = default;
    static Mat3 identity() { return Mat3{{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }
};

// All invertible 2x2 matrices over F in row-major field-index order.
// |GL(2,q)| = (q^2-1)(q^2-q).
inline std::vector<Mat2> gl2_enumerate(const FiniteField& F, long max_count = 1L << 22) {
    long q = F.size();
    long expect = (q * q - 1) * (q * q - q);
    if (expect > max_count) throw CapExceeded("GL(2," + std::to_string(q) + ") enumeration exceeds cap");
    std::vector<Mat2> out;
    out.reserve(static_cast<size_t>(expect));
    for (long a = 0; a < q; ++a)
        for (long b = 0; b < q; ++b)
            for (long c = 0; c < q; ++c)
                for (long d = 0; d < q; ++d) {
                    Mat2 m{{static_cast<uint16_t>(a), static_cast<uint16_t>(b), static_cast<uint16_t>(c),
                            static_cast<uint16_t>(d)}};
                    if (m.det(F) != 0) out.push_back(m);
                }
    return out;
}

// All determinant-1 matrices; |SL(2,q)| = q^3 - q.
inline std::vector<Mat2> sl2_enumerate(const FiniteField& F, long max_count = 1L << 22) {
    long q = F.size();
    long expect = q * q * q - q;
    if (expect > max_count) throw CapExceeded("SL(2," + std::to_string(q) + ") enumeration exceeds cap");
    std::vector<Mat2> out;
    out.reserve(static_cast<size_t>(expect));
    for (long a = 0; a < q; ++a)
        for (long b = 0; b < q; ++b)
            for (long c = 0; c < q; ++c)
                for (long d = 0; d < q; ++d) {
                    Mat2 m{{static_cast<uint16_t>(a), static_cast<uint16_t>(b), static_cast<uint16_t>(c),
                            static_cast<uint16_t>(d)}};
                    if (m.det(F) == 1) out.push_back(m);
                }
    return out;
}

}  // namespace commenergy

#endif
