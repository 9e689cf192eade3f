#ifndef COMMENERGY_RAT_HPP
#define COMMENERGY_RAT_HPP

// Exact rational/integer helpers shared across the library.
// All rationals are GMP mpq_class kept in canonical (lowest-terms) form.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace commenergy {

// Error taxonomy; the CLI maps these onto exit codes.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& m) : std::runtime_error(m) {}
};
struct AbelianGroupError : std::runtime_error {
    explicit AbelianGroupError(const std::string& m) : std::runtime_error(m) {}
};
struct InternalInconsistency : std::runtime_error {
    explicit InternalInconsistency(const std::string& m) : std::runtime_error(m) {}
};

inline mpq_class rat(long num, long den = 1) {
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

inline mpq_class rat_z(const mpz_class& num, const mpz_class& den = 1) {
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

// Canonical text form: "num/den", or just "num" when the denominator is 1.
inline std::string rat_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline mpq_class rat_parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline mpq_class rat_abs(const mpq_class& q) { return q < 0 ? mpq_class(-q) : q; }

inline mpz_class rat_floor(const mpq_class& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline mpz_class zpow(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline mpz_class zpow(long base, unsigned long e) { return zpow(mpz_class(base), e); }

// Parses plain, fractional and scientific decimal notation ("1e-9", "0.25", "3/7").
inline mpq_class tolerance_parse(const std::string& s) {
    if (s.find('/') != std::string::npos) return rat_parse(s);
    std::string mant = s;
    long expo = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        mant = s.substr(0, epos);
        try {
            expo = std::stol(s.substr(epos + 1));
        } catch (...) {
            throw ParseError("bad tolerance: " + s);
        }
    }
    bool neg = false;
    if (!mant.empty() && (mant[0] == '+' || mant[0] == '-')) {
        neg = mant[0] == '-';
        mant.erase(0, 1);
    }
    auto dot = mant.find('.');
    std::string digits = mant;
    long frac = 0;
    if (dot != std::string::npos) {
        frac = static_cast<long>(mant.size() - dot - 1);
        digits = mant.substr(0, dot) + mant.substr(dot + 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad tolerance: " + s);
    mpq_class q(mpz_class(digits), 1);
    long net = expo - frac;
    if (net >= 0)
        q *= mpq_class(zpow(10, static_cast<unsigned long>(net)), 1);
    else
        q /= mpq_class(zpow(10, static_cast<unsigned long>(-net)), 1);
    if (neg) q = -q;
    q.canonicalize();
    return q;
}

// Decimal rendering of a rational to `digits` places (round toward zero), for
// pretty output only; serialized formats always use exact num/den strings.
inline std::string rat_decimal(const mpq_class& q, int digits = 12) {
    mpq_class a = rat_abs(q);
    mpz_class scale = zpow(10, static_cast<unsigned long>(digits));
    mpz_class scaled = a.get_num() * scale / a.get_den();
    mpz_class ip = scaled / scale, fp = scaled % scale;
    std::string f = fp.get_str();
    f.insert(f.begin(), static_cast<size_t>(digits) - f.size(), '0');
    std::string out = (q < 0 ? "-" : "") + ip.get_str() + "." + f;
    return out;
}

}  // namespace commenergy

#endif
