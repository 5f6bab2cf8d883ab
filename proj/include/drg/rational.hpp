#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace drg {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_integer(const Rat& q) {
    if (!is_integer(q)) throw std::invalid_argument("to_integer: " + q.get_str() + " is not integral");
    return q.get_num();
}

// Floor division works for negative values too; GMP's fdiv is floor semantics.
inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r = 1;
    for (unsigned long i = 0; i < e; ++i) r *= base;
    return r;
}

// Renders exact values the way reports expect: "p" for integers, "p/q" otherwise.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline std::string int_str(const Int& z) { return z.get_str(); }

// Short decimal rendering for report fields where an exact fraction would be
// unreadable.  Integers stay exact; everything else rounds to sig digits.
inline std::string rat_decimal_str(const Rat& q, int sig = 10) {
    if (is_integer(q)) return q.get_num().get_str();
    mpf_class f(q, 332);
    mp_exp_t e10;
    std::string m = f.get_str(e10, 10, static_cast<size_t>(sig));
    if (m.empty()) return "0";
    bool neg = m[0] == '-';
    if (neg) m.erase(0, 1);
    while (m.size() > 1 && m.back() == '0') m.pop_back();
    std::string out;
    if (e10 > static_cast<mp_exp_t>(sig) + 4 || e10 < -4) {
        out = m.substr(0, 1);
        if (m.size() > 1) out += "." + m.substr(1);
        out += "e" + std::to_string(static_cast<long>(e10 - 1));
    } else if (e10 <= 0) {
        out = "0." + std::string(static_cast<size_t>(-e10), '0') + m;
    } else if (static_cast<size_t>(e10) >= m.size()) {
        out = m + std::string(static_cast<size_t>(e10) - m.size(), '0');
    } else {
        out = m.substr(0, static_cast<size_t>(e10)) + "." + m.substr(static_cast<size_t>(e10));
    }
    return (neg ? "-" : "") + out;
}

// Accepts "p" or "p/q"; rejects anything else.
inline std::optional<Rat> parse_rat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    Rat q;
    if (q.set_str(s, 10) != 0) return std::nullopt;
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return q;
}

inline std::optional<Int> parse_int(const std::string& s) {
    auto q = parse_rat(s);
    if (!q || !is_integer(*q)) return std::nullopt;
    return q->get_num();
}

// q = p^k with p prime, k >= 1.  Returns p, or nullopt when q is not a prime power.
inline std::optional<Int> prime_power_base(const Int& q) {
    if (q < 2) return std::nullopt;
    Int m = q;
    Int p = 0;
    for (Int d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            p = d;
            while (m % d == 0) m /= d;
            break;
        }
    }
    if (p == 0) return q;  // q itself prime
    return m == 1 ? std::optional<Int>(p) : std::nullopt;
}

}  // namespace drg
