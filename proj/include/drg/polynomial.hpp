#pragma once

#include <string>
#include <vector>

#include "drg/rational.hpp"

namespace drg {

// Dense univariate polynomial over Q, coefficient i belongs to x^i.
// Invariant: empty coeffs means the zero polynomial; otherwise coeffs.back() != 0.
struct QPoly {
    std::vector<Rat> coeffs;

    QPoly() = default;
    explicit QPoly(std::vector<Rat> c) : coeffs(std::move(c)) { normalize(); }

    void normalize() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 for zero
    const Rat& leading() const { return coeffs.back(); }
};

QPoly qpoly_constant(const Rat& c);
QPoly qpoly_x_minus(const Rat& r);  // x - r

QPoly operator+(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);
QPoly operator*(const Rat& s, const QPoly& a);
bool operator==(const QPoly& a, const QPoly& b);

Rat eval(const QPoly& p, const Rat& x);
QPoly derivative(const QPoly& p);

// Euclidean division; den != 0 required. Returns {quotient, remainder}.
std::pair<QPoly, QPoly> divmod(const QPoly& num, const QPoly& den);

// Monic gcd (1 for coprime, 0 only if both zero).
QPoly poly_gcd(QPoly a, QPoly b);

// p / gcd(p, p'), monic.
QPoly squarefree_part(const QPoly& p);

std::string poly_str(const QPoly& p);  // human-readable, highest degree first

// --- closed rational intervals with exact endpoints ------------------------

struct RatInterval {
    Rat lo, hi;
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    Rat width() const { return hi - lo; }
};

RatInterval iv_add(const RatInterval& a, const RatInterval& b);
RatInterval iv_sub(const RatInterval& a, const RatInterval& b);
RatInterval iv_mul(const RatInterval& a, const RatInterval& b);
RatInterval iv_scale(const Rat& s, const RatInterval& a);
RatInterval eval_interval(const QPoly& p, const RatInterval& x);

// --- Sturm sequences and real root isolation --------------------------------

// Sturm chain of the squarefree part; counts distinct real roots in (lo, hi].
struct SturmChain {
    std::vector<QPoly> seq;
};

SturmChain sturm_chain(const QPoly& p);
int sign_variations(const SturmChain& chain, const Rat& x);
int count_roots(const SturmChain& chain, const Rat& lo, const Rat& hi);  // roots in (lo, hi]

// A real algebraic number: either an exact rational, or the unique root of
// `poly` (squarefree) in the open interval (lo, hi) with poly(lo)*poly(hi) < 0.
struct AlgReal {
    bool exact = true;
    Rat value;     // when exact
    QPoly poly;    // when not exact (squarefree)
    Rat lo, hi;    // isolating interval, endpoints are not roots

    static AlgReal from_rat(const Rat& v) {
        AlgReal a;
        a.exact = true;
        a.value = v;
        return a;
    }
    static AlgReal from_root(QPoly squarefree, const Rat& lo, const Rat& hi);

    RatInterval enclosure() const {
        if (exact) return {value, value};
        return {lo, hi};
    }
    // Halve the interval until its width is <= w (no-op for exact values).
    void refine_below(const Rat& w);
    // Exact sign of P evaluated at this number: -1, 0, +1.
    int sign_of(const QPoly& P) const;
    // Exact three-way comparison with a rational.
    int cmp(const Rat& q) const;
    bool operator<(const AlgReal& other) const;  // exact numeric order
    bool equals_rat(const Rat& q) const { return cmp(q) == 0; }
    std::string str() const;  // exact "p/q" or "(lo,hi)" with exact endpoints
    double approx() const;
};

// All real roots of p (each simple root gets an isolating interval; rational
// roots of the monic-integer case are certified exactly first).  Roots are
// returned in strictly increasing order, every interval refined to width <= w.
std::vector<AlgReal> isolate_real_roots(const QPoly& p, const Rat& width);

}  // namespace drg
