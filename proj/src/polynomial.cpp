#include "drg/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace drg {

QPoly qpoly_constant(const Rat& c) { return QPoly({c}); }

QPoly qpoly_x_minus(const Rat& r) { return QPoly({-r, Rat(1)}); }

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rat> c(std::max(a.coeffs.size(), b.coeffs.size()), Rat(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
    for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
    return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    std::vector<Rat> c(std::max(a.coeffs.size(), b.coeffs.size()), Rat(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
    for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] -= b.coeffs[i];
    return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Rat> c(a.coeffs.size() + b.coeffs.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return QPoly(std::move(c));
}

QPoly operator*(const Rat& s, const QPoly& a) {
    if (s == 0) return QPoly();
    std::vector<Rat> c = a.coeffs;
    for (auto& x : c) x *= s;
    return QPoly(std::move(c));
}

bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs == b.coeffs; }

Rat eval(const QPoly& p, const Rat& x) {
    Rat acc = 0;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly derivative(const QPoly& p) {
    if (p.degree() <= 0) return QPoly();
    std::vector<Rat> c(p.coeffs.size() - 1);
    for (size_t i = 1; i < p.coeffs.size(); ++i) c[i - 1] = Rat(long(i)) * p.coeffs[i];
    return QPoly(std::move(c));
}

std::pair<QPoly, QPoly> divmod(const QPoly& num, const QPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    QPoly r = num;
    std::vector<Rat> q(num.degree() >= den.degree() ? num.degree() - den.degree() + 1 : 0, Rat(0));
    while (!r.is_zero() && r.degree() >= den.degree()) {
        int shift = r.degree() - den.degree();
        Rat factor = r.leading() / den.leading();
        q[shift] = factor;
        for (size_t i = 0; i < den.coeffs.size(); ++i) r.coeffs[i + shift] -= factor * den.coeffs[i];
        r.normalize();
    }
    return {QPoly(std::move(q)), r};
}

static QPoly make_monic(QPoly p) {
    if (p.is_zero()) return p;
    Rat inv = 1 / p.leading();
    for (auto& c : p.coeffs) c *= inv;
    return p;
}

QPoly poly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

QPoly squarefree_part(const QPoly& p) {
    if (p.degree() <= 1) return make_monic(p);
    QPoly g = poly_gcd(p, derivative(p));
    if (g.degree() == 0) return make_monic(p);
    return make_monic(divmod(p, g).first);
}

std::string poly_str(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rat& c = p.coeffs[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat a = rat_abs(c);
        if (i == 0 || a != 1) os << rat_str(a);
        if (i > 0) os << (a != 1 ? "*x" : "x");
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

RatInterval iv_add(const RatInterval& a, const RatInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
RatInterval iv_sub(const RatInterval& a, const RatInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

RatInterval iv_mul(const RatInterval& a, const RatInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)), std::max(std::max(p1, p2), std::max(p3, p4))};
}

RatInterval iv_scale(const Rat& s, const RatInterval& a) {
    return s >= 0 ? RatInterval{s * a.lo, s * a.hi} : RatInterval{s * a.hi, s * a.lo};
}

RatInterval eval_interval(const QPoly& p, const RatInterval& x) {
    RatInterval acc{Rat(0), Rat(0)};
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
        acc = iv_mul(acc, x);
        acc.lo += *it;
        acc.hi += *it;
    }
    return acc;
}

SturmChain sturm_chain(const QPoly& p) {
    SturmChain chain;
    QPoly p0 = squarefree_part(p);
    if (p0.is_zero() || p0.degree() == 0) return chain;
    chain.seq.push_back(p0);
    chain.seq.push_back(derivative(p0));
    while (!chain.seq.back().is_zero() && chain.seq.back().degree() > 0) {
        QPoly r = divmod(chain.seq[chain.seq.size() - 2], chain.seq.back()).second;
        if (r.is_zero()) break;
        chain.seq.push_back(Rat(-1) * r);
    }
    return chain;
}

int sign_variations(const SturmChain& chain, const Rat& x) {
    int variations = 0, last = 0;
    for (const auto& p : chain.seq) {
        Rat v = eval(p, x);
        int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s != 0) {
            if (last != 0 && s != last) ++variations;
            last = s;
        }
    }
    return variations;
}

int count_roots(const SturmChain& chain, const Rat& lo, const Rat& hi) {
    if (chain.seq.empty()) return 0;
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

AlgReal AlgReal::from_root(QPoly squarefree, const Rat& lo, const Rat& hi) {
    AlgReal a;
    a.exact = false;
    a.poly = std::move(squarefree);
    a.lo = lo;
    a.hi = hi;
    if (!(eval(a.poly, lo) != 0 && eval(a.poly, hi) != 0))
        throw std::invalid_argument("AlgReal: isolating endpoints must not be roots");
    return a;
}

void AlgReal::refine_below(const Rat& w) {
    if (exact) return;
    int sign_lo = eval(poly, lo) > 0 ? 1 : -1;
    while (hi - lo > w) {
        Rat mid = (lo + hi) / 2;
        Rat v = eval(poly, mid);
        if (v == 0) {
            exact = true;
            value = mid;
            return;
        }
        if ((v > 0 ? 1 : -1) == sign_lo) lo = mid;
        else hi = mid;
    }
}

int AlgReal::sign_of(const QPoly& P) const {
    if (exact) {
        Rat v = eval(P, value);
        return v > 0 ? 1 : (v < 0 ? -1 : 0);
    }
    if (P.is_zero()) return 0;
    QPoly g = poly_gcd(P, poly);
    if (g.degree() >= 1) {
        // Roots of g are common roots; the isolating interval holds exactly one
        // root of `poly`, so a sign change of g across it certifies P(alpha) = 0.
        Rat glo = eval(g, lo), ghi = eval(g, hi);
        if ((glo > 0 && ghi < 0) || (glo < 0 && ghi > 0)) return 0;
    }
    AlgReal work = *this;
    for (int iter = 0; iter < 20000; ++iter) {
        RatInterval box = eval_interval(P, {work.lo, work.hi});
        if (box.lo > 0) return 1;
        if (box.hi < 0) return -1;
        Rat mid = (work.lo + work.hi) / 2;
        Rat v = eval(work.poly, mid);
        if (v == 0) {
            Rat pv = eval(P, mid);
            return pv > 0 ? 1 : (pv < 0 ? -1 : 0);
        }
        int sign_lo = eval(work.poly, work.lo) > 0 ? 1 : -1;
        if ((v > 0 ? 1 : -1) == sign_lo) work.lo = mid;
        else work.hi = mid;
    }
    throw std::runtime_error("AlgReal::sign_of: refinement did not converge");
}

int AlgReal::cmp(const Rat& q) const {
    if (exact) return value > q ? 1 : (value < q ? -1 : 0);
    return sign_of(qpoly_x_minus(q));  // sign of (alpha - q)
}

bool AlgReal::operator<(const AlgReal& other) const {
    if (exact && other.exact) return value < other.value;
    if (exact) return other.cmp(value) > 0;
    if (other.exact) return cmp(other.value) < 0;
    AlgReal a = *this, b = other;
    for (int iter = 0; iter < 20000; ++iter) {
        if (a.exact) return b.cmp(a.value) > 0;
        if (b.exact) return a.cmp(b.value) < 0;
        if (a.hi <= b.lo) return true;
        if (b.hi <= a.lo) return false;
        Rat wa = a.hi - a.lo, wb = b.hi - b.lo;
        // Equal algebraic numbers never reach here: callers compare roots of one
        // squarefree polynomial (distinct) or use cmp() against rationals.
        (wa >= wb ? a : b).refine_below((wa >= wb ? wa : wb) / 2);
    }
    throw std::runtime_error("AlgReal::operator<: refinement did not converge");
}

std::string AlgReal::str() const {
    if (exact) return rat_str(value);
    return "~" + rat_decimal_str((lo + hi) / 2);
}

double AlgReal::approx() const {
    if (exact) return value.get_d();
    return (lo.get_d() + hi.get_d()) / 2.0;
}

std::vector<AlgReal> isolate_real_roots(const QPoly& p, const Rat& width) {
    std::vector<AlgReal> roots;
    QPoly f = squarefree_part(p);
    if (f.is_zero() || f.degree() == 0) return roots;

    // Certify rational roots first.  For monic integer polynomials these are
    // integers; in general num | a0, den | an after clearing denominators.
    Int den_lcm = 1;
    for (const auto& c : f.coeffs) {
        Int d = c.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    std::vector<Int> zc;
    for (const auto& c : f.coeffs) zc.push_back(Rat(c * Rat(den_lcm)).get_num());

    // Cauchy bound on root magnitude.
    Rat bound = 0;
    for (int i = 0; i < f.degree(); ++i) {
        Rat m = rat_abs(f.coeffs[i] / f.leading());
        if (m > bound) bound = m;
    }
    bound += 1;

    QPoly remaining = f;
    auto try_rat_root = [&](const Rat& cand) {
        if (eval(remaining, cand) == 0) {
            roots.push_back(AlgReal::from_rat(cand));
            remaining = divmod(remaining, qpoly_x_minus(cand)).first;
        }
    };
    try_rat_root(Rat(0));
    std::vector<Int> num_divs, den_divs;
    Int a0 = zc[0], an = zc.back();
    if (a0 == 0) {
        // zero root already removed; recompute constant term from `remaining`
        a0 = 1;
        for (const auto& c : remaining.coeffs) {
            if (c != 0) {
                Rat scaled = c * Rat(den_lcm);
                a0 = scaled.get_num();
                break;
            }
        }
    }
    Int abs_a0 = abs(a0), abs_an = abs(an);
    for (Int d = 1; d * d <= abs_a0; ++d)
        if (abs_a0 % d == 0) {
            num_divs.push_back(d);
            num_divs.push_back(abs_a0 / d);
        }
    for (Int d = 1; d * d <= abs_an; ++d)
        if (abs_an % d == 0) {
            den_divs.push_back(d);
            den_divs.push_back(abs_an / d);
        }
    for (const Int& nu : num_divs)
        for (const Int& de : den_divs) {
            Rat cand = make_rat(nu, de);
            if (cand > bound) continue;
            try_rat_root(cand);
            try_rat_root(-cand);
        }

    if (remaining.degree() >= 1) {
        SturmChain chain = sturm_chain(remaining);
        Rat lo = -bound, hi = bound;
        // Endpoints of bisection boxes are never roots: rational roots are gone.
        std::vector<std::pair<Rat, Rat>> stack{{lo, hi}}, isolated;
        while (!stack.empty()) {
            auto [a, b] = stack.back();
            stack.pop_back();
            int k = count_roots(chain, a, b);
            if (k == 0) continue;
            if (k == 1) {
                isolated.push_back({a, b});
                continue;
            }
            Rat mid = (a + b) / 2;
            while (eval(remaining, mid) == 0) mid = (a + mid) / 2;  // cannot persist: no rational roots remain
            stack.push_back({a, mid});
            stack.push_back({mid, b});
        }
        for (auto& [a, b] : isolated) {
            AlgReal r = AlgReal::from_root(remaining, a, b);
            r.refine_below(width);
            roots.push_back(std::move(r));
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace drg
