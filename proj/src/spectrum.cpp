#include "drg/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace drg {

Rat default_isolation_width() { return make_rat(Int(1), int_pow(Int(10), 12)); }
Rat refinement_floor_width() { return make_rat(Int(1), int_pow(Int(10), 30)); }

std::string Multiplicity::str() const {
    if (exact) return rat_str(value);
    return "~" + rat_decimal_str((box.lo + box.hi) / 2);
}

std::string StandardSequence::str() const {
    std::string s = "(";
    for (size_t i = 0; i < u_box.size(); ++i) {
        if (i) s += ",";
        if (exact) s += rat_str(u[i]);
        else s += "~" + rat_decimal_str((u_box[i].lo + u_box[i].hi) / 2);
    }
    return s + ")";
}

QPoly characteristic_polynomial(const IntersectionArray& arr) {
    int m = arr.D + 1;
    QPoly prev2 = qpoly_constant(Rat(1));
    QPoly prev1 = qpoly_x_minus(Rat(arr.a_i(0)));
    for (int j = 2; j <= m; ++j) {
        QPoly t = qpoly_x_minus(Rat(arr.a_i(j - 1))) * prev1 -
                  Rat(arr.b_i(j - 2) * arr.c_i(j - 1)) * prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(t);
    }
    return prev1;
}

static std::vector<QPoly> standard_sequence_polys(const IntersectionArray& arr) {
    std::vector<QPoly> u(arr.D + 1);
    u[0] = qpoly_constant(Rat(1));
    u[1] = QPoly({Rat(0), Rat(1) / Rat(arr.k())});
    for (int i = 1; i < arr.D; ++i) {
        QPoly t = QPoly({Rat(-arr.a_i(i)), Rat(1)}) * u[i] - Rat(arr.c_i(i)) * u[i - 1];
        u[i + 1] = Rat(1) / Rat(arr.b_i(i)) * t;
    }
    return u;
}

StandardSequence standard_sequence(const IntersectionArray& arr, const AlgReal& theta) {
    StandardSequence seq;
    seq.theta = theta;
    seq.u_of_theta = standard_sequence_polys(arr);
    seq.exact = theta.exact;
    for (const auto& p : seq.u_of_theta) {
        if (theta.exact) {
            Rat v = eval(p, theta.value);
            seq.u.push_back(v);
            seq.u_box.push_back({v, v});
        } else {
            seq.u_box.push_back(eval_interval(p, theta.enclosure()));
        }
    }
    return seq;
}

StandardSequence standard_sequence(const IntersectionArray& arr, const Rat& theta) {
    return standard_sequence(arr, AlgReal::from_rat(theta));
}

bool is_eigenvalue(const IntersectionArray& arr, const Rat& theta) {
    auto u = standard_sequence_polys(arr);
    QPoly last_row = Rat(arr.c_i(arr.D)) * u[arr.D - 1] +
                     QPoly({Rat(arr.a_i(arr.D)), Rat(-1)}) * u[arr.D];
    return eval(last_row, theta) == 0;
}

Multiplicity multiplicity(const IntersectionArray& arr, const AlgReal& theta) {
    auto counts = derive_counts(arr);
    if (!counts.ok()) throw std::invalid_argument("multiplicity: " + counts.failure().str());
    auto u = standard_sequence_polys(arr);
    QPoly S;
    for (int i = 0; i <= arr.D; ++i) S = S + Rat(counts->k[i]) * (u[i] * u[i]);

    Multiplicity m;
    if (theta.exact) {
        Rat s = eval(S, theta.value);
        if (s <= 0) throw std::logic_error("multiplicity: sum k_i u_i^2 must be positive");
        m.exact = true;
        m.value = Rat(counts->n) / s;
        m.box = {m.value, m.value};
        if (is_integer(m.value)) m.integer = to_integer(m.value);
        return m;
    }
    m.exact = false;
    AlgReal th = theta;
    RatInterval sbox = eval_interval(S, th.enclosure());
    for (int iter = 0; iter < 64 && sbox.lo <= 0; ++iter) {
        th.refine_below((th.hi - th.lo) / 2);
        sbox = eval_interval(S, th.enclosure());
        if (th.exact) return multiplicity(arr, th);
    }
    if (sbox.lo <= 0) throw std::runtime_error("multiplicity: enclosure of sum k_i u_i^2 stayed near zero");
    m.box = {Rat(counts->n) / sbox.hi, Rat(counts->n) / sbox.lo};
    // Exact integrality decision: m = t iff n - t*S(theta) = 0.
    Int t = rat_floor((m.box.lo + m.box.hi) / 2 + make_rat(1, 2));
    QPoly probe = qpoly_constant(Rat(counts->n)) - Rat(t) * S;
    if (th.sign_of(probe) == 0) m.integer = t;
    return m;
}

Multiplicity multiplicity(const IntersectionArray& arr, const Rat& theta) {
    return multiplicity(arr, AlgReal::from_rat(theta));
}

static Outcome<SpectrumData> finish_spectrum(const IntersectionArray& arr, SpectrumData sp) {
    auto counts = derive_counts(arr);
    if (!counts.ok()) return counts.failure();
    sp.D = arr.D;
    sp.n = counts->n;
    for (const auto& th : sp.theta) sp.mult.push_back(multiplicity(arr, th));
    return sp;
}

Outcome<SpectrumData> classical_eigenvalues(const ClassicalParameterSet& cp) {
    auto arr = classical_to_array(cp);
    if (!arr.ok()) return arr.failure();
    std::vector<Rat> vals;
    for (int i = 0; i <= cp.D; ++i) {
        Rat bi = i < cp.D ? Rat(arr->b_i(i)) : Rat(0);
        Rat theta = (gaussian_bracket(cp.D - i, cp.b)) * (cp.beta - cp.alpha * gaussian_bracket(i, cp.b)) -
                    gaussian_bracket(i, cp.b);
        // Cross-form b_i/b^i - [i] must agree where defined.
        if (cp.b != 0 && i < cp.D) {
            Rat alt = bi / rat_pow(cp.b, i) - gaussian_bracket(i, cp.b);
            if (alt != theta) return infeasible("eigenvalue closed forms agree", i, rat_str(alt));
        }
        vals.push_back(theta);
    }
    SpectrumData sp;
    sp.source = "classical-closed-form";
    if (cp.b >= 1) {
        sp.order = "natural";
        for (size_t i = 1; i < vals.size(); ++i)
            if (!(vals[i - 1] > vals[i]))
                return infeasible("natural eigenvalue order strictly decreasing", static_cast<int>(i),
                                  rat_str(vals[i - 1]) + " !> " + rat_str(vals[i]));
    } else {
        sp.order = "sorted-numerically";
        std::sort(vals.begin(), vals.end(), std::greater<Rat>());
        for (size_t i = 1; i < vals.size(); ++i)
            if (vals[i - 1] == vals[i])
                return infeasible("eigenvalues distinct", static_cast<int>(i), rat_str(vals[i]));
    }
    sp.charpoly = characteristic_polynomial(*arr);
    for (const auto& v : vals) {
        if (eval(sp.charpoly, v) != 0)
            return infeasible("closed-form value is a characteristic root", -1, rat_str(v));
        sp.theta.push_back(AlgReal::from_rat(v));
    }
    return finish_spectrum(*arr, std::move(sp));
}

Outcome<SpectrumData> eigenvalues(const IntersectionArray& arr) {
    if (auto bad = validate(arr)) return *bad;
    SpectrumData sp;
    sp.source = "characteristic-polynomial";
    sp.order = "natural";
    sp.charpoly = characteristic_polynomial(arr);
    auto roots = isolate_real_roots(sp.charpoly, default_isolation_width());
    if (static_cast<int>(roots.size()) != arr.D + 1)
        return infeasible("D+1 distinct real eigenvalues", -1,
                          std::to_string(roots.size()) + " isolated");
    std::reverse(roots.begin(), roots.end());
    if (!(roots.front().exact && roots.front().value == Rat(arr.k())))
        return infeasible("theta_0 = k", 0, roots.front().str());
    sp.theta = std::move(roots);
    return finish_spectrum(arr, std::move(sp));
}

int BParameter::cmp(const Rat& q) const {
    if (exact) return value > q ? 1 : (value < q ? -1 : 0);
    return sign_of_poly({-q, Rat(1)});  // sign of (b - q)
}

int BParameter::sign_of_poly(const std::vector<Rat>& coeff) const {
    if (exact) {
        Rat acc = 0;
        for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * value + *it;
        return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
    }
    int s1 = theta1.cmp(Rat(-1));  // sign of theta_1 + 1
    if (s1 == 0) throw std::logic_error("BParameter: theta_1 = -1");
    // P(b) with b = b1/(theta1+1); clear (theta1+1)^n, n = deg P.
    int n = static_cast<int>(coeff.size()) - 1;
    QPoly N;
    QPoly shifted = QPoly({Rat(1), Rat(1)});  // theta + 1
    for (int d = 0; d <= n; ++d) {
        QPoly term = qpoly_constant(coeff[d] * rat_pow(Rat(b1), d));
        for (int e = 0; e < n - d; ++e) term = term * shifted;
        N = N + term;
    }
    int sn = theta1.sign_of(N);
    if (n % 2 == 0) return sn;
    return s1 > 0 ? sn : -sn;
}

RatInterval BParameter::enclosure() const {
    if (exact) return {value, value};
    AlgReal th = theta1;
    for (int iter = 0; iter < 64; ++iter) {
        RatInterval box = th.enclosure();
        RatInterval denom{box.lo + 1, box.hi + 1};
        if (!denom.contains_zero()) {
            Rat x = Rat(b1) / denom.lo, y = Rat(b1) / denom.hi;
            return {std::min(x, y), std::max(x, y)};
        }
        if (th.exact) break;
        th.refine_below((th.hi - th.lo) / 2);
    }
    throw std::logic_error("BParameter: theta_1 + 1 enclosure stayed near zero");
}

std::string BParameter::str() const {
    if (exact) return rat_str(value);
    RatInterval box = enclosure();
    return "(" + rat_str(box.lo) + "," + rat_str(box.hi) + ")";
}

BParameter b_parameter(const IntersectionArray& arr, const SpectrumData& sp) {
    BParameter bp;
    bp.b1 = arr.b_i(1);
    const AlgReal& t1 = sp.theta.at(1);
    if (t1.exact) {
        if (t1.value == -1) throw std::invalid_argument("b_parameter: theta_1 = -1");
        bp.exact = true;
        bp.value = Rat(bp.b1) / (t1.value + 1);
    } else {
        bp.exact = false;
        bp.theta1 = t1;
    }
    return bp;
}

Outcome<BParameter> b_parameter(const IntersectionArray& arr) {
    if (arr.D < 2) return not_applicable("D >= 2", "b parameter needs b_1 and theta_1");
    auto sp = eigenvalues(arr);
    if (!sp.ok()) return sp.failure();
    if (sp->theta.at(1).exact && sp->theta.at(1).value == -1)
        return infeasible("theta_1 != -1");
    return b_parameter(arr, *sp);
}

}  // namespace drg
