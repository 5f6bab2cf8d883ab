#include "drg/filters.hpp"

#include <sstream>

namespace drg {

namespace {

std::string qstr(const Rat& v) { return rat_str(v); }
std::string istr(const Int& v) { return int_str(v); }

std::string iv_str(const RatInterval& iv) {
    if (iv.lo == iv.hi) return rat_str(iv.lo);
    return "~" + rat_decimal_str((iv.lo + iv.hi) / 2);
}

CheckVerdict na(std::string name, std::string witness) {
    return verdict(std::move(name), Status::not_applicable, "", "", std::move(witness));
}

// beta threshold above which equal line sets are forced; needs D >= 3
Int els_threshold(const GeometricArray& geo) {
    return (geo.r() - geo.tau_j(2) + 1) * (geo.phi_j(2) - geo.phi_j(1)) + geo.phi_j(1);
}

Rat sq(const Rat& x) { return x * x; }

}  // namespace

std::string status_str(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::not_applicable: return "not-applicable";
        case Status::indeterminate: return "indeterminate";
    }
    return "?";
}

bool FeasibilityReport::overall_pass() const {
    for (const auto& c : checks)
        if (c.status == Status::fail) return false;
    return true;
}

bool FeasibilityReport::has_indeterminate() const {
    for (const auto& c : checks)
        if (c.status == Status::indeterminate) return true;
    return false;
}

const CheckVerdict* FeasibilityReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::vector<CheckVerdict> check_order_constraints(const GeometricArray& geo) {
    std::vector<CheckVerdict> out;
    const int D = geo.D;
    const Int beta = geo.beta;
    const Int r = geo.r();

    if (D < 2) {
        const char* msg = "needs D >= 2";
        out.push_back(na("tau2-ge-phi1", msg));
        out.push_back(na("diameter-lt-m-squared", msg));
        out.push_back(na("phi-strictly-increasing", msg));
        out.push_back(na("diameter-le-s", msg));
        out.push_back(na("tau-strictly-increasing", msg));
        out.push_back(na("tau-pair-sum", msg));
        out.push_back(na("phi-pair-sum", msg));
        out.push_back(na("phi1-at-most-half", msg));
        return out;
    }

    const Int phi1 = geo.phi_j(1);
    const Int tau2 = geo.tau_j(2);
    const Int c2 = tau2 * phi1;

    if (c2 < 2) {
        out.push_back(na("tau2-ge-phi1", "needs c_2 >= 2"));
        out.push_back(na("diameter-lt-m-squared", "needs c_2 >= 2"));
    } else {
        out.push_back(verdict("tau2-ge-phi1", tau2 >= phi1 ? Status::pass : Status::fail,
                              istr(tau2), istr(phi1)));
        out.push_back(verdict("diameter-lt-m-squared", Int(D) < r * r ? Status::pass : Status::fail,
                              std::to_string(D), istr(r * r)));
    }

    if (phi1 < 2) {
        const char* msg = "needs phi_1 >= 2";
        out.push_back(na("phi-strictly-increasing", msg));
        out.push_back(na("diameter-le-s", msg));
        out.push_back(na("tau-strictly-increasing", msg));
    } else {
        if (D < 3) {
            out.push_back(na("phi-strictly-increasing", "needs D >= 3"));
        } else {
            CheckVerdict v = verdict("phi-strictly-increasing", Status::pass);
            for (int j = 1; j + 1 <= D - 1; ++j) {
                if (!(geo.phi_j(j) < geo.phi_j(j + 1))) {
                    v.status = Status::fail;
                    v.witness = "phi_" + std::to_string(j) + " >= phi_" + std::to_string(j + 1);
                    break;
                }
            }
            out.push_back(v);
        }
        out.push_back(verdict("diameter-le-s", Int(D) <= beta ? Status::pass : Status::fail,
                              std::to_string(D), istr(beta)));
        {
            CheckVerdict v = verdict("tau-strictly-increasing", Status::pass);
            if (!(phi1 <= tau2)) {
                v.status = Status::fail;
                v.witness = "phi_1 > tau_2";
            }
            for (int j = 2; v.status == Status::pass && j + 1 <= D; ++j) {
                if (!(geo.tau_j(j) < geo.tau_j(j + 1))) {
                    v.status = Status::fail;
                    v.witness = "tau_" + std::to_string(j) + " >= tau_" + std::to_string(j + 1);
                }
            }
            out.push_back(v);
        }
    }

    {
        CheckVerdict v = verdict("tau-pair-sum", Status::pass);
        for (int i = 1; i <= D && v.status == Status::pass; ++i)
            for (int j = i; i + j <= D; ++j) {
                if (!(geo.tau_j(i) + geo.tau_j(j) <= r)) {
                    v.status = Status::fail;
                    v.witness = "tau_" + std::to_string(i) + " + tau_" + std::to_string(j) +
                                " > tau_D";
                    break;
                }
            }
        out.push_back(v);
    }

    if (D < 3) {
        out.push_back(na("phi-pair-sum", "needs D >= 3"));
        out.push_back(na("phi1-at-most-half", "needs D >= 3"));
    } else {
        CheckVerdict v = verdict("phi-pair-sum", Status::pass);
        for (int i = 1; i <= D - 2 && v.status == Status::pass; ++i)
            for (int j = i; i + j <= D - 1; ++j) {
                if (!(geo.phi_j(i) + geo.phi_j(j) <= beta + 1)) {
                    v.status = Status::fail;
                    v.witness = "phi_" + std::to_string(i) + " + phi_" + std::to_string(j) +
                                " > s + 1";
                    break;
                }
            }
        out.push_back(v);
        out.push_back(verdict("phi1-at-most-half",
                              2 * phi1 <= beta + 1 ? Status::pass : Status::fail, istr(2 * phi1),
                              istr(beta + 1), 2 * phi1 <= beta + 1 ? "" : "forces D = 2"));
    }
    return out;
}

CheckVerdict check_main1(const GeometricArray& geo) {
    if (geo.D < 3) return na("main1-beta-bound", "needs D >= 3");
    const Int phi1 = geo.phi_j(1);
    const Int tau2 = geo.tau_j(2);
    if (phi1 < 2 || phi1 > tau2 - 2)
        return na("main1-beta-bound", "needs 2 <= phi_1 <= tau_2 - 2");
    const Int bound = els_threshold(geo);
    if (geo.beta < bound) return verdict("main1-beta-bound", Status::pass, istr(geo.beta), istr(bound));
    return verdict("main1-beta-bound", Status::fail, istr(geo.beta), istr(bound),
                   "beta not below (r - tau_2 + 1)(phi_2 - phi_1) + phi_1");
}

CheckVerdict check_neumaier(const Int& s, const Int& t, const Int& alpha) {
    if (s < 1 || t < 1 || alpha < 1 || alpha > s + 1 || alpha > t + 1)
        return na("neumaier-pg", "not a partial geometry parameter triple");
    if (alpha > t - 1) return na("neumaier-pg", "needs alpha <= t - 1");
    const Int bound = (t - alpha + 1) * (t - alpha + 1) * (2 * alpha - 1);
    if (s < bound) return verdict("neumaier-pg", Status::pass, istr(s), istr(bound));
    if (s == bound) {
        if (alpha == 1 || t == 2 * alpha)
            return verdict("neumaier-pg", Status::pass, istr(s), istr(bound),
                           "equality; side condition alpha = 1 or t = 2 alpha holds");
        return verdict("neumaier-pg", Status::fail, istr(s), istr(bound),
                       "equality requires alpha = 1 or t = 2 alpha");
    }
    return verdict("neumaier-pg", Status::fail, istr(s), istr(bound),
                   "s exceeds (t - alpha + 1)^2 (2 alpha - 1)");
}

std::vector<CheckVerdict> check_els_and_design(const GeometricArray& geo) {
    std::vector<CheckVerdict> out;
    const char* names[] = {"design-point-bound",   "design-phi2-bound", "assembly-divisibility",
                           "assembly-beta-bound",  "sigma-srg-integrality", "neumaier-sigma"};
    if (geo.D < 3) {
        out.push_back(na("els-implied", "needs D >= 3"));
        for (const char* n : names) out.push_back(na(n, "needs D >= 3"));
        return out;
    }
    const Int phi1 = geo.phi_j(1);
    const Int phi2 = geo.phi_j(2);
    const Int tau2 = geo.tau_j(2);
    const Int r = geo.r();
    const Int beta = geo.beta;
    const Int bound = els_threshold(geo);
    const bool els = beta >= bound;
    out.push_back(verdict("els-implied", els ? Status::pass : Status::not_applicable, istr(beta),
                          istr(bound),
                          els ? "every edge determines one line set"
                              : "below threshold; not settled at parameter level"));
    const bool apply = els && phi1 >= 2;
    const char* skip = !els ? "equal line sets not implied" : "needs phi_1 >= 2";
    if (!apply) {
        for (const char* n : names) out.push_back(na(n, skip));
        return out;
    }

    out.push_back(verdict("design-point-bound",
                          r >= tau2 * (tau2 - 1) + 1 ? Status::pass : Status::fail, istr(r),
                          istr(tau2 * (tau2 - 1) + 1),
                          r >= tau2 * (tau2 - 1) + 1 ? "" : "too few lines per vertex"));
    out.push_back(verdict("design-phi2-bound",
                          phi2 >= tau2 * (phi1 - 1) + 1 ? Status::pass : Status::fail, istr(phi2),
                          istr(tau2 * (phi1 - 1) + 1)));
    out.push_back(verdict("assembly-divisibility", beta % (phi1 - 1) == 0 ? Status::pass : Status::fail,
                          istr(beta), istr(phi1 - 1),
                          beta % (phi1 - 1) == 0 ? "" : "phi_1 - 1 does not divide beta"));
    out.push_back(verdict("assembly-beta-bound",
                          beta >= (phi1 - 1) * r ? Status::pass : Status::fail, istr(beta),
                          istr((phi1 - 1) * r)));
    {
        CheckVerdict v = verdict("sigma-srg-integrality", Status::pass);
        Int num = beta * (beta - phi1 + 1) * (tau2 - 1);
        if (num % phi1 != 0) {
            v.status = Status::fail;
            v.witness = "vertex count of the local quotient graph not integral";
        } else {
            Int vv = num / phi1 + beta * tau2 + 1;
            Int kk = beta * tau2;
            Int lam = beta - 1 + (phi1 - 1) * (tau2 - 1);
            Int mu = phi1 * tau2;
            v.lhs = "(" + istr(vv) + ", " + istr(kk) + ", " + istr(lam) + ", " + istr(mu) + ")";
            auto m = srg_multiplicities(vv, kk, lam, mu);
            if (m.ok()) {
                v.witness = "multiplicities " + istr(m->first) + ", " + istr(m->second);
            } else {
                v.status = Status::fail;
                v.witness = m.failure().str();
            }
        }
        out.push_back(v);
    }
    if (phi1 > tau2 - 2) {
        out.push_back(na("neumaier-sigma", "needs phi_1 <= tau_2 - 2"));
    } else {
        CheckVerdict v = check_neumaier(beta, tau2 - 1, phi1);
        v.name = "neumaier-sigma";
        out.push_back(v);
    }
    return out;
}

Outcome<std::pair<Int, Int>> srg_multiplicities(const Int& v, const Int& k, const Int& lambda,
                                                const Int& mu) {
    if (v <= 0 || k <= 0 || k >= v || lambda < 0 || mu < 1)
        return infeasible("srg parameter ranges");
    if (k * (k - lambda - 1) != (v - k - 1) * mu)
        return infeasible("k(k - lambda - 1) = (v - k - 1) mu");
    Int diff = lambda - mu;
    Int disc = diff * diff + 4 * (k - mu);
    Int two_k_plus = 2 * k + (v - 1) * diff;
    if (two_k_plus == 0) {
        if ((v - 1) % 2 != 0) return infeasible("conference parameters need odd vertex count");
        Int f = (v - 1) / 2;
        return std::pair<Int, Int>{f, f};
    }
    if (mpz_perfect_square_p(disc.get_mpz_t()) == 0)
        return infeasible("discriminant not a perfect square");
    Int root = sqrt(disc);
    if (root == 0) return infeasible("repeated restricted eigenvalue");
    if (two_k_plus % root != 0) return infeasible("multiplicity not integral");
    Int q = two_k_plus / root;
    Int fn = (v - 1) - q;
    Int gn = (v - 1) + q;
    if (fn % 2 != 0 || gn % 2 != 0) return infeasible("multiplicity not integral");
    Int f = fn / 2;
    Int g = gn / 2;
    if (f < 0 || g < 0) return infeasible("negative multiplicity");
    return std::pair<Int, Int>{f, g};
}

CheckVerdict check_clique_gap_psi1(const Rat& b, const Int& s, const Int& psi1) {
    Rat b2 = b * b;
    Rat th = b2 * b2 + 2 * b2 * b + 3 * b2 + b + 2;
    if (Rat(s) < th)
        return na("clique-gap-psi1", "needs s >= b^4 + 2b^3 + 3b^2 + b + 2 = " + qstr(th));
    if (psi1 < 0 || psi1 > s + 1) return na("clique-gap-psi1", "psi_1 out of range");
    Rat low = b2 + b + 1;
    Rat high = Rat(s) - b2 + 1;
    bool ok = Rat(psi1) <= low || Rat(psi1) >= high;
    return verdict("clique-gap-psi1", ok ? Status::pass : Status::fail, istr(psi1),
                   "<= " + qstr(low) + " or >= " + qstr(high),
                   ok ? "" : "psi_1 falls in the forbidden gap");
}

CheckVerdict check_clique_gap_phi1(const GeometricArray& geo, const BParameter& b) {
    if (geo.D < 2) return na("phi1-b-bound", "needs D >= 2");
    const Int phi1 = geo.phi_j(1);
    // beta >= b^4 + 2b^3 + 3b^2 + b + 2, as a sign of (beta-2) - b - 3b^2 - 2b^3 - b^4
    int gate = b.sign_of_poly({Rat(geo.beta) - 2, Rat(-1), Rat(-3), Rat(-2), Rat(-1)});
    if (gate < 0)
        return na("phi1-b-bound", "needs beta >= b^4 + 2b^3 + 3b^2 + b + 2, b = " + b.str());
    int s2 = b.sign_of_poly({Rat(1) - Rat(phi1), Rat(1), Rat(1)});  // b^2 + b + 1 - phi_1
    return verdict("phi1-b-bound", s2 >= 0 ? Status::pass : Status::fail, istr(phi1),
                   "b^2 + b + 1, b = " + b.str(),
                   s2 >= 0 ? "" : "phi_1 exceeds the small-clique branch bound");
}

CheckVerdict check_clique_intersection(const Int& m, const Int& c, const Int& gamma) {
    if (m < 1 || c < 1) return na("clique-intersection", "needs m >= 1 and c >= 1");
    Int th = 2 * m * m - 2 * m + 1;
    if (!(c > th)) return na("clique-intersection", "needs c > 2m^2 - 2m + 1 = " + istr(th));
    if (gamma < 0 || gamma > c) return na("clique-intersection", "overlap out of range");
    bool ok = gamma <= m - 1 || gamma >= c - m + 1;
    return verdict("clique-intersection", ok ? Status::pass : Status::fail, istr(gamma),
                   "<= " + istr(m - 1) + " or >= " + istr(c - m + 1),
                   ok ? "" : "overlap falls in the forbidden gap");
}

std::vector<CheckVerdict> check_classical_inequalities(const ClassicalParameterSet& cp,
                                                       const Int& phi1, const Int& phi2) {
    const char* names[] = {"classical-phi1-exact", "classical-phi2-exact", "classical-phi1-coarse",
                           "classical-phi2-coarse"};
    std::vector<CheckVerdict> out;
    auto all_na = [&](const std::string& w) {
        for (const char* n : names) out.push_back(na(n, w));
        return out;
    };
    if (auto f = validate(cp)) return all_na(f->str());
    if (cp.D < 3) return all_na("needs D >= 3");
    if (cp.beta < 1) return all_na("needs beta >= 1");
    const Rat b = cp.b;
    if (b < 1) return all_na("needs b >= 1");
    const Rat r = gaussian_bracket(cp.D, b);
    const Rat beta = cp.beta;
    const Rat alpha = cp.alpha;
    const Rat cst = -(beta + r * alpha + b - alpha) / (b * r * beta);
    const Rat u1 = 1 / b + cst;
    const Rat u2 = u1 / b + cst;
    const Rat u3 = u2 / b + cst;
    if (u1 == 0) return all_na("u_1 = 0");
    const Rat b2 = b * b, b3 = b * b * b, b4 = b2 * b2;
    {
        Rat lhs = sq(Rat(phi1) - b * u2 / u1);
        Rat rhs = (beta + 1 / u1) * (Rat(phi1) - b2 - 2 * b - 1 + 1 / u1);
        out.push_back(verdict("classical-phi1-exact", lhs >= rhs ? Status::pass : Status::fail,
                              qstr(lhs), qstr(rhs)));
    }
    {
        Rat lhs = sq(Rat(phi2) - b2 * u3 / u1);
        Rat rhs = (beta + 1 / u1) *
                  (Rat(phi2) - b4 - 2 * b3 - b2 * (1 + (2 * u2 - 1) / u1) - 1 + 1 / u1);
        out.push_back(verdict("classical-phi2-exact", lhs >= rhs ? Status::pass : Status::fail,
                              qstr(lhs), qstr(rhs)));
    }
    if (b < 2) {
        out.push_back(na("classical-phi1-coarse", "needs b >= 2"));
        out.push_back(na("classical-phi2-coarse", "needs b >= 2"));
    } else {
        Rat seven_half = make_rat(7, 2);
        {
            Rat lhs = sq(Rat(phi1) + seven_half * b2);
            Rat rhs = beta * (Rat(phi1) - b2 - 2 * b - 1);
            out.push_back(verdict("classical-phi1-coarse", lhs >= rhs ? Status::pass : Status::fail,
                                  qstr(lhs), qstr(rhs)));
        }
        {
            Rat lhs = sq(Rat(phi2) + seven_half * b3);
            Rat rhs = beta * (Rat(phi2) - b4 - make_rat(11, 2) * b3 - b2 - 1);
            out.push_back(verdict("classical-phi2-coarse", lhs >= rhs ? Status::pass : Status::fail,
                                  qstr(lhs), qstr(rhs)));
        }
    }
    return out;
}

CheckVerdict check_gram_inequality(const IntersectionArray& arr, const AlgReal& theta, int j,
                                   const Int& s, const Int& psi) {
    const int D = arr.D;
    if (j < 1 || j > D - 1) return na("gram", "needs 1 <= j <= D - 1");
    if (s < 1) return na("gram", "needs s >= 1");
    if (psi < 0 || psi > s) return na("gram", "needs 0 <= psi_j <= s");
    StandardSequence ss = standard_sequence(arr, theta);
    if (ss.exact) {
        const Rat u1 = ss.u[1];
        const Rat uj = ss.u[j];
        const Rat uj1 = ss.u[j + 1];
        const Rat A = Rat(psi) * u1 * (uj - uj1) - (1 - u1) * uj1;
        const Rat B = Rat(s) * u1 + 1;
        const Rat C = Rat(psi) * u1 * sq(uj - uj1) - (1 - u1) * (u1 - sq(uj1));
        const Rat lhs = A * A;
        const Rat rhs = B * C;
        return verdict("gram", lhs >= rhs ? Status::pass : Status::fail, qstr(lhs), qstr(rhs),
                       lhs >= rhs ? "" : "no vertex at distance " + std::to_string(j) +
                                             " can meet the clique this way");
    }
    const QPoly one = qpoly_constant(Rat(1));
    const QPoly& u1 = ss.u_of_theta[1];
    const QPoly diffp = ss.u_of_theta[j] - ss.u_of_theta[j + 1];
    const QPoly& uj1 = ss.u_of_theta[j + 1];
    const QPoly A = Rat(psi) * (u1 * diffp) - (one - u1) * uj1;
    const QPoly B = Rat(s) * u1 + one;
    const QPoly C = Rat(psi) * (u1 * diffp * diffp) - (one - u1) * (u1 - uj1 * uj1);
    const QPoly expr = A * A - B * C;
    int sg = theta.sign_of(expr);
    RatInterval box = theta.enclosure();
    return verdict("gram", sg >= 0 ? Status::pass : Status::fail,
                   iv_str(eval_interval(A * A, box)), iv_str(eval_interval(B * C, box)),
                   sg >= 0 ? "" : "no vertex at distance " + std::to_string(j) +
                                      " can meet the clique this way");
}

std::vector<CheckVerdict> check_spectral_constraints(const IntersectionArray& arr,
                                                     const GeometricArray* geo,
                                                     const SpectrumData& sp) {
    std::vector<CheckVerdict> out;
    const int D = arr.D;

    if (!geo) {
        out.push_back(na("theta-min-is-neg-tau-d", "no line parameters given"));
    } else {
        Rat target = -Rat(geo->r());
        int c = sp.theta.back().cmp(target);
        out.push_back(verdict("theta-min-is-neg-tau-d", c == 0 ? Status::pass : Status::fail,
                              sp.theta.back().str(), qstr(target),
                              c == 0 ? "" : "least eigenvalue differs from -tau_D"));
    }

    if (D < 3) {
        // at D = 2 the strict product bound is attained (pentagon, K_{3,3})
        out.push_back(na("eigenvalue-product-bound", "needs D >= 3"));
    } else {
        const AlgReal& t1 = sp.theta[1];
        const AlgReal& tD = sp.theta[D];
        const Rat b1 = Rat(arr.b_i(1));
        CheckVerdict v = verdict("eigenvalue-product-bound", Status::indeterminate);
        v.rhs = qstr(-b1);
        if (t1.exact && tD.exact) {
            Rat prod = (t1.value + 1) * (tD.value + 1);
            v.lhs = qstr(prod);
            v.status = prod < -b1 ? Status::pass : Status::fail;
        } else if (t1.exact || tD.exact) {
            const AlgReal& a = t1.exact ? tD : t1;
            const Rat q = t1.exact ? t1.value : tD.value;
            // (q + 1)(x + 1) + b_1
            QPoly f{{(q + 1) + b1, q + 1}};
            int sg = a.sign_of(f);
            v.status = sg < 0 ? Status::pass : Status::fail;
            RatInterval prod = iv_scale(q + 1, iv_add(a.enclosure(), RatInterval{Rat(1), Rat(1)}));
            v.lhs = iv_str(prod);
        } else {
            AlgReal x = t1, y = tD;
            Rat w = default_isolation_width();
            const RatInterval one{Rat(1), Rat(1)};
            for (;;) {
                RatInterval p = iv_mul(iv_add(x.enclosure(), one), iv_add(y.enclosure(), one));
                v.lhs = iv_str(p);
                if (p.hi < -b1) {
                    v.status = Status::pass;
                    break;
                }
                if (p.lo > -b1) {
                    v.status = Status::fail;
                    break;
                }
                if (w <= refinement_floor_width()) {
                    v.status = Status::indeterminate;
                    v.witness = "enclosure straddles the bound at the refinement floor";
                    break;
                }
                w /= 1000000;
                x.refine_below(w);
                y.refine_below(w);
            }
        }
        if (v.status == Status::fail) v.witness = "(theta_1 + 1)(theta_D + 1) >= -b_1";
        out.push_back(v);
    }

    {
        CheckVerdict v = verdict("theta1-u-bounded", Status::pass);
        StandardSequence ss = standard_sequence(arr, sp.theta[1]);
        for (int i = 0; i <= D; ++i) {
            bool ok;
            if (ss.exact) {
                ok = rat_abs(ss.u[i]) <= 1;
            } else {
                const QPoly one = qpoly_constant(Rat(1));
                ok = sp.theta[1].sign_of(one - ss.u_of_theta[i]) >= 0 &&
                     sp.theta[1].sign_of(ss.u_of_theta[i] + one) >= 0;
            }
            if (!ok) {
                v.status = Status::fail;
                v.witness = "|u_" + std::to_string(i) + "(theta_1)| > 1";
                break;
            }
        }
        out.push_back(v);
    }

    if (!geo) {
        out.push_back(na("delsarte-phi-consistency", "no line parameters given"));
    } else {
        CheckVerdict v = verdict("delsarte-phi-consistency", Status::pass);
        StandardSequence sm = standard_sequence(arr, -Rat(geo->r()));
        Rat factor = 1 + Rat(arr.k()) / Rat(geo->r());
        for (int j = 1; j <= D - 1; ++j) {
            Rat lhs = (sm.u[j + 1] - sm.u[j]) * Rat(geo->phi_j(j));
            Rat rhs = factor * sm.u[j + 1];
            if (lhs != rhs) {
                v.status = Status::fail;
                v.lhs = qstr(lhs);
                v.rhs = qstr(rhs);
                v.witness = "clique-size identity fails at j = " + std::to_string(j);
                break;
            }
        }
        out.push_back(v);
    }

    {
        CheckVerdict v = verdict("multiplicity-integrality", Status::pass);
        Int sum = 0;
        bool all_known = true;
        for (int i = 0; i <= D && v.status == Status::pass; ++i) {
            const Multiplicity& m = sp.mult[i];
            if (m.exact) {
                if (!is_integer(m.value) || m.value < 1) {
                    v.status = Status::fail;
                    v.lhs = m.str();
                    v.witness = "m(theta_" + std::to_string(i) + ") not a positive integer";
                } else {
                    sum += to_integer(m.value);
                }
            } else if (m.integer && *m.integer >= 1) {
                sum += *m.integer;
            } else {
                v.status = Status::fail;
                v.lhs = m.str();
                v.witness = "m(theta_" + std::to_string(i) + ") not a positive integer";
            }
            (void)all_known;
        }
        if (v.status == Status::pass && sum != sp.n) {
            v.status = Status::fail;
            v.lhs = istr(sum);
            v.rhs = istr(sp.n);
            v.witness = "multiplicities do not sum to the vertex count";
        }
        out.push_back(v);
    }
    return out;
}

Classification classify_main2(const GeometricArray& geo, const BParameter* b) {
    Classification cls;
    auto& cs = cls.checks;
    const char* names[] = {"branch-assigned",       "branch-b2-b-equals-1",
                           "branch-b3-prime-power", "branch-b3-b-equals-phi1-minus-1",
                           "branch-b4-phi1-bound",  "branch-b5-beta-bound"};
    auto all_na = [&](const std::string& w) {
        for (const char* n : names) cs.push_back(na(n, w));
    };
    if (geo.D < 3) {
        cls.branch = "not-applicable";
        all_na("needs D >= 3");
        return cls;
    }
    const Int phi1 = geo.phi_j(1);
    const Int tau2 = geo.tau_j(2);
    if (tau2 * phi1 < 2) {
        cls.branch = "not-applicable";
        all_na("needs c_2 >= 2");
        return cls;
    }

    CheckVerdict v_assigned = verdict("branch-assigned", Status::pass);
    CheckVerdict v_b2 = na("branch-b2-b-equals-1", "branch not taken");
    CheckVerdict v_pp = na("branch-b3-prime-power", "branch not taken");
    CheckVerdict v_b3 = na("branch-b3-b-equals-phi1-minus-1", "branch not taken");
    CheckVerdict v_b4 = na("branch-b4-phi1-bound", "branch not taken");
    CheckVerdict v_b5 = na("branch-b5-beta-bound", "branch not taken");

    if (phi1 == 1) {
        cls.branch = "B1";
    } else if (tau2 < phi1) {
        cls.branch = "none";
        v_assigned.status = Status::fail;
        v_assigned.witness = "phi_1 > tau_2 matches no branch";
    } else if (phi1 == 2 && tau2 == 2) {
        cls.branch = "B2";
        if (b) {
            int c = b->cmp(Rat(1));
            v_b2 = verdict("branch-b2-b-equals-1", c == 0 ? Status::pass : Status::fail, b->str(),
                           "1", c == 0 ? "" : "unions of triangles need b = 1");
        } else {
            v_b2 = verdict("branch-b2-b-equals-1", Status::indeterminate, "", "1",
                           "b parameter unavailable");
        }
    } else if (phi1 == tau2) {
        cls.branch = "B3";
        Int q = phi1 - 1;
        auto p = prime_power_base(q);
        v_pp = verdict("branch-b3-prime-power", p ? Status::pass : Status::fail, istr(q), "",
                       p ? "q = power of prime " + istr(*p)
                         : "phi_1 - 1 is not a prime power; no subspace geometry fits");
        if (b) {
            int c = b->cmp(Rat(q));
            v_b3 = verdict("branch-b3-b-equals-phi1-minus-1", c == 0 ? Status::pass : Status::fail,
                           b->str(), istr(q));
        } else {
            v_b3 = verdict("branch-b3-b-equals-phi1-minus-1", Status::indeterminate, "", istr(q),
                           "b parameter unavailable");
        }
    } else if (tau2 == phi1 + 1) {
        const Int bound = els_threshold(geo);
        if (geo.beta >= bound) {
            cls.branch = "B4";
            if (b) {
                // grid condition forced when r (phi_1 - 1) > 2 b^2 + 2 b + 1
                int gate = b->sign_of_poly({Rat(geo.r() * (phi1 - 1)) - 1, Rat(-2), Rat(-2)});
                if (gate <= 0) {
                    v_b4 = na("branch-b4-phi1-bound",
                              "local grid condition not forced at these parameters");
                } else {
                    int c = b->cmp(Rat(phi1 - 1));
                    v_b4 = verdict("branch-b4-phi1-bound", c >= 0 ? Status::pass : Status::fail,
                                   istr(phi1), "b + 1, b = " + b->str(),
                                   c >= 0 ? "" : "phi_1 > b + 1 in the grid branch");
                }
            } else {
                v_b4 = verdict("branch-b4-phi1-bound", Status::indeterminate, istr(phi1), "",
                               "b parameter unavailable");
            }
        } else {
            cls.branch = "B4-or-B5";
        }
    } else {
        cls.branch = "B5";
        const Int bound = els_threshold(geo);
        v_b5 = verdict("branch-b5-beta-bound", geo.beta < bound ? Status::pass : Status::fail,
                       istr(geo.beta), istr(bound),
                       geo.beta < bound ? "" : "no feasible graph in this branch at this beta");
    }
    if (v_assigned.status == Status::pass) v_assigned.lhs = cls.branch;
    cs.push_back(v_assigned);
    cs.push_back(v_b2);
    cs.push_back(v_pp);
    cs.push_back(v_b3);
    cs.push_back(v_b4);
    cs.push_back(v_b5);
    return cls;
}

Classification classify_main2(const GeometricArray& geo) {
    auto arr_o = geometric_to_array(geo);
    if (!arr_o.ok()) return classify_main2(geo, nullptr);
    auto sp_o = eigenvalues(*arr_o);
    if (!sp_o.ok()) return classify_main2(geo, nullptr);
    if (sp_o->theta[1].cmp(Rat(-1)) == 0) return classify_main2(geo, nullptr);
    BParameter bp = b_parameter(*arr_o, *sp_o);
    return classify_main2(geo, &bp);
}

FeasibilityReport run_battery(const GeometricArray& geo) {
    FeasibilityReport rep;
    rep.input_kind = "geometric";
    rep.input = geo.str();
    rep.geo = geo;
    if (auto f = validate(geo)) {
        rep.checks.push_back(verdict("geometric-validity", Status::fail, "", "", f->str()));
        rep.branch = "not-applicable";
        return rep;
    }
    rep.checks.push_back(verdict("geometric-validity", Status::pass));

    auto order = check_order_constraints(geo);
    rep.checks.insert(rep.checks.end(), order.begin(), order.end());
    rep.checks.push_back(check_main1(geo));
    auto els = check_els_and_design(geo);
    rep.checks.insert(rep.checks.end(), els.begin(), els.end());

    auto cp = classical_from_geometric(geo);
    if (cp) rep.cp = *cp;
    if (cp && geo.D >= 3) {
        auto cls = check_classical_inequalities(*cp, geo.phi_j(1), geo.phi_j(2));
        rep.checks.insert(rep.checks.end(), cls.begin(), cls.end());
    } else {
        const char* names[] = {"classical-phi1-exact", "classical-phi2-exact",
                               "classical-phi1-coarse", "classical-phi2-coarse"};
        const char* w = cp ? "needs D >= 3" : "no classical parameter pattern";
        for (const char* n : names) rep.checks.push_back(na(n, w));
    }

    auto arr_o = geometric_to_array(geo);
    const BParameter* bpp = nullptr;
    BParameter bp;
    if (!arr_o.ok()) {
        rep.checks.push_back(
            verdict("array-derivation", Status::fail, "", "", arr_o.failure().str()));
        const char* w = "intersection array underivable";
        rep.checks.push_back(na("counts-integrality", w));
        rep.checks.push_back(na("spectrum-computed", w));
        rep.checks.push_back(na("theta-min-is-neg-tau-d", w));
        rep.checks.push_back(na("eigenvalue-product-bound", w));
        rep.checks.push_back(na("theta1-u-bounded", w));
        rep.checks.push_back(na("delsarte-phi-consistency", w));
        rep.checks.push_back(na("multiplicity-integrality", w));
        rep.checks.push_back(na("phi1-b-bound", w));
        for (int j = 1; j <= geo.D - 1; ++j)
            rep.checks.push_back(na("gram-theta1-j" + std::to_string(j), w));
    } else {
        rep.arr = *arr_o;
        rep.checks.push_back(verdict("array-derivation", Status::pass, arr_o->str()));
        auto cnt = derive_counts(*arr_o);
        if (cnt.ok()) {
            rep.checks.push_back(
                verdict("counts-integrality", Status::pass, "n = " + istr(cnt->n)));
        } else {
            rep.checks.push_back(
                verdict("counts-integrality", Status::fail, "", "", cnt.failure().str()));
        }
        auto sp_o = eigenvalues(*arr_o);
        if (!sp_o.ok()) {
            rep.checks.push_back(
                verdict("spectrum-computed", Status::fail, "", "", sp_o.failure().str()));
            const char* w = "spectrum unavailable";
            rep.checks.push_back(na("theta-min-is-neg-tau-d", w));
            rep.checks.push_back(na("eigenvalue-product-bound", w));
            rep.checks.push_back(na("theta1-u-bounded", w));
            rep.checks.push_back(na("delsarte-phi-consistency", w));
            rep.checks.push_back(na("multiplicity-integrality", w));
            rep.checks.push_back(na("phi1-b-bound", w));
            for (int j = 1; j <= geo.D - 1; ++j)
                rep.checks.push_back(na("gram-theta1-j" + std::to_string(j), w));
        } else {
            rep.spectrum = *sp_o;
            std::string thetas;
            for (const auto& t : sp_o->theta) {
                if (!thetas.empty()) thetas += ", ";
                thetas += t.str();
            }
            rep.checks.push_back(verdict("spectrum-computed", Status::pass, thetas));
            auto spectral = check_spectral_constraints(*arr_o, &geo, *sp_o);
            rep.checks.insert(rep.checks.end(), spectral.begin(), spectral.end());
            if (sp_o->theta.size() >= 2 && sp_o->theta[1].cmp(Rat(-1)) != 0) {
                bp = b_parameter(*arr_o, *sp_o);
                bpp = &bp;
            }
            if (bpp) {
                rep.checks.push_back(check_clique_gap_phi1(geo, bp));
            } else {
                rep.checks.push_back(na("phi1-b-bound", "b parameter unavailable"));
            }
            for (int j = 1; j <= geo.D - 1; ++j) {
                CheckVerdict v =
                    check_gram_inequality(*arr_o, sp_o->theta[1], j, geo.beta, geo.phi_j(j));
                v.name = "gram-theta1-j" + std::to_string(j);
                rep.checks.push_back(v);
            }
        }
    }

    auto cls = classify_main2(geo, bpp);
    rep.branch = cls.branch;
    rep.checks.insert(rep.checks.end(), cls.checks.begin(), cls.checks.end());
    return rep;
}

FeasibilityReport run_battery(const ClassicalParameterSet& cp) {
    FeasibilityReport rep;
    rep.input_kind = "classical";
    rep.input = cp.str();
    rep.cp = cp;
    if (auto f = validate(cp)) {
        rep.checks.push_back(verdict("classical-validity", Status::fail, "", "", f->str()));
        rep.branch = "not-applicable";
        return rep;
    }
    auto geo_o = classical_geometric(cp);
    if (geo_o.ok()) {
        FeasibilityReport inner = run_battery(*geo_o);
        inner.input_kind = "classical";
        inner.input = cp.str();
        inner.cp = cp;
        std::vector<CheckVerdict> front;
        front.push_back(verdict("classical-validity", Status::pass));
        front.push_back(verdict("classical-geometric-derived", Status::pass, geo_o->str()));
        inner.checks.insert(inner.checks.begin(), front.begin(), front.end());
        return inner;
    }
    rep.checks.push_back(verdict("classical-validity", Status::pass));
    rep.checks.push_back(
        verdict("classical-geometric-derived", Status::not_applicable, "", "",
                geo_o.failure().str()));
    auto arr_o = classical_to_array(cp);
    if (!arr_o.ok()) {
        rep.checks.push_back(
            verdict("array-derivation", Status::fail, "", "", arr_o.failure().str()));
        rep.branch = "not-applicable";
        return rep;
    }
    rep.arr = *arr_o;
    rep.checks.push_back(verdict("array-derivation", Status::pass, arr_o->str()));
    auto cnt = derive_counts(*arr_o);
    rep.checks.push_back(cnt.ok()
                             ? verdict("counts-integrality", Status::pass, "n = " + istr(cnt->n))
                             : verdict("counts-integrality", Status::fail, "", "",
                                       cnt.failure().str()));
    auto sp_o = classical_eigenvalues(cp);
    if (!sp_o.ok()) {
        rep.checks.push_back(
            verdict("spectrum-computed", Status::fail, "", "", sp_o.failure().str()));
        rep.branch = "not-applicable";
        return rep;
    }
    rep.spectrum = *sp_o;
    std::string thetas;
    for (const auto& t : sp_o->theta) {
        if (!thetas.empty()) thetas += ", ";
        thetas += t.str();
    }
    rep.checks.push_back(verdict("spectrum-computed", Status::pass, thetas));
    auto spectral = check_spectral_constraints(*arr_o, nullptr, *sp_o);
    rep.checks.insert(rep.checks.end(), spectral.begin(), spectral.end());
    rep.branch = "not-applicable";
    return rep;
}

FeasibilityReport run_battery(const IntersectionArray& arr) {
    FeasibilityReport rep;
    rep.input_kind = "array";
    rep.input = arr.str();
    rep.arr = arr;
    if (auto f = validate(arr)) {
        rep.checks.push_back(verdict("array-validity", Status::fail, "", "", f->str()));
        rep.branch = "not-applicable";
        return rep;
    }
    rep.checks.push_back(verdict("array-validity", Status::pass));
    auto sp_o = eigenvalues(arr);
    if (!sp_o.ok()) {
        rep.checks.push_back(
            verdict("spectrum-computed", Status::fail, "", "", sp_o.failure().str()));
        rep.branch = "not-applicable";
        return rep;
    }
    const SpectrumData& sp = *sp_o;
    // detect a geometric shape: least eigenvalue a negative integer -r, r >= 2
    std::optional<GeometricArray> geo;
    std::string detect_note;
    const AlgReal& least = sp.theta.back();
    if (least.exact && is_integer(least.value) && least.value <= -2) {
        Int r = to_integer(-least.value);
        auto geo_o = array_to_geometric(arr, r);
        if (geo_o.ok())
            geo = *geo_o;
        else
            detect_note = geo_o.failure().str();
    } else {
        detect_note = "least eigenvalue is not an integer <= -2";
    }
    if (geo) {
        FeasibilityReport inner = run_battery(*geo);
        inner.input_kind = "array";
        inner.input = arr.str();
        std::vector<CheckVerdict> front;
        front.push_back(verdict("array-validity", Status::pass));
        front.push_back(verdict("geometric-detected", Status::pass, geo->str()));
        inner.checks.insert(inner.checks.begin(), front.begin(), front.end());
        return inner;
    }
    rep.checks.push_back(verdict("geometric-detected", Status::not_applicable, "", "", detect_note));
    rep.spectrum = sp;
    std::string thetas;
    for (const auto& t : sp.theta) {
        if (!thetas.empty()) thetas += ", ";
        thetas += t.str();
    }
    rep.checks.push_back(verdict("spectrum-computed", Status::pass, thetas));
    auto cnt = derive_counts(arr);
    rep.checks.push_back(cnt.ok()
                             ? verdict("counts-integrality", Status::pass, "n = " + istr(cnt->n))
                             : verdict("counts-integrality", Status::fail, "", "",
                                       cnt.failure().str()));
    auto spectral = check_spectral_constraints(arr, nullptr, sp);
    rep.checks.insert(rep.checks.end(), spectral.begin(), spectral.end());
    rep.branch = "not-applicable";
    return rep;
}

}  // namespace drg
