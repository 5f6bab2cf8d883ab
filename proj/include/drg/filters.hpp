#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drg/param_core.hpp"
#include "drg/spectrum.hpp"

namespace drg {

enum class Status { pass, fail, not_applicable, indeterminate };

std::string status_str(Status s);

struct CheckVerdict {
    std::string name;
    Status status = Status::not_applicable;
    std::string lhs, rhs;  // exact rendered values when the check compares two sides
    std::string witness;   // violated hypothesis, offending index, or context
};

inline CheckVerdict verdict(std::string name, Status st, std::string lhs = "", std::string rhs = "",
                            std::string witness = "") {
    return CheckVerdict{std::move(name), st, std::move(lhs), std::move(rhs), std::move(witness)};
}

struct FeasibilityReport {
    std::string input_kind;  // "geometric" | "classical" | "array"
    std::string input;
    std::optional<GeometricArray> geo;
    std::optional<ClassicalParameterSet> cp;
    std::optional<IntersectionArray> arr;
    std::optional<SpectrumData> spectrum;
    std::vector<CheckVerdict> checks;
    std::string branch;  // classification label, "" when not classified

    bool overall_pass() const;
    bool has_indeterminate() const;
    const CheckVerdict* find(const std::string& name) const;
};

// Order and counting constraints on geometric parameters.
std::vector<CheckVerdict> check_order_constraints(const GeometricArray& geo);

// Spectral battery: -tau_D is the least eigenvalue, the clique-size identity
// determines each phi_j from the theta_min standard sequence, the product
// bound on (theta_1+1)(theta_D+1), |u_i(theta_1)| <= 1, and integral
// multiplicities.  `geo` may be null for bare arrays.
std::vector<CheckVerdict> check_spectral_constraints(const IntersectionArray& arr,
                                                     const GeometricArray* geo,
                                                     const SpectrumData& sp);

// Quotient-matrix Gram condition for a clique of order s+1 and a vertex at
// distance j counting psi common members; exact for rational and algebraic theta.
CheckVerdict check_gram_inequality(const IntersectionArray& arr, const AlgReal& theta, int j,
                                   const Int& s, const Int& psi);

// The four polynomial inequalities tying phi_1, phi_2 to (D, b, alpha, beta)
// via the closed-form second-eigenvalue standard sequence.  Items 3 and 4
// need b >= 2; items 1 and 2 need b >= 1 (natural eigenvalue order).
std::vector<CheckVerdict> check_classical_inequalities(const ClassicalParameterSet& cp,
                                                       const Int& phi1, const Int& phi2);

// Two-sided gap for the number of neighbours a clique of order s+1 can have:
// applicable when s >= b^4+2b^3+3b^2+b+2, then psi1 <= b^2+b+1 or psi1 >= s-b^2+1.
CheckVerdict check_clique_gap_psi1(const Rat& b, const Int& s, const Int& psi1);

// Small-branch corollary for geometric arrays: beta >= b^4+2b^3+3b^2+b+2
// forces phi_1 <= b^2+b+1.
CheckVerdict check_clique_gap_phi1(const GeometricArray& geo, const BParameter& b);

// Intersection dichotomy for two cliques of order >= c > 2m^2-2m+1 in a graph
// with smallest eigenvalue >= -m: the overlap is <= m-1 or >= c-m+1.
CheckVerdict check_clique_intersection(const Int& m, const Int& c, const Int& gamma);

// Threshold for the equal-line-sets property plus its design consequences
// (point/block counts, assembly divisibility, local SRG integrality, Neumaier).
std::vector<CheckVerdict> check_els_and_design(const GeometricArray& geo);

// Partial geometry pg(s,t,alpha) bound: alpha <= t-1 implies
// s <= (t-alpha+1)^2 (2 alpha - 1), equality only if alpha = 1 or t = 2 alpha.
CheckVerdict check_neumaier(const Int& s, const Int& t, const Int& alpha);

// For 2 <= phi_1 <= tau_2 - 2: beta < (r - tau_2 + 1)(phi_2 - phi_1) + phi_1.
CheckVerdict check_main1(const GeometricArray& geo);

struct Classification {
    std::string branch;  // B1 | B2 | B3 | B4 | B4-or-B5 | B5 | none | not-applicable
    std::vector<CheckVerdict> checks;
};

// Five-way branch on (phi_1, tau_2, beta) with per-branch consistency checks.
Classification classify_main2(const GeometricArray& geo, const BParameter* b);
Classification classify_main2(const GeometricArray& geo);

// Deterministic full battery (fixed registry order, no short-circuit).
FeasibilityReport run_battery(const GeometricArray& geo);
FeasibilityReport run_battery(const ClassicalParameterSet& cp);
FeasibilityReport run_battery(const IntersectionArray& arr);

// SRG feasibility helper: positive integer vertex count and integral
// eigenvalue multiplicities for (v, k, lambda, mu).
Outcome<std::pair<Int, Int>> srg_multiplicities(const Int& v, const Int& k, const Int& lambda,
                                                const Int& mu);

}  // namespace drg
