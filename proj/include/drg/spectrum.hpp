#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drg/param_core.hpp"
#include "drg/polynomial.hpp"

namespace drg {

// Default isolation width for irrational eigenvalues (1e-12); filters refine
// further on demand, down to 1e-30 before reporting indeterminate.
Rat default_isolation_width();
Rat refinement_floor_width();

// Multiplicity of one eigenvalue.  Exact rational whenever theta is rational;
// otherwise an enclosure plus an exact integrality decision.
struct Multiplicity {
    bool exact = true;
    Rat value;                      // when exact
    RatInterval box{Rat(0), Rat(0)};  // always a valid enclosure
    std::optional<Int> integer;     // set iff the multiplicity is exactly this integer
    std::string str() const;
};

struct SpectrumData {
    int D = 0;
    Int n;
    QPoly charpoly;                // monic, integer coefficients
    std::vector<AlgReal> theta;    // D+1 eigenvalues, strictly decreasing
    std::vector<Multiplicity> mult;
    std::string source;            // "classical-closed-form" | "characteristic-polynomial"
    std::string order;             // "natural" | "sorted-numerically"
};

// u_0 = 1, u_1 = theta/k, c_i u_{i-1} + a_i u_i + b_i u_{i+1} = theta u_i.
// Entries are exact rationals for rational theta; for algebraic theta each u_i
// is carried as a polynomial in theta (exact), with a rational enclosure.
struct StandardSequence {
    AlgReal theta;
    bool exact = true;
    std::vector<Rat> u;        // when exact
    std::vector<QPoly> u_of_theta;  // always populated: u_i as polynomial in theta
    std::vector<RatInterval> u_box;
    std::string str() const;
};

// det(xI - T) for the (D+1)x(D+1) tridiagonal with rows (c_i, a_i, b_i).
QPoly characteristic_polynomial(const IntersectionArray& arr);

// theta_i = [D-i](beta - alpha[i]) - [i].  For b >= 1 the closed-form index
// order is verified to be strictly decreasing ("natural"); otherwise the
// values are sorted numerically and flagged.
Outcome<SpectrumData> classical_eigenvalues(const ClassicalParameterSet& cp);

// Exact roots of the characteristic polynomial: rational roots certified
// exactly, irrational ones isolated by Sturm bisection to the default width.
Outcome<SpectrumData> eigenvalues(const IntersectionArray& arr);

StandardSequence standard_sequence(const IntersectionArray& arr, const AlgReal& theta);
StandardSequence standard_sequence(const IntersectionArray& arr, const Rat& theta);

// True iff theta satisfies the final recurrence row, i.e. is an eigenvalue.
bool is_eigenvalue(const IntersectionArray& arr, const Rat& theta);

Multiplicity multiplicity(const IntersectionArray& arr, const AlgReal& theta);
Multiplicity multiplicity(const IntersectionArray& arr, const Rat& theta);

// b = b_1 / (theta_1 + 1).  Exact when theta_1 is rational; otherwise the
// handle keeps theta_1 so comparisons against rationals stay exact.
struct BParameter {
    bool exact = true;
    Rat value;        // when exact
    AlgReal theta1;   // when not exact
    Int b1;
    // sign of (b - q), decided exactly
    int cmp(const Rat& q) const;
    // sign of sum_d coeff[d] * b^d, decided exactly (coeff in increasing degree)
    int sign_of_poly(const std::vector<Rat>& coeff) const;
    RatInterval enclosure() const;
    std::string str() const;
};

Outcome<BParameter> b_parameter(const IntersectionArray& arr);
BParameter b_parameter(const IntersectionArray& arr, const SpectrumData& sp);

}  // namespace drg
