#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "drg/rational.hpp"

namespace drg {

// Structured failure: which hypothesis or identity broke, and where.
struct Failure {
    enum class Kind { infeasible, not_applicable };
    Kind kind = Kind::infeasible;
    std::string identity;  // the violated identity or hypothesis, e.g. "r | k"
    int index = -1;        // offending index when meaningful, else -1
    std::string detail;

    std::string str() const {
        std::string s = identity;
        if (index >= 0) s += " at index " + std::to_string(index);
        if (!detail.empty()) s += ": " + detail;
        return s;
    }
};

template <typename T>
struct Outcome {
    std::variant<T, Failure> v;
    Outcome(T value) : v(std::move(value)) {}
    Outcome(Failure f) : v(std::move(f)) {}
    bool ok() const { return std::holds_alternative<T>(v); }
    const T& operator*() const { return std::get<T>(v); }
    const T* operator->() const { return &std::get<T>(v); }
    const Failure& failure() const { return std::get<Failure>(v); }
};

inline Failure infeasible(std::string identity, int index = -1, std::string detail = "") {
    return Failure{Failure::Kind::infeasible, std::move(identity), index, std::move(detail)};
}
inline Failure not_applicable(std::string hypothesis, std::string detail = "") {
    return Failure{Failure::Kind::not_applicable, std::move(hypothesis), -1, std::move(detail)};
}

// {b_0, ..., b_{D-1}; c_1, ..., c_D};  a_i = k - b_i - c_i, b_D = c_0 = 0.
struct IntersectionArray {
    int D = 0;
    std::vector<Int> b;  // b[i] = b_i, 0 <= i <= D-1
    std::vector<Int> c;  // c[i-1] = c_i, 1 <= i <= D

    Int k() const { return b.at(0); }
    Int b_i(int i) const { return i == D ? Int(0) : b.at(i); }
    Int c_i(int i) const { return i == 0 ? Int(0) : c.at(i - 1); }
    Int a_i(int i) const { return k() - b_i(i) - c_i(i); }
    std::string str() const;
};

struct Counts {
    std::vector<Int> a;  // a_0..a_D
    std::vector<Int> k;  // k_0..k_D
    Int n;
};

// Classical parameters (D, b, alpha, beta).
struct ClassicalParameterSet {
    int D = 0;
    Rat b, alpha, beta;
    std::string str() const;
};

// Geometric parameters {phi_0..phi_{D-1}; tau_1..tau_D} with beta = k/tau_D.
struct GeometricArray {
    int D = 0;
    std::vector<Int> phi;  // phi[j] = phi_j, 0 <= j <= D-1
    std::vector<Int> tau;  // tau[j-1] = tau_j, 1 <= j <= D
    Int beta = 0;

    Int phi_j(int j) const { return phi.at(j); }
    Int tau_j(int j) const { return tau.at(j - 1); }
    Int r() const { return tau.at(D - 1); }
    Int k() const { return r() * beta; }
    std::string str() const;
};

// [j]_b = (b^j - 1)/(b - 1), with [j]_1 = j.  Requires j >= 0.
Rat gaussian_bracket(int j, const Rat& b);

std::optional<Failure> validate(const IntersectionArray& arr);
std::optional<Failure> validate(const ClassicalParameterSet& cp);
std::optional<Failure> validate(const GeometricArray& geo);

// b_i = ([D]-[i])(beta - alpha [i]),  c_i = [i](1 + alpha [i-1]).
// Fails (infeasible-classical) when an entry is non-integral or non-positive.
Outcome<IntersectionArray> classical_to_array(const ClassicalParameterSet& cp);

// a_i and k_i sequences plus n; fails on non-integral k_i or negative a_i.
Outcome<Counts> derive_counts(const IntersectionArray& arr);

// c_i = tau_i phi_{i-1},  b_0 = tau_D beta,  b_i = (tau_D - tau_i)(beta + 1 - phi_i).
Outcome<IntersectionArray> geometric_to_array(const GeometricArray& geo);

// Inversion of the above given r = -theta_min; every failure names the witness.
Outcome<GeometricArray> array_to_geometric(const IntersectionArray& arr, const Int& r);

// phi_j = 1 + alpha [j], tau_j = [j], beta = b_0/[D]; hypotheses b >= 2, D >= 3.
Outcome<GeometricArray> classical_geometric(const ClassicalParameterSet& cp);

// Inverse pattern-match: recognizes tau_j = [j]_b, phi_j = 1 + alpha [j]_b with
// b = tau_2 - 1 >= 1, alpha = phi_1 - 1, and returns (D, b, alpha, beta).
std::optional<ClassicalParameterSet> classical_from_geometric(const GeometricArray& geo);

// Text forms used by the CLI: "{15,8,3;1,4,9}" and "{1,2,3;1,2,3}".
std::optional<IntersectionArray> parse_intersection_array(const std::string& text);
std::optional<GeometricArray> parse_geometric_array(const std::string& text, const Int& beta);

}  // namespace drg
