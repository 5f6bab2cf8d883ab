#include "drg/param_core.hpp"

#include <algorithm>
#include <sstream>

namespace drg {

static std::string join_ints(const std::vector<Int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += int_str(v[i]);
    }
    return s;
}

std::string IntersectionArray::str() const { return "{" + join_ints(b) + ";" + join_ints(c) + "}"; }

std::string ClassicalParameterSet::str() const {
    return "(" + std::to_string(D) + "," + rat_str(b) + "," + rat_str(alpha) + "," + rat_str(beta) + ")";
}

std::string GeometricArray::str() const {
    return "{" + join_ints(phi) + ";" + join_ints(tau) + "},beta=" + int_str(beta);
}

Rat gaussian_bracket(int j, const Rat& b) {
    if (j < 0) throw std::invalid_argument("gaussian_bracket: j must be >= 0");
    if (b == 1) return Rat(j);
    return (rat_pow(b, j) - 1) / (b - 1);
}

std::optional<Failure> validate(const IntersectionArray& arr) {
    if (arr.D < 1) return infeasible("D >= 1");
    if (static_cast<int>(arr.b.size()) != arr.D || static_cast<int>(arr.c.size()) != arr.D)
        return infeasible("array length matches D");
    for (int i = 0; i < arr.D; ++i)
        if (arr.b[i] < 1) return infeasible("b_i >= 1", i, int_str(arr.b[i]));
    for (int i = 1; i <= arr.D; ++i)
        if (arr.c_i(i) < 1) return infeasible("c_i >= 1", i, int_str(arr.c_i(i)));
    if (arr.c_i(1) != 1) return infeasible("c_1 = 1", 1, int_str(arr.c_i(1)));
    for (int i = 0; i <= arr.D; ++i)
        if (arr.a_i(i) < 0) return infeasible("a_i >= 0", i, int_str(arr.a_i(i)));
    return std::nullopt;
}

std::optional<Failure> validate(const ClassicalParameterSet& cp) {
    if (cp.D < 2) return infeasible("D >= 2");
    if (cp.D >= 3) {
        if (!is_integer(cp.b)) return infeasible("b integral for D >= 3", -1, rat_str(cp.b));
        if (cp.b == 0 || cp.b == -1) return infeasible("b not in {0,-1} for D >= 3", -1, rat_str(cp.b));
    }
    return std::nullopt;
}

std::optional<Failure> validate(const GeometricArray& geo) {
    if (geo.D < 1) return infeasible("D >= 1");
    if (static_cast<int>(geo.phi.size()) != geo.D || static_cast<int>(geo.tau.size()) != geo.D)
        return infeasible("array length matches D");
    if (geo.phi[0] != 1) return infeasible("phi_0 = 1", 0, int_str(geo.phi[0]));
    if (geo.tau_j(1) != 1) return infeasible("tau_1 = 1", 1, int_str(geo.tau_j(1)));
    if (geo.beta < 1) return infeasible("beta >= 1", -1, int_str(geo.beta));
    if (geo.D >= 2 && geo.r() < 2) return infeasible("tau_D >= 2", geo.D, int_str(geo.r()));
    for (int j = 1; j < geo.D; ++j) {
        if (geo.phi[j] < 1) return infeasible("phi_j >= 1", j, int_str(geo.phi[j]));
        if (geo.phi[j] > geo.beta)
            return infeasible("phi_j <= beta", j, int_str(geo.phi[j]) + " > " + int_str(geo.beta));
    }
    for (int j = 1; j <= geo.D; ++j)
        if (geo.tau_j(j) < 1) return infeasible("tau_j >= 1", j, int_str(geo.tau_j(j)));
    return std::nullopt;
}

Outcome<IntersectionArray> classical_to_array(const ClassicalParameterSet& cp) {
    if (auto bad = validate(cp)) return *bad;
    IntersectionArray arr;
    arr.D = cp.D;
    for (int i = 0; i < cp.D; ++i) {
        Rat bi = (gaussian_bracket(cp.D, cp.b) - gaussian_bracket(i, cp.b)) *
                 (cp.beta - cp.alpha * gaussian_bracket(i, cp.b));
        if (!is_integer(bi)) return infeasible("b_i integral", i, rat_str(bi));
        if (bi < 1) return infeasible("b_i >= 1", i, rat_str(bi));
        arr.b.push_back(to_integer(bi));
    }
    for (int i = 1; i <= cp.D; ++i) {
        Rat ci = gaussian_bracket(i, cp.b) * (1 + cp.alpha * gaussian_bracket(i - 1, cp.b));
        if (!is_integer(ci)) return infeasible("c_i integral", i, rat_str(ci));
        if (ci < 1) return infeasible("c_i >= 1", i, rat_str(ci));
        arr.c.push_back(to_integer(ci));
    }
    if (auto bad = validate(arr)) return *bad;
    if (cp.D >= 2 && Rat(arr.c_i(2)) != (cp.b + 1) * (cp.alpha + 1))
        return infeasible("c_2 = (b+1)(alpha+1)", 2, int_str(arr.c_i(2)));
    return arr;
}

Outcome<Counts> derive_counts(const IntersectionArray& arr) {
    Counts out;
    out.k.assign(arr.D + 1, Int(0));
    out.k[0] = 1;
    for (int i = 0; i <= arr.D; ++i) {
        Int ai = arr.a_i(i);
        if (ai < 0) return infeasible("a_i >= 0", i, int_str(ai));
        out.a.push_back(ai);
    }
    for (int i = 0; i < arr.D; ++i) {
        Int num = arr.b_i(i) * out.k[i];
        Int ci1 = arr.c_i(i + 1);
        if (num % ci1 != 0)
            return infeasible("c_{i+1} | b_i k_i", i + 1, int_str(ci1) + " does not divide " + int_str(num));
        out.k[i + 1] = num / ci1;
        if (out.k[i + 1] < 1) return infeasible("k_i >= 1", i + 1, int_str(out.k[i + 1]));
    }
    out.n = 0;
    for (const Int& ki : out.k) out.n += ki;
    return out;
}

Outcome<IntersectionArray> geometric_to_array(const GeometricArray& geo) {
    if (auto bad = validate(geo)) return *bad;
    IntersectionArray arr;
    arr.D = geo.D;
    arr.b.push_back(geo.r() * geo.beta);
    for (int i = 1; i < geo.D; ++i) {
        Int bi = (geo.r() - geo.tau_j(i)) * (geo.beta + 1 - geo.phi_j(i));
        if (bi < 1)
            return infeasible("b_i = (tau_D - tau_i)(beta + 1 - phi_i) >= 1", i, int_str(bi));
        arr.b.push_back(bi);
    }
    for (int i = 1; i <= geo.D; ++i) {
        Int ci = geo.tau_j(i) * (i == 1 ? Int(1) : geo.phi_j(i - 1));
        arr.c.push_back(ci);
    }
    if (auto bad = validate(arr)) return *bad;
    return arr;
}

Outcome<GeometricArray> array_to_geometric(const IntersectionArray& arr, const Int& r) {
    if (auto bad = validate(arr)) return *bad;
    if (r < 2) return infeasible("r >= 2", -1, int_str(r));
    GeometricArray geo;
    geo.D = arr.D;
    if (arr.k() % r != 0)
        return infeasible("r | k", -1, int_str(r) + " does not divide " + int_str(arr.k()));
    geo.beta = arr.k() / r;
    geo.phi.assign(arr.D, Int(1));
    geo.tau.assign(arr.D, Int(1));
    for (int i = 1; i <= arr.D; ++i) {
        Int prev_phi = geo.phi[i - 1];
        if (arr.c_i(i) % prev_phi != 0)
            return infeasible("phi_{i-1} | c_i", i,
                              int_str(prev_phi) + " does not divide " + int_str(arr.c_i(i)));
        geo.tau[i - 1] = arr.c_i(i) / prev_phi;
        if (geo.tau[i - 1] < 1) return infeasible("tau_i >= 1", i, int_str(geo.tau[i - 1]));
        if (i < arr.D) {
            Int gap = r - geo.tau[i - 1];
            if (gap < 1)
                return infeasible("tau_i < r for i < D", i, int_str(geo.tau[i - 1]));
            if (arr.b_i(i) % gap != 0)
                return infeasible("(r - tau_i) | b_i", i,
                                  int_str(gap) + " does not divide " + int_str(arr.b_i(i)));
            geo.phi[i] = geo.beta + 1 - arr.b_i(i) / gap;
            if (geo.phi[i] < 1) return infeasible("phi_i >= 1", i, int_str(geo.phi[i]));
        }
    }
    if (geo.tau[arr.D - 1] != r)
        return infeasible("tau_D = r", arr.D, int_str(geo.tau[arr.D - 1]) + " != " + int_str(r));
    if (auto bad = validate(geo)) return *bad;
    // Round-trip sanity: the reconstruction must reproduce the input exactly.
    auto back = geometric_to_array(geo);
    if (!back.ok()) return back.failure();
    if (back->b != arr.b || back->c != arr.c)
        return infeasible("geometric reconstruction matches array", -1, back->str());
    return geo;
}

Outcome<GeometricArray> classical_geometric(const ClassicalParameterSet& cp) {
    if (auto bad = validate(cp)) return *bad;
    if (cp.D < 3) return not_applicable("D >= 3", "D = " + std::to_string(cp.D));
    if (cp.b < 2) return not_applicable("b >= 2", "b = " + rat_str(cp.b));
    GeometricArray geo;
    geo.D = cp.D;
    if (!is_integer(cp.beta) || cp.beta < 1)
        return infeasible("beta positive integer", -1, rat_str(cp.beta));
    geo.beta = to_integer(cp.beta);
    for (int j = 0; j < cp.D; ++j) {
        Rat phi = 1 + cp.alpha * gaussian_bracket(j, cp.b);
        if (!is_integer(phi) || phi < 1) return infeasible("phi_j = 1 + alpha[j] positive integer", j, rat_str(phi));
        geo.phi.push_back(to_integer(phi));
    }
    for (int j = 1; j <= cp.D; ++j) {
        Rat tau = gaussian_bracket(j, cp.b);
        if (!is_integer(tau) || tau < 1) return infeasible("tau_j = [j] positive integer", j, rat_str(tau));
        geo.tau.push_back(to_integer(tau));
    }
    if (auto bad = validate(geo)) return *bad;
    return geo;
}

std::optional<ClassicalParameterSet> classical_from_geometric(const GeometricArray& geo) {
    if (geo.D < 2) return std::nullopt;
    ClassicalParameterSet cp;
    cp.D = geo.D;
    cp.b = Rat(geo.tau_j(2) - 1);
    if (cp.b < 1) return std::nullopt;
    cp.alpha = Rat(geo.phi_j(1) - 1);
    cp.beta = Rat(geo.beta);
    for (int j = 1; j <= geo.D; ++j)
        if (Rat(geo.tau_j(j)) != gaussian_bracket(j, cp.b)) return std::nullopt;
    for (int j = 0; j < geo.D; ++j)
        if (Rat(geo.phi_j(j)) != 1 + cp.alpha * gaussian_bracket(j, cp.b)) return std::nullopt;
    return cp;
}

static std::optional<std::vector<Int>> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) {
        auto v = parse_int(cur);
        if (!v) return std::nullopt;
        out.push_back(*v);
    }
    if (out.empty()) return std::nullopt;
    return out;
}

static std::optional<std::pair<std::vector<Int>, std::vector<Int>>> parse_brace_pair(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char ch) { return ch == ' '; }), s.end());
    if (s.size() < 5 || s.front() != '{' || s.back() != '}') return std::nullopt;
    s = s.substr(1, s.size() - 2);
    auto semi = s.find(';');
    if (semi == std::string::npos) return std::nullopt;
    auto first = parse_int_list(s.substr(0, semi));
    auto second = parse_int_list(s.substr(semi + 1));
    if (!first || !second) return std::nullopt;
    return std::make_pair(*first, *second);
}

std::optional<IntersectionArray> parse_intersection_array(const std::string& text) {
    auto parts = parse_brace_pair(text);
    if (!parts) return std::nullopt;
    if (parts->first.size() != parts->second.size()) return std::nullopt;
    IntersectionArray arr;
    arr.D = static_cast<int>(parts->first.size());
    arr.b = parts->first;
    arr.c = parts->second;
    return arr;
}

std::optional<GeometricArray> parse_geometric_array(const std::string& text, const Int& beta) {
    auto parts = parse_brace_pair(text);
    if (!parts) return std::nullopt;
    if (parts->first.size() != parts->second.size()) return std::nullopt;
    GeometricArray geo;
    geo.D = static_cast<int>(parts->first.size());
    geo.phi = parts->first;
    geo.tau = parts->second;
    geo.beta = beta;
    return geo;
}

}  // namespace drg
