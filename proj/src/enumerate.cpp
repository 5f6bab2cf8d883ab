#include "drg/enumerate.hpp"

#include <algorithm>
#include <thread>

namespace drg {

namespace {

bool strictly_increasing(const std::vector<Int>& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] <= v[i - 1]) return false;
    return true;
}

// Strictly increasing fills of positions [pos, len) above prev and at most hi,
// honoring pinned leading entries.
void fill_tails(std::vector<Int>& acc, size_t pos, size_t len, const Int& prev, const Int& hi,
                const std::vector<Int>& pinned, std::vector<std::vector<Int>>& out) {
    if (pos == len) {
        out.push_back(acc);
        return;
    }
    if (pos < pinned.size()) {
        const Int& v = pinned[pos];
        if (v <= prev || v > hi) return;
        acc.push_back(v);
        fill_tails(acc, pos + 1, len, v, hi, pinned, out);
        acc.pop_back();
        return;
    }
    for (Int v = prev + 1; v <= hi; ++v) {
        acc.push_back(v);
        fill_tails(acc, pos + 1, len, v, hi, pinned, out);
        acc.pop_back();
    }
}

// tau_1 = 1 < ... < tau_D = taud with pinned leading entries
std::vector<std::vector<Int>> tau_vectors(int D, const Int& taud,
                                          const std::vector<Int>& pinned) {
    std::vector<std::vector<Int>> out;
    if (!pinned.empty() && pinned[0] != 1) return out;
    if (static_cast<int>(pinned.size()) == D && pinned.back() != taud) return out;
    if (D == 1) {
        if (taud == 1) out.push_back({Int(1)});
        return out;
    }
    std::vector<std::vector<Int>> mids;
    std::vector<Int> acc{Int(1)};
    fill_tails(acc, 1, static_cast<size_t>(D) - 1, Int(1), taud - 1, pinned, mids);
    for (auto& m : mids) {
        if (m.back() >= taud) continue;
        m.push_back(taud);
        if (static_cast<int>(pinned.size()) == D && m != pinned) continue;
        out.push_back(std::move(m));
    }
    return out;
}

// phi_0 = 1 < ... < phi_{D-1} <= beta with pinned leading entries
std::vector<std::vector<Int>> phi_vectors(int D, const Int& beta,
                                          const std::vector<Int>& pinned) {
    std::vector<std::vector<Int>> out;
    if (!pinned.empty() && pinned[0] != 1) return out;
    std::vector<Int> acc{Int(1)};
    fill_tails(acc, 1, static_cast<size_t>(D), Int(1), beta, pinned, out);
    return out;
}

bool any_fail(const std::vector<CheckVerdict>& checks) {
    return std::any_of(checks.begin(), checks.end(),
                       [](const CheckVerdict& c) { return c.status == Status::fail; });
}

// cheap exact screens before the spectral battery
bool prescreened_out(const GeometricArray& geo) {
    if (validate(geo)) return true;
    if (any_fail(check_order_constraints(geo))) return true;
    if (any_fail(check_els_and_design(geo))) return true;
    auto arr = geometric_to_array(geo);
    if (!arr.ok()) return true;
    auto counts = derive_counts(*arr);
    return !counts.ok();
}

}  // namespace

std::optional<std::string> validate(const EnumerationSpec& spec) {
    if (spec.d_min < 3) return "D must be at least 3";
    if (spec.taud_min < 2) return "tau_D must be at least 2";
    if (spec.beta_min < 1) return "beta must be at least 1";
    for (const auto* p : {&spec.phi_prefix, &spec.tau_prefix}) {
        if (!p->empty() && (*p)[0] != 1)
            return "a prefix must start at 1";
        if (!strictly_increasing(*p)) return "a prefix must be strictly increasing";
    }
    return std::nullopt;
}

std::vector<EnumRecord> enumerate_candidates(const EnumerationSpec& spec, int workers) {
    std::vector<GeometricArray> cands;
    for (int D = spec.d_min; D <= spec.d_max; ++D) {
        if (static_cast<int>(spec.phi_prefix.size()) > D) continue;
        if (static_cast<int>(spec.tau_prefix.size()) > D) continue;
        for (Int taud = spec.taud_min; taud <= spec.taud_max; ++taud) {
            auto taus = tau_vectors(D, taud, spec.tau_prefix);
            if (taus.empty()) continue;
            for (Int beta = spec.beta_min; beta <= spec.beta_max; ++beta) {
                auto phis = phi_vectors(D, beta, spec.phi_prefix);
                for (const auto& tau : taus)
                    for (const auto& phi : phis) {
                        GeometricArray geo;
                        geo.D = D;
                        geo.phi = phi;
                        geo.tau = tau;
                        geo.beta = beta;
                        cands.push_back(std::move(geo));
                    }
            }
        }
    }

    std::vector<std::optional<FeasibilityReport>> slots(cands.size());
    int n_workers = std::max(1, workers);
    auto work = [&](int w) {
        for (size_t i = static_cast<size_t>(w); i < cands.size(); i += n_workers) {
            if (prescreened_out(cands[i])) continue;
            FeasibilityReport rep = run_battery(cands[i]);
            if (rep.overall_pass()) slots[i] = std::move(rep);
        }
    };
    if (n_workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < n_workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    std::vector<EnumRecord> out;
    for (auto& slot : slots)
        if (slot) out.push_back({static_cast<long>(out.size()), std::move(*slot)});
    return out;
}

}  // namespace drg
