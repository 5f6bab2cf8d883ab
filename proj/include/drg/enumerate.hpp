#pragma once

#include "drg/filters.hpp"

namespace drg {

// Search box for candidate geometric parameter sets.  phi_0 = 1 and tau_1 = 1
// are forced, both sequences run strictly increasing, tau_D spans its range,
// and each phi_j stays at most beta.  Prefixes pin leading entries: phi_prefix
// fixes phi_0, phi_1, ... and tau_prefix fixes tau_1, tau_2, ....
struct EnumerationSpec {
    int d_min = 3, d_max = 3;
    Int taud_min = 2, taud_max = 2;
    Int beta_min = 1, beta_max = 1;
    std::vector<Int> phi_prefix;
    std::vector<Int> tau_prefix;
};

// The violated bound, or nothing when the spec is usable.  Empty ranges are
// usable and simply produce no candidates.
std::optional<std::string> validate(const EnumerationSpec& spec);

struct EnumRecord {
    long rank = 0;  // output position in (D, tau_D, beta, tau, phi) order
    FeasibilityReport report;
};

// Every candidate in the box whose full battery shows no failure, in
// lexicographic (D, tau_D, beta, tau, phi) order.  The worker count only
// changes the schedule, never the records.
std::vector<EnumRecord> enumerate_candidates(const EnumerationSpec& spec, int workers = 1);

}  // namespace drg
