#pragma once

// Ext groups from projective resolutions.
//
// Two resolution strategies back ext_dim:
//   - minimal resolutions (p-groups): iterated projective covers; Ext^i is
//     the homology of Hom(P_•, n) at position i, computed through the free
//     identification Hom(kP^t, n) ≅ n^t.
//   - generic free resolutions (any group): each step covers X by a free
//     module of rank dim X via g⊗x ↦ g·x; Ext^i is evaluated with the
//     standard dimension shift Ext^i(m, n) ≅ coker(Hom(P_{i-1}, n) →
//     Hom(Ω_i, n)), which only needs the resolution up to P_{i-1} and keeps
//     term sizes inside the configured ceiling.
// Both compute the same numbers (Ext is resolution-independent); the
// two-path consistency tests exercise exactly this agreement.

#include <vector>

#include "comack/rep.hpp"

namespace comack::rep {

struct ExtOptions {
    // Hard cap on the dimension of any constructed resolution term; exceeding
    // it raises a Resource error.
    size_t term_ceiling = 5000;
};

// True when kG is semisimple for this field, i.e. p does not divide |G|.
bool algebra_is_semisimple(const grp::GroupPtr& g, gf::PrimeField f);

// dim Ext^i_kG(m, n) for i >= 1; dispatches on the group (semisimple -> 0,
// p-group -> minimal path, otherwise generic path).
size_t ext_dim(const RepPtr& m, const RepPtr& n, size_t i, const ExtOptions& opts = {});

// The two paths, exposed for cross-validation.
size_t ext_dim_minimal(const RepPtr& m, const RepPtr& n, size_t i,
                       const ExtOptions& opts = {});
size_t ext_dim_generic(const RepPtr& m, const RepPtr& n, size_t i,
                       const ExtOptions& opts = {});

// dims of Ext^1..Ext^cutoff (m, n); with stop_at_first_nonzero the table ends
// at the first positive entry.
std::vector<size_t> ext_table(const RepPtr& m, const RepPtr& n, size_t cutoff,
                              const ExtOptions& opts = {},
                              bool stop_at_first_nonzero = false);

}  // namespace comack::rep
