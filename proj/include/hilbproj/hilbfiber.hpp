#pragma once

#include "hilbproj/projection.hpp"
#include "hilbproj/rational.hpp"

#include <optional>
#include <vector>

namespace hilbproj {

// A point of the Hilbert-scheme fiber over a line: the subscheme
// W = k_1 p_1 + ... + k_r p_r of the fiber h_1 p_1 + ... + h_r p_r,
// 0 <= k_i <= h_i. Entries are aligned with the profile's fixed order.
struct SubschemeSelector {
    SubschemeSelector(FiberProfile profile, std::vector<int> k);

    FiberProfile profile;
    std::vector<int> k;

    int length() const;  // sum of k
};

struct FiberPointReport {
    SubschemeSelector selector;
    int tangent_dim;
    bool pi_smooth;
    std::optional<int> ram_index;  // known only for admissible profiles
};

// All selectors of length a, first coordinate varying slowest, descending
// (so (2,0,0), (1,1,0), (1,0,1), (0,1,1) for profile (2,1,1), a = 2).
// Entries with equal h_i are distinct points and enumerated separately.
std::vector<SubschemeSelector> enumerate_fiber_points(const FiberProfile& profile, int a);

// sum_i min(k_i, h_i - k_i): dimension of the tangent space of the fiber of
// Pi at the selected subscheme.
int tangent_dim(const SubschemeSelector& s);

// Pi is smooth at [W] iff W is a union of irreducible components of the
// fiber, i.e. every k_i is 0 or h_i; equivalent to tangent_dim == 0.
bool pi_smooth_at(const SubschemeSelector& s);

// min(k, h-k): the common dimension of Hom and Ext^1 of the length-k
// subscheme inside the length-h punctual fiber. 1 <= k <= h.
int punctual_hom_ext_dim(int h, int k);

// Independent oracle for punctual_hom_ext_dim: sets up the t-commutation
// constraints on the matrix of a module map t^k*L -> L/t^k*L over
// L = Q[t]/(t^h) and solves them by exact Gaussian elimination. h <= 8.
int brute_hom_dim(int h, int k);

// All h_i <= 2 with at most one h_i = 2: the profiles over a general center
// of a plane-curve projection, the only ones with a determinate ramification index.
bool profile_admissible(const FiberProfile& profile);

// 2 when the unique double point enters W reduced (k = 1 there), else 1.
// Inadmissible profiles raise UnsupportedError("unsupported-profile").
int ramification_index(const SubschemeSelector& s);

struct DegreeAudit {
    std::vector<FiberPointReport> points;
    Int index_sum;  // equals binom(d, a); checked
    Int expected;
};

// Enumerates the fiber, attaches tangent/smoothness/ramification data, and
// checks that the ramification indices sum to the flat degree binom(d, a).
DegreeAudit degree_audit(const FiberProfile& profile, int a);

// binom(d-2, a-1): number of ramification points of Pi over one simple
// branch point of the projection. d >= 2, 1 <= a <= d.
Int ramification_count_over_branch(int d, int a);

}  // namespace hilbproj
