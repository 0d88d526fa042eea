#pragma once

#include "hilbproj/projection.hpp"
#include "hilbproj/rational.hpp"

namespace hilbproj {

// 1 + binom(d,a) * (a(d-a) - 2) / 2, the genus of the degree-binom(d,a)
// cover of P^1 by the relative Hilbert scheme of a general plane projection.
// 1 <= a <= d; every division is parity-checked first.
Int hilb_genus(int d, int a);

// Same genus through 2g - 2 = -2*binom(d,a) + d(d-1)*binom(d-2,a-1).
Int hurwitz_genus(int d, int a);

struct GenusReport {
    int d = 0;
    int a = 0;
    Int cover_degree;
    Int genus_formula;
    Int genus_hurwitz;
    int branch_points = 0;
    int ram_per_branch = 0;
};

// Assembles the genus from an actual pencil: branch count from the
// discriminant, per-branch ramification from a degree audit of the observed
// branch profiles, cover degree from enumeration over a reduced fiber. The
// center must pass is_general_center; the result must agree with the closed
// formula (InternalError otherwise).
GenusReport hurwitz_genus_from_data(const Hypersurface& a_surf, const Center& z, int a);

// binom(d, a): degree of the tangent-directions hypersurface. 0 <= a <= d.
Int vmrt_degree(int d, int a);

// (B-1)(B-2)/2: arithmetic genus of a plane curve of degree B >= 1.
Int plane_vmrt_arith_genus(const Int& B);

// The tangent map of the minimal-curve family is an isomorphism onto its
// image exactly for a in {0, 1, d-1, d}.
bool tau_is_isomorphism(int d, int a);

// binom(d, a) == a(d-a) + 1: the identity an isomorphism would force
// (genus of the cover vs arithmetic genus of a plane curve of its degree).
bool iso_obstruction_identity(int d, int a);

// d(d-1)(d-2)(d-3)/2: node count of the branch curve of a general surface
// projection of degree d.
Int branch_curve_nodes(int d);

}  // namespace hilbproj
