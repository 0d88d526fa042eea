#pragma once

#include "hilbproj/binary_form.hpp"
#include "hilbproj/homform.hpp"
#include "hilbproj/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hilbproj {

// Multiset of intersection multiplicities of a line with the hypersurface;
// entries are >= 1 and the order is kept as given (selectors address entries
// by position; multiset comparison is separate).
class FiberProfile {
public:
    explicit FiberProfile(std::vector<int> multiplicities);
    static FiberProfile reduced(int d);        // (1,...,1)
    static FiberProfile simple_branch(int d);  // (2,1,...,1), d >= 2

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }
    int sum() const;
    FiberProfile canonical() const;  // sorted non-increasing
    bool multiset_equal(const FiberProfile& other) const;

    friend bool operator==(const FiberProfile& a, const FiberProfile& b) {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<int> parts_;
};

// Degree-d hypersurface in P^(m+1), m >= 1; the form lives in m+2 variables.
struct Hypersurface {
    explicit Hypersurface(HomogeneousForm f);

    HomogeneousForm form;
    int ambient_dim;  // m + 1
    int degree;

    int m() const { return ambient_dim - 1; }
};

// Projection center; must avoid the hypersurface (checked by the operations).
struct Center {
    std::vector<Rat> coords;
};

// Throws when z does not define a point of P^(m+1) \ A.
void check_center(const Hypersurface& a, const Center& z);

// Multiplicities of (line through z with the given direction) meet A, sorted
// non-increasing, summing to deg A. The root at the chart boundary is
// captured by working with the full binary restriction.
FiberProfile fiber_profile(const Hypersurface& a, const Center& z,
                           const std::vector<Rat>& direction);

// Degree of the gcd of the restriction of F and of all its partials along
// the line; 0 means A is smooth at every point of the line's intersection.
int singular_count_on_line(const Hypersurface& a, const Center& z,
                           const std::vector<Rat>& direction);

// Canonical completion of z to a basis; the pencil of lines through z is
// parametrized by directions u*w0 + v*w1, (u:v) in P^1.
struct PencilFrame {
    std::vector<Rat> w0, w1;
};
PencilFrame pencil_frame(const Center& z, int num_vars);
std::vector<Rat> pencil_direction(const PencilFrame& frame, const Rat& u, const Rat& v);

struct PencilReport {
    BinaryForm discriminant;  // binary form in the pencil parameter (u, v)
    int disc_degree;          // d(d-1)
    bool degree_attained;
    bool is_squarefree;
    int branch_count;  // distinct projective roots of the discriminant
};

// Discriminant of the pencil of lines through z (plane-curve case m = 1).
// Computed from the coefficient-reversed dehomogenized restriction, whose
// leading coefficient is F(z) != 0, so degenerations at the chart boundary
// stay visible; sampled at d(d-1)+1 parameters and interpolated exactly.
PencilReport pencil_discriminant(const Hypersurface& a, const Center& z);

struct BranchSample {
    Rat u, v;              // pencil parameter of a rational branch point
    FiberProfile profile;  // observed fiber profile there
    bool expected;         // profile is (2, 1^(d-2))
};

struct GeneralityReport {
    bool general = false;
    bool disc_nonzero = false;
    bool squarefree = false;
    bool profiles_ok = false;
    std::vector<BranchSample> samples;  // rational branch parameters examined
    std::string failing;                // "", or comma-joined failed checks
};

// Certifies the open conditions a general center must satisfy: squarefree
// discriminant of full degree d(d-1), plus profile (2,1^(d-2)) at every
// rational-sample-verifiable branch fiber. Never assumes generality.
GeneralityReport is_general_center(const Hypersurface& a, const Center& z);

// One pencil run serving both reports (the genus pipeline needs both).
std::pair<PencilReport, GeneralityReport> pencil_with_certificate(const Hypersurface& a,
                                                                  const Center& z);

// sum floor(h_i / 2) <= m.
bool multiplicity_bound(const FiberProfile& profile, int m);

// Diagnostic only (never asserted): profile is one of the classes occurring
// over a general center of a smooth projected surface:
// (1^d), (2,1^(d-2)), (2,2,1^(d-4)), (3,1^(d-3)).
bool surface_profile_expected(const FiberProfile& profile);

}  // namespace hilbproj
