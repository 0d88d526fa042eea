#include "hilbproj/projection.hpp"

#include "hilbproj/errors.hpp"

#include <algorithm>
#include <numeric>

namespace hilbproj {

FiberProfile::FiberProfile(std::vector<int> multiplicities) : parts_(std::move(multiplicities)) {
    if (parts_.empty()) throw DomainError("empty fiber profile");
    for (int h : parts_)
        if (h < 1) throw DomainError("fiber multiplicities must be positive");
}

FiberProfile FiberProfile::reduced(int d) {
    if (d < 1) throw DomainError("profile needs d >= 1");
    return FiberProfile(std::vector<int>(static_cast<std::size_t>(d), 1));
}

FiberProfile FiberProfile::simple_branch(int d) {
    if (d < 2) throw DomainError("a simple branch profile needs d >= 2");
    std::vector<int> parts(static_cast<std::size_t>(d - 1), 1);
    parts[0] = 2;
    return FiberProfile(std::move(parts));
}

int FiberProfile::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

FiberProfile FiberProfile::canonical() const {
    std::vector<int> sorted = parts_;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    return FiberProfile(std::move(sorted));
}

bool FiberProfile::multiset_equal(const FiberProfile& other) const {
    return canonical().parts() == other.canonical().parts();
}

Hypersurface::Hypersurface(HomogeneousForm f)
    : form(std::move(f)), ambient_dim(form.num_vars() - 1), degree(form.degree()) {
    if (form.num_vars() < 3)
        throw DomainError("the projection setting needs at least 3 variables (m >= 1)");
    if (degree < 1) throw DomainError("hypersurface degree must be >= 1");
}

void check_center(const Hypersurface& a, const Center& z) {
    if (static_cast<int>(z.coords.size()) != a.form.num_vars())
        throw DomainError("center dimension does not match the ambient space");
    if (std::all_of(z.coords.begin(), z.coords.end(), [](const Rat& c) { return c == 0; }))
        throw DomainError("center coordinates must not all vanish");
    if (a.form(z.coords) == 0)
        throw DomainError("center-on-hypersurface", "the center lies on the hypersurface");
}

FiberProfile fiber_profile(const Hypersurface& a, const Center& z,
                           const std::vector<Rat>& direction) {
    check_center(a, z);
    const BinaryForm g = restrict_to_line(a.form, z.coords, direction);
    const UniPoly u = g.dehomogenized();
    std::vector<int> parts;
    const int at_infinity = g.mult_at_s_zero();
    if (at_infinity > 0) parts.push_back(at_infinity);
    for (const auto& [mult, factor] : squarefree_decomposition(u)) {
        for (int i = 0; i < factor.degree(); ++i) parts.push_back(mult);
    }
    FiberProfile profile = FiberProfile(std::move(parts)).canonical();
    if (profile.sum() != a.degree)
        throw InternalError("fiber profile does not sum to the hypersurface degree");
    return profile;
}

int singular_count_on_line(const Hypersurface& a, const Center& z,
                           const std::vector<Rat>& direction) {
    check_center(a, z);
    const BinaryForm g = restrict_to_line(a.form, z.coords, direction);

    // The common-root locus of F and all partials along the line. Each
    // restriction is handled as a full binary form so a singular point in
    // the direction's chart boundary is not missed.
    UniPoly common = g.dehomogenized();
    int infinity_mult = g.mult_at_s_zero();
    for (int i = 0; i < a.form.num_vars(); ++i) {
        const SparsePoly dp = a.form.partial(i);
        if (dp.is_zero()) continue;
        auto coeffs = restrict_line_coeffs(dp, a.degree - 1, z.coords, direction);
        if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& c) { return c == 0; })) continue;
        const BinaryForm gi(a.degree - 1, std::move(coeffs));
        common = gcd(common, gi.dehomogenized());
        infinity_mult = std::min(infinity_mult, gi.mult_at_s_zero());
        if (common.degree() == 0 && infinity_mult == 0) return 0;
    }
    return common.degree() + infinity_mult;
}

PencilFrame pencil_frame(const Center& z, int num_vars) {
    if (static_cast<int>(z.coords.size()) != num_vars)
        throw DomainError("center dimension mismatch");
    int pivot = -1;
    for (int i = 0; i < num_vars; ++i) {
        if (z.coords[static_cast<std::size_t>(i)] != 0) {
            pivot = i;
            break;
        }
    }
    if (pivot < 0) throw DomainError("center coordinates must not all vanish");
    PencilFrame frame;
    for (int i = 0; i < num_vars; ++i) {
        if (i == pivot) continue;
        std::vector<Rat> e(static_cast<std::size_t>(num_vars), Rat(0));
        e[static_cast<std::size_t>(i)] = 1;
        if (frame.w0.empty()) frame.w0 = std::move(e);
        else if (frame.w1.empty()) frame.w1 = std::move(e);
    }
    return frame;
}

std::vector<Rat> pencil_direction(const PencilFrame& frame, const Rat& u, const Rat& v) {
    if (u == 0 && v == 0) throw DomainError("pencil parameter must not be (0, 0)");
    std::vector<Rat> w(frame.w0.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = u * frame.w0[i] + v * frame.w1[i];
    return w;
}

namespace {

// Discriminant of the coefficient-reversed dehomogenized restriction at one
// pencil parameter. The reversal puts F(z) != 0 in the lead, so the value
// specializes the pencil discriminant with no degree drop anywhere.
Rat pencil_disc_sample(const Hypersurface& a, const Center& z, const PencilFrame& frame,
                       const Rat& u, const Rat& v) {
    const std::vector<Rat> w = pencil_direction(frame, u, v);
    const BinaryForm g = restrict_to_line(a.form, z.coords, w);
    return discriminant(g.reversed());
}

}  // namespace

PencilReport pencil_discriminant(const Hypersurface& a, const Center& z) {
    if (a.m() != 1)
        throw UnsupportedError("the pencil discriminant is defined for plane curves (m = 1)");
    check_center(a, z);
    const int d = a.degree;
    const int D = d * (d - 1);
    const PencilFrame frame = pencil_frame(z, a.form.num_vars());

    std::vector<std::pair<Rat, Rat>> nodes;
    nodes.reserve(static_cast<std::size_t>(D) + 1);
    for (int u = 0; u <= D; ++u)
        nodes.emplace_back(Rat(u), pencil_disc_sample(a, z, frame, Rat(u), Rat(1)));
    const UniPoly p = interpolate(nodes);

    // One extra node cross-checks the interpolation.
    if (p(Rat(D + 1)) != pencil_disc_sample(a, z, frame, Rat(D + 1), Rat(1)))
        throw InternalError("pencil discriminant interpolation failed its control sample");

    if (p.is_zero())
        throw DomainError("non-reduced-curve",
                          "the pencil discriminant vanishes identically; the curve is not reduced");
    if (p.degree() > D) throw InternalError("pencil discriminant exceeds its degree bound");

    std::vector<Rat> coeffs(static_cast<std::size_t>(D) + 1, Rat(0));
    for (int j = 0; j <= D; ++j) coeffs[static_cast<std::size_t>(j)] = p.coeff(D - j);
    BinaryForm disc(D, std::move(coeffs));

    PencilReport report{std::move(disc), D, true, false, 0};
    report.is_squarefree = report.discriminant.is_squarefree();
    report.branch_count = report.discriminant.distinct_root_count();
    return report;
}

std::pair<PencilReport, GeneralityReport> pencil_with_certificate(const Hypersurface& a,
                                                                  const Center& z) {
    if (a.m() != 1)
        throw UnsupportedError("center certification is defined for plane curves (m = 1)");
    GeneralityReport cert;
    PencilReport report = pencil_discriminant(a, z);  // throws when disc == 0
    cert.disc_nonzero = report.degree_attained;
    cert.squarefree = report.is_squarefree;

    // Every branch fiber the rationals can see is checked exactly; the
    // squarefree certificate covers the rest (a squarefree discriminant of
    // full degree forces one double point per branch fiber).
    const int d = a.degree;
    const PencilFrame frame = pencil_frame(z, a.form.num_vars());
    const UniPoly p_of_u = report.discriminant.reversed();  // coefficients of u^k
    cert.profiles_ok = true;
    std::vector<std::pair<Rat, Rat>> params;
    for (const Rat& u0 : rational_roots(p_of_u)) params.emplace_back(u0, Rat(1));
    // A degree drop of p means the parameter (1:0) is a branch point.
    if (p_of_u.degree() < report.disc_degree) params.emplace_back(Rat(1), Rat(0));
    for (const auto& [u0, v0] : params) {
        const std::vector<Rat> w = pencil_direction(frame, u0, v0);
        FiberProfile profile = fiber_profile(a, z, w);
        const bool expected = d >= 2 && profile.multiset_equal(FiberProfile::simple_branch(d));
        cert.samples.push_back(BranchSample{u0, v0, std::move(profile), expected});
        if (!expected) cert.profiles_ok = false;
    }

    cert.general = cert.disc_nonzero && cert.squarefree && cert.profiles_ok;
    std::vector<std::string> failed;
    if (!cert.disc_nonzero) failed.push_back("disc_nonzero");
    if (!cert.squarefree) failed.push_back("squarefree");
    if (!cert.profiles_ok) failed.push_back("profile");
    for (std::size_t i = 0; i < failed.size(); ++i) {
        if (i) cert.failing += ",";
        cert.failing += failed[i];
    }
    return {std::move(report), std::move(cert)};
}

GeneralityReport is_general_center(const Hypersurface& a, const Center& z) {
    return pencil_with_certificate(a, z).second;
}

bool multiplicity_bound(const FiberProfile& profile, int m) {
    if (m < 1) throw DomainError("the bound needs m >= 1");
    int total = 0;
    for (int h : profile.parts()) total += h / 2;
    return total <= m;
}

bool surface_profile_expected(const FiberProfile& profile) {
    int twos = 0, threes = 0, deeper = 0;
    for (int h : profile.parts()) {
        if (h == 2) ++twos;
        else if (h == 3) ++threes;
        else if (h > 3) ++deeper;
    }
    if (deeper > 0) return false;
    if (threes == 0 && twos <= 2) return true;   // (1^d), (2,1^*), (2,2,1^*)
    if (threes == 1 && twos == 0) return true;   // (3,1^*)
    return false;
}

}  // namespace hilbproj
