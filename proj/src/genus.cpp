#include "hilbproj/genus.hpp"

#include "hilbproj/errors.hpp"
#include "hilbproj/hilbfiber.hpp"

namespace hilbproj {

namespace {

void check_genus_range(int d, int a) {
    if (d < 1) throw DomainError("need d >= 1");
    if (a < 1 || a > d) throw DomainError("the genus formulas need 1 <= a <= d");
}

Int halved(const Int& n, const char* what) {
    if (mpz_odd_p(n.get_mpz_t()))
        throw InternalError(std::string(what) + " must be even, got " + n.get_str());
    return n / 2;
}

}  // namespace

Int hilb_genus(int d, int a) {
    check_genus_range(d, a);
    const Int product = binomial(d, a) * Int(static_cast<long>(a) * (d - a) - 2);
    const Int g = 1 + halved(product, "binom(d,a)*(a(d-a)-2)");
    if (g < 0) throw InternalError("negative genus from the closed formula");
    return g;
}

Int hurwitz_genus(int d, int a) {
    check_genus_range(d, a);
    Int rhs = -2 * binomial(d, a);
    if (d >= 2) rhs += Int(static_cast<long>(d) * (d - 1)) * binomial(d - 2, a - 1);
    return halved(rhs, "the Hurwitz right-hand side") + 1;
}

GenusReport hurwitz_genus_from_data(const Hypersurface& a_surf, const Center& z, int a) {
    const int d = a_surf.degree;
    check_genus_range(d, a);
    if (binomial(d, a) > 1000000)
        throw UnsupportedError("the audit route enumerates the fiber; binom(d,a) is too large");

    auto [pencil, cert] = pencil_with_certificate(a_surf, z);
    if (!cert.general)
        throw DomainError("non-general-center",
                          "the center failed certification (" + cert.failing +
                              "); resample the center and retry");

    // Observed cover degree: the number of subschemes over a reduced fiber.
    const Int cover = Int(static_cast<long>(
        enumerate_fiber_points(FiberProfile::reduced(d), a).size()));

    // Ramification over one branch fiber, from an audit of the profile
    // actually observed there (all certified branch profiles agree).
    int ram = 0;
    if (pencil.branch_count > 0) {
        FiberProfile branch_profile = FiberProfile::simple_branch(d);
        if (!cert.samples.empty()) branch_profile = cert.samples.front().profile;
        const DegreeAudit audit = degree_audit(branch_profile, a);
        if (audit.index_sum != cover)
            throw InternalError("branch fiber audit disagrees with the cover degree");
        for (const auto& pt : audit.points) ram += *pt.ram_index - 1;
    }

    const Int rhs = -2 * cover + Int(static_cast<long>(pencil.branch_count)) * Int(ram);
    const Int genus_data = halved(rhs, "the observed Hurwitz right-hand side") + 1;

    GenusReport report;
    report.d = d;
    report.a = a;
    report.cover_degree = cover;
    report.genus_formula = hilb_genus(d, a);
    report.genus_hurwitz = genus_data;
    report.branch_points = pencil.branch_count;
    report.ram_per_branch = ram;
    if (report.genus_formula != report.genus_hurwitz)
        throw InternalError("closed-formula genus and observed Hurwitz genus disagree");
    return report;
}

Int vmrt_degree(int d, int a) {
    if (d < 0 || a < 0 || a > d) throw DomainError("need 0 <= a <= d");
    return binomial(d, a);
}

Int plane_vmrt_arith_genus(const Int& B) {
    if (B < 1) throw DomainError("a plane curve has degree >= 1");
    return halved((B - 1) * (B - 2), "(B-1)(B-2)");
}

bool tau_is_isomorphism(int d, int a) {
    if (d < 1 || a < 0 || a > d) throw DomainError("need 0 <= a <= d with d >= 1");
    return a == 0 || a == 1 || a == d - 1 || a == d;
}

bool iso_obstruction_identity(int d, int a) {
    if (d < 0 || a < 0 || a > d) throw DomainError("need 0 <= a <= d");
    return binomial(d, a) == Int(static_cast<long>(a) * (d - a) + 1);
}

Int branch_curve_nodes(int d) {
    if (d < 1) throw DomainError("need d >= 1");
    return halved(Int(static_cast<long>(d)) * (d - 1) * (d - 2) * (d - 3),
                  "d(d-1)(d-2)(d-3)");
}

}  // namespace hilbproj
