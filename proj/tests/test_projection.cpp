#include "hilbproj/errors.hpp"
#include "hilbproj/projection.hpp"
#include "hilbproj/rng.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hilbproj;

namespace {

Hypersurface surf(const std::string& text, int min_vars = 0) {
    return Hypersurface(parse_homogeneous_form(text, min_vars));
}

std::vector<Rat> pt(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return v;
}

const std::vector<int>& parts(const FiberProfile& p) { return p.parts(); }

}  // namespace

TEST_SUITE("projection") {

TEST_CASE("fiber profiles of constructed degenerations") {
    // (x1 - x0)^4 expanded: the line from (1,0,0) towards (0,1,1) meets the
    // quadruple line x0 = x1 at a single point with multiplicity 4.
    const Hypersurface a =
        surf("x0^4 - 4*x0^3*x1 + 6*x0^2*x1^2 - 4*x0*x1^3 + x1^4", 3);
    CHECK(parts(fiber_profile(a, Center{pt({1, 0, 0})}, pt({0, 1, 1}))) ==
          std::vector<int>{4});

    // x1^2 x2^2: through (1,1,1) towards (0,1,1) the restriction is (s+t)^4,
    // a total degeneration at the point where both doubled lines cross.
    const Hypersurface b = surf("x1^2*x2^2", 3);
    CHECK(parts(fiber_profile(b, Center{pt({1, 1, 1})}, pt({0, 1, 1}))) ==
          std::vector<int>{4});
    // ... and (2,2) along a direction separating the two doubled lines.
    CHECK(parts(fiber_profile(b, Center{pt({1, 1, 1})}, pt({0, 1, -1}))) ==
          std::vector<int>{2, 2});
}

TEST_CASE("generic line on the Fermat quartic is reduced") {
    const Hypersurface fermat = surf("x0^4 + x1^4 + x2^4");
    const Center z{pt({1, 2, 5})};
    const std::vector<Rat> w = pt({0, 1, 3});
    // Independent certificate: the restriction has nonzero discriminant.
    const BinaryForm g = restrict_to_line(fermat.form, z.coords, w);
    REQUIRE(discriminant(g.reversed()) != 0);
    CHECK(parts(fiber_profile(fermat, z, w)) == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("a root at the chart boundary is still counted") {
    // x0 (x0^3 + x1^3 + x2^3) vanishes simply at the direction point
    // w = (0,1,0), so the dehomogenized restriction drops to degree 3; the
    // boundary root must still appear in the profile.
    const Hypersurface a = surf("x0^4 + x0*x1^3 + x0*x2^3");
    const Center z{pt({1, 1, 1})};
    const std::vector<Rat> w = pt({0, 1, 0});
    const BinaryForm g = restrict_to_line(a.form, z.coords, w);
    REQUIRE(g.dehomogenized().degree() == 3);
    REQUIRE(g.mult_at_s_zero() == 1);
    const auto profile = fiber_profile(a, z, w);
    CHECK(profile.sum() == 4);
    CHECK(parts(profile) == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("fiber profile rejects bad inputs") {
    const Hypersurface fermat = surf("x0^4 + x1^4 + x2^4");
    // z on the hypersurface (x0 = 0 slice: 1 + 16 + ... no; use a real root).
    CHECK_THROWS_AS(fiber_profile(fermat, Center{pt({0, 0, 0})}, pt({0, 1, 0})), DomainError);
    const Hypersurface cube = surf("x1^2*x2", 3);
    CHECK_THROWS_AS(fiber_profile(cube, Center{pt({1, 0, 0})}, pt({0, 1, 0})), DomainError);
}

TEST_CASE("fiber profile is invariant under rescaling") {
    const Hypersurface a = surf("x0^4 + x1^4 + x2^4");
    const Center z{pt({1, 2, 5})};
    const std::vector<Rat> w = pt({1, 1, 3});
    const auto reference = fiber_profile(a, z, w);
    Center z2{z.coords};
    for (Rat& c : z2.coords) c *= Rat(-7) / 3;
    std::vector<Rat> w2 = w;
    for (Rat& c : w2) c *= Rat(5) / 2;
    const Hypersurface a2(a.form.scaled(Rat(9) / 4));
    CHECK(parts(fiber_profile(a2, z2, w2)) == parts(reference));
}

TEST_CASE("singular count along lines") {
    const Hypersurface fermat = surf("x0^4 + x1^4 + x2^4");
    CHECK(singular_count_on_line(fermat, Center{pt({1, 2, 5})}, pt({0, 1, 3})) == 0);

    // x1^2 x2 is singular along {x1 = 0}; this line crosses it once.
    const Hypersurface cone = surf("x1^2*x2", 3);
    CHECK(singular_count_on_line(cone, Center{pt({1, 1, 1})}, pt({1, -1, 0})) > 0);

    const Hypersurface conic = surf("x0^2 + x1^2 + x2^2");
    CHECK(singular_count_on_line(conic, Center{pt({1, 0, 0})}, pt({0, 1, 4})) == 0);
}

TEST_CASE("pencil of a line is trivial") {
    const Hypersurface line = surf("x0 + x1 + x2");
    const auto report = pencil_discriminant(line, Center{pt({1, 0, 0})});
    CHECK(report.disc_degree == 0);
    CHECK(report.degree_attained);
    CHECK(report.is_squarefree);
    CHECK(report.branch_count == 0);
    CHECK(is_general_center(line, Center{pt({1, 0, 0})}).general);
}

TEST_CASE("pencil of a smooth conic: frozen discriminant") {
    // x0^2 + x1^2 + x2^2 from z = (1,0,0): restriction (u^2+v^2) t^2 + s^2,
    // reversed t^2 + (u^2+v^2), discriminant -4(u^2+v^2).
    const Hypersurface conic = surf("x0^2 + x1^2 + x2^2");
    const auto report = pencil_discriminant(conic, Center{pt({1, 0, 0})});
    CHECK(report.disc_degree == 2);
    CHECK(report.degree_attained);
    CHECK(report.is_squarefree);
    CHECK(report.branch_count == 2);
    CHECK(report.discriminant.coeffs() == std::vector<Rat>{Rat(-4), Rat(0), Rat(-4)});
}

TEST_CASE("interpolated discriminant matches brute Sylvester samples") {
    // Independent route: evaluate the discriminant form at parameters that
    // were not interpolation nodes and compare with the Sylvester-matrix
    // resultant of the reversed fiber polynomial.
    const Hypersurface fermat = surf("x0^4 + x1^4 + x2^4");
    const Center z{pt({1, 2, 5})};
    const auto report = pencil_discriminant(fermat, z);
    const PencilFrame frame = pencil_frame(z, 3);
    const Rat lead = fermat.form(z.coords);
    for (long u0 : {-3L, 17L, 101L, -40L}) {
        const std::vector<Rat> w = pencil_direction(frame, Rat(u0), Rat(1));
        const UniPoly fiber = restrict_to_line(fermat.form, z.coords, w).reversed();
        // disc = (-1)^(d(d-1)/2) Res(f, f') / lc with d = 4.
        const Rat brute =
            test_oracles::sylvester_resultant(fiber.derivative(), fiber) / lead;
        CHECK(report.discriminant(Rat(u0), Rat(1)) == brute);
    }
}

TEST_CASE("Fermat quartic pencil: degree 12, center-dependent squarefreeness") {
    const Hypersurface fermat = surf("x0^4 + x1^4 + x2^4");
    // (1:2:3) lies on a bitangent: the parameter (1:1) (direction (0,1,1))
    // carries a (2,2) fiber and the discriminant acquires a double root.
    const auto [report, cert] = pencil_with_certificate(fermat, Center{pt({1, 2, 3})});
    CHECK(report.disc_degree == 12);
    CHECK(report.degree_attained);
    CHECK_FALSE(report.is_squarefree);
    CHECK(report.branch_count == 11);
    CHECK_FALSE(cert.general);
    CHECK(cert.failing == "squarefree,profile");
    REQUIRE(cert.samples.size() == 1);
    CHECK(cert.samples[0].u == 1);
    CHECK(cert.samples[0].v == 1);
    CHECK(parts(cert.samples[0].profile) == std::vector<int>{2, 2});

    // A certified-general center nearby.
    const auto good = is_general_center(fermat, Center{pt({1, 2, 5})});
    CHECK(good.general);
    CHECK(good.failing.empty());
    const auto good_report = pencil_discriminant(fermat, Center{pt({1, 2, 5})});
    CHECK(good_report.disc_degree == 12);
    CHECK(good_report.is_squarefree);
    CHECK(good_report.branch_count == 12);
}

TEST_CASE("rational branch points are observed inside a passing certificate") {
    // Both tangent lines of the circle through (5:0:4) sit at the rational
    // pencil parameters u = -5/3 and 5/3; certification verifies them
    // directly rather than leaning on the squarefree certificate alone.
    const Hypersurface circle = surf("x0^2 + x1^2 - x2^2");
    const auto cert = is_general_center(circle, Center{pt({5, 0, 4})});
    CHECK(cert.general);
    REQUIRE(cert.samples.size() == 2);
    CHECK(cert.samples[0].u == Rat(-5) / 3);
    CHECK(cert.samples[1].u == Rat(5) / 3);
    for (const BranchSample& s : cert.samples) {
        CHECK(s.expected);
        CHECK(parts(s.profile) == std::vector<int>{2});
    }
}

TEST_CASE("a center on a hyperflex tangent fails with a profile diagnostic") {
    // x0^3 x2 + x1^4 + x2^4 is smooth and meets {x2 = 0} only at (1:0:0),
    // with multiplicity 4. Any center on that line sees profile (4).
    const Hypersurface flexy = surf("x0^3*x2 + x1^4 + x2^4");
    const Center z{pt({1, 1, 0})};
    check_center(flexy, z);
    const auto cert = is_general_center(flexy, z);
    CHECK_FALSE(cert.general);
    CHECK(cert.failing.find("profile") != std::string::npos);
    const bool saw_quadruple = std::any_of(
        cert.samples.begin(), cert.samples.end(), [](const BranchSample& s) {
            return s.profile.parts() == std::vector<int>{4};
        });
    CHECK(saw_quadruple);
}

TEST_CASE("pencil requires m = 1") {
    const Hypersurface quartic_surface = surf("x0^4 + x1^4 + x2^4 + x3^4");
    CHECK_THROWS_AS(pencil_discriminant(quartic_surface, Center{pt({1, 2, 3, 5})}),
                    UnsupportedError);
}

TEST_CASE("a non-reduced curve has an identically vanishing discriminant") {
    // (x0 + x1 + x2)^2: every line meets the double line twice.
    const Hypersurface double_line =
        surf("x0^2 + x1^2 + x2^2 + 2*x0*x1 + 2*x0*x2 + 2*x1*x2");
    try {
        pencil_discriminant(double_line, Center{pt({1, 0, 0})});
        FAIL("expected the non-reduced-curve error");
    } catch (const DomainError& e) {
        CHECK(e.code() == "non-reduced-curve");
    }
}

TEST_CASE("multiplicity bound") {
    CHECK(multiplicity_bound(FiberProfile({2, 1, 1}), 1));
    CHECK_FALSE(multiplicity_bound(FiberProfile({2, 2}), 1));
    CHECK(multiplicity_bound(FiberProfile({3, 2, 2, 1}), 3));
}

TEST_CASE("surface profile classifier is diagnostic only") {
    CHECK(surface_profile_expected(FiberProfile({1, 1, 1, 1})));
    CHECK(surface_profile_expected(FiberProfile({2, 1, 1})));
    CHECK(surface_profile_expected(FiberProfile({2, 2, 1})));
    CHECK(surface_profile_expected(FiberProfile({3, 1})));
    CHECK_FALSE(surface_profile_expected(FiberProfile({4})));
    CHECK_FALSE(surface_profile_expected(FiberProfile({3, 2})));
    CHECK_FALSE(surface_profile_expected(FiberProfile({2, 2, 2})));
}

TEST_CASE("random lines on a smooth quartic surface satisfy the bound") {
    const Hypersurface fermat4 = surf("x0^4 + x1^4 + x2^4 + x3^4");
    const Center z{pt({1, 2, 3, 5})};
    check_center(fermat4, z);
    DetRng rng(606);
    int tested = 0;
    while (tested < 50) {
        std::vector<Rat> w{Rat(rng.in_range(-9, 9)), Rat(rng.in_range(-9, 9)),
                           Rat(rng.in_range(-9, 9)), Rat(rng.in_range(-9, 9))};
        if (std::all_of(w.begin(), w.end(), [](const Rat& c) { return c == 0; })) continue;
        if (proportional(z.coords, w)) continue;
        ++tested;
        CHECK(singular_count_on_line(fermat4, z, w) == 0);
        CHECK(multiplicity_bound(fiber_profile(fermat4, z, w), 2));
    }
}

}  // TEST_SUITE
