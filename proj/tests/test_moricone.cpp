#include "hilbproj/errors.hpp"
#include "hilbproj/moricone.hpp"
#include "hilbproj/rng.hpp"

#include <doctest.h>

using namespace hilbproj;

namespace {

FamilyParams random_params(DetRng& rng) {
    FamilyParams p;
    p.n = static_cast<int>(3 + rng.below(8));
    p.d = static_cast<int>(1 + rng.below(10));
    p.a = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.d) + 4));  // allows a > d
    p.i_Z = static_cast<int>(1 + rng.below(10));
    p.delta = static_cast<int>(1 + rng.below(4));
    return p;
}

}  // namespace

TEST_SUITE("moricone") {

TEST_CASE("basis pairings from the intersection table") {
    const FamilyParams p{3, 2, 4, 3, 1};
    const ClassTable t = class_constants(p);
    CHECK(pairing(t.E, t.F, p) == -1);
    CHECK(pairing(t.Ehat, t.C_G, p) == 4);   // d*delta
    CHECK(pairing(t.G, t.C_G, p) == -2);     // -a*delta
    CHECK(pairing(t.Ghat, t.F, p) == 1);
    CHECK(pairing(t.minus_K, t.V, p) == 3);  // i_Z*delta
}

TEST_CASE("full table reproduction at (a,d,delta,i_Z) = (2,4,1,3)") {
    const FamilyParams p{3, 2, 4, 3, 1};
    const ClassTable t = class_constants(p);
    const std::vector<const DivisorClass*> rows{&t.E, &t.Ehat, &t.G, &t.Ghat, &t.minus_K};
    const std::vector<const CurveClass*> cols{&t.F, &t.Fhat, &t.C_G, &t.C_Ghat, &t.V};
    const long expected[5][5] = {
        {-1, 1, 0, 4, 2},
        {1, -1, 4, 0, 2},
        {0, 1, -2, 0, 0},
        {1, 0, 0, -2, 0},
        {1, 1, 1, 1, 3},
    };
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            CHECK(pairing(*rows[static_cast<std::size_t>(i)], *cols[static_cast<std::size_t>(j)], p) ==
                  expected[i][j]);
}

TEST_CASE("the whole symbolic table at general parameters") {
    DetRng rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const FamilyParams p = random_params(rng);
        const ClassTable t = class_constants(p);
        const Rat dl(p.delta);
        const Rat a(p.a), d(p.d), iz(p.i_Z);
        CHECK(pairing(t.E, t.F, p) == -1);
        CHECK(pairing(t.E, t.Fhat, p) == 1);
        CHECK(pairing(t.E, t.C_G, p) == 0);
        CHECK(pairing(t.E, t.C_Ghat, p) == d * dl);
        CHECK(pairing(t.Ehat, t.F, p) == 1);
        CHECK(pairing(t.Ehat, t.Fhat, p) == -1);
        CHECK(pairing(t.Ehat, t.C_G, p) == d * dl);
        CHECK(pairing(t.Ehat, t.C_Ghat, p) == 0);
        CHECK(pairing(t.G, t.F, p) == 0);
        CHECK(pairing(t.G, t.Fhat, p) == 1);
        CHECK(pairing(t.G, t.C_G, p) == -a * dl);
        CHECK(pairing(t.G, t.C_Ghat, p) == 0);
        CHECK(pairing(t.Ghat, t.F, p) == 1);
        CHECK(pairing(t.Ghat, t.Fhat, p) == 0);
        CHECK(pairing(t.Ghat, t.C_G, p) == 0);
        CHECK(pairing(t.Ghat, t.C_Ghat, p) == -(d - a) * dl);
        CHECK(pairing(t.minus_K, t.F, p) == 1);
        CHECK(pairing(t.minus_K, t.Fhat, p) == 1);
        CHECK(pairing(t.minus_K, t.C_G, p) == (iz - a) * dl);
        CHECK(pairing(t.minus_K, t.C_Ghat, p) == (iz - (d - a)) * dl);
        // Last column: the family class V = C_G + a*delta*Fhat.
        CHECK(pairing(t.E, t.V, p) == a * dl);
        CHECK(pairing(t.Ehat, t.V, p) == (d - a) * dl);
        CHECK(pairing(t.G, t.V, p) == 0);
        CHECK(pairing(t.Ghat, t.V, p) == 0);
        CHECK(pairing(t.minus_K, t.V, p) == iz * dl);
    }
}

TEST_CASE("anticanonical coordinates solved from the table") {
    DetRng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const FamilyParams p = random_params(rng);
        const ClassTable t = class_constants(p);
        Rat e0{Int(p.i_Z + p.a - p.d), Int(p.d)};
        Rat e1{Int(p.i_Z + p.a), Int(p.d)};
        e0.canonicalize();
        e1.canonicalize();
        CHECK(t.minus_K.coords[0] == e0);
        CHECK(t.minus_K.coords[1] == e1);
        CHECK(t.minus_K.coords[2] == 2);
    }
}

TEST_CASE("numerical-equivalence relations hold for every divisor and curve") {
    DetRng rng(31337);
    for (int trial = 0; trial < 1000; ++trial) {
        const FamilyParams p = random_params(rng);
        const ClassTable t = class_constants(p);
        const Rat dl(p.delta);
        const std::vector<const DivisorClass*> divisors{&t.E, &t.Ehat, &t.G, &t.Ghat,
                                                        &t.minus_K};
        const std::vector<const CurveClass*> curves{&t.F, &t.Fhat, &t.C_G, &t.C_Ghat, &t.V};
        // C_G + a*delta*Fhat == C_Ghat + (d-a)*delta*F against every divisor.
        for (const DivisorClass* D : divisors) {
            const Rat lhs = pairing(*D, t.C_G, p) + Rat(p.a) * dl * pairing(*D, t.Fhat, p);
            const Rat rhs =
                pairing(*D, t.C_Ghat, p) + Rat(p.d - p.a) * dl * pairing(*D, t.F, p);
            CHECK(lhs == rhs);
        }
        // d*G + a*Ehat == d*Ghat + (d-a)*E against every curve.
        for (const CurveClass* C : curves) {
            const Rat lhs = Rat(p.d) * pairing(t.G, *C, p) + Rat(p.a) * pairing(t.Ehat, *C, p);
            const Rat rhs =
                Rat(p.d) * pairing(t.Ghat, *C, p) + Rat(p.d - p.a) * pairing(t.E, *C, p);
            CHECK(lhs == rhs);
        }
        // Fano criterion against brute ray positivity (is_fano cross-checks
        // internally and throws on any mismatch).
        const bool fano = is_fano(p);
        const bool criterion = p.a <= p.i_Z - 1 && p.d - p.a <= p.i_Z - 1;
        CHECK(fano == criterion);
    }
}

TEST_CASE("extremal ray case split") {
    const ConeReport middle = extremal_rays(FamilyParams{3, 2, 4, 3, 1});
    REQUIRE(middle.rays.size() == 4);
    CHECK_FALSE(middle.simplicial);
    CHECK(middle.rays[2].curve.name == "C_G");
    CHECK(middle.rays[2].locus == "G");
    CHECK(middle.rays[3].curve.name == "C_Ghat");
    CHECK(middle.rays[3].locus == "Ghat");

    const ConeReport zero = extremal_rays(FamilyParams{4, 0, 3, 4, 1});
    REQUIRE(zero.rays.size() == 3);
    CHECK(zero.simplicial);
    CHECK(zero.rays[2].curve.name == "C_Ghat");
    CHECK(zero.rays[2].locus == "Ghat");

    const ConeReport big = extremal_rays(FamilyParams{4, 5, 3, 4, 1});
    REQUIRE(big.rays.size() == 3);
    CHECK(big.simplicial);
    CHECK(big.rays[2].curve.name == "C_G");
    CHECK(big.rays[2].locus == "G");
}

TEST_CASE("Fano criterion on pinned cases") {
    CHECK(is_fano(FamilyParams{3, 2, 4, 3, 1}));
    CHECK_FALSE(is_fano(FamilyParams{3, 3, 4, 3, 1}));
    for (int n = 3; n <= 8; ++n) CHECK(is_fano(FamilyParams{n, 0, 1, n, 1}));
}

TEST_CASE("the a <-> d-a relabeling preserves the table") {
    for (int d = 1; d <= 20; ++d) {
        for (int a = 0; a <= d; ++a) {
            const SwapRecord record = symmetry_swap(FamilyParams{5, a, d, 5, 1});
            CHECK(record.ok);
            CHECK(record.entries.size() == 20);
            const SwapRecord record2 = symmetry_swap(FamilyParams{4, a, d, 7, 2});
            CHECK(record2.ok);
        }
    }
    // Self-symmetric case.
    CHECK(symmetry_swap(FamilyParams{3, 2, 4, 3, 1}).ok);
    CHECK_THROWS_AS(symmetry_swap(FamilyParams{3, 5, 4, 3, 1}), DomainError);
}

TEST_CASE("the family degree exceeds the conic degree on ample-like divisors") {
    const FamilyParams fano{3, 2, 4, 3, 1};
    const ClassTable t = class_constants(fano);
    const auto verdict = min_degree_comparison(fano, t.minus_K);
    CHECK(verdict.sign == 1);
    CHECK(verdict.V_degree == 3);
    CHECK(verdict.W_degree == 2);
    CHECK(verdict.guarantee_applies);

    // Outside the guarantee range no assertion is made; the comparison runs.
    const FamilyParams small{5, 1, 2, 5, 1};
    const auto loose = min_degree_comparison(small, class_constants(small).minus_K);
    CHECK_FALSE(loose.guarantee_applies);

    // A divisor negative on a ray is refused by name.
    CHECK_THROWS_AS(min_degree_comparison(fano, t.G), DomainError);
}

TEST_CASE("random positive divisors in the guarantee range") {
    DetRng rng(424242);
    int accepted = 0;
    while (accepted < 100) {
        FamilyParams p = random_params(rng);
        if (p.a > p.d) p.a = p.d - p.a > 0 ? p.d - p.a : p.a % (p.d + 1);
        if (static_cast<long>(p.a) * p.delta < 2) continue;
        if (static_cast<long>(p.d - p.a) * p.delta < 2) continue;
        const ClassTable t = class_constants(p);
        // Perturb the anticanonical class and keep the perturbation whenever
        // it stays strictly positive on all rays.
        DivisorClass D = t.minus_K;
        D.name = "D";
        for (auto& c : D.coords) c += Rat(rng.in_range(-2, 2)) / Rat(3);
        const ConeReport cone = extremal_rays(p);
        bool positive = true;
        for (const auto& ray : cone.rays)
            if (pairing(D, ray.curve, p) <= 0) positive = false;
        if (!positive) continue;
        ++accepted;
        CHECK(min_degree_comparison(p, D).sign == 1);
    }
}

TEST_CASE("Fano threefold classification") {
    const auto cases = classify_fano_threefolds();
    REQUIRE(cases.size() == 8);
    const std::vector<std::pair<int, int>> expected{{1, 0}, {1, 1}, {2, 0}, {2, 1},
                                                    {2, 2}, {3, 1}, {3, 2}, {4, 2}};
    int non_iso = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        CHECK(cases[i].d == expected[i].first);
        CHECK(cases[i].a == expected[i].second);
        if (!cases[i].tau_iso) {
            ++non_iso;
            CHECK(cases[i].d == 4);
            CHECK(cases[i].a == 2);
        }
    }
    CHECK(non_iso == 1);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate(FamilyParams{2, 0, 1, 3, 1}), DomainError);
    CHECK_THROWS_AS(validate(FamilyParams{3, -1, 1, 3, 1}), DomainError);
    CHECK_THROWS_AS(validate(FamilyParams{3, 0, 0, 3, 1}), DomainError);
    CHECK_THROWS_AS(validate(FamilyParams{3, 0, 1, 0, 1}), DomainError);
    CHECK_THROWS_AS(validate(FamilyParams{3, 0, 1, 3, 0}), DomainError);
}

}  // TEST_SUITE
