#include "hilbproj/moricone.hpp"

#include "hilbproj/errors.hpp"
#include "hilbproj/genus.hpp"

#include <array>

namespace hilbproj {

void validate(const FamilyParams& p) {
    if (p.n < 3) throw DomainError("need n >= 3");
    if (p.a < 0) throw DomainError("need a >= 0");
    if (p.d < 1) throw DomainError("need d >= 1");
    if (p.i_Z < 1) throw DomainError("need i_Z >= 1");
    if (p.delta < 1) throw DomainError("need delta >= 1");
}

namespace {

// Pairing of the divisor basis (E, Ehat, G) against the curve basis
// (F, Fhat, C_G); determinant d*delta != 0.
std::array<std::array<Rat, 3>, 3> pairing_matrix(const FamilyParams& p) {
    const Rat dd(static_cast<long>(p.d) * p.delta);
    const Rat ad(static_cast<long>(p.a) * p.delta);
    return {{{Rat(-1), Rat(1), Rat(0)}, {Rat(1), Rat(-1), dd}, {Rat(0), Rat(1), -ad}}};
}

}  // namespace

Rat pairing(const DivisorClass& div, const CurveClass& curve, const FamilyParams& p) {
    validate(p);
    const auto m = pairing_matrix(p);
    Rat acc(0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            acc += div.coords[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                   curve.coords[static_cast<std::size_t>(j)];
    return acc;
}

ClassTable class_constants(const FamilyParams& p) {
    validate(p);
    ClassTable t;
    t.F = {"F", {Rat(1), Rat(0), Rat(0)}};
    t.Fhat = {"Fhat", {Rat(0), Rat(1), Rat(0)}};
    t.C_G = {"C_G", {Rat(0), Rat(0), Rat(1)}};
    const Rat ad(static_cast<long>(p.a) * p.delta);
    const Rat dad(static_cast<long>(p.d - p.a) * p.delta);
    t.C_Ghat = {"C_Ghat", {-dad, ad, Rat(1)}};
    t.V = {"V", {Rat(0), ad, Rat(1)}};
    t.W_conic = {"W", {Rat(1), Rat(1), Rat(0)}};

    t.E = {"E", {Rat(1), Rat(0), Rat(0)}};
    t.Ehat = {"Ehat", {Rat(0), Rat(1), Rat(0)}};
    t.G = {"G", {Rat(0), Rat(0), Rat(1)}};
    // d*Ghat = d*G + a*Ehat - (d-a)*E.
    Rat ghat0(Int(-(p.d - p.a)), Int(p.d));
    Rat ghat1(Int(p.a), Int(p.d));
    ghat0.canonicalize();
    ghat1.canonicalize();
    t.Ghat = {"Ghat", {ghat0, ghat1, Rat(1)}};

    // -K_X is the unique divisor with pairings (1, 1, (i_Z - a)*delta)
    // against (F, Fhat, C_G); solve the 3x3 system and re-verify.
    const auto m = pairing_matrix(p);
    std::array<Rat, 3> rhs{Rat(1), Rat(1), Rat(static_cast<long>(p.i_Z - p.a) * p.delta)};
    // Solve x^T m = rhs, i.e. m^T x = rhs, by Gaussian elimination.
    std::array<std::array<Rat, 4>, 3> aug;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        aug[static_cast<std::size_t>(i)][3] = rhs[static_cast<std::size_t>(i)];
    }
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        while (pivot < 3 && aug[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)] == 0) ++pivot;
        if (pivot == 3) throw InternalError("singular pairing matrix (impossible for d*delta != 0)");
        std::swap(aug[static_cast<std::size_t>(pivot)], aug[static_cast<std::size_t>(col)]);
        const Rat inv = Rat(1) / aug[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int j = col; j < 4; ++j) aug[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] *= inv;
        for (int i = 0; i < 3; ++i) {
            if (i == col) continue;
            const Rat f = aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int j = col; j < 4; ++j)
                aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * aug[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
        }
    }
    t.minus_K = {"-K", {aug[0][3], aug[1][3], aug[2][3]}};

    if (pairing(t.minus_K, t.F, p) != 1 || pairing(t.minus_K, t.Fhat, p) != 1 ||
        pairing(t.minus_K, t.C_G, p) != rhs[2])
        throw InternalError("anticanonical class failed its re-pairing check");
    return t;
}

ConeReport extremal_rays(const FamilyParams& p) {
    validate(p);
    const ClassTable t = class_constants(p);
    ConeReport report;
    if (p.a == 0) {
        report.rays = {{t.F, "E"}, {t.Fhat, "Ehat"}, {t.C_Ghat, "Ghat"}};
    } else if (p.a >= p.d) {
        report.rays = {{t.F, "E"}, {t.Fhat, "Ehat"}, {t.C_G, "G"}};
    } else {
        report.rays = {{t.F, "E"}, {t.Fhat, "Ehat"}, {t.C_G, "G"}, {t.C_Ghat, "Ghat"}};
    }
    report.simplicial = report.rays.size() == 3;
    report.fano = is_fano(p);
    return report;
}

bool is_fano(const FamilyParams& p) {
    validate(p);
    const bool criterion = (p.a <= p.i_Z - 1) && (p.d - p.a <= p.i_Z - 1);
    // Cross-check: -K_X strictly positive on every extremal ray.
    const ClassTable t = class_constants(p);
    std::vector<CurveClass> rays;
    if (p.a == 0) rays = {t.F, t.Fhat, t.C_Ghat};
    else if (p.a >= p.d) rays = {t.F, t.Fhat, t.C_G};
    else rays = {t.F, t.Fhat, t.C_G, t.C_Ghat};
    bool brute = true;
    for (const CurveClass& r : rays)
        if (pairing(t.minus_K, r, p) <= 0) brute = false;
    if (brute != criterion)
        throw InternalError("Fano criterion disagrees with ray positivity");
    return criterion;
}

SwapRecord symmetry_swap(const FamilyParams& p) {
    validate(p);
    if (p.a > p.d) throw DomainError("the symmetry swap needs 0 <= a <= d");
    FamilyParams q = p;
    q.a = p.d - p.a;
    const ClassTable tp = class_constants(p);
    const ClassTable tq = class_constants(q);

    const std::array<const DivisorClass ClassTable::*, 5> divs{
        &ClassTable::E, &ClassTable::Ehat, &ClassTable::G, &ClassTable::Ghat,
        &ClassTable::minus_K};
    const std::array<const DivisorClass ClassTable::*, 5> divs_swapped{
        &ClassTable::Ehat, &ClassTable::E, &ClassTable::Ghat, &ClassTable::G,
        &ClassTable::minus_K};
    const std::array<const CurveClass ClassTable::*, 4> curves{
        &ClassTable::F, &ClassTable::Fhat, &ClassTable::C_G, &ClassTable::C_Ghat};
    const std::array<const CurveClass ClassTable::*, 4> curves_swapped{
        &ClassTable::Fhat, &ClassTable::F, &ClassTable::C_Ghat, &ClassTable::C_G};

    SwapRecord record;
    record.a = p.a;
    record.d = p.d;
    record.ok = true;
    for (std::size_t i = 0; i < divs.size(); ++i) {
        for (std::size_t j = 0; j < curves.size(); ++j) {
            SwapEntry entry;
            entry.divisor = (tp.*divs[i]).name;
            entry.curve = (tp.*curves[j]).name;
            entry.lhs = pairing(tp.*divs[i], tp.*curves[j], p);
            entry.rhs = pairing(tq.*divs_swapped[i], tq.*curves_swapped[j], q);
            entry.ok = entry.lhs == entry.rhs;
            if (!entry.ok) record.ok = false;
            record.entries.push_back(std::move(entry));
        }
    }
    if (!record.ok) throw InternalError("the a <-> d-a relabeling broke the pairing table");
    return record;
}

MinDegreeVerdict min_degree_comparison(const FamilyParams& p, const DivisorClass& D) {
    validate(p);
    const ClassTable t = class_constants(p);
    const ConeReport cone = extremal_rays(p);
    for (const ExtremalRay& ray : cone.rays) {
        if (pairing(D, ray.curve, p) <= 0)
            throw DomainError("not-positive-on-ray",
                              "the divisor is not strictly positive on the extremal ray " +
                                  ray.curve.name + " (locus " + ray.locus + ")");
    }
    MinDegreeVerdict verdict;
    verdict.V_degree = pairing(D, t.V, p);
    verdict.W_degree = pairing(D, t.W_conic, p);
    const Rat diff = verdict.V_degree - verdict.W_degree;
    verdict.sign = diff > 0 ? 1 : (diff < 0 ? -1 : 0);
    verdict.guarantee_applies =
        (static_cast<long>(p.a) * p.delta >= 2) && (static_cast<long>(p.d - p.a) * p.delta >= 2);
    if (verdict.guarantee_applies && verdict.sign <= 0)
        throw InternalError("the family degree must exceed the conic degree in the guarantee range");
    return verdict;
}

std::vector<FanoThreefold> classify_fano_threefolds() {
    std::vector<FanoThreefold> out;
    // The criterion a <= i_Z - 1, d - a <= i_Z - 1 with i_Z = 3 forces
    // d <= 4, so the scan below is exhaustive.
    for (int d = 1; d <= 4; ++d) {
        for (int a = 0; a <= d; ++a) {
            FamilyParams p{3, a, d, 3, 1};
            if (!is_fano(p)) continue;
            out.push_back(FanoThreefold{d, a, tau_is_isomorphism(d, a)});
        }
    }
    return out;
}

}  // namespace hilbproj
