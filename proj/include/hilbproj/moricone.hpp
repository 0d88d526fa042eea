#pragma once

#include "hilbproj/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace hilbproj {

// Parameters of the three-Picard-rank family: blow-up of a P^1-bundle over a
// Fano Z of index i_Z, along the degree-d divisor traced on a section.
// delta is the minimal degree O_Z(1).C_Z. The Z = P^(n-1) specialization has
// i_Z = n, delta = 1. a > d is legal (the cone case split covers a >= d).
struct FamilyParams {
    int n = 3;
    int a = 0;
    int d = 1;
    int i_Z = 3;
    int delta = 1;
};
void validate(const FamilyParams& p);

// Curve classes in the ordered basis ([F], [Fhat], [C_G]); divisor classes in
// ([E], [Ehat], [G]). The pairing matrix has determinant d*delta != 0, so
// both triples are genuine bases and everything else is derived from them.
struct CurveClass {
    std::string name;
    std::array<Rat, 3> coords;
};

struct DivisorClass {
    std::string name;
    std::array<Rat, 3> coords;
};

Rat pairing(const DivisorClass& div, const CurveClass& curve, const FamilyParams& p);

struct ClassTable {
    DivisorClass E, Ehat, G, Ghat, minus_K;
    CurveClass F, Fhat, C_G, C_Ghat, V, W_conic;
};

// Basis classes plus the derived ones:
//   C_Ghat = C_G + a*delta*Fhat - (d-a)*delta*F,
//   Ghat   = G + (a/d)*Ehat - ((d-a)/d)*E,
//   -K_X   = the unique divisor pairing to (1, 1, (i_Z - a)*delta),
//   V      = C_G + a*delta*Fhat,    W_conic = F + Fhat.
// minus_K is solved from the 3x3 system and re-verified by pairing.
ClassTable class_constants(const FamilyParams& p);

struct ExtremalRay {
    CurveClass curve;
    std::string locus;
};

struct ConeReport {
    std::vector<ExtremalRay> rays;
    bool simplicial = false;
    bool fano = false;
};

// a = 0: rays {F, Fhat, C_Ghat}, loci {E, Ehat, Ghat}. a >= d: rays
// {F, Fhat, C_G}, loci {E, Ehat, G}. 0 < a < d: all four rays,
// non-simplicial.
ConeReport extremal_rays(const FamilyParams& p);

// a <= i_Z - 1 and d - a <= i_Z - 1; cross-checked against strict positivity
// of -K_X on every extremal ray (InternalError on mismatch).
bool is_fano(const FamilyParams& p);

struct SwapEntry {
    std::string divisor, curve;
    Rat lhs, rhs;
    bool ok = false;
};

struct SwapRecord {
    int a = 0, d = 0;
    std::vector<SwapEntry> entries;  // 5 divisors x 4 curve columns
    bool ok = false;
};

// The relabeling E<->Ehat, G<->Ghat, F<->Fhat, C_G<->C_Ghat identifies the
// pairing tables of a and d - a entry by entry. 0 <= a <= d required.
SwapRecord symmetry_swap(const FamilyParams& p);

struct MinDegreeVerdict {
    int sign = 0;  // sign of D.V - D.W_conic
    Rat V_degree, W_degree;
    bool guarantee_applies = false;  // a*delta >= 2 and (d-a)*delta >= 2
};

// Compares the degree of the Hilbert-scheme family V against the conic
// family W_conic under a divisor pairing strictly positively with every
// extremal ray. Positive whenever the guarantee range applies.
MinDegreeVerdict min_degree_comparison(const FamilyParams& p, const DivisorClass& D);

struct FanoThreefold {
    int d = 0, a = 0;
    bool tau_iso = false;
};

// All (d, a) with the family Fano for n = 3 (i_Z = 3, delta = 1), each
// flagged with tau_is_isomorphism. Exactly eight pairs; (4, 2) is the unique
// non-isomorphism.
std::vector<FanoThreefold> classify_fano_threefolds();

}  // namespace hilbproj
