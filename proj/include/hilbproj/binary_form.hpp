#pragma once

#include "hilbproj/rational.hpp"
#include "hilbproj/unipoly.hpp"

#include <vector>

namespace hilbproj {

// Nonzero homogeneous binary form sum_j c_j s^(d-j) t^j, stored densely.
class BinaryForm {
public:
    BinaryForm(int degree, std::vector<Rat> coeffs);

    int degree() const { return degree_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& coeff(int j) const;

    Rat operator()(const Rat& s, const Rat& t) const;

    // P(1, t); never the zero polynomial.
    UniPoly dehomogenized() const;
    // sum_j c_j t^(d-j): the coefficient-reversed dehomogenization, with
    // leading coefficient c_0 = P(1, 0).
    UniPoly reversed() const;

    // Multiplicity of the projective root (0:1).
    int mult_at_s_zero() const;
    // True when no projective root (including (0:1)) is repeated.
    bool is_squarefree() const;
    // Number of distinct roots in P^1 over the algebraic closure.
    int distinct_root_count() const;

    BinaryForm scaled(const Rat& c) const;
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

private:
    int degree_;
    std::vector<Rat> coeffs_;
};

}  // namespace hilbproj
