#pragma once

#include "hilbproj/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hilbproj {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial is the empty coefficient vector (degree() == -1);
// otherwise the last stored coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);
    static UniPoly constant(const Rat& c);
    static UniPoly monomial(int degree, const Rat& c);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& leading() const;
    Rat coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat operator()(const Rat& x) const;

    UniPoly operator-() const;
    UniPoly scaled(const Rat& c) const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    UniPoly derivative() const;
    UniPoly monic() const;  // input must be nonzero

    std::string str(const std::string& var = "t") const;

private:
    void normalize();
    std::vector<Rat> coeffs_;
};

// Quotient/remainder over Q; g must be nonzero.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& f, const UniPoly& g);
// Division that must be exact; throws InternalError on a nonzero remainder.
UniPoly exact_div(const UniPoly& f, const UniPoly& g);

// Monic gcd via a primitive pseudo-remainder sequence over Z.
UniPoly gcd(const UniPoly& f, const UniPoly& g);

// Monic product of the distinct irreducible factors of f (f nonzero).
UniPoly radical(const UniPoly& f);

// Yun decomposition in characteristic 0: f = lc(f) * prod factor^mult with
// monic, squarefree, pairwise coprime factors and strictly increasing
// multiplicities. Degree-zero factors are dropped.
std::vector<std::pair<int, UniPoly>> squarefree_decomposition(const UniPoly& f);

// Res(f, g) = lc(g)^deg(f) * prod f(beta) over the roots beta of g, computed
// by fraction-free subresultant elimination on cleared-denominator inputs.
Rat resultant(const UniPoly& f, const UniPoly& g);

// lc(f)^(2d-2) * prod_{i<j} (r_i - r_j)^2; equals 1 for degree <= 1.
Rat discriminant(const UniPoly& f);

// All roots of f in Q, each verified by exact evaluation, sorted increasing.
// Complete: squarefree radical -> roots mod p -> Hensel lift -> rational
// reconstruction, so no divisor enumeration of huge coefficients is needed.
std::vector<Rat> rational_roots(const UniPoly& f);

// Unique polynomial of degree < points.size() through the given nodes;
// abscissae must be pairwise distinct.
UniPoly interpolate(const std::vector<std::pair<Rat, Rat>>& points);

}  // namespace hilbproj
