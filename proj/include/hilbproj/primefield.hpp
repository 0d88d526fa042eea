#pragma once

#include "hilbproj/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hilbproj {

bool is_prime_u64(std::uint64_t n);
// Primes p with lo < p < hi.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

// Dense polynomial over F_p: coefficients in [0, p), lowest degree first, no
// trailing zeros. p must be prime and < 2^62 (products go through 128-bit
// intermediates).
class PrimeFieldPoly {
public:
    PrimeFieldPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::uint64_t coeff(int i) const;
    std::uint64_t leading() const;
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

    friend bool operator==(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
        return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
    }

private:
    std::uint64_t p_;
    std::vector<std::uint64_t> coeffs_;
};

PrimeFieldPoly pf_add(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
PrimeFieldPoly pf_sub(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
PrimeFieldPoly pf_mul(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
// Remainder of a by b; b nonzero.
PrimeFieldPoly pf_rem(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
PrimeFieldPoly pf_divexact(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
PrimeFieldPoly pf_gcd(const PrimeFieldPoly& a, const PrimeFieldPoly& b);  // monic
PrimeFieldPoly pf_derivative(const PrimeFieldPoly& f);
PrimeFieldPoly pf_monic(const PrimeFieldPoly& f);
// x^e mod f; f of degree >= 1.
PrimeFieldPoly pf_pow_x_mod(const Int& e, const PrimeFieldPoly& f);

// gcd(f, f') is constant. Requires p > deg f (else UnsupportedError).
bool pf_is_squarefree(const PrimeFieldPoly& f);

// Degrees of the irreducible factors of f (sorted increasing, one entry per
// factor). Returns nullopt when f is not squarefree: a discardable sample,
// not an error. Requires p > deg f.
std::optional<std::vector<int>> factor_degrees_mod_p(const PrimeFieldPoly& f);

// Yun decomposition over F_p; requires p > deg f (UnsupportedError below).
std::vector<std::pair<int, PrimeFieldPoly>> squarefree_decomposition(const PrimeFieldPoly& f);

// q mod p; nullopt when p divides the denominator.
std::optional<std::uint64_t> reduce_mod_p(const Rat& q, std::uint64_t p);

}  // namespace hilbproj
