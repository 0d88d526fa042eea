#pragma once

#include "hilbproj/binary_form.hpp"
#include "hilbproj/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace hilbproj {

using ExponentVec = std::vector<int>;

// Sparse multivariate polynomial over Q. Intermediate representation for the
// parser and for partial derivatives (which may vanish or mix degrees).
class SparsePoly {
public:
    explicit SparsePoly(int num_vars);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    // Maximal total degree of a term; -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;
    const std::map<ExponentVec, Rat>& terms() const { return terms_; }

    // Adds c * x^e, merging with an existing term and dropping zeros.
    void add_term(const ExponentVec& exponents, const Rat& c);

    Rat operator()(const std::vector<Rat>& point) const;
    SparsePoly partial(int var) const;
    SparsePoly scaled(const Rat& c) const;
    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);

    std::string str() const;

private:
    int num_vars_;
    std::map<ExponentVec, Rat> terms_;
};

// Nonzero homogeneous form: every stored exponent vector sums to degree().
class HomogeneousForm {
public:
    explicit HomogeneousForm(SparsePoly p);

    int num_vars() const { return poly_.num_vars(); }
    int degree() const { return degree_; }
    const SparsePoly& poly() const { return poly_; }

    Rat operator()(const std::vector<Rat>& point) const { return poly_(point); }
    // Homogeneous of degree()-1, possibly zero; hence returned as SparsePoly.
    SparsePoly partial(int var) const { return poly_.partial(var); }
    HomogeneousForm scaled(const Rat& c) const;

    std::string str() const { return poly_.str(); }

private:
    SparsePoly poly_;
    int degree_;
};

// Coefficients of g(s,t) = p(s*z + t*w) for p homogeneous of the given
// degree (or zero). Length degree+1; all-zero exactly when the line lies in
// the zero locus of p. Shared kernel for the checked wrappers.
std::vector<Rat> restrict_line_coeffs(const SparsePoly& p, int degree,
                                      const std::vector<Rat>& z, const std::vector<Rat>& w);

// g(s,t) = F(s*z + t*w). Throws DomainError("line-inside-hypersurface") when
// the restriction vanishes identically, and rejects proportional z, w.
BinaryForm restrict_to_line(const HomogeneousForm& f, const std::vector<Rat>& z,
                            const std::vector<Rat>& w);

bool proportional(const std::vector<Rat>& z, const std::vector<Rat>& w);

// Polynomial text grammar: variables x0..xk, integer or num/den coefficients,
// operators + - * ^, whitespace insignificant. Errors carry byte offsets.
SparsePoly parse_polynomial(const std::string& text, int min_vars = 0);
HomogeneousForm parse_homogeneous_form(const std::string& text, int min_vars = 0);

}  // namespace hilbproj
