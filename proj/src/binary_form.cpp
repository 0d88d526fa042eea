#include "hilbproj/binary_form.hpp"

#include "hilbproj/errors.hpp"

#include <algorithm>

namespace hilbproj {

BinaryForm::BinaryForm(int degree, std::vector<Rat> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree_ < 0) throw DomainError("binary form of negative degree");
    if (coeffs_.size() != static_cast<std::size_t>(degree_) + 1)
        throw DomainError("binary form needs degree+1 coefficients");
    if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; }))
        throw DomainError("binary form must not vanish identically");
}

const Rat& BinaryForm::coeff(int j) const {
    if (j < 0 || j > degree_) throw DomainError("binary form coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(j)];
}

Rat BinaryForm::operator()(const Rat& s, const Rat& t) const {
    std::vector<Rat> spows(static_cast<std::size_t>(degree_) + 1);
    Rat spow(1);
    for (int i = 0; i <= degree_; ++i) {
        spows[static_cast<std::size_t>(i)] = spow;
        spow *= s;
    }
    Rat result(0), tpow(1);
    for (int j = 0; j <= degree_; ++j) {
        result += coeffs_[static_cast<std::size_t>(j)] *
                  spows[static_cast<std::size_t>(degree_ - j)] * tpow;
        tpow *= t;
    }
    return result;
}

UniPoly BinaryForm::dehomogenized() const { return UniPoly(coeffs_); }

UniPoly BinaryForm::reversed() const {
    std::vector<Rat> cs(coeffs_.rbegin(), coeffs_.rend());
    return UniPoly(std::move(cs));
}

int BinaryForm::mult_at_s_zero() const { return degree_ - dehomogenized().degree(); }

bool BinaryForm::is_squarefree() const {
    if (mult_at_s_zero() > 1) return false;
    const UniPoly u = dehomogenized();
    if (u.degree() <= 0) return true;
    return gcd(u, u.derivative()).degree() == 0;
}

int BinaryForm::distinct_root_count() const {
    const UniPoly u = dehomogenized();
    int count = (mult_at_s_zero() > 0) ? 1 : 0;
    if (u.degree() > 0) count += radical(u).degree();
    return count;
}

BinaryForm BinaryForm::scaled(const Rat& c) const {
    if (c == 0) throw DomainError("scaling a binary form by zero");
    std::vector<Rat> cs(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i] = coeffs_[i] * c;
    return BinaryForm(degree_, std::move(cs));
}

}  // namespace hilbproj
