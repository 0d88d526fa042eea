#include "hilbproj/homform.hpp"

#include "hilbproj/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hilbproj {

SparsePoly::SparsePoly(int num_vars) : num_vars_(num_vars) {
    if (num_vars_ < 1) throw DomainError("polynomial needs at least one variable");
}

int SparsePoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool SparsePoly::is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        const int s = std::accumulate(e.begin(), e.end(), 0);
        if (d == -1) d = s;
        else if (s != d) return false;
    }
    return true;
}

void SparsePoly::add_term(const ExponentVec& exponents, const Rat& c) {
    if (static_cast<int>(exponents.size()) != num_vars_)
        throw DomainError("exponent vector length does not match the variable count");
    for (int e : exponents)
        if (e < 0) throw DomainError("negative exponent");
    if (c == 0) return;
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        terms_.emplace(exponents, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat SparsePoly::operator()(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != num_vars_)
        throw DomainError("point dimension does not match the variable count");
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < num_vars_; ++i) {
            for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k)
                term *= point[static_cast<std::size_t>(i)];
        }
        acc += term;
    }
    return acc;
}

SparsePoly SparsePoly::partial(int var) const {
    if (var < 0 || var >= num_vars_) throw DomainError("variable index out of range");
    SparsePoly out(num_vars_);
    for (const auto& [e, c] : terms_) {
        const int ev = e[static_cast<std::size_t>(var)];
        if (ev == 0) continue;
        ExponentVec e2 = e;
        e2[static_cast<std::size_t>(var)] -= 1;
        out.add_term(e2, c * Rat(ev));
    }
    return out;
}

SparsePoly SparsePoly::scaled(const Rat& c) const {
    SparsePoly out(num_vars_);
    if (c == 0) return out;
    for (const auto& [e, coef] : terms_) out.add_term(e, coef * c);
    return out;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
    if (a.num_vars() != b.num_vars())
        throw DomainError("adding polynomials in different variable counts");
    SparsePoly out = a;
    for (const auto& [e, c] : b.terms()) out.add_term(e, c);
    return out;
}

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        Rat ac = abs(c);
        bool printed = false;
        if (ac != 1) {
            out << to_string(ac);
            printed = true;
        }
        bool any_var = false;
        for (int i = 0; i < num_vars_; ++i) {
            const int ev = e[static_cast<std::size_t>(i)];
            if (ev == 0) continue;
            if (printed || any_var) out << "*";
            out << "x" << i;
            if (ev > 1) out << "^" << ev;
            any_var = true;
        }
        if (!any_var && ac == 1) out << "1";
    }
    return out.str();
}

HomogeneousForm::HomogeneousForm(SparsePoly p) : poly_(std::move(p)), degree_(0) {
    if (poly_.is_zero()) throw DomainError("a homogeneous form must be nonzero");
    if (!poly_.is_homogeneous())
        throw DomainError("not homogeneous: " + poly_.str());
    degree_ = poly_.total_degree();
}

HomogeneousForm HomogeneousForm::scaled(const Rat& c) const {
    if (c == 0) throw DomainError("scaling a form by zero");
    return HomogeneousForm(poly_.scaled(c));
}

bool proportional(const std::vector<Rat>& z, const std::vector<Rat>& w) {
    if (z.size() != w.size()) throw DomainError("points of different dimension");
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j)
            if (z[i] * w[j] - z[j] * w[i] != 0) return false;
    return true;
}

std::vector<Rat> restrict_line_coeffs(const SparsePoly& p, int degree,
                                      const std::vector<Rat>& z, const std::vector<Rat>& w) {
    if (static_cast<int>(z.size()) != p.num_vars() || z.size() != w.size())
        throw DomainError("point dimension does not match the variable count");
    std::vector<Rat> out(static_cast<std::size_t>(degree) + 1, Rat(0));
    for (const auto& [e, c] : p.terms()) {
        const int tot = std::accumulate(e.begin(), e.end(), 0);
        if (tot != degree)
            throw InternalError("restriction kernel needs a homogeneous input");
        // prod_i (z_i s + w_i t)^{e_i}, accumulated as coefficients in t.
        std::vector<Rat> cur{Rat(1)};
        for (int i = 0; i < p.num_vars(); ++i) {
            const int ei = e[static_cast<std::size_t>(i)];
            if (ei == 0) continue;
            std::vector<Rat> lin(static_cast<std::size_t>(ei) + 1);
            for (int j = 0; j <= ei; ++j) {
                Rat term(binomial(ei, j));
                for (int k = 0; k < ei - j; ++k) term *= z[static_cast<std::size_t>(i)];
                for (int k = 0; k < j; ++k) term *= w[static_cast<std::size_t>(i)];
                lin[static_cast<std::size_t>(j)] = term;
            }
            std::vector<Rat> next(cur.size() + static_cast<std::size_t>(ei), Rat(0));
            for (std::size_t a = 0; a < cur.size(); ++a) {
                if (cur[a] == 0) continue;
                for (std::size_t b = 0; b < lin.size(); ++b) next[a + b] += cur[a] * lin[b];
            }
            cur = std::move(next);
        }
        for (std::size_t j = 0; j < cur.size(); ++j) out[j] += c * cur[j];
    }
    return out;
}

BinaryForm restrict_to_line(const HomogeneousForm& f, const std::vector<Rat>& z,
                            const std::vector<Rat>& w) {
    const bool z_zero = std::all_of(z.begin(), z.end(), [](const Rat& c) { return c == 0; });
    const bool w_zero = std::all_of(w.begin(), w.end(), [](const Rat& c) { return c == 0; });
    if (z_zero || w_zero) throw DomainError("line points must be nonzero");
    if (proportional(z, w))
        throw DomainError("proportional-points", "z and w are proportional and span no line");
    auto coeffs = restrict_line_coeffs(f.poly(), f.degree(), z, w);
    if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& c) { return c == 0; }))
        throw DomainError("line-inside-hypersurface",
                          "the line lies inside the hypersurface; restriction vanishes");
    return BinaryForm(f.degree(), std::move(coeffs));
}

namespace {

class PolyParser {
public:
    PolyParser(const std::string& text, int min_vars) : s_(text), min_vars_(min_vars) {}

    SparsePoly parse() {
        // First pass collects terms against the largest variable index seen.
        skip_ws();
        if (eof()) throw ParseError(pos_, "<end>", "empty polynomial");
        parse_sum();
        skip_ws();
        if (!eof()) throw ParseError(pos_, token_here(), "unexpected trailing input");
        const int nvars = std::max(min_vars_, max_index_ + 1);
        SparsePoly out(std::max(nvars, 1));
        for (auto& [e, c] : raw_terms_) {
            ExponentVec full(static_cast<std::size_t>(std::max(nvars, 1)), 0);
            for (std::size_t i = 0; i < e.size(); ++i) full[i] = e[i];
            out.add_term(full, c);
        }
        return out;
    }

private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    std::string token_here() const {
        return eof() ? "<end>" : std::string(1, s_[pos_]);
    }

    Int scan_uint() {
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError(pos_, token_here(), "expected digits");
        return Int(s_.substr(start, pos_ - start), 10);
    }

    void parse_sum() {
        bool neg = false;
        skip_ws();
        if (!eof() && (peek() == '+' || peek() == '-')) {
            neg = (peek() == '-');
            ++pos_;
        }
        parse_term(neg);
        for (;;) {
            skip_ws();
            if (eof()) return;
            if (peek() == '+' || peek() == '-') {
                neg = (peek() == '-');
                ++pos_;
                parse_term(neg);
            } else {
                return;
            }
        }
    }

    void parse_term(bool negate) {
        Rat coeff(1);
        std::vector<int> expo;
        parse_factor(coeff, expo);
        for (;;) {
            skip_ws();
            if (!eof() && peek() == '*') {
                ++pos_;
                parse_factor(coeff, expo);
            } else {
                break;
            }
        }
        if (negate) coeff = -coeff;
        raw_terms_.emplace_back(std::move(expo), coeff);
    }

    int scan_exponent() {
        skip_ws();
        if (!eof() && peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            Int e = scan_uint();
            if (e > 512) throw ParseError(at, e.get_str(), "exponent too large");
            return static_cast<int>(e.get_si());
        }
        return 1;
    }

    void parse_factor(Rat& coeff, std::vector<int>& expo) {
        skip_ws();
        if (eof()) throw ParseError(pos_, "<end>", "expected coefficient or variable");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Int num = scan_uint();
            Int den(1);
            skip_ws();
            if (!eof() && peek() == '/') {
                ++pos_;
                skip_ws();
                std::size_t at = pos_;
                den = scan_uint();
                if (den == 0) throw ParseError(at, den.get_str(), "zero denominator");
            }
            Rat q(num, den);
            q.canonicalize();
            const int e = scan_exponent();
            Rat power(1);
            for (int k = 0; k < e; ++k) power *= q;
            coeff *= power;
            return;
        }
        if (peek() == 'x') {
            ++pos_;
            std::size_t at = pos_;
            Int idx = scan_uint();
            if (idx > 64) throw ParseError(at, idx.get_str(), "variable index too large");
            const int v = static_cast<int>(idx.get_si());
            max_index_ = std::max(max_index_, v);
            const int e = scan_exponent();
            if (expo.size() <= static_cast<std::size_t>(v)) expo.resize(static_cast<std::size_t>(v) + 1, 0);
            expo[static_cast<std::size_t>(v)] += e;
            return;
        }
        throw ParseError(pos_, token_here(), "expected coefficient or variable");
    }

    const std::string& s_;
    int min_vars_;
    std::size_t pos_ = 0;
    int max_index_ = -1;
    std::vector<std::pair<std::vector<int>, Rat>> raw_terms_;
};

}  // namespace

SparsePoly parse_polynomial(const std::string& text, int min_vars) {
    return PolyParser(text, min_vars).parse();
}

HomogeneousForm parse_homogeneous_form(const std::string& text, int min_vars) {
    return HomogeneousForm(parse_polynomial(text, min_vars));
}

}  // namespace hilbproj
