#include "hilbproj/primefield.hpp"

#include "hilbproj/errors.hpp"

#include <algorithm>

namespace hilbproj {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) {
    if (a % p == 0) throw DomainError("inverting zero modulo p");
    return powmod(a % p, p - 2, p);
}

void trim(std::vector<u64>& cs) {
    while (!cs.empty() && cs.back() == 0) cs.pop_back();
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    // Deterministic Miller-Rabin for 64-bit inputs with the base set above.
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
    std::vector<u64> out;
    for (u64 n = lo + 1; n < hi; ++n)
        if (is_prime_u64(n)) out.push_back(n);
    return out;
}

PrimeFieldPoly::PrimeFieldPoly(u64 p, std::vector<u64> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
    if (p_ >= (1ull << 62)) throw DomainError("modulus too large");
    if (!is_prime_u64(p_)) throw DomainError("not-prime", "modulus must be prime");
    for (u64& c : coeffs_) c %= p_;
    trim(coeffs_);
}

u64 PrimeFieldPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

u64 PrimeFieldPoly::leading() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

namespace {

void check_same_field(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
    if (a.modulus() != b.modulus()) throw DomainError("mixed moduli");
}

PrimeFieldPoly make(u64 p, std::vector<u64> cs) { return PrimeFieldPoly(p, std::move(cs)); }

}  // namespace

PrimeFieldPoly pf_add(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
    check_same_field(a, b);
    const u64 p = a.modulus();
    std::vector<u64> cs(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = (a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i))) % p;
    return make(p, std::move(cs));
}

PrimeFieldPoly pf_sub(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
    check_same_field(a, b);
    const u64 p = a.modulus();
    std::vector<u64> cs(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < cs.size(); ++i)
        cs[i] = (a.coeff(static_cast<int>(i)) + p - b.coeff(static_cast<int>(i))) % p;
    return make(p, std::move(cs));
}

PrimeFieldPoly pf_mul(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
    check_same_field(a, b);
    const u64 p = a.modulus();
    if (a.is_zero() || b.is_zero()) return make(p, {});
    std::vector<u64> cs(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            cs[i + j] = (cs[i + j] + u128(a.coeffs()[i]) * b.coeffs()[j]) % p;
    }
    return make(p, std::move(cs));
}

PrimeFieldPoly pf_rem(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
    check_same_field(a, b);
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    const u64 p = a.modulus();
    std::vector<u64> r = a.coeffs();
    const auto& bc = b.coeffs();
    const u64 inv_lb = invmod(b.leading(), p);
    while (static_cast<int>(r.size()) - 1 >= b.degree() && !r.empty()) {
        const std::size_t shift = r.size() - bc.size();
        const u64 c = mulmod(r.back(), inv_lb, p);
        if (c != 0) {
            for (std::size_t j = 0; j < bc.size(); ++j) {
                u64 sub = mulmod(c, bc[j], p);
                r[shift + j] = (r[shift + j] + p - sub) % p;
            }
        }
        r.pop_back();
        trim(r);
    }
    return make(p, std::move(r));
}

PrimeFieldPoly pf_divexact(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
    check_same_field(a, b);
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    const u64 p = a.modulus();
    if (a.is_zero()) return make(p, {});
    if (a.degree() < b.degree()) throw InternalError("inexact polynomial division over F_p");
    std::vector<u64> r = a.coeffs();
    std::vector<u64> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
    const auto& bc = b.coeffs();
    const u64 inv_lb = invmod(b.leading(), p);
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
        const u64 c = mulmod(r[static_cast<std::size_t>(i + b.degree())], inv_lb, p);
        q[static_cast<std::size_t>(i)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= b.degree(); ++j) {
            u64 sub = mulmod(c, bc[static_cast<std::size_t>(j)], p);
            auto& slot = r[static_cast<std::size_t>(i + j)];
            slot = (slot + p - sub) % p;
        }
    }
    if (std::any_of(r.begin(), r.end(), [](u64 c) { return c != 0; }))
        throw InternalError("inexact polynomial division over F_p");
    return make(p, std::move(q));
}

PrimeFieldPoly pf_gcd(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
    check_same_field(a, b);
    PrimeFieldPoly x = a, y = b;
    while (!y.is_zero()) {
        PrimeFieldPoly r = pf_rem(x, y);
        x = y;
        y = r;
    }
    if (x.is_zero()) throw DomainError("gcd of two zero polynomials");
    return pf_monic(x);
}

PrimeFieldPoly pf_derivative(const PrimeFieldPoly& f) {
    const u64 p = f.modulus();
    if (f.coeffs().size() <= 1) return make(p, {});
    std::vector<u64> cs(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i)
        cs[i - 1] = mulmod(f.coeffs()[i], i % p, p);
    return make(p, std::move(cs));
}

PrimeFieldPoly pf_monic(const PrimeFieldPoly& f) {
    if (f.is_zero()) throw DomainError("monic form of the zero polynomial");
    const u64 p = f.modulus();
    const u64 inv = invmod(f.leading(), p);
    std::vector<u64> cs = f.coeffs();
    for (u64& c : cs) c = mulmod(c, inv, p);
    return make(p, std::move(cs));
}

PrimeFieldPoly pf_pow_x_mod(const Int& e, const PrimeFieldPoly& f) {
    if (f.degree() < 1) throw DomainError("modulus polynomial must have positive degree");
    const u64 p = f.modulus();
    PrimeFieldPoly base = pf_rem(make(p, {0, 1}), f);
    PrimeFieldPoly acc = make(p, {1});
    Int exp = e;
    if (exp < 0) throw DomainError("negative exponent");
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) acc = pf_rem(pf_mul(acc, base), f);
        base = pf_rem(pf_mul(base, base), f);
        exp >>= 1;
    }
    return acc;
}

namespace {

void require_large_characteristic(const PrimeFieldPoly& f) {
    if (f.is_zero()) throw DomainError("zero polynomial");
    if (Int(static_cast<unsigned long>(f.modulus())) <= f.degree())
        throw UnsupportedError("unsupported-modulus",
                               "modulus must exceed the polynomial degree");
}

}  // namespace

bool pf_is_squarefree(const PrimeFieldPoly& f) {
    require_large_characteristic(f);
    if (f.degree() == 0) return true;
    return pf_gcd(f, pf_derivative(f)).degree() == 0;
}

std::optional<std::vector<int>> factor_degrees_mod_p(const PrimeFieldPoly& f) {
    require_large_characteristic(f);
    if (f.degree() == 0) return std::vector<int>{};
    if (!pf_is_squarefree(f)) return std::nullopt;  // discardable sample
    const u64 p = f.modulus();
    PrimeFieldPoly star = pf_monic(f);
    // Distinct-degree split: gcd with x^(p^i) - x collects the factors of
    // degree exactly i once the smaller ones are removed.
    PrimeFieldPoly h = pf_rem(make(p, {0, 1}), star);
    std::vector<int> degrees;
    PrimeFieldPoly rem = star;
    int i = 0;
    while (rem.degree() > 0) {
        ++i;
        if (2 * i > rem.degree()) {
            degrees.push_back(rem.degree());
            break;
        }
        // h = x^(p^i) mod f, advanced one Frobenius power per round.
        {
            PrimeFieldPoly acc = make(p, {1});
            PrimeFieldPoly base = h;
            u64 e = p;
            while (e) {
                if (e & 1) acc = pf_rem(pf_mul(acc, base), star);
                base = pf_rem(pf_mul(base, base), star);
                e >>= 1;
            }
            h = acc;
        }
        PrimeFieldPoly diff = pf_sub(h, pf_rem(make(p, {0, 1}), star));
        // gcd(rem, 0) = rem, which is exactly right when every remaining
        // factor has degree i.
        PrimeFieldPoly g = pf_gcd(rem, diff);
        if (g.degree() > 0) {
            if (g.degree() % i != 0)
                throw InternalError("distinct-degree split produced an invalid degree");
            for (int k = 0; k < g.degree() / i; ++k) degrees.push_back(i);
            rem = pf_divexact(rem, g);
        }
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

std::vector<std::pair<int, PrimeFieldPoly>> squarefree_decomposition(const PrimeFieldPoly& f) {
    require_large_characteristic(f);
    std::vector<std::pair<int, PrimeFieldPoly>> out;
    if (f.degree() == 0) return out;
    const PrimeFieldPoly fm = pf_monic(f);
    const PrimeFieldPoly fp = pf_derivative(fm);
    PrimeFieldPoly g = pf_gcd(fm, fp);
    if (g.degree() == 0) {
        out.emplace_back(1, fm);
        return out;
    }
    PrimeFieldPoly c = pf_divexact(fm, g);
    PrimeFieldPoly d = pf_sub(pf_divexact(fp, g), pf_derivative(c));
    int i = 1;
    while (c.degree() > 0) {
        PrimeFieldPoly a = pf_gcd(c, d);
        c = pf_divexact(c, a);
        d = pf_sub(pf_divexact(d, a), pf_derivative(c));
        if (a.degree() > 0) out.emplace_back(i, pf_monic(a));
        ++i;
    }
    return out;
}

std::optional<u64> reduce_mod_p(const Rat& q, u64 p) {
    const u64 den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
    if (den == 0) return std::nullopt;
    const u64 num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
    return mulmod(num, invmod(den, p), p);
}

}  // namespace hilbproj
