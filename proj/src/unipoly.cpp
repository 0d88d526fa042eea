#include "hilbproj/unipoly.hpp"

#include "hilbproj/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace hilbproj {

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void UniPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::monomial(int degree, const Rat& c) {
    if (degree < 0) throw DomainError("monomial of negative degree");
    std::vector<Rat> cs(static_cast<std::size_t>(degree) + 1, Rat(0));
    cs.back() = c;
    return UniPoly(std::move(cs));
}

const Rat& UniPoly::leading() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rat UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

Rat UniPoly::operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::operator-() const {
    std::vector<Rat> cs(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i] = -coeffs_[i];
    return UniPoly(std::move(cs));
}

UniPoly UniPoly::scaled(const Rat& c) const {
    if (c == 0) return UniPoly();
    std::vector<Rat> cs(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i] = coeffs_[i] * c;
    return UniPoly(std::move(cs));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rat> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) cs[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) cs[i] += b.coeffs_[i];
    return UniPoly(std::move(cs));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rat> cs(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(cs));
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rat> cs(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) cs[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(cs));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) throw DomainError("monic form of the zero polynomial");
    return scaled(Rat(1) / leading());
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat c = coeff(i);
        if (c == 0) continue;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        Rat ac = abs(c);
        if (ac != 1 || i == 0) out << to_string(ac);
        if (i > 0) {
            if (ac != 1) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& f, const UniPoly& g) {
    if (g.is_zero()) throw DomainError("division by the zero polynomial");
    UniPoly r = f;
    if (f.degree() < g.degree()) return {UniPoly(), r};
    std::vector<Rat> q(static_cast<std::size_t>(f.degree() - g.degree()) + 1, Rat(0));
    std::vector<Rat> rc = r.coeffs();
    const auto& gc = g.coeffs();
    const Rat inv_lg = Rat(1) / g.leading();
    for (int i = f.degree() - g.degree(); i >= 0; --i) {
        Rat c = rc[static_cast<std::size_t>(i + g.degree())] * inv_lg;
        q[static_cast<std::size_t>(i)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= g.degree(); ++j)
            rc[static_cast<std::size_t>(i + j)] -= c * gc[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(rc))};
}

UniPoly exact_div(const UniPoly& f, const UniPoly& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) throw InternalError("polynomial division expected to be exact");
    return q;
}

namespace {

using IPoly = std::vector<Int>;  // lowest degree first, no trailing zeros

int ideg(const IPoly& p) { return static_cast<int>(p.size()) - 1; }

void itrim(IPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Int icontent(const IPoly& p) {
    Int c(0);
    for (const Int& x : p) {
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
        if (c == 1) break;
    }
    return c;  // 0 for the zero polynomial
}

void idivexact_scalar(IPoly& p, const Int& c) {
    for (Int& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

IPoly iprimitive(IPoly p) {
    itrim(p);
    if (p.empty()) return p;
    Int c = icontent(p);
    if (p.back() < 0) c = -c;
    if (c != 1) idivexact_scalar(p, c);
    return p;
}

// Clears denominators: f = result / denom with integer result (not reduced
// to primitive; denom is the lcm of the coefficient denominators).
std::pair<IPoly, Int> to_integer(const UniPoly& f) {
    Int denom(1);
    for (const Rat& c : f.coeffs())
        mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den().get_mpz_t());
    IPoly out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        Rat scaled = f.coeffs()[i] * Rat(denom);
        out[i] = scaled.get_num();  // denominator is 1 by construction
    }
    return {std::move(out), denom};
}

UniPoly from_integer(const IPoly& p) {
    std::vector<Rat> cs(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) cs[i] = Rat(p[i]);
    return UniPoly(std::move(cs));
}

Int ipow(const Int& base, long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B, all over Z.
IPoly iprem(IPoly A, const IPoly& B) {
    const int db = ideg(B);
    const Int lb = B.back();
    long scalings_left = ideg(A) - db + 1;
    while (!A.empty() && ideg(A) >= db) {
        const int shift = ideg(A) - db;
        const Int la = A.back();
        for (Int& x : A) x *= lb;
        for (int j = 0; j <= db; ++j)
            A[static_cast<std::size_t>(shift + j)] -= la * B[static_cast<std::size_t>(j)];
        itrim(A);
        --scalings_left;
    }
    if (scalings_left > 0) {
        const Int extra = ipow(lb, scalings_left);
        for (Int& x : A) x *= extra;
    }
    return A;
}

// Resultant in the Sylvester convention res(A, B) = lc(A)^deg(B) *
// prod B(alpha) over roots alpha of A; fraction-free subresultant scheme.
Int resultant_int(IPoly A, IPoly B) {
    itrim(A);
    itrim(B);
    if (A.empty() || B.empty()) return Int(0);
    int s = 1;
    if (ideg(A) < ideg(B)) {
        if ((ideg(A) & 1) && (ideg(B) & 1)) s = -s;
        std::swap(A, B);
    }
    Int a = icontent(A), b = icontent(B);
    idivexact_scalar(A, a);
    idivexact_scalar(B, b);
    Int t = ipow(a, ideg(B)) * ipow(b, ideg(A));
    Int g(1), h(1);
    while (ideg(B) > 0) {
        const long delta = ideg(A) - ideg(B);
        if ((ideg(A) & 1) && (ideg(B) & 1)) s = -s;
        IPoly R = iprem(A, B);
        A = std::move(B);
        if (R.empty()) return Int(0);  // common factor of positive degree
        const Int denom = g * ipow(h, delta);
        idivexact_scalar(R, denom);
        B = std::move(R);
        g = A.back();
        if (delta > 0) {
            Int hh = ipow(g, delta);
            if (delta > 1) {
                Int hd = ipow(h, delta - 1);
                mpz_divexact(hh.get_mpz_t(), hh.get_mpz_t(), hd.get_mpz_t());
            }
            h = hh;
        }
    }
    if (B.empty()) return Int(0);
    const long dA = ideg(A);
    if (dA == 0) return s * t;
    Int hh = ipow(B.back(), dA);
    if (dA > 1) {
        Int hd = ipow(h, dA - 1);
        mpz_divexact(hh.get_mpz_t(), hh.get_mpz_t(), hd.get_mpz_t());
    }
    return s * t * hh;
}

}  // namespace

UniPoly gcd(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() && g.is_zero()) throw DomainError("gcd of two zero polynomials");
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    IPoly A = iprimitive(to_integer(f).first);
    IPoly B = iprimitive(to_integer(g).first);
    if (ideg(A) < ideg(B)) std::swap(A, B);
    while (!B.empty()) {
        if (ideg(B) == 0) return UniPoly::constant(Rat(1));
        IPoly R = iprem(A, B);
        A = std::move(B);
        B = iprimitive(std::move(R));
    }
    return from_integer(A).monic();
}

UniPoly radical(const UniPoly& f) {
    if (f.is_zero()) throw DomainError("radical of the zero polynomial");
    if (f.degree() == 0) return UniPoly::constant(Rat(1));
    return exact_div(f.monic(), gcd(f, f.derivative()));
}

std::vector<std::pair<int, UniPoly>> squarefree_decomposition(const UniPoly& f) {
    if (f.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
    std::vector<std::pair<int, UniPoly>> out;
    if (f.degree() == 0) return out;
    const UniPoly fm = f.monic();
    const UniPoly fp = fm.derivative();
    UniPoly g = gcd(fm, fp);
    if (g.degree() == 0) {
        out.emplace_back(1, fm);
        return out;
    }
    UniPoly c = exact_div(fm, g);
    UniPoly d = exact_div(fp, g) - c.derivative();
    int i = 1;
    while (c.degree() > 0) {
        UniPoly a = gcd(c, d);
        c = exact_div(c, a);
        d = exact_div(d, a) - c.derivative();
        if (a.degree() > 0) out.emplace_back(i, a.monic());
        ++i;
    }
    return out;
}

Rat resultant(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() && g.is_zero())
        throw DomainError("resultant of two zero polynomials");
    if (f.is_zero() || g.is_zero())
        throw DomainError("resultant requires nonzero polynomials");
    const int m = f.degree(), n = g.degree();
    auto [F, af] = to_integer(f);
    auto [G, ag] = to_integer(g);
    // res(f, g) in the convention lc(g)^deg(f) * prod f(beta) equals the
    // Sylvester convention with the arguments swapped.
    Int r = resultant_int(G, F);
    Rat out(r);
    out /= Rat(ipow(ag, m));
    out /= Rat(ipow(af, n));
    return out;
}

Rat discriminant(const UniPoly& f) {
    if (f.is_zero()) throw DomainError("discriminant of the zero polynomial");
    const int d = f.degree();
    if (d <= 1) return Rat(1);
    Rat r = resultant(f, f.derivative());
    if ((d * (d - 1) / 2) % 2 != 0) r = -r;
    return r / f.leading();
}

namespace {

Int ieval_mod(const IPoly& p, const Int& x, const Int& m) {
    Int acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = (acc * x + *it) % m;
    }
    if (acc < 0) acc += m;
    return acc;
}

IPoly iderivative(const IPoly& p) {
    if (p.size() <= 1) return {};
    IPoly out(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * Int(static_cast<long>(i));
    return out;
}

// num/den with |num| <= num_bound, 0 < den <= den_bound, num/den = x mod m.
std::optional<Rat> rational_reconstruct(const Int& x, const Int& m, const Int& num_bound,
                                        const Int& den_bound) {
    Int r0 = m, r1 = x % m;
    if (r1 < 0) r1 += m;
    Int t0(0), t1(1);
    while (r1 > num_bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (t1 == 0) return std::nullopt;
    Int num = r1, den = t1;
    if (den < 0) {
        den = -den;
        num = -num;
    }
    if (den > den_bound) return std::nullopt;
    Rat q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

std::vector<Rat> rational_roots(const UniPoly& f) {
    if (f.is_zero()) throw DomainError("rational roots of the zero polynomial");
    std::vector<Rat> roots;
    if (f.degree() == 0) return roots;
    IPoly R = iprimitive(to_integer(radical(f)).first);
    std::size_t shift = 0;
    while (shift < R.size() && R[shift] == 0) ++shift;
    if (shift > 0) {
        roots.emplace_back(0);
        R.erase(R.begin(), R.begin() + static_cast<std::ptrdiff_t>(shift));
    }
    if (ideg(R) <= 0) return roots;

    const Int num_bound = abs(R.front());
    const Int den_bound = abs(R.back());
    const Int target = 2 * num_bound * den_bound + 1;
    const IPoly Rp = iderivative(R);

    // A prime where R stays squarefree with full degree; R is radical, so
    // its discriminant is nonzero and all but finitely many primes work.
    Int disc = resultant_int(R, Rp);
    if (disc == 0) throw InternalError("radical polynomial with zero discriminant");
    unsigned long p = 0;
    for (unsigned long cand = 10007;; cand += 2) {
        Int c(static_cast<long>(cand));
        if (mpz_probab_prime_p(c.get_mpz_t(), 32) == 0) continue;
        if (mpz_divisible_ui_p(R.back().get_mpz_t(), cand)) continue;
        if (!mpz_divisible_ui_p(disc.get_mpz_t(), cand)) {
            p = cand;
            break;
        }
    }

    const Int pz(static_cast<long>(p));
    std::vector<std::uint64_t> rmod(R.size());
    for (std::size_t i = 0; i < R.size(); ++i) {
        Int ci = R[i] % pz;
        if (ci < 0) ci += pz;
        rmod[i] = ci.get_ui();
    }
    std::vector<unsigned long> residues;
    for (unsigned long t = 0; t < p; ++t) {
        std::uint64_t acc = 0;
        for (auto it = rmod.rbegin(); it != rmod.rend(); ++it) acc = (acc * t + *it) % p;
        if (acc == 0) residues.push_back(t);
    }

    for (unsigned long rho : residues) {
        Int m = pz;
        Int x(static_cast<long>(rho));
        while (m < target) {
            Int m2 = m * m;
            Int fx = ieval_mod(R, x, m2);
            Int dfx = ieval_mod(Rp, x, m2);
            Int inv;
            if (mpz_invert(inv.get_mpz_t(), dfx.get_mpz_t(), m2.get_mpz_t()) == 0)
                throw InternalError("derivative not invertible during Hensel lifting");
            x = (x - fx * inv) % m2;
            if (x < 0) x += m2;
            m = std::move(m2);
        }
        auto cand = rational_reconstruct(x, m, num_bound, den_bound);
        if (cand && f(*cand) == 0) roots.push_back(*cand);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

UniPoly interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
    if (points.empty()) throw DomainError("interpolation needs at least one node");
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw DomainError("interpolation nodes must be pairwise distinct");
    // Newton divided differences.
    std::vector<Rat> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
            if (i == level) break;
        }
    }
    UniPoly acc = UniPoly::constant(dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        UniPoly shift(std::vector<Rat>{-points[i].first, Rat(1)});
        acc = acc * shift + UniPoly::constant(dd[i]);
    }
    return acc;
}

}  // namespace hilbproj
