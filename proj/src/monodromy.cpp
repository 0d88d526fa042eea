#include "hilbproj/monodromy.hpp"

#include "hilbproj/errors.hpp"
#include "hilbproj/primefield.hpp"
#include "hilbproj/rng.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace hilbproj {

CycleType::CycleType(std::vector<int> parts_) : parts(std::move(parts_)) {
    if (parts.empty()) throw DomainError("empty cycle type");
    for (int x : parts)
        if (x < 1) throw DomainError("cycle lengths must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
}

int CycleType::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string CycleType::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ",";
        out << parts[i];
    }
    return out.str();
}

namespace {

using u64 = std::uint64_t;

// Restriction coefficients of a rational form along a mod-p line; nullopt
// when p divides a denominator of the form's coefficients.
std::optional<std::vector<u64>> restrict_mod_p(const HomogeneousForm& f,
                                               const std::vector<u64>& z,
                                               const std::vector<u64>& w, u64 p) {
    const int degree = f.degree();
    std::vector<u64> out(static_cast<std::size_t>(degree) + 1, 0);
    auto mulmod = [p](u64 a, u64 b) { return static_cast<u64>((unsigned __int128)(a)*b % p); };
    for (const auto& [e, c] : f.poly().terms()) {
        auto cp = reduce_mod_p(c, p);
        if (!cp) return std::nullopt;
        std::vector<u64> cur{1 % p};
        for (int i = 0; i < f.num_vars(); ++i) {
            const int ei = e[static_cast<std::size_t>(i)];
            if (ei == 0) continue;
            // (z_i s + w_i t)^{e_i} via binomial coefficients mod p.
            std::vector<u64> lin(static_cast<std::size_t>(ei) + 1, 0);
            for (int j = 0; j <= ei; ++j) {
                const Int b = binomial(ei, j);
                u64 term = mpz_fdiv_ui(b.get_mpz_t(), p);
                for (int k = 0; k < ei - j; ++k) term = mulmod(term, z[static_cast<std::size_t>(i)]);
                for (int k = 0; k < j; ++k) term = mulmod(term, w[static_cast<std::size_t>(i)]);
                lin[static_cast<std::size_t>(j)] = term;
            }
            std::vector<u64> next(cur.size() + static_cast<std::size_t>(ei), 0);
            for (std::size_t x = 0; x < cur.size(); ++x) {
                if (cur[x] == 0) continue;
                for (std::size_t y = 0; y < lin.size(); ++y)
                    next[x + y] = (next[x + y] + (unsigned __int128)(cur[x]) * lin[y]) % p;
            }
            cur = std::move(next);
        }
        for (std::size_t j = 0; j < cur.size(); ++j)
            out[j] = (out[j] + (unsigned __int128)(*cp) * cur[j] % p) % p;
    }
    return out;
}

}  // namespace

FrobeniusSample frobenius_sample(const Hypersurface& a, const Center& z, u64 p, u64 s) {
    if (a.m() != 1)
        throw UnsupportedError("Frobenius sampling is defined for plane curves (m = 1)");
    check_center(a, z);
    const int d = a.degree;
    if (!is_prime_u64(p)) throw DomainError("not-prime", "sampling modulus must be prime");
    if (p <= static_cast<u64>(d)) throw DomainError("sampling needs p > d");
    if (s >= p) throw DomainError("pencil parameter must lie in [0, p)");

    // Reduce the center; a prime hitting a denominator or collapsing z is
    // unusable for every s.
    std::vector<u64> zp(z.coords.size());
    bool z_nonzero = false;
    for (std::size_t i = 0; i < z.coords.size(); ++i) {
        auto r = reduce_mod_p(z.coords[i], p);
        if (!r) return {SampleStatus::skipped, std::nullopt, "p divides a center denominator"};
        zp[i] = *r;
        if (*r != 0) z_nonzero = true;
    }
    if (!z_nonzero) return {SampleStatus::skipped, std::nullopt, "center reduces to zero mod p"};

    const PencilFrame frame = pencil_frame(z, a.form.num_vars());
    std::vector<u64> wp(z.coords.size(), 0);
    for (std::size_t i = 0; i < wp.size(); ++i) {
        // Directions u*w0 + v*w1 at (u:v) = (s:1); the frame entries are 0/1.
        const u64 w0 = frame.w0[i] == 0 ? 0 : 1;
        const u64 w1 = frame.w1[i] == 0 ? 0 : 1;
        wp[i] = (static_cast<unsigned __int128>(w0) * s + w1) % p;
    }

    auto coeffs = restrict_mod_p(a.form, zp, wp, p);
    if (!coeffs) return {SampleStatus::skipped, std::nullopt, "p divides a coefficient denominator"};
    if ((*coeffs)[0] == 0)
        return {SampleStatus::skipped, std::nullopt, "center lands on the hypersurface mod p"};

    // Coefficient-reversed dehomogenization: degree exactly d, lead F(z).
    std::vector<u64> rev(coeffs->rbegin(), coeffs->rend());
    PrimeFieldPoly f(p, std::move(rev));
    if (f.degree() != d)
        return {SampleStatus::skipped, std::nullopt, "restriction degenerates mod p"};
    auto degrees = factor_degrees_mod_p(f);
    if (!degrees)
        return {SampleStatus::discarded, std::nullopt, "non-squarefree reduction (branch point mod p)"};
    const CycleType type{*degrees};
    if (type.sum() != d) throw InternalError("factor degrees do not sum to d");
    return {SampleStatus::accepted, type, ""};
}

WitnessReport symmetric_group_witness(const std::vector<CycleType>& samples, int d) {
    if (d < 1) throw DomainError("need d >= 1");
    WitnessReport report;
    report.d = d;
    report.samples_used = static_cast<int>(samples.size());

    // A prime strictly between d/2 and d forces primitivity once the action
    // is transitive; required only when such a prime exists and d > 3.
    bool prime_exists = false;
    for (int q = d / 2 + 1; q < d; ++q)
        if (q >= 2 && is_prime_u64(static_cast<u64>(q))) prime_exists = true;
    report.transposition_required = d >= 2;
    report.long_prime_required = d >= 4 && prime_exists;

    std::map<std::string, int> histogram;
    for (const CycleType& t : samples) {
        if (t.sum() != d) throw DomainError("sample cycle type does not sum to d");
        ++histogram[t.str()];
        if (t.parts.size() == 1) report.seen_d_cycle = true;
        const bool transposition =
            t.parts.size() == static_cast<std::size_t>(d - 1) && t.parts.front() == 2;
        if (transposition) report.seen_transposition_type = true;
        for (int part : t.parts) {
            if (part < d && 2 * part > d && is_prime_u64(static_cast<u64>(part)))
                report.seen_long_prime_cycle = true;
        }
    }
    for (const auto& [key, count] : histogram) report.histogram.emplace_back(key, count);

    const bool ok = report.seen_d_cycle &&
                    (!report.transposition_required || report.seen_transposition_type) &&
                    (!report.long_prime_required || report.seen_long_prime_cycle);
    report.verdict = ok ? "symmetric-group evidence" : "inconclusive";
    return report;
}

WitnessReport run_monodromy_sampling(const Hypersurface& a, const Center& z, int samples,
                                     u64 seed, u64 prime_bound) {
    if (samples < 1) throw DomainError("need at least one sample");
    check_center(a, z);
    const int d = a.degree;
    const std::vector<u64> primes = primes_in_range(static_cast<u64>(d), prime_bound);
    if (primes.empty())
        throw DomainError("no usable primes below the bound; raise the prime bound");

    DetRng rng(seed);
    std::vector<CycleType> accepted;
    int discarded = 0, skipped = 0;
    for (int i = 0; i < samples; ++i) {
        const u64 p = primes[rng.below(primes.size())];
        const u64 s = rng.below(p);
        FrobeniusSample out = frobenius_sample(a, z, p, s);
        switch (out.status) {
            case SampleStatus::accepted: accepted.push_back(*out.type); break;
            case SampleStatus::discarded: ++discarded; break;
            case SampleStatus::skipped: ++skipped; break;
        }
    }
    WitnessReport report = symmetric_group_witness(accepted, d);
    report.discarded = discarded;
    report.skipped = skipped;
    return report;
}

}  // namespace hilbproj
