#include "hilbproj/hilbfiber.hpp"

#include "hilbproj/errors.hpp"

#include <algorithm>
#include <numeric>

namespace hilbproj {

SubschemeSelector::SubschemeSelector(FiberProfile profile_, std::vector<int> k_)
    : profile(std::move(profile_)), k(std::move(k_)) {
    if (k.size() != profile.parts().size())
        throw DomainError("selector length does not match the profile");
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] < 0 || k[i] > profile.parts()[i])
            throw DomainError("selector entries must satisfy 0 <= k_i <= h_i");
    }
}

int SubschemeSelector::length() const { return std::accumulate(k.begin(), k.end(), 0); }

std::vector<SubschemeSelector> enumerate_fiber_points(const FiberProfile& profile, int a) {
    const int d = profile.sum();
    if (a < 1 || a > d) throw DomainError("the subscheme length must satisfy 1 <= a <= d");
    std::vector<SubschemeSelector> out;
    std::vector<int> k(profile.parts().size(), 0);
    const auto& h = profile.parts();
    // First coordinate slowest, each coordinate descending.
    auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i == k.size()) {
            if (remaining == 0) out.emplace_back(profile, k);
            return;
        }
        int tail = 0;
        for (std::size_t j = i; j < h.size(); ++j) tail += h[j];
        if (remaining > tail) return;
        for (int v = std::min(h[i], remaining); v >= 0; --v) {
            k[i] = v;
            self(self, i + 1, remaining - v);
        }
        k[i] = 0;
    };
    rec(rec, 0, a);
    return out;
}

int tangent_dim(const SubschemeSelector& s) {
    int total = 0;
    for (std::size_t i = 0; i < s.k.size(); ++i)
        total += std::min(s.k[i], s.profile.parts()[i] - s.k[i]);
    return total;
}

bool pi_smooth_at(const SubschemeSelector& s) {
    for (std::size_t i = 0; i < s.k.size(); ++i) {
        const int k = s.k[i], h = s.profile.parts()[i];
        if (k != 0 && k != h) return false;
    }
    return true;
}

int punctual_hom_ext_dim(int h, int k) {
    if (h < 1 || k < 1 || k > h) throw DomainError("need 1 <= k <= h");
    return std::min(k, h - k);
}

namespace {

// Exact rank of a rational matrix by Gaussian elimination.
int rank_of(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        const Rat inv = Rat(1) / m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rat factor = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

int brute_hom_dim(int h, int k) {
    if (h < 1 || k < 1 || k > h) throw DomainError("need 1 <= k <= h");
    if (h > 8) throw UnsupportedError("the brute-force oracle is capped at h <= 8");
    // Module maps t^k*L -> L/t^k*L over L = Q[t]/(t^h): a matrix M between
    // the monomial bases {t^k..t^(h-1)} and {1..t^(k-1)} commuting with the
    // shift actions of t on both sides. dim = unknowns - rank(constraints).
    const int n_src = h - k;  // dim of the ideal t^k*L
    const int n_dst = k;      // dim of the quotient L/t^k*L
    if (n_src == 0) return 0;
    const int unknowns = n_src * n_dst;
    auto var = [&](int row, int col) { return row * n_src + col; };
    std::vector<std::vector<Rat>> constraints;
    for (int c = 0; c < n_src; ++c) {
        for (int r = 0; r < n_dst; ++r) {
            std::vector<Rat> eq(static_cast<std::size_t>(unknowns), Rat(0));
            // phi(t * t^(k+c)) row r  ==  (t * phi(t^(k+c))) row r
            if (c + 1 < n_src) eq[static_cast<std::size_t>(var(r, c + 1))] += 1;
            if (r >= 1) eq[static_cast<std::size_t>(var(r - 1, c))] -= 1;
            constraints.push_back(std::move(eq));
        }
    }
    return unknowns - rank_of(std::move(constraints));
}

bool profile_admissible(const FiberProfile& profile) {
    int doubles = 0;
    for (int h : profile.parts()) {
        if (h > 2) return false;
        if (h == 2) ++doubles;
    }
    return doubles <= 1;
}

int ramification_index(const SubschemeSelector& s) {
    if (!profile_admissible(s.profile))
        throw UnsupportedError("unsupported-profile",
                               "ramification indices are only defined for profiles with a "
                               "single double point at most");
    for (std::size_t i = 0; i < s.k.size(); ++i) {
        if (s.profile.parts()[i] == 2 && s.k[i] == 1) return 2;
    }
    return 1;
}

DegreeAudit degree_audit(const FiberProfile& profile, int a) {
    if (!profile_admissible(profile))
        throw UnsupportedError("unsupported-profile",
                               "the degree audit needs an admissible profile");
    const int d = profile.sum();
    DegreeAudit audit;
    audit.expected = binomial(d, a);
    audit.index_sum = 0;
    for (SubschemeSelector& s : enumerate_fiber_points(profile, a)) {
        FiberPointReport report{s, tangent_dim(s), pi_smooth_at(s), ramification_index(s)};
        audit.index_sum += *report.ram_index;
        audit.points.push_back(std::move(report));
    }
    if (audit.index_sum != audit.expected)
        throw InternalError("ramification indices do not sum to the flat degree");
    return audit;
}

Int ramification_count_over_branch(int d, int a) {
    if (d < 2) throw DomainError("need d >= 2");
    if (a < 1 || a > d) throw DomainError("need 1 <= a <= d");
    return binomial(d - 2, a - 1);
}

}  // namespace hilbproj
