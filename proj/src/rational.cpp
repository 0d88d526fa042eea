#include "hilbproj/rational.hpp"

#include "hilbproj/errors.hpp"

#include <cctype>
#include <limits>

namespace hilbproj {

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integral(const Rat& q) { return q.get_den() == 1; }

std::optional<std::int64_t> to_int64(const Int& n) {
    if (!n.fits_slong_p()) return std::nullopt;
    return static_cast<std::int64_t>(n.get_si());
}

std::int64_t to_int64_checked(const Int& n, const char* what) {
    auto v = to_int64(n);
    if (!v) throw InternalError(std::string(what) + " does not fit in 64 bits: " + n.get_str());
    return *v;
}

Int binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

namespace {

// Scans one rational at s[pos...]; used by both parse_rational and
// parse_point so error offsets stay byte-accurate.
Rat scan_rational(const std::string& s, std::size_t& pos) {
    auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    skip_ws();
    std::size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = (s[pos] == '-');
        ++pos;
        skip_ws();
    }
    auto scan_digits = [&]() -> std::string {
        std::size_t d0 = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == d0)
            throw ParseError(pos, pos < s.size() ? std::string(1, s[pos]) : "<end>",
                             "expected digits");
        return s.substr(d0, pos - d0);
    };
    std::string num = scan_digits();
    std::string den = "1";
    skip_ws();
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        skip_ws();
        std::size_t dpos = pos;
        den = scan_digits();
        if (Int(den, 10) == 0) throw ParseError(dpos, den, "zero denominator");
    }
    Rat q{Int(num, 10), Int(den, 10)};
    q.canonicalize();
    if (neg) q = -q;
    (void)start;
    return q;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::size_t pos = 0;
    Rat q = scan_rational(text, pos);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size())
        throw ParseError(pos, std::string(1, text[pos]), "trailing characters after rational");
    return q;
}

std::vector<Rat> parse_point(const std::string& text) {
    std::vector<Rat> coords;
    std::size_t pos = 0;
    for (;;) {
        coords.push_back(scan_rational(text, pos));
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == text.size()) break;
        if (text[pos] != ',')
            throw ParseError(pos, std::string(1, text[pos]), "expected ',' between coordinates");
        ++pos;
    }
    return coords;
}

}  // namespace hilbproj
