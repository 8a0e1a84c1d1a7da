#include "patrol/rational.h"

#include "patrol/error.h"

#include <cctype>
#include <charconv>
#include <string>

namespace patrol {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

[[noreturn]] void bad(std::string_view text) {
    throw Error(ErrorKind::ParseError, "malformed number '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad(text);
        mpz_class d{std::string(den), 10};
        if (d == 0) bad(text);
        value = Rational(mpz_class{std::string(num), 10}, d);
    } else {
        auto dot = s.find('.');
        auto whole = s.substr(0, dot);
        std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
        if (whole.empty() && frac.empty()) bad(text);
        if (!whole.empty() && !all_digits(whole)) bad(text);
        if (dot != std::string_view::npos && !frac.empty() && !all_digits(frac)) bad(text);
        if (dot != std::string_view::npos && whole.empty() && frac.empty()) bad(text);
        mpz_class num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        value = Rational(num, den);
    }
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

std::string to_decimal(const Rational& q) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, q.get_d());
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

Rational rational_lcm(const Rational& a, const Rational& b) {
    // With a = p/q and b = r/s in lowest terms: lcm = lcm(p, r) / gcd(q, s).
    mpz_class num, den;
    mpz_lcm(num.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    mpz_gcd(den.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
    Rational out(num, den);
    out.canonicalize();
    return out;
}

mpz_class floor_div(const Rational& a, const Rational& b) {
    Rational q = a / b;
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

}  // namespace patrol
