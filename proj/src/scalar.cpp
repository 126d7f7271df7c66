#include "qcgeo/scalar.hpp"

#include <cctype>

namespace qcgeo {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(negative ? mpz_class(-n) : n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

bool is_canonical(const Rational& q) {
    Rational copy(q);
    copy.canonicalize();
    return copy.get_num() == q.get_num() && copy.get_den() == q.get_den() && sgn(q.get_den()) > 0;
}

std::string to_string(const Gaussian& z) {
    if (is_zero(z.im)) return to_string(z.re);
    std::string im = to_string(z.im) + "i";
    if (is_zero(z.re)) return im;
    return to_string(z.re) + (sgn(z.im) > 0 ? "+" : "") + im;
}

}  // namespace qcgeo
