#include "novikov/exponent.hpp"

#include "novikov/errors.hpp"

#include <cctype>

namespace nov {

namespace {

bool is_integer_literal(const std::string& s) {
    size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

Exponent parse_rational(const std::string& raw) {
    std::string text = trim(raw);
    auto slash = text.find('/');
    std::string num = slash == std::string::npos ? text : trim(text.substr(0, slash));
    std::string den = slash == std::string::npos ? "1" : trim(text.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw FormatError("not a rational literal: '" + raw + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw FormatError("zero denominator in '" + raw + "'");
    Exponent q(n, d);
    q.canonicalize();
    return q;
}

std::string format_rational(const Exponent& e) {
    return e.get_str(10);
}

std::string format_ext(const ExtExponent& e) {
    return e ? format_rational(*e) : std::string("inf");
}

Exponent floor_rational(const Exponent& e) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), e.get_num_mpz_t(), e.get_den_mpz_t());
    return Exponent(q);
}

Exponent ceil_rational(const Exponent& e) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), e.get_num_mpz_t(), e.get_den_mpz_t());
    return Exponent(q);
}

} // namespace nov
