#include "rsc/exact.hpp"

#include <cctype>
#include <stdexcept>

#include "rsc/errors.hpp"

namespace rsc {

Int binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

Rational rational_pow(const Rational& base, unsigned exp) {
    Rational r = 1;
    Rational b = base;
    unsigned e = exp;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ValidationError("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw ValidationError("zero denominator in: " + text);
        return Rational(num, den);
    }

    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    std::string digits;
    long long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    long long exp10 = 0;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if ((c == 'e' || c == 'E') && seen_digit) {
            exp10 = std::stoll(s.substr(i + 1));
            break;
        } else {
            throw ValidationError("malformed rational literal: " + text);
        }
    }
    if (!seen_digit) throw ValidationError("malformed rational literal: " + text);
    Int num(digits.empty() ? "0" : digits);
    if (neg) num = -num;
    Rational r(num, 1);
    long long net = exp10 - frac_digits;
    Int ten = 10;
    if (net > 0)
        for (long long j = 0; j < net; ++j) r *= ten;
    else
        for (long long j = 0; j < -net; ++j) r /= ten;
    return r;
}

std::string decimal_string(const Rational& value, unsigned digits) {
    Int num = boost::multiprecision::numerator(value);
    Int den = boost::multiprecision::denominator(value);
    bool neg = num < 0;
    if (neg) num = -num;
    Int scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    Int scaled = num * scale;
    Int q = scaled / den;
    Int rem = scaled % den;
    if (rem * 2 >= den) ++q; // round half away from zero
    std::string s = q.str();
    if (s.size() <= digits) s.insert(0, digits - s.size() + 1, '0');
    std::string ip = s.substr(0, s.size() - digits);
    std::string fp = digits ? s.substr(s.size() - digits) : "";
    while (!fp.empty() && fp.back() == '0') fp.pop_back();
    std::string out = neg ? "-" : "";
    out += ip;
    if (!fp.empty()) out += "." + fp;
    return out;
}

double to_double(const Rational& value) {
    return static_cast<double>(value);
}

} // namespace rsc
