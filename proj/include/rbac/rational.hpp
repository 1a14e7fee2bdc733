#pragma once

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rbac {

using Q = mpq_class;

inline Q make_q(long num, long den = 1) {
    Q r(num, den);
    r.canonicalize();
    return r;
}

inline int sgn(const Q& v) { return ::sgn(v); }

// Accepts "p", "p/q", "-1.25", "+3.", ".5" and an optional exponent ("1e-3").
inline std::optional<Q> parse_rational(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) return std::nullopt;

    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        auto num = parse_rational(s.substr(0, slash));
        auto den = parse_rational(s.substr(slash + 1));
        if (!num || !den || *den == 0) return std::nullopt;
        if (num->get_den() != 1 || den->get_den() != 1) return std::nullopt;
        Q r = *num / *den;
        r.canonicalize();
        return r;
    }

    bool neg = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_len = 0;
    bool seen_dot = false, any_digit = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            any_digit = true;
            if (seen_dot) ++frac_len;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            break;
        }
    }
    if (!any_digit) return std::nullopt;
    long exponent = 0;
    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E') return std::nullopt;
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            eneg = s[i] == '-';
            ++i;
        }
        if (i >= s.size()) return std::nullopt;
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
            exponent = exponent * 10 + (s[i] - '0');
            if (exponent > 100000) return std::nullopt;
        }
        if (eneg) exponent = -exponent;
    }
    mpz_class num(digits, 10);
    long shift = exponent - frac_len;
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    Q r;
    if (shift >= 0)
        r = Q(num * pow10);
    else
        r = Q(num, pow10);
    r.canonicalize();
    if (neg) r = -r;
    return r;
}

inline Q parse_rational_or_throw(std::string_view s) {
    auto r = parse_rational(s);
    if (!r) throw std::invalid_argument("not a rational: " + std::string(s));
    return *r;
}

inline std::string to_string(const Q& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

// Lexicographically ordered pair a + b*eps with eps a positive infinitesimal.
// Only rational scaling and addition are needed, so no products of eps appear.
struct QE {
    Q a, b;

    QE() = default;
    QE(const Q& s) : a(s), b(0) {}
    QE(const Q& s, const Q& e) : a(s), b(e) {}

    static QE eps() { return QE(Q(0), Q(1)); }

    friend QE operator+(const QE& x, const QE& y) { return {x.a + y.a, x.b + y.b}; }
    friend QE operator-(const QE& x, const QE& y) { return {x.a - y.a, x.b - y.b}; }
    friend QE operator-(const QE& x) { return {-x.a, -x.b}; }
    friend QE operator*(const Q& k, const QE& x) { return {k * x.a, k * x.b}; }
    friend QE operator/(const QE& x, const Q& k) { return {x.a / k, x.b / k}; }

    int sign() const {
        int s = ::sgn(a);
        return s != 0 ? s : ::sgn(b);
    }
    friend bool operator==(const QE& x, const QE& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const QE& x, const QE& y) { return !(x == y); }
    friend bool operator<(const QE& x, const QE& y) { return (x - y).sign() < 0; }
    friend bool operator<=(const QE& x, const QE& y) { return (x - y).sign() <= 0; }
    friend bool operator>(const QE& x, const QE& y) { return y < x; }
    friend bool operator>=(const QE& x, const QE& y) { return y <= x; }
};

inline int sign_of(const Q& v) { return ::sgn(v); }
inline int sign_of(const QE& v) { return v.sign(); }

}  // namespace rbac
