#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace operjet {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar. Kept in lowest terms with positive denominator by
// the backend; the whole suite computes over Q, never over floating point.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

inline std::string rational_to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
    }
}

// Coefficient tuple over a fixed basis (Lie algebra basis or h^* coordinates).
using VecQ = std::vector<Rational>;

inline bool is_zero(const Rational& q) { return q == 0; }

inline bool is_zero(const VecQ& v) {
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

// An empty VecQ acts as the zero vector of any dimension, so that generic
// series code can use default-constructed coefficients.
inline VecQ& operator+=(VecQ& a, const VecQ& b) {
    if (b.empty()) return a;
    if (a.empty()) {
        a = b;
        return a;
    }
    if (a.size() != b.size()) throw std::invalid_argument("VecQ: size mismatch");
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline VecQ operator+(VecQ a, const VecQ& b) { return a += b; }

inline VecQ operator-(const VecQ& a) {
    VecQ r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline VecQ operator-(VecQ a, const VecQ& b) {
    if (b.empty()) return a;
    if (a.empty()) return -b;
    if (a.size() != b.size()) throw std::invalid_argument("VecQ: size mismatch");
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline VecQ operator*(const Rational& c, VecQ v) {
    for (auto& x : v) x *= c;
    return v;
}

}  // namespace operjet
