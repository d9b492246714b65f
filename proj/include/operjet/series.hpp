#pragma once

#include "operjet/rational.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace operjet {

struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exponents below `infinite_precision` are ordinary integers; the sentinel
// marks a series whose coefficients are known exactly at every order
// (polynomial data entered by hand rather than the output of a truncation).
inline constexpr long long infinite_precision = 1LL << 40;

// Truncated Laurent series sum_{k >= v} c_k t^k with coefficients known on the
// window [valuation, precision).  Below the valuation coefficients are exactly
// zero; at and above the precision they are unknown, and every operation
// carries the weakest window implied by its inputs instead of padding with
// zeros.  c_v itself may be zero: the valuation is a storage bound, not the
// exact order of vanishing.
template <class C>
class TruncLaurent {
public:
    TruncLaurent() : val_(0), prec_(infinite_precision) {}

    TruncLaurent(long long valuation, long long precision, std::vector<C> coeffs)
        : val_(valuation), prec_(precision), coeffs_(std::move(coeffs)) {
        if (prec_ <= val_) throw std::invalid_argument("TruncLaurent: precision <= valuation");
        if (val_ + static_cast<long long>(coeffs_.size()) > prec_)
            throw std::invalid_argument("TruncLaurent: coefficients beyond precision");
        trim();
    }

    static TruncLaurent zero(long long precision = infinite_precision) {
        TruncLaurent s;
        s.val_ = std::min<long long>(0, precision - 1);
        s.prec_ = precision;
        return s;
    }

    // c * t^k, exact at all orders.
    static TruncLaurent monomial(long long k, C c) {
        TruncLaurent s;
        s.val_ = k;
        s.prec_ = infinite_precision;
        s.coeffs_.push_back(std::move(c));
        s.trim();
        return s;
    }

    long long valuation() const { return val_; }
    long long precision() const { return prec_; }
    bool exact() const { return prec_ >= infinite_precision; }
    // One past the last stored exponent; coefficients in [stored_end, precision)
    // are exact zeros for exact series and known zeros otherwise.
    long long stored_end() const { return val_ + static_cast<long long>(coeffs_.size()); }

    // Known coefficient of t^k; throws if k is at or beyond the precision.
    C at(long long k) const {
        if (k >= prec_) throw PrecisionError("TruncLaurent::at: exponent beyond precision");
        if (k < val_ || k >= stored_end()) return C{};
        return coeffs_[static_cast<size_t>(k - val_)];
    }

    bool known(long long k) const { return k < prec_; }

    bool is_zero_on_window() const {
        for (const auto& c : coeffs_)
            if (!is_zero(c)) return false;
        return true;
    }

    TruncLaurent truncated(long long new_prec) const {
        if (new_prec >= prec_) return *this;
        TruncLaurent s;
        s.val_ = std::min(val_, new_prec - 1);
        s.prec_ = new_prec;
        for (long long k = val_; k < std::min(new_prec, stored_end()); ++k)
            s.coeffs_.push_back(at(k));
        s.trim();
        return s;
    }

    // Multiply by t^k.
    TruncLaurent shifted(long long k) const {
        TruncLaurent s = *this;
        s.val_ += k;
        if (!exact()) s.prec_ += k;
        return s;
    }

    TruncLaurent scaled(const Rational& c) const {
        TruncLaurent s = *this;
        for (auto& x : s.coeffs_) x = c * x;
        s.trim();
        return s;
    }

    TruncLaurent operator-() const { return scaled(Rational(-1)); }

    friend TruncLaurent operator+(const TruncLaurent& a, const TruncLaurent& b) {
        long long p = std::min(a.prec_, b.prec_);
        long long v = std::min(a.val_, b.val_);
        if (p <= v) throw PrecisionError("TruncLaurent::add: empty result window");
        TruncLaurent s;
        s.val_ = v;
        s.prec_ = p;
        long long hi = std::min(p, std::max(a.stored_end(), b.stored_end()));
        for (long long k = v; k < hi; ++k) s.coeffs_.push_back(a.at_or_zero(k) + b.at_or_zero(k));
        s.trim();
        return s;
    }

    friend TruncLaurent operator-(const TruncLaurent& a, const TruncLaurent& b) { return a + (-b); }

    // d/dt: c_k t^k -> k c_k t^{k-1}; the unknown tail starts one step lower.
    TruncLaurent derivative() const {
        TruncLaurent s;
        s.val_ = val_ - 1;
        s.prec_ = exact() ? infinite_precision : prec_ - 1;
        if (s.prec_ <= s.val_) throw PrecisionError("TruncLaurent::derivative: empty window");
        for (size_t i = 0; i < coeffs_.size(); ++i)
            s.coeffs_.push_back(Rational(val_ + static_cast<long long>(i)) * coeffs_[i]);
        s.trim();
        return s;
    }

    // Coefficient of t^{-1}; demands the window actually covers it.
    C residue_coeff() const {
        if (!known(-1)) throw PrecisionError("residue_coeff: t^-1 beyond precision");
        return at(-1);
    }

    // First n Taylor coefficients.  Requires regularity (no nonzero negative
    // part may be visible) and enough precision to know all n of them.
    std::vector<C> jet(long long n) const {
        for (long long k = val_; k < 0; ++k)
            if (!is_zero(at(k))) throw std::domain_error("TruncLaurent::jet: negative valuation");
        if (prec_ < n) throw PrecisionError("TruncLaurent::jet: insufficient precision");
        std::vector<C> out;
        out.reserve(static_cast<size_t>(n));
        for (long long k = 0; k < n; ++k) out.push_back(at(k));
        return out;
    }

    // Exact equality of windows and known data.
    friend bool operator==(const TruncLaurent& a, const TruncLaurent& b) {
        if (a.prec_ != b.prec_) return false;
        long long lo = std::min(a.val_, b.val_);
        long long hi = std::max(a.stored_end(), b.stored_end());
        for (long long k = lo; k < hi; ++k)
            if (!is_zero(a.at_or_zero(k) - b.at_or_zero(k))) return false;
        return true;
    }

    friend bool operator!=(const TruncLaurent& a, const TruncLaurent& b) { return !(a == b); }

private:
    C at_or_zero(long long k) const {
        if (k < val_ || k >= stored_end()) return C{};
        return coeffs_[static_cast<size_t>(k - val_)];
    }

    void trim() {
        size_t drop = 0;
        while (drop < coeffs_.size() && is_zero(coeffs_[drop])) ++drop;
        if (drop > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(drop));
            val_ += static_cast<long long>(drop);
        }
        while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
        if (coeffs_.empty()) val_ = std::min<long long>(exact() ? 0 : prec_ - 1, val_);
    }

    long long val_;
    long long prec_;
    std::vector<C> coeffs_;  // stored window [val_, val_ + size)
};

// Do two series agree wherever both are known?  An empty common window counts
// as agreement only if the caller allows it; we expose the window size too.
template <class C>
bool agree_on_common_window(const TruncLaurent<C>& a, const TruncLaurent<C>& b) {
    long long p = std::min(a.precision(), b.precision());
    long long lo = std::min(a.valuation(), b.valuation());
    for (long long k = lo; k < p; ++k)
        if (!is_zero(a.at(k) - b.at(k))) return false;
    return true;
}

// Cauchy product with an arbitrary bilinear coefficient multiplication (scalar
// product, scalar-times-vector, or a Lie bracket on vector coefficients).
// Result precision is the weakest implied window min(Na + vb, Nb + va).
template <class D, class A, class B, class Mul>
TruncLaurent<D> convolve_mul(const TruncLaurent<A>& a, const TruncLaurent<B>& b, Mul mul,
                             D zero = D{}) {
    long long v = a.valuation() + b.valuation();
    long long prec;
    if (a.exact() && b.exact()) prec = infinite_precision;
    else if (a.exact()) prec = b.precision() + a.valuation();
    else if (b.exact()) prec = a.precision() + b.valuation();
    else prec = std::min(a.precision() + b.valuation(), b.precision() + a.valuation());
    if (prec <= v) throw PrecisionError("TruncLaurent::mul: empty result window");

    long long hi = std::min(prec, a.stored_end() + b.stored_end() - 1);
    if (hi < v) hi = v;
    std::vector<D> out(static_cast<size_t>(hi - v), zero);
    for (long long i = a.valuation(); i < a.stored_end(); ++i) {
        A ca = a.at(i);
        if (is_zero(ca)) continue;
        for (long long j = b.valuation(); j < b.stored_end() && i + j < hi; ++j) {
            B cb = b.at(j);
            if (is_zero(cb)) continue;
            size_t k = static_cast<size_t>(i + j - v);
            out[k] = out[k] + mul(ca, cb);
        }
    }
    return TruncLaurent<D>(v, prec, std::move(out));
}

inline TruncLaurent<Rational> operator*(const TruncLaurent<Rational>& a,
                                        const TruncLaurent<Rational>& b) {
    return convolve_mul<Rational>(a, b, [](const Rational& x, const Rational& y) { return x * y; });
}

using SeriesQ = TruncLaurent<Rational>;

// Polynomial jet: exactly n coefficients for t^0 .. t^{n-1}, a point of the
// length-n jet space of whatever the coefficients parametrize.
template <class C>
struct JetPoly {
    std::vector<C> coeffs;

    JetPoly() = default;
    explicit JetPoly(long long n, C fill = C{}) : coeffs(static_cast<size_t>(n), fill) {
        if (n < 1) throw std::invalid_argument("JetPoly: length must be >= 1");
    }
    explicit JetPoly(std::vector<C> cs) : coeffs(std::move(cs)) {
        if (coeffs.empty()) throw std::invalid_argument("JetPoly: length must be >= 1");
    }

    long long length() const { return static_cast<long long>(coeffs.size()); }
    const C& operator[](size_t k) const { return coeffs[k]; }
    C& operator[](size_t k) { return coeffs[k]; }

    JetPoly truncated(long long m) const {
        if (m < 1 || m > length()) throw std::invalid_argument("JetPoly::truncated: bad length");
        return JetPoly(std::vector<C>(coeffs.begin(), coeffs.begin() + m));
    }

    friend JetPoly operator+(const JetPoly& a, const JetPoly& b) {
        if (a.length() != b.length()) throw std::invalid_argument("JetPoly: length mismatch");
        JetPoly r = a;
        for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = r.coeffs[i] + b.coeffs[i];
        return r;
    }
    friend JetPoly operator-(const JetPoly& a, const JetPoly& b) {
        if (a.length() != b.length()) throw std::invalid_argument("JetPoly: length mismatch");
        JetPoly r = a;
        for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = r.coeffs[i] - b.coeffs[i];
        return r;
    }
    JetPoly operator-() const {
        JetPoly r = *this;
        for (auto& c : r.coeffs) c = -c;
        return r;
    }

    friend bool operator==(const JetPoly& a, const JetPoly& b) {
        if (a.length() != b.length()) return false;
        for (size_t i = 0; i < a.coeffs.size(); ++i)
            if (!is_zero(a.coeffs[i] - b.coeffs[i])) return false;
        return true;
    }
    friend bool operator!=(const JetPoly& a, const JetPoly& b) { return !(a == b); }
};

using JetQ = JetPoly<Rational>;

// Product in Q[t]/t^n.
inline JetQ operator*(const JetQ& a, const JetQ& b) {
    if (a.length() != b.length()) throw std::invalid_argument("JetPoly: length mismatch");
    JetQ r(a.length());
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (size_t j = 0; i + j < b.coeffs.size(); ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return r;
}

inline JetQ operator*(const Rational& c, JetQ a) {
    for (auto& x : a.coeffs) x *= c;
    return a;
}

inline bool is_zero(const JetQ& a) {
    for (const auto& c : a.coeffs)
        if (c != 0) return false;
    return true;
}

// ev_n: the first n coefficients of a regular series.
template <class C>
JetPoly<C> ev_jet(const TruncLaurent<C>& s, long long n) {
    if (n < 1) throw std::invalid_argument("ev_jet: n must be >= 1");
    return JetPoly<C>(s.jet(n));
}

}  // namespace operjet
