#pragma once

// Exact scalars: Gaussian rationals (rational real and imaginary parts).
// All arithmetic is exact; there is no floating point anywhere in the engine.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qhg {

using Rational = mpq_class;

// Canonical "num/den" rendering with an explicit denominator, so serialized
// output has exactly one spelling per value.
inline std::string rat_str(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "n" or "n/d"; canonicalizes (reduced, positive denominator).
inline Rational parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char c : s) {
        if (c != '-' && c != '+' && c != '/' && (c < '0' || c > '9'))
            throw std::invalid_argument("bad rational literal: " + s);
    }
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    // canonicalize() divides by the denominator, so reject zero before it traps
    if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    if (r.get_den() <= 0) throw std::invalid_argument("zero denominator: " + s);
    return r;
}

struct Scalar {
    Rational re, im;

    Scalar() : re(0), im(0) {}
    Scalar(long v) : re(v), im(0) {}  // NOLINT: implicit by design for literals
    Scalar(Rational r) : re(std::move(r)), im(0) {}
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }
    static Scalar of(long num, long den) {
        Rational r(num, den);
        r.canonicalize();
        return Scalar(r);
    }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    Scalar conj() const { return Scalar(re, Rational(-im)); }

    Scalar operator-() const { return Scalar(Rational(-re), Rational(-im)); }

    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(Rational(a.re * b.re - a.im * b.im),
                      Rational(a.re * b.im + a.im * b.re));
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const {
        Rational n(re * re + im * im);
        if (sgn(n) == 0) throw std::domain_error("division by zero scalar");
        return Scalar(Rational(re / n), Rational(-im / n));
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Compact canonical text form used in witnesses: "re" or "re+im*i".
    std::string str() const {
        if (is_real()) return rat_str(re);
        return rat_str(re) + (sgn(im) >= 0 ? "+" : "") + rat_str(im) + "*i";
    }
};

inline Scalar conj(const Scalar& s) { return s.conj(); }

}  // namespace qhg
