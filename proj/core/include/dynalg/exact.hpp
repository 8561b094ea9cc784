#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

namespace dynalg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) { return Rational(num) / Rational(den); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// "p/q" or "p" when the denominator is one.
inline std::string to_string(const Rational& q) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Gaussian rational re + i*im. Exact.
struct QComplex {
    Rational re;
    Rational im;

    QComplex() = default;
    QComplex(Rational r) : re(std::move(r)) {}  // NOLINT: implicit lift from reals
    QComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    QComplex(long long r) : re(r) {}  // NOLINT

    static QComplex i() { return {Rational(0), Rational(1)}; }

    [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
    [[nodiscard]] QComplex conj() const { return {re, -im}; }
    [[nodiscard]] std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

    QComplex& operator+=(const QComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    QComplex& operator-=(const QComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    QComplex& operator*=(const QComplex& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }

    friend QComplex operator+(QComplex a, const QComplex& b) { return a += b; }
    friend QComplex operator-(QComplex a, const QComplex& b) { return a -= b; }
    friend QComplex operator*(QComplex a, const QComplex& b) { return a *= b; }
    friend QComplex operator-(const QComplex& a) { return {-a.re, -a.im}; }
    friend bool operator==(const QComplex& a, const QComplex& b) { return a.re == b.re && a.im == b.im; }
};

}  // namespace dynalg
