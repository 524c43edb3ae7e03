#pragma once

#include "colorsuper/rational.hpp"

#include <stdexcept>
#include <string>

namespace colorsuper {

struct NotInvertible : std::domain_error {
    using std::domain_error::domain_error;
};

// Element a + b*sqrt(2) of the quadratic field Q(sqrt 2).
// Invertible iff a^2 != 2 b^2, i.e. iff nonzero (sqrt 2 is irrational).
struct QSqrt2 {
    Rat a;
    Rat b;

    QSqrt2() = default;
    QSqrt2(Rat ra) : a(std::move(ra)) {}
    QSqrt2(long n) : a(n) {}
    QSqrt2(Rat ra, Rat rb) : a(std::move(ra)), b(std::move(rb)) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    friend bool operator==(const QSqrt2&, const QSqrt2&) = default;

    QSqrt2 operator-() const { return {-a, -b}; }
    friend QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
        return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    QSqrt2 inverse() const {
        Rat n = a * a - 2 * b * b;
        if (n == 0) throw NotInvertible("division by zero in Q(sqrt2)");
        return {a / n, -b / n};
    }
    friend QSqrt2 operator/(const QSqrt2& x, const QSqrt2& y) {
        return x * y.inverse();
    }
    QSqrt2& operator+=(const QSqrt2& y) { return *this = *this + y; }
    QSqrt2& operator-=(const QSqrt2& y) { return *this = *this - y; }
    QSqrt2& operator*=(const QSqrt2& y) { return *this = *this * y; }
};

inline QSqrt2 sqrt2() { return {Rat(0), Rat(1)}; }
inline QSqrt2 inv_sqrt2() { return {Rat(0), Rat(1, 2)}; }  // 1/sqrt2 = sqrt2/2

// Text form "(3/2) + (1/2)*sqrt2"; pure rationals print bare, pure sqrt2
// multiples print "(b)*sqrt2".  parse_qsqrt2 round-trips all three shapes.
std::string to_string(const QSqrt2& q);
QSqrt2 parse_qsqrt2(const std::string& s);

}  // namespace colorsuper
