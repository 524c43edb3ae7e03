#pragma once

#include "colorsuper/poly.hpp"

namespace colorsuper {

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Element of the fraction field Q(sqrt2)(h,f), stored in canonical reduced
// form: gcd(num, den) = 1 and den has leading coefficient 1 (graded-lex,
// h > f).  Equality of canonical forms agrees with cross-multiplication.
class Scalar {
  public:
    Scalar() : num_(), den_(QSqrt2(1)) {}
    Scalar(long n) : num_(n), den_(QSqrt2(1)) {}
    Scalar(Rat r) : num_(std::move(r)), den_(QSqrt2(1)) {}
    Scalar(QSqrt2 q) : num_(std::move(q)), den_(QSqrt2(1)) {}
    Scalar(Poly2 p) : num_(std::move(p)), den_(QSqrt2(1)) {}
    Scalar(Poly2 num, Poly2 den);  // reduces

    const Poly2& num() const { return num_; }
    const Poly2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == Poly2(QSqrt2(1)); }

    friend bool operator==(const Scalar&, const Scalar&) = default;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);
    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

    Scalar inverse() const;

    // Exact substitution h -> h0, f -> f0; throws PoleError when the
    // denominator vanishes at the point.
    QSqrt2 eval(const Rat& h0, const Rat& f0) const;
    Scalar substitute(Var v, const Poly2& r) const;

  private:
    Poly2 num_;
    Poly2 den_;
};

inline Scalar gcd_reduce(Poly2 num, Poly2 den) {
    return Scalar(std::move(num), std::move(den));
}

inline Scalar scalar_h() { return Scalar(poly_h()); }
inline Scalar scalar_f() { return Scalar(poly_f()); }

// "{num terms}" when the denominator is 1, else "{num}/{den}".
std::string to_string(const Scalar& s);
Scalar parse_scalar(const std::string& s);
// e.g. "(h + f)/(f - 2)"
std::string pretty(const Scalar& s);

}  // namespace colorsuper
