#pragma once

#include "colorsuper/qsqrt2.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace colorsuper {

struct ZeroDenominator : std::domain_error {
    using std::domain_error::domain_error;
};

// Exponent pair (deg_h, deg_f).
struct Exp {
    int h = 0;
    int f = 0;
    friend bool operator==(Exp, Exp) = default;
};

// Graded lexicographic order with h > f.  Map iteration is ascending, so the
// leading term of a nonzero polynomial is *rbegin.
struct GradedLexLess {
    bool operator()(Exp x, Exp y) const {
        if (x.h + x.f != y.h + y.f) return x.h + x.f < y.h + y.f;
        return x.h < y.h;
    }
};

enum class Var { h, f };

// Sparse polynomial in the formal weights h and f over Q(sqrt2).
// Zero coefficients are never stored.
class Poly2 {
  public:
    using Terms = std::map<Exp, QSqrt2, GradedLexLess>;

    Poly2() = default;
    Poly2(QSqrt2 c) {
        if (!c.is_zero()) terms_[{0, 0}] = std::move(c);
    }
    Poly2(long n) : Poly2(QSqrt2(n)) {}
    Poly2(Rat r) : Poly2(QSqrt2(std::move(r))) {}

    static Poly2 monomial(Exp e, QSqrt2 c) {
        Poly2 p;
        if (!c.is_zero()) p.terms_[e] = std::move(c);
        return p;
    }
    static Poly2 variable(Var v) {
        return monomial(v == Var::h ? Exp{1, 0} : Exp{0, 1}, QSqrt2(1));
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0});
    }
    QSqrt2 constant_term() const {
        auto it = terms_.find({0, 0});
        return it == terms_.end() ? QSqrt2() : it->second;
    }
    Exp leading_exp() const { return terms_.rbegin()->first; }
    const QSqrt2& leading_coeff() const { return terms_.rbegin()->second; }
    int degree(Var v) const;
    int total_degree() const {
        return terms_.empty() ? -1
                              : terms_.rbegin()->first.h + terms_.rbegin()->first.f;
    }

    void add_term(Exp e, const QSqrt2& c);

    friend bool operator==(const Poly2&, const Poly2&) = default;

    Poly2 operator-() const;
    friend Poly2 operator+(const Poly2& x, const Poly2& y);
    friend Poly2 operator-(const Poly2& x, const Poly2& y);
    friend Poly2 operator*(const Poly2& x, const Poly2& y);
    Poly2& operator+=(const Poly2& y) { return *this = *this + y; }
    Poly2& operator-=(const Poly2& y) { return *this = *this - y; }
    Poly2& operator*=(const Poly2& y) { return *this = *this * y; }

    Poly2 scaled(const QSqrt2& c) const;

    QSqrt2 eval(const Rat& h0, const Rat& f0) const;
    // Substitutes v -> r, where r is a polynomial in the other variable.
    Poly2 substitute(Var v, const Poly2& r) const;

  private:
    Terms terms_;
};

inline Poly2 poly_h() { return Poly2::variable(Var::h); }
inline Poly2 poly_f() { return Poly2::variable(Var::f); }

// Exact multivariate division; throws std::domain_error when not exact.
Poly2 divide_exact(const Poly2& num, const Poly2& den);

// GCD in Q(sqrt2)[h,f], computed by content/primitive-part recursion on the
// representation as polynomials in h with coefficients in Q(sqrt2)[f].
// Result is normalized to leading coefficient 1 (graded-lex, h > f).
Poly2 poly_gcd(const Poly2& x, const Poly2& y);

// Machine text form: "{h^1 f^0: 1, h^0 f^0: -2}", descending graded-lex order.
std::string to_string(const Poly2& p);
Poly2 parse_poly2(const std::string& s);

// Human-readable form, e.g. "2*h*f - (1/2)*f^2 + sqrt2".
std::string pretty(const Poly2& p);

}  // namespace colorsuper
