#include "colorsuper/scalar.hpp"

namespace colorsuper {

Scalar::Scalar(Poly2 num, Poly2 den) {
    if (den.is_zero()) throw ZeroDenominator("scalar with zero denominator");
    if (num.is_zero()) {
        num_ = Poly2();
        den_ = Poly2(QSqrt2(1));
        return;
    }
    if (den.is_constant()) {  // no gcd needed
        num_ = num.scaled(den.constant_term().inverse());
        den_ = Poly2(QSqrt2(1));
        return;
    }
    Poly2 g = poly_gcd(num, den);
    num_ = divide_exact(num, g);
    den_ = divide_exact(den, g);
    QSqrt2 lc = den_.leading_coeff();
    if (!(lc == QSqrt2(1))) {
        QSqrt2 inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.num_ = -out.num_;
    return out;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    return Scalar(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    return Scalar(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    return Scalar(x.num_ * y.num_, x.den_ * y.den_);
}

Scalar operator/(const Scalar& x, const Scalar& y) {
    if (y.is_zero()) throw ZeroDenominator("division by zero scalar");
    return Scalar(x.num_ * y.den_, x.den_ * y.num_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ZeroDenominator("inverse of zero scalar");
    return Scalar(den_, num_);
}

QSqrt2 Scalar::eval(const Rat& h0, const Rat& f0) const {
    QSqrt2 d = den_.eval(h0, f0);
    if (d.is_zero())
        throw PoleError("denominator vanishes at (" + h0.str() + ", " + f0.str() + ")");
    return num_.eval(h0, f0) / d;
}

Scalar Scalar::substitute(Var v, const Poly2& r) const {
    return Scalar(num_.substitute(v, r), den_.substitute(v, r));
}

std::string to_string(const Scalar& s) {
    if (s.is_polynomial()) return to_string(s.num());
    return to_string(s.num()) + "/" + to_string(s.den());
}

Scalar parse_scalar(const std::string& s) {
    auto close = s.find('}');
    if (close == std::string::npos)
        throw std::invalid_argument("bad scalar literal: " + s);
    auto slash = s.find('/', close);
    if (slash == std::string::npos) return Scalar(parse_poly2(s));
    return Scalar(parse_poly2(s.substr(0, slash)), parse_poly2(s.substr(slash + 1)));
}

std::string pretty(const Scalar& s) {
    if (s.is_polynomial()) return pretty(s.num());
    std::string n = pretty(s.num()), d = pretty(s.den());
    if (s.num().terms().size() > 1) n = "(" + n + ")";
    return n + "/(" + d + ")";
}

}  // namespace colorsuper
