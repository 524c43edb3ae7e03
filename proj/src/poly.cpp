#include "colorsuper/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cctype>
#include <sstream>
#include <vector>

namespace colorsuper {

int Poly2::degree(Var v) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, v == Var::h ? e.h : e.f);
    return d;
}

void Poly2::add_term(Exp e, const QSqrt2& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly2 Poly2::operator-() const {
    Poly2 out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

Poly2 operator+(const Poly2& x, const Poly2& y) {
    Poly2 out = x;
    for (const auto& [e, c] : y.terms_) out.add_term(e, c);
    return out;
}

Poly2 operator-(const Poly2& x, const Poly2& y) {
    Poly2 out = x;
    for (const auto& [e, c] : y.terms_) out.add_term(e, -c);
    return out;
}

Poly2 operator*(const Poly2& x, const Poly2& y) {
    Poly2 out;
    for (const auto& [ex, cx] : x.terms_)
        for (const auto& [ey, cy] : y.terms_)
            out.add_term({ex.h + ey.h, ex.f + ey.f}, cx * cy);
    return out;
}

Poly2 Poly2::scaled(const QSqrt2& c) const {
    Poly2 out;
    if (c.is_zero()) return out;
    for (const auto& [e, k] : terms_) out.terms_[e] = k * c;
    return out;
}

QSqrt2 Poly2::eval(const Rat& h0, const Rat& f0) const {
    QSqrt2 acc;
    for (const auto& [e, c] : terms_) {
        Rat m = 1;
        for (int i = 0; i < e.h; ++i) m *= h0;
        for (int i = 0; i < e.f; ++i) m *= f0;
        acc += c * QSqrt2(m);
    }
    return acc;
}

Poly2 Poly2::substitute(Var v, const Poly2& r) const {
    Poly2 out;
    for (const auto& [e, c] : terms_) {
        int sub_deg = v == Var::h ? e.h : e.f;
        Exp rest = v == Var::h ? Exp{0, e.f} : Exp{e.h, 0};
        Poly2 t = Poly2::monomial(rest, c);
        for (int i = 0; i < sub_deg; ++i) t *= r;
        out += t;
    }
    return out;
}

Poly2 divide_exact(const Poly2& num, const Poly2& den) {
    if (den.is_zero()) throw ZeroDenominator("division by zero polynomial");
    Poly2 rem = num, quot;
    while (!rem.is_zero()) {
        Exp le = rem.leading_exp(), ld = den.leading_exp();
        if (le.h < ld.h || le.f < ld.f)
            throw std::domain_error("inexact polynomial division");
        Exp q{le.h - ld.h, le.f - ld.f};
        QSqrt2 c = rem.leading_coeff() / den.leading_coeff();
        Poly2 m = Poly2::monomial(q, c);
        quot += m;
        rem -= m * den;
    }
    return quot;
}

namespace {

// Univariate polynomials over Q(sqrt2), dense, index = exponent.
using UPoly = std::vector<QSqrt2>;

void utrim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly uscale(UPoly p, const QSqrt2& c) {
    for (auto& k : p) k *= c;
    utrim(p);
    return p;
}

Int round_rat(const Rat& q) {
    Int n = numerator(q), d = denominator(q);  // d > 0
    Int fl = n >= 0 ? Int(n / d) : Int(-((-n + d - 1) / d));
    if (Rat(2) * (q - fl) >= 1) ++fl;
    return fl;
}

// Euclidean gcd in Z[sqrt2] (norm |a^2 - 2b^2| shrinks by >= 1/2 per step).
QSqrt2 zgcd(QSqrt2 x, QSqrt2 y) {
    while (!y.is_zero()) {
        QSqrt2 q = x / y;
        QSqrt2 qr(Rat(round_rat(q.a)), Rat(round_rat(q.b)));
        x -= qr * y;
        std::swap(x, y);
    }
    return x;
}

// log2 of |n| with bit-length scaling so huge integers stay in double range
double log2_abs(const Int& n) {
    if (n == 0) return -1e9;
    Int a = abs(n);
    unsigned b = msb(a);
    int shift = b > 52 ? static_cast<int>(b) - 52 : 0;
    return std::log2((a >> shift).convert_to<double>()) + shift;
}

// log2 of the two real embeddings of a + b*sqrt2; the smaller one is
// recovered from the norm to dodge catastrophic cancellation.
std::pair<double, double> embedding_logs(const QSqrt2& c) {
    Int a = numerator(c.a), b = numerator(c.b);  // integral here
    double ln = log2_abs(a * a - 2 * b * b);
    double big = std::max(log2_abs(a), log2_abs(b) + 0.5);
    // a + b*sqrt2 dominates iff a and b*sqrt2 reinforce each other
    bool plus_big = (a >= 0) == (b >= 0) || a == 0 || b == 0;
    double small = ln - big;
    return plus_big ? std::pair{big, small} : std::pair{small, big};
}

// Scale factor turning a coefficient list into Z[sqrt2] elements with trivial
// Z[sqrt2] content and with the two real embeddings balanced (otherwise
// pseudo-remainder sequences pick up unit factors (1+sqrt2)^k and the integer
// components grow geometrically even though the content stays trivial).
QSqrt2 primitive_multiplier(const std::vector<const QSqrt2*>& cs) {
    Int l = 1;
    for (const QSqrt2* c : cs) {
        l = lcm(l, denominator(c->a));
        l = lcm(l, denominator(c->b));
    }
    QSqrt2 mult{Rat(l), Rat(0)};
    QSqrt2 g;
    for (const QSqrt2* c : cs) g = zgcd(g, *c * mult);
    mult = mult * g.inverse();
    double sp = -1e9, sm = -1e9;
    for (const QSqrt2* c : cs) {
        auto [p, m] = embedding_logs(*c * mult);
        sp = std::max(sp, p);
        sm = std::max(sm, m);
    }
    long k = std::lround((sp - sm) / (2 * std::log2(1 + std::sqrt(2.0))));
    QSqrt2 unit = k >= 0 ? QSqrt2(Rat(-1), Rat(1)) : QSqrt2(Rat(1), Rat(1));
    for (long i = 0; i < std::labs(k); ++i) mult = mult * unit;
    return mult;
}

// Rescales so every coefficient lies in Z[sqrt2] with trivial common
// content.  Keeps Euclidean remainder sequences from blowing up.
void make_primitive(UPoly& p) {
    utrim(p);
    if (p.empty()) return;
    std::vector<const QSqrt2*> cs;
    for (const auto& c : p) cs.push_back(&c);
    QSqrt2 mult = primitive_multiplier(cs);
    for (auto& c : p) c *= mult;
}

// Pseudo-remainder of x by y (both integer-primitive), then primitive again.
UPoly uprem(UPoly x, const UPoly& y) {
    while (x.size() >= y.size() && !x.empty()) {
        QSqrt2 lx = x.back(), ly = y.back();
        std::size_t shift = x.size() - y.size();
        for (auto& c : x) c *= ly;
        for (std::size_t i = 0; i < y.size(); ++i) x[i + shift] -= lx * y[i];
        utrim(x);
        make_primitive(x);
    }
    return x;
}

UPoly ugcd(UPoly x, UPoly y) {
    make_primitive(x);
    make_primitive(y);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        UPoly r = uprem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (!x.empty()) x = uscale(x, x.back().inverse());  // monic
    return x;
}

// View of a Poly2 as a polynomial in h with coefficients in Q(sqrt2)[f].
std::vector<UPoly> as_poly_in_h(const Poly2& p) {
    std::vector<UPoly> out(static_cast<std::size_t>(std::max(p.degree(Var::h), 0)) + 1);
    for (const auto& [e, c] : p.terms()) {
        auto& co = out[static_cast<std::size_t>(e.h)];
        if (co.size() <= static_cast<std::size_t>(e.f)) co.resize(e.f + 1);
        co[static_cast<std::size_t>(e.f)] = c;
    }
    for (auto& co : out) utrim(co);
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

Poly2 from_upoly_f(const UPoly& p) {
    Poly2 out;
    for (std::size_t i = 0; i < p.size(); ++i)
        out.add_term({0, static_cast<int>(i)}, p[i]);
    return out;
}

Poly2 from_poly_in_h(const std::vector<UPoly>& v) {
    Poly2 out;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v[i].size(); ++j)
            out.add_term({static_cast<int>(i), static_cast<int>(j)}, v[i][j]);
    return out;
}

// content in Q(sqrt2)[f] of p viewed in (Q(sqrt2)[f])[h]
Poly2 content_h(const Poly2& p) {
    UPoly g;
    for (const auto& co : as_poly_in_h(p)) g = ugcd(g, co);
    return from_upoly_f(g);
}

Poly2 normalize_leading(const Poly2& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.leading_coeff().inverse());
}

QSqrt2 ueval(const UPoly& p, const Rat& t) {
    QSqrt2 acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * QSqrt2(t) + *it;
    return acc;
}

// p with f := t, as a univariate polynomial in h
UPoly eval_f(const Poly2& p, const Rat& t) {
    UPoly out;
    for (const auto& co : as_poly_in_h(p)) out.push_back(ueval(co, t));
    utrim(out);
    return out;
}

// Newton interpolation through (t_i, v_i); result is a polynomial in f.
UPoly interpolate(const std::vector<Rat>& t, std::vector<QSqrt2> v) {
    std::size_t n = t.size();
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = n - 1; i >= k; --i)
            v[i] = (v[i] - v[i - 1]) / QSqrt2(Rat(t[i] - t[i - k]));
    UPoly p;
    for (std::size_t i = n; i-- > 0;) {
        // p = p * (X - t[i]) + v[i]
        UPoly q(p.size() + 1);
        for (std::size_t j = 0; j < p.size(); ++j) {
            q[j + 1] += p[j];
            q[j] -= p[j] * QSqrt2(t[i]);
        }
        q[0] += v[i];
        p = std::move(q);
        utrim(p);
    }
    return p;
}

bool divides(const Poly2& den, const Poly2& num) {
    try {
        divide_exact(num, den);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

}  // namespace

// Modular bivariate gcd: strip the content in f, then gcd the primitive
// parts by evaluating f at enough points, taking univariate gcds in h, and
// interpolating back (with the leading-coefficient scaling that makes the
// images of a polynomial interpolate to a polynomial).  Verified by trial
// division, so unlucky evaluation points only cost extra iterations.
Poly2 poly_gcd(const Poly2& x, const Poly2& y) {
    if (x.is_zero()) return normalize_leading(y);
    if (y.is_zero()) return normalize_leading(x);
    Poly2 cx = content_h(x), cy = content_h(y);
    Poly2 a = divide_exact(x, cx), b = divide_exact(y, cy);
    auto gx = as_poly_in_h(cx), gy = as_poly_in_h(cy);
    Poly2 cont_gcd = from_upoly_f(ugcd(gx[0], gy[0]));
    if (a.degree(Var::h) == 0 || b.degree(Var::h) == 0)
        return normalize_leading(cont_gcd);  // primitive parts are coprime
    UPoly lca = as_poly_in_h(a).back(), lcb = as_poly_in_h(b).back();
    UPoly gamma = ugcd(lca, lcb);
    std::size_t points = static_cast<std::size_t>(
        std::min(a.degree(Var::f), b.degree(Var::f)) + gamma.size());
    std::vector<Rat> ts;
    std::vector<UPoly> images;  // monic gcds of the evaluated pair
    std::size_t min_deg = SIZE_MAX;
    for (long j = 0;; ++j) {
        Rat t(j);
        if (ueval(lca, t).is_zero() || ueval(lcb, t).is_zero()) continue;
        UPoly g = ugcd(eval_f(a, t), eval_f(b, t));
        if (g.size() == 1) return normalize_leading(cont_gcd);
        if (g.size() > min_deg) continue;  // unlucky point
        if (g.size() < min_deg) {
            min_deg = g.size();
            ts.clear();
            images.clear();
        }
        ts.push_back(t);
        images.push_back(std::move(g));
        if (ts.size() < points) continue;
        // interpolate gamma(t) * image per h-coefficient
        std::vector<UPoly> coeffs(min_deg);
        for (std::size_t k = 0; k < min_deg; ++k) {
            std::vector<QSqrt2> vals;
            for (std::size_t i = 0; i < ts.size(); ++i)
                vals.push_back(images[i][k] * ueval(gamma, ts[i]));
            coeffs[k] = interpolate(ts, std::move(vals));
        }
        Poly2 g2 = from_poly_in_h(coeffs);
        g2 = divide_exact(g2, content_h(g2));
        if (divides(g2, a) && divides(g2, b))
            return normalize_leading(cont_gcd * g2);
        points += 2;  // all current points were unlucky; demand more evidence
    }
}

std::string to_string(const Poly2& p) {
    if (p.is_zero()) return "{h^0 f^0: 0}";
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!first) os << ", ";
        os << "h^" << it->first.h << " f^" << it->first.f << ": "
           << to_string(it->second);
        first = false;
    }
    os << "}";
    return os.str();
}

Poly2 parse_poly2(const std::string& s) {
    auto lb = s.find('{');
    auto rb = s.rfind('}');
    if (lb == std::string::npos || rb == std::string::npos || rb <= lb)
        throw std::invalid_argument("bad polynomial literal: " + s);
    std::string body = s.substr(lb + 1, rb - lb - 1);
    Poly2 out;
    std::size_t pos = 0;
    while (pos < body.size()) {
        auto colon = body.find(':', pos);
        if (colon == std::string::npos) {
            // trailing whitespace only
            for (; pos < body.size(); ++pos)
                if (!std::isspace(static_cast<unsigned char>(body[pos])))
                    throw std::invalid_argument("bad polynomial literal: " + s);
            break;
        }
        std::string key = body.substr(pos, colon - pos);
        int dh = 0, df = 0;
        if (std::sscanf(key.c_str(), " h^%d f^%d", &dh, &df) != 2)
            throw std::invalid_argument("bad monomial key: " + key);
        auto comma = body.find(',', colon);
        std::string val = body.substr(
            colon + 1, (comma == std::string::npos ? body.size() : comma) - colon - 1);
        out.add_term({dh, df}, parse_qsqrt2(val));
        pos = comma == std::string::npos ? body.size() : comma + 1;
    }
    return out;
}

std::string pretty(const Poly2& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Exp e = it->first;
        QSqrt2 c = it->second;
        bool neg = false;
        if (c.b == 0 && c.a < 0) {
            neg = true;
            c = -c;
        } else if (c.a == 0 && c.b < 0) {
            neg = true;
            c = -c;
        }
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;

        std::string mono;
        if (e.h > 0) mono += e.h == 1 ? "h" : "h^" + std::to_string(e.h);
        if (e.f > 0) {
            if (!mono.empty()) mono += "*";
            mono += e.f == 1 ? "f" : "f^" + std::to_string(e.f);
        }
        std::string coeff;
        if (c == QSqrt2(1) && !mono.empty())
            coeff = "";
        else if (c.b == 0) {
            coeff = c.a.str();
            if (coeff.find('/') != std::string::npos) coeff = "(" + coeff + ")";
        } else if (c.a == 0 && c.b == 1)
            coeff = "sqrt2";
        else
            coeff = "(" + to_string(c) + ")";
        if (!coeff.empty() && !mono.empty())
            os << coeff << "*" << mono;
        else
            os << coeff << mono;
    }
    return os.str();
}

}  // namespace colorsuper
