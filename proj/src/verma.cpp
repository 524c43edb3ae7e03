#include "colorsuper/verma.hpp"

#include <sstream>

namespace colorsuper {

std::string to_string(const BasisKet& b) {
    std::ostringstream os;
    os << b.k << "," << b.mu << "," << b.nu;
    return os.str();
}

BasisKet ket_from_string(const std::string& s) {
    std::istringstream is(s);
    BasisKet b;
    char c1 = 0, c2 = 0;
    if (!(is >> b.k >> c1 >> b.mu >> c2 >> b.nu) || c1 != ',' || c2 != ',' ||
        b.k < 0 || b.mu < 0 || b.mu > 1 || b.nu < 0 || b.nu > 1)
        throw std::invalid_argument("bad ket: " + s);
    return b;
}

VermaVector VermaVector::ket(const BasisKet& b, Scalar c) {
    VermaVector v;
    v.add_term(b, c);
    return v;
}

void VermaVector::add_term(const BasisKet& b, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

VermaVector VermaVector::operator-() const {
    VermaVector out;
    for (const auto& [b, c] : terms_) out.terms_[b] = -c;
    return out;
}

VermaVector operator+(const VermaVector& x, const VermaVector& y) {
    VermaVector out = x;
    for (const auto& [b, c] : y.terms_) out.add_term(b, c);
    return out;
}

VermaVector operator-(const VermaVector& x, const VermaVector& y) {
    VermaVector out = x;
    for (const auto& [b, c] : y.terms_) out.add_term(b, -c);
    return out;
}

VermaVector VermaVector::scaled(const Scalar& c) const {
    VermaVector out;
    if (c.is_zero()) return out;
    for (const auto& [b, k] : terms_) out.terms_[b] = k * c;
    return out;
}

VermaVector VermaVector::at_weight(const Rat& h0, const Rat& f0) const {
    VermaVector out;
    for (const auto& [b, c] : terms_) out.add_term(b, Scalar(c.eval(h0, f0)));
    return out;
}

std::string pretty(const VermaVector& v) {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : v.terms()) {
        if (!first) os << " + ";
        os << "(" << pretty(c) << ")|" << to_string(b) << ">";
        first = false;
    }
    return os.str();
}

VermaVector act(Gen g, const BasisKet& b) {
    const Scalar h = scalar_h(), f = scalar_f();
    const auto [k, mu, nu] = b;
    VermaVector out;
    switch (g) {
        using enum Gen;
        case N:
            out.add_term(b, h + Scalar(2 * k + mu + nu));
            break;
        case Ft:
            out.add_term(b, f + Scalar(mu - nu));
            break;
        case Ap:
            out.add_term({k + 1, mu, nu}, Scalar(1));
            break;
        case dp:
            if (mu == 0) out.add_term({k, 1, nu}, Scalar(1));
            break;
        case dm:
            if (nu == 0) out.add_term({k, mu, 1}, Scalar(mu ? -1 : 1));
            if (mu == 1) out.add_term({k + 1, 0, nu}, Scalar(2));
            break;
        case Am:
            out.add_term({k - 1, mu, nu},
                         Scalar(4 * k) * (h + Scalar(k + mu + nu - 1)));
            if (mu == 1 && nu == 1)
                out.add_term({k, 0, 0}, Scalar(4) * (h + f));
            break;
        case cp:
            if (mu == 1)
                out.add_term({k, 0, nu},
                             Scalar(2) * (h + Scalar(2 * k + 2 * nu) - f));
            if (nu == 0)
                out.add_term({k - 1, mu, 1}, Scalar(mu ? -2 * k : 2 * k));
            break;
        case cm:
            if (nu == 1)
                out.add_term({k, mu, 0}, Scalar(mu ? -2 : 2) * (h + f));
            if (mu == 0) out.add_term({k - 1, 1, nu}, Scalar(2 * k));
            break;
        default:
            throw UnknownGenerator("act: " + name_of(g) +
                                   " is not a twisted-basis generator");
    }
    // terms with k-1 < 0 carry the factor k = 0 and were already dropped as
    // zero coefficients, but guard anyway
    VermaVector clean;
    for (const auto& [bb, c] : out.terms())
        if (bb.k >= 0) clean.add_term(bb, c);
    return clean;
}

VermaVector act(Gen g, const VermaVector& v) {
    VermaVector out;
    for (const auto& [b, c] : v.terms()) out += act(g, b).scaled(c);
    return out;
}

VermaVector act_oracle(Gen g, const BasisKet& b, const ColorAlgebra& alg) {
    using enum Gen;
    Word w;
    w.factors.push_back(g);
    for (long i = 0; i < b.k; ++i) w.factors.push_back(Ap);
    if (b.mu) w.factors.push_back(dp);
    if (b.nu) w.factors.push_back(dm);
    NormalForm nf = straighten(w, Pivot::leftmost, alg);
    VermaVector out;
    for (const auto& [mono, c] : nf.terms()) {
        BasisKet kt;
        Scalar coeff = c;
        bool killed = false;
        for (Gen x : mono) {
            switch (x) {
                case Ap: ++kt.k; break;
                case dp: kt.mu = 1; break;
                case dm: kt.nu = 1; break;
                case N: coeff *= scalar_h(); break;
                case Ft: coeff *= scalar_f(); break;
                default: killed = true; break;  // lowering factor
            }
            if (killed) break;
        }
        if (!killed) out.add_term(kt, coeff);
    }
    return out;
}

std::vector<BasisKet> level_subspace(long m) {
    if (m == 0) return {{0, 0, 0}};
    long n = m / 2;
    if (m % 2) return {{n, 0, 1}, {n, 1, 0}};
    return {{n, 0, 0}, {n - 1, 1, 1}};
}

}  // namespace colorsuper
