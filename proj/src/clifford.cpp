#include "colorsuper/clifford.hpp"

#include <map>
#include <sstream>
#include <tuple>
#include <utility>

namespace colorsuper {

int Signature::eta(int i) const {
    if (p + q != 2 || p < 0 || q < 0)
        throw SignatureMismatch("signature must satisfy p + q = 2");
    if (i < 1 || i > 2) throw std::out_of_range("gamma index out of range");
    return i <= p ? +1 : -1;
}

CliffordElement CliffordElement::basis(Signature s, int idx, QSqrt2 c) {
    if (idx < 0 || idx > 3) throw std::out_of_range("clifford basis index");
    CliffordElement e(s);
    e.c_[idx] = std::move(c);
    return e;
}

CliffordElement CliffordElement::gamma(Signature s, int i) {
    s.eta(i);  // validates
    return basis(s, i == 1 ? 1 : 2);
}

bool CliffordElement::is_zero() const {
    for (const QSqrt2& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

CliffordElement CliffordElement::operator-() const {
    CliffordElement r(sig_);
    for (int i = 0; i < 4; ++i) r.c_[i] = -c_[i];
    return r;
}

CliffordElement operator+(CliffordElement x, const CliffordElement& y) {
    if (x.sig_ != y.sig_) throw SignatureMismatch("mixed signatures");
    for (int i = 0; i < 4; ++i) x.c_[i] += y.c_[i];
    return x;
}

CliffordElement operator-(CliffordElement x, const CliffordElement& y) {
    return x + (-y);
}

CliffordElement CliffordElement::scaled(const QSqrt2& c) const {
    CliffordElement r(sig_);
    for (int i = 0; i < 4; ++i) r.c_[i] = c_[i] * c;
    return r;
}

namespace {

// Product of two basis words (bit 0 = gamma1, bit 1 = gamma2); the words are
// ascending, so appending gamma_i moves it left past the higher gammas and
// contracts a repeated index against eta.
std::pair<int, int> basis_mul(Signature s, int x, int y) {
    int sign = 1;
    for (int i = 1; i <= 2; ++i) {
        if (!(y & (1 << (i - 1)))) continue;
        for (int j = i + 1; j <= 2; ++j)
            if (x & (1 << (j - 1))) sign = -sign;
        if (x & (1 << (i - 1)))
            sign *= s.eta(i);
        x ^= 1 << (i - 1);
    }
    return {sign, x};
}

}  // namespace

CliffordElement clifford_mul(const CliffordElement& u, const CliffordElement& v) {
    if (u.signature() != v.signature()) throw SignatureMismatch("mixed signatures");
    CliffordElement r(u.signature());
    for (int x = 0; x < 4; ++x) {
        if (u.coeffs()[x].is_zero()) continue;
        for (int y = 0; y < 4; ++y) {
            if (v.coeffs()[y].is_zero()) continue;
            auto [sign, idx] = basis_mul(u.signature(), x, y);
            QSqrt2 c = u.coeffs()[x] * v.coeffs()[y];
            r = r + CliffordElement::basis(u.signature(), idx,
                                           sign > 0 ? c : -c);
        }
    }
    return r;
}

std::string pretty(const CliffordElement& e) {
    static const char* names[] = {"1", "g1", "g2", "g1g2"};
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (e.coeffs()[i].is_zero()) continue;
        os << (first ? "" : " + ") << "(" << to_string(e.coeffs()[i]) << ")*"
           << names[i];
        first = false;
    }
    return first ? "0" : os.str();
}

namespace {

int rep_index(Degree d) {
    if (d == Degree{0, 0}) return 0;
    if (d == Degree{1, 0}) return 1;
    if (d == Degree{0, 1}) return 2;
    return 3;
}

}  // namespace

ZetaRule clifford_zeta_rule() {
    Signature s{1, 1};
    CliffordElement z = CliffordElement::basis(s, 3);
    ZetaRule rule;
    rule.move_sign = [s, z](Degree d) {
        CliffordElement r = CliffordElement::basis(s, rep_index(d));
        CliffordElement zr = clifford_mul(z, r);
        CliffordElement rz = clifford_mul(r, z);
        if (zr == rz) return +1;
        if (zr == -rz) return -1;
        throw RelationMismatch("gamma1 gamma2 neither commutes nor anticommutes");
    };
    rule.square = [s, z] {
        CliffordElement zz = clifford_mul(z, z);
        for (int i = 1; i < 4; ++i)
            if (!zz.coeffs()[i].is_zero())
                throw RelationMismatch("(gamma1 gamma2)^2 is not scalar");
        return zz.coeffs()[0];
    };
    return rule;
}

namespace {

// Term of Cl(p,q) tensor Lambda(xi1, xi2) tensor Q[x1, x2].  The tensor
// product is the plain one: factors multiply componentwise with no cross
// sign, and only the xi coordinates anticommute among themselves.
struct TensorKey {
    int cl = 0;                     // clifford basis index
    int xi = 0;                     // bit m-1 set: factor xi_m present
    std::array<int, 2> xp{0, 0};    // exponents of x1, x2
    friend bool operator==(TensorKey, TensorKey) = default;
    friend auto operator<=>(TensorKey a, TensorKey b) {
        return std::tie(a.cl, a.xi, a.xp) <=> std::tie(b.cl, b.xi, b.xp);
    }
};

using TensorElem = std::map<TensorKey, int>;

void add_term(TensorElem& e, TensorKey k, int c) {
    auto it = e.find(k);
    int v = (it == e.end() ? 0 : it->second) + c;
    if (it != e.end()) e.erase(it);
    if (v != 0) e.emplace(k, v);
}

TensorElem tensor_mul(Signature s, const TensorElem& u, const TensorElem& v) {
    TensorElem r;
    for (const auto& [ka, ca] : u)
        for (const auto& [kb, cb] : v) {
            if (ka.xi & kb.xi) continue;  // repeated Grassmann factor
            auto [csign, cl] = basis_mul(s, ka.cl, kb.cl);
            int xsign = 1;  // sort the concatenated xi word
            for (int i = 1; i <= 2; ++i)
                if (kb.xi & (1 << (i - 1)))
                    for (int j = i + 1; j <= 2; ++j)
                        if (ka.xi & (1 << (j - 1))) xsign = -xsign;
            TensorKey k{cl, ka.xi | kb.xi,
                        {ka.xp[0] + kb.xp[0], ka.xp[1] + kb.xp[1]}};
            add_term(r, k, ca * cb * csign * xsign);
        }
    return r;
}

struct GradedGen {
    std::string name;
    Degree deg;
    TensorElem elem;
};

}  // namespace

GrassmannReport verify_grassmann_realization(Signature s) {
    s.eta(1);  // validates the signature
    std::vector<GradedGen> gens;
    for (int m = 0; m < 2; ++m) {
        TensorKey x{0, 0, {m == 0, m == 1}};
        gens.push_back({"z00_" + std::to_string(m + 1), {0, 0}, {{x, 1}}});
        gens.push_back({"z10_" + std::to_string(m + 1), {1, 0},
                        {{TensorKey{1, 1 << m, {0, 0}}, 1}}});
        gens.push_back({"z01_" + std::to_string(m + 1), {0, 1},
                        {{TensorKey{2, 1 << m, {0, 0}}, 1}}});
        gens.push_back({"z11_" + std::to_string(m + 1), {1, 1},
                        {{TensorKey{3, 0, {m == 0, m == 1}}, 1}}});
    }
    GrassmannReport report;
    for (const GradedGen& a : gens)
        for (const GradedGen& b : gens) {
            ++report.pairs_checked;
            int sign = commutation_sign(a.deg, b.deg);
            TensorElem ab = tensor_mul(s, a.elem, b.elem);
            TensorElem ba = tensor_mul(s, b.elem, a.elem);
            TensorElem br = ab;
            for (const auto& [k, c] : ba) add_term(br, k, -sign * c);
            if (!br.empty())
                report.violations.push_back("nonzero bracket [" + a.name + ", " +
                                            b.name + "]");
        }
    return report;
}

}  // namespace colorsuper
