#pragma once

#include "colorsuper/algebra.hpp"

#include <array>
#include <string>
#include <vector>

namespace colorsuper {

struct SignatureMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Signature (p, q) with p + q = 2: {gamma_i, gamma_j} = 2 eta_ij,
// eta = diag(+1 x p, -1 x q).
struct Signature {
    int p = 1;
    int q = 1;
    friend bool operator==(Signature, Signature) = default;
    int eta(int i) const;  // i in {1, 2}
};

// Element of the four-dimensional Clifford algebra; basis indexed by the
// gamma set bits: 0 -> 1, 1 -> gamma1, 2 -> gamma2, 3 -> gamma1 gamma2.
class CliffordElement {
  public:
    explicit CliffordElement(Signature s = {}) : sig_(s) {}
    static CliffordElement basis(Signature s, int idx, QSqrt2 c = QSqrt2(1));
    static CliffordElement one(Signature s) { return basis(s, 0); }
    static CliffordElement gamma(Signature s, int i);  // i in {1, 2}

    Signature signature() const { return sig_; }
    const std::array<QSqrt2, 4>& coeffs() const { return c_; }
    bool is_zero() const;

    friend bool operator==(const CliffordElement&, const CliffordElement&) = default;
    CliffordElement operator-() const;
    friend CliffordElement operator+(CliffordElement x, const CliffordElement& y);
    friend CliffordElement operator-(CliffordElement x, const CliffordElement& y);
    CliffordElement scaled(const QSqrt2& c) const;

  private:
    Signature sig_;
    std::array<QSqrt2, 4> c_{};
};

CliffordElement clifford_mul(const CliffordElement& u, const CliffordElement& v);

std::string pretty(const CliffordElement& e);

// Zeta rule read off from the gamma1 gamma2 element of Cl(1,1): the move
// sign comes from commuting gamma1 gamma2 past each basis representative
// and the square from its Clifford square.  Independent of the grading
// bicharacter used by the formal rule.
ZetaRule clifford_zeta_rule();

// Checks that the graded Grassmann generators built from Cl(p,q) tensored
// with two ordinary Grassmann and two commuting coordinates have pairwise
// vanishing graded brackets.
struct GrassmannReport {
    int pairs_checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

GrassmannReport verify_grassmann_realization(Signature s);

}  // namespace colorsuper
