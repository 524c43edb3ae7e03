#pragma once

#include "colorsuper/superfunc.hpp"
#include "colorsuper/verma.hpp"

#include <optional>

namespace colorsuper {

struct NotRealized : std::domain_error {
    using std::domain_error::domain_error;
};

// Eigenvalues of the diagonal generators on the covariant function space.
struct WeightData {
    Scalar h = scalar_h();
    Scalar f = scalar_f();
};

// Derivative word dx^dx * dv1^d1 * dv2^d2 where (v1, v2) are the chart's two
// nilpotent variables; the nilpotent derivatives obey the same sign rule as
// the variables, so d1, d2 are bits.
struct DMono {
    long dx = 0;
    int d1 = 0;
    int d2 = 0;
    friend bool operator==(DMono, DMono) = default;
    friend auto operator<=>(DMono x, DMono y) {
        return std::tuple{x.dx, x.d1, x.d2} <=> std::tuple{y.dx, y.d1, y.d2};
    }
};

// Finite sum of coefficient * derivative-word terms in normal form:
// coefficients (SuperFunction) on the left, derivatives on the right.
class DiffOperator {
  public:
    explicit DiffOperator(Chart c = Chart::psi_pm) : chart_(c) {}
    static DiffOperator multiplication(SuperFunction f);
    static DiffOperator derivative(Chart c, SVar v);

    Chart chart() const { return chart_; }
    const std::map<DMono, SuperFunction>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(DMono d, const SuperFunction& c);

    friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

    DiffOperator operator-() const;
    friend DiffOperator operator+(DiffOperator x, const DiffOperator& y);
    friend DiffOperator operator-(DiffOperator x, const DiffOperator& y);
    DiffOperator& operator+=(const DiffOperator& y);
    DiffOperator& operator-=(const DiffOperator& y);
    DiffOperator scaled(const Scalar& c) const;
    DiffOperator eval_weights(const Rat& h0, const Rat& f0) const;

  private:
    Chart chart_;
    std::map<DMono, SuperFunction> terms_;
};

SuperFunction apply(const DiffOperator& op, const SuperFunction& f);

// Normal-form composition; derivatives cross coefficients by the graded
// Leibniz rule.
DiffOperator compose(const DiffOperator& a, const DiffOperator& b);

// Right-action realization on the coset coordinates (x, psi+, psi-):
// A+ -> d/dx, d+ -> d/dpsi+ + 2 psi- d/dx, d- -> d/dpsi-, N -> h, Ftilde -> f.
// Lowering generators have no realization here and throw NotRealized.
DiffOperator pi_R(Gen g, const WeightData& w = {});

// Maps |k,mu,nu> to pi_R(A+)^k pi_R(d+)^mu pi_R(d-)^nu (leftmost algebra
// factor leftmost in the composition) and sums with the ket coefficients.
DiffOperator realize_singular(const VermaVector& v, const WeightData& w = {});

// Exact chart change of coefficients and derivatives; round trips are the
// identity.  The derivative images follow from psi+- = (psi +- zeta theta)/
// sqrt2: dpsi+- = (dpsi -+ zeta dtheta)/sqrt2 and conversely
// dpsi = (dpsi+ + dpsi-)/sqrt2, dtheta = zeta (dpsi- - dpsi+)/sqrt2.
DiffOperator rewrite_chart(const DiffOperator& op, Chart target);
inline DiffOperator rewrite_in_psi_theta(const DiffOperator& op) {
    return rewrite_chart(op, Chart::psi_theta);
}

// The scalar c with a == b.scaled(c), when one exists and is nonzero.
std::optional<Scalar> proportionality(const DiffOperator& a,
                                      const DiffOperator& b);

// Exact kernel of op on span{x^a v1^b1 v2^b2 : a <= max_x}; throws
// std::domain_error if the image leaves the span.  Coefficients must be
// weight-free (evaluate first).
std::vector<SuperFunction> kernel_basis(const DiffOperator& op, long max_x);

std::string pretty(const DiffOperator& op);

struct TruncationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// First-order left action: factorizes e^(-tau X) e^(xA+) e^(psi+ d+)
// e^(psi- d-) through Ad of the coset element, then reads off the vector
// field from the raising part and the multiplier from the diagonal part
// (the lowering part acts trivially by right covariance).  Derived feature:
// validated only by the homomorphism and intertwining checks.
DiffOperator pi_L_first_order(Gen g, const WeightData& w = {});

// Weight of the target module read from a singular vector: the N eigenvalue
// grows by the level and the Ftilde eigenvalue by mu - nu.
WeightData shifted_weight(const VermaVector& v, const WeightData& w = {});

struct InvarianceReport {
    std::vector<std::pair<Gen, std::string>> violations;
    bool ok() const { return violations.empty(); }
};

// Intertwining check: op pi_L(X; w) = pi_L(X; w') op for every twisted-basis
// generator, as a normal-form operator identity.
InvarianceReport check_invariance(const DiffOperator& op, const WeightData& w,
                                  const WeightData& w_shift);

}  // namespace colorsuper
