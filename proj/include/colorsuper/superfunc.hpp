#pragma once

#include "colorsuper/grading.hpp"
#include "colorsuper/scalar.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace colorsuper {

struct ChartMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Two coordinate charts on the graded function space: (x, zeta, psi+, psi-)
// and (x, zeta, psi, theta), related by psi+- = (psi +- zeta theta)/sqrt2.
enum class Chart { psi_pm, psi_theta };

enum class SVar : int { x, zeta, psi_plus, psi_minus, psi, theta };

// Degrees: x (0,0); zeta (1,1) with zeta^2 = 1; psi+, psi-, psi all (0,1);
// theta (1,0).  A variable is Grassmann-type exactly when its degree
// anticommutes with itself, which forces square zero.
struct GradedVariable {
    SVar var;
    std::string name;
    Degree degree;
    bool grassmann;
};

const GradedVariable& variable_info(SVar v);
const std::vector<SVar>& chart_variables(Chart c);
bool in_chart(SVar v, Chart c);
std::string to_string(Chart c);

// Canonical monomial x^xpow * zeta^z * v1^b1 * v2^b2 where (v1, v2) is
// (psi+, psi-) or (psi, theta) depending on the chart.
struct SuperMono {
    long xpow = 0;
    int z = 0;
    int b1 = 0;
    int b2 = 0;
    friend bool operator==(SuperMono, SuperMono) = default;
    friend auto operator<=>(SuperMono x, SuperMono y) {
        return std::tuple{x.xpow, x.z, x.b1, x.b2} <=>
               std::tuple{y.xpow, y.z, y.b1, y.b2};
    }
};

class SuperFunction {
  public:
    using Terms = std::map<SuperMono, Scalar>;

    explicit SuperFunction(Chart c = Chart::psi_pm) : chart_(c) {}
    static SuperFunction constant(Chart c, Scalar s);
    static SuperFunction monomial(Chart c, SuperMono m, Scalar s);
    static SuperFunction variable(Chart c, SVar v);

    Chart chart() const { return chart_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(SuperMono m, const Scalar& c);

    friend bool operator==(const SuperFunction&, const SuperFunction&) = default;

    SuperFunction operator-() const;
    friend SuperFunction operator+(SuperFunction x, const SuperFunction& y);
    friend SuperFunction operator-(SuperFunction x, const SuperFunction& y);
    SuperFunction& operator+=(const SuperFunction& y);
    SuperFunction& operator-=(const SuperFunction& y);
    SuperFunction scaled(const Scalar& c) const;

    SuperFunction eval_weights(const Rat& h0, const Rat& f0) const;

  private:
    Chart chart_;
    Terms terms_;
};

// Graded-commutative product: signs from the degree pairing, psi-type
// squares collapse to 0 and zeta^2 to 1.
SuperFunction super_mul(const SuperFunction& f, const SuperFunction& g);

// Left graded derivative: moves v to the front of the canonical monomial,
// picking up the commutation sign past each variable it crosses, then strips
// it; d/dx is the ordinary derivative.  zeta has no consistent derivation
// (zeta^2 = 1 breaks Leibniz), so v = zeta throws.
SuperFunction derive(SVar v, const SuperFunction& f);

// Exact substitution between the charts; the round trip is the identity.
SuperFunction change_chart(const SuperFunction& f, Chart target);

// e.g. "2*x^2*psi+ + (1/3)*zeta*theta"
std::string pretty(const SuperFunction& f);

}  // namespace colorsuper
