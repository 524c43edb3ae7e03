#pragma once

#include "colorsuper/grading.hpp"
#include "colorsuper/scalar.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace colorsuper {

struct UnknownGenerator : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct RelationMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Generators of the eight-dimensional algebra (Am..F) and of the zeta-twisted
// basis (cm..Ft) used for the Verma-module construction.
enum class Gen : int {
    Am = 0, Ap, N, bm, bp, am, ap, F,   // original basis
    cm, cp, dm, dp, Ft                  // twisted basis
};

inline constexpr int kNumGens = 13;
inline constexpr int kNumOldGens = 8;

inline constexpr std::array<Gen, 8> old_basis() {
    return {Gen::Am, Gen::Ap, Gen::N, Gen::bm, Gen::bp, Gen::am, Gen::ap, Gen::F};
}
// Twisted basis spanning the same algebra: A-, A+, N stay, a/b/F are replaced
// by c+-, d+-, Ftilde.
inline constexpr std::array<Gen, 8> new_basis() {
    return {Gen::Am, Gen::Ap, Gen::N, Gen::cm, Gen::cp, Gen::dm, Gen::dp, Gen::Ft};
}

Degree degree_of(Gen g);
std::string name_of(Gen g);
Gen gen_from_name(const std::string& name);
bool is_old_basis(Gen g);

// zeta_power in {0,1}; terms are kept with zeta on the left.
struct TermKey {
    int zeta = 0;
    Gen gen = Gen::Am;
    friend bool operator==(TermKey, TermKey) = default;
    friend auto operator<=>(TermKey x, TermKey y) {
        return std::pair{x.zeta, static_cast<int>(x.gen)} <=>
               std::pair{y.zeta, static_cast<int>(y.gen)};
    }
};

// Finite linear combination of (possibly zeta-twisted) generators.
class AlgebraElement {
  public:
    using Terms = std::map<TermKey, Scalar>;

    AlgebraElement() = default;
    static AlgebraElement generator(Gen g) { return term(0, g, Scalar(1)); }
    static AlgebraElement term(int zeta, Gen g, Scalar c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(TermKey k, const Scalar& c);

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

    AlgebraElement operator-() const;
    friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
    friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);
    AlgebraElement& operator+=(const AlgebraElement& y) { return *this = *this + y; }
    AlgebraElement& operator-=(const AlgebraElement& y) { return *this = *this - y; }
    AlgebraElement scaled(const Scalar& c) const;

    // Degree of a homogeneous element (zeta contributes (1,1) per power);
    // nullopt for 0 or inhomogeneous combinations.
    std::optional<Degree> homogeneous_degree() const;

  private:
    Terms terms_;
};

std::string pretty(const AlgebraElement& e);

// Rule for moving zeta past a homogeneous generator and for reducing zeta^2.
// The formal rule uses the grading sign; the Clifford realization supplies an
// independent one (see clifford.hpp).
struct ZetaRule {
    std::function<int(Degree)> move_sign;  // zeta X = move_sign(deg X) X zeta
    std::function<QSqrt2()> square;        // value of zeta^2
};
ZetaRule formal_zeta_rule();

// The graded bracket table of the original eight generators.
class StructureTable {
  public:
    StructureTable();  // the defining relations of the algebra

    const AlgebraElement& entry(Gen x, Gen y) const;
    void set_entry(Gen x, Gen y, AlgebraElement v);

  private:
    std::array<std::array<AlgebraElement, kNumOldGens>, kNumOldGens> table_;
};

struct AxiomViolation {
    std::string kind;  // "closure" | "antisymmetry" | "jacobi"
    std::vector<Gen> gens;
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    int closure_checks = 0;
    int antisymmetry_checks = 0;
    int jacobi_checks = 0;
    bool ok() const { return violations.empty(); }
};

AxiomReport check_axioms(const StructureTable& t);

class ColorAlgebra {
  public:
    explicit ColorAlgebra(StructureTable table = StructureTable(),
                          ZetaRule rule = formal_zeta_rule());

    const StructureTable& table() const { return table_; }

    // Graded bracket, bilinear over Scalar.  Twisted generators are expanded
    // through the defining change of basis; if every input term is a twisted
    // generator the result is converted back to the twisted basis.
    AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;

    // Bracket computed entirely in the zeta-extended original basis.
    AlgebraElement bracket_zeta_old(const AlgebraElement& x,
                                    const AlgebraElement& y) const;

    // Expansion of c+-, d+-, Ftilde into zeta-twisted original generators.
    AlgebraElement expand_to_old(const AlgebraElement& e) const;
    // Inverse where it exists; throws RelationMismatch when the element does
    // not lie in the span of the twisted basis.
    AlgebraElement to_new_basis(const AlgebraElement& e) const;

    // Anti-involution: A+- <-> A-+, a+- <-> a-+, b+- <-> b-+, N, F fixed;
    // zeta is carried through with the order-reversal sign, which maps
    // c+- to d+- and fixes Ftilde.
    AlgebraElement omega(const AlgebraElement& e) const;

    struct AntiInvolutionReport {
        std::vector<std::pair<Gen, Gen>> bracket_failures;
        std::vector<Gen> involution_failures;
        bool ok() const {
            return bracket_failures.empty() && involution_failures.empty();
        }
    };
    AntiInvolutionReport check_anti_involution() const;

    // Computes all brackets among the twisted basis through the zeta
    // extension, checks them against the stated relations, and returns the
    // bracket value for each ordered pair.  Throws RelationMismatch on any
    // difference.
    std::map<std::pair<Gen, Gen>, AlgebraElement> build_new_basis() const;

    // Bracket of two single twisted-basis generators, from the cached table.
    const AlgebraElement& new_basis_bracket(Gen x, Gen y) const;

  private:
    AlgebraElement bracket_terms(TermKey kx, TermKey ky) const;

    StructureTable table_;
    ZetaRule rule_;
    mutable std::optional<std::map<std::pair<Gen, Gen>, AlgebraElement>> new_table_;
};

// Shared instance with the defining table and the formal zeta rule.
const ColorAlgebra& standard_algebra();

}  // namespace colorsuper
