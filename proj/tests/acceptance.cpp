// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include "colorsuper/clifford.hpp"
#include "colorsuper/diffop.hpp"
#include "colorsuper/singular.hpp"

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace colorsuper;

namespace {

const Chart PM = Chart::psi_pm;
const Chart PT = Chart::psi_theta;

DiffOperator deriv(Chart c, SVar v) { return DiffOperator::derivative(c, v); }

DiffOperator op_pow(const DiffOperator& op, long k) {
    DiffOperator r = DiffOperator::multiplication(
        SuperFunction::constant(op.chart(), Scalar(1)));
    for (long i = 0; i < k; ++i) r = compose(r, op);
    return r;
}

DiffOperator third_operator(long n, Scalar alpha) {
    DiffOperator inner = deriv(PM, SVar::x) +
                         compose(pi_R(Gen::dp), pi_R(Gen::dm)).scaled(alpha);
    return compose(inner, op_pow(deriv(PM, SVar::x), n - 1));
}

VermaVector even_family_vector(long n, const Scalar& alpha) {
    return VermaVector::ket({n, 0, 0}) + VermaVector::ket({n - 1, 1, 1}, alpha);
}

// 1. Bracket-table axioms: closure, antisymmetry, 512 Jacobi triples, < 1 s.
bool axioms(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    AxiomReport rep = check_axioms(StructureTable());
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    std::ostringstream os;
    os << rep.closure_checks << " closure, " << rep.antisymmetry_checks
       << " antisymmetry, " << rep.jacobi_checks << " Jacobi checks, "
       << rep.violations.size() << " violations, " << secs << " s";
    detail = os.str();
    return rep.ok() && rep.closure_checks == 64 && rep.antisymmetry_checks == 64 &&
           rep.jacobi_checks == 512 && secs < 1.0;
}

// 2. Anti-involution reverses every bracket and squares to the identity.
bool anti_involution(std::string& detail) {
    auto rep = standard_algebra().check_anti_involution();
    detail = "64 bracket pairs, 8 generators";
    return rep.ok();
}

// 3. Twisted-basis brackets via the zeta extension match the stated
//    relations, independently reproduced by the Clifford gamma1*gamma2 oracle.
bool basis_change(std::string& detail) {
    try {
        standard_algebra().build_new_basis();
        ColorAlgebra clifford_alg(StructureTable(), clifford_zeta_rule());
        clifford_alg.build_new_basis();
        for (Gen x : new_basis())
            for (Gen y : new_basis())
                if (clifford_alg.new_basis_bracket(x, y) !=
                    standard_algebra().new_basis_bracket(x, y)) {
                    detail = "Clifford oracle disagrees at (" + name_of(x) + ", " +
                             name_of(y) + ")";
                    return false;
                }
    } catch (const RelationMismatch& e) {
        detail = e.what();
        return false;
    }
    detail = "64 relations, formal and Clifford zeta rules";
    return true;
}

// 4. Closed-form module action equals the straightening oracle, symbolic
//    weights, all twisted-basis generators, kets with k <= 5.
bool verma_actions(std::string& detail) {
    int checks = 0;
    for (Gen g : new_basis())
        for (long k = 0; k <= 5; ++k)
            for (int mu : {0, 1})
                for (int nu : {0, 1}) {
                    BasisKet b{k, mu, nu};
                    ++checks;
                    if (act(g, b) != act_oracle(g, b)) {
                        detail = "mismatch at " + name_of(g) + " " + to_string(b);
                        return false;
                    }
                }
    detail = std::to_string(checks) + " generator/ket pairs, symbolic weights";
    return true;
}

// 5. Bracket compatibility on the module: [[x,y]] acts as the graded
//    commutator of the actions, all ordered pairs, kets with k <= 3.
bool representation(std::string& detail) {
    const ColorAlgebra& alg = standard_algebra();
    int checks = 0;
    for (Gen x : new_basis())
        for (Gen y : new_basis())
            for (long k = 0; k <= 3; ++k)
                for (int mu : {0, 1})
                    for (int nu : {0, 1}) {
                        VermaVector v = VermaVector::ket({k, mu, nu});
                        int s = commutation_sign(degree_of(x), degree_of(y));
                        VermaVector lhs = act(x, act(y, v));
                        VermaVector other = act(y, act(x, v));
                        lhs = s > 0 ? lhs - other : lhs + other;
                        VermaVector rhs;
                        for (const auto& [key, c] :
                             alg.new_basis_bracket(x, y).terms()) {
                            if (key.zeta != 0) {
                                detail = "zeta term in bracket (" + name_of(x) +
                                         ", " + name_of(y) + ")";
                                return false;
                            }
                            rhs += act(key.gen, v).scaled(c);
                        }
                        ++checks;
                        if (lhs != rhs) {
                            detail = "mismatch at (" + name_of(x) + ", " +
                                     name_of(y) + ") on |" + std::to_string(k) +
                                     "," + std::to_string(mu) + "," +
                                     std::to_string(nu) + ">";
                            return false;
                        }
                    }
    detail = std::to_string(checks) + " pair/ket checks, symbolic weights";
    return true;
}

// 6. Symbolic classification up to level 12: exactly the two level-1 families
//    and the even-level family for n <= 6; the even-level condition system
//    has the expected closed form.
bool classification(std::string& detail) {
    const Poly2 H = poly_h();
    const Poly2 F = poly_f();
    auto fams = classify_singular_symbolic(12);
    if (fams.size() != 8) {
        detail = "expected 8 families, got " + std::to_string(fams.size());
        return false;
    }
    bool ok = fams[0].level == 1 && fams[0].equal_zero == std::vector<Poly2>{H + F} &&
              fams[0].nonzero.empty() &&
              fams[0].vector == VermaVector::ket({0, 0, 1}) && fams[1].level == 1 &&
              fams[1].equal_zero == std::vector<Poly2>{H - F} &&
              fams[1].nonzero.empty() && fams[1].vector == VermaVector::ket({0, 1, 0});
    for (long n = 1; ok && n <= 6; ++n) {
        const SingularFamily& fam = fams[1 + n];
        Scalar alpha = Scalar(Poly2(n), F - Poly2(n));
        ok = fam.level == 2 * n && fam.equal_zero == std::vector<Poly2>{H + Poly2(n)} &&
             fam.nonzero == std::vector<Poly2>{F - Poly2(n)} &&
             fam.vector == even_family_vector(n, alpha);
    }
    if (!ok) {
        detail = "family data differs from the closed form";
        return false;
    }
    for (long n = 2; n <= 6; ++n) {
        Poly2 N(n);
        std::vector<AlphaEq> want{
            {N, H + Poly2(2 * n) - F},
            {N, -(H + F)},
            {N * (H + Poly2(n - 1)), H + F},
            {Poly2(), H + Poly2(n)},
        };
        if (even_level_conditions(n) != want) {
            detail = "even-level conditions differ at n = " + std::to_string(n);
            return false;
        }
    }
    std::vector<AlphaEq> one{
        {Poly2(1), H + Poly2(2) - F},
        {Poly2(1), -(H + F)},
        {H, H + F},
    };
    if (even_level_conditions(1) != one) {
        detail = "even-level conditions differ at n = 1";
        return false;
    }
    detail = "8 families up to level 12; condition systems for n <= 6";
    return true;
}

std::vector<Rat> rational_grid() {
    std::vector<Rat> grid;
    for (long p = -5; p <= 5; ++p)
        for (long q = 1; q <= 5; ++q) {
            Rat r(p, q);
            bool seen = false;
            for (const Rat& s : grid) seen = seen || s == r;
            if (!seen) grid.push_back(r);
        }
    return grid;
}

// 7. Numeric scan to level 12 equals the symbolic specialization on the
//    rational grid; every reported vector is annihilated by the lowering
//    generators.
bool numeric_scan(std::string& detail) {
    auto fams = classify_singular_symbolic(12);
    std::vector<Rat> grid = rational_grid();
    int points = 0;
    for (const Rat& h0 : grid)
        for (const Rat& f0 : grid) {
            ++points;
            SingularReport r = find_singular_numeric(h0, f0, 12);
            std::vector<SingularHit> expect;
            for (const SingularFamily& fam : fams)
                if (fam.holds_at(h0, f0))
                    expect.push_back({fam.level, fam.vector.at_weight(h0, f0)});
            if (r.hits != expect) {
                detail = "scan/specialization mismatch at h=" + h0.str() +
                         ", f=" + f0.str();
                return false;
            }
            for (const SingularHit& hit : r.hits)
                for (Gen g : {Gen::Am, Gen::cp, Gen::cm})
                    if (!act(g, hit.vector).at_weight(h0, f0).is_zero()) {
                        detail = "vector not annihilated by " + name_of(g) +
                                 " at h=" + h0.str() + ", f=" + f0.str();
                        return false;
                    }
        }
    detail = std::to_string(points) + " grid points, level cap 12";
    return true;
}

// 8. Irreducibility certificate agrees with scan emptiness on the same grid.
bool irreducibility(std::string& detail) {
    std::vector<Rat> grid = rational_grid();
    int points = 0;
    for (const Rat& h0 : grid)
        for (const Rat& f0 : grid) {
            ++points;
            auto cert = is_irreducible(h0, f0);
            if (cert.irreducible != find_singular_numeric(h0, f0, 12).empty()) {
                detail = "disagreement at h=" + h0.str() + ", f=" + f0.str();
                return false;
            }
        }
    detail = std::to_string(points) + " grid points";
    return true;
}

// 9. The singular vectors realize as the closed-form differential operators,
//    and the chart rewrite produces the expected equations including the
//    -(n zeta/(f-n)) dpsi dtheta dx^(n-1) cross term.
bool operator_realization(std::string& detail) {
    if (realize_singular(VermaVector::ket({0, 0, 1})) != pi_R(Gen::dm) ||
        realize_singular(VermaVector::ket({0, 1, 0})) != pi_R(Gen::dp)) {
        detail = "level-1 realization mismatch";
        return false;
    }
    Scalar rt = Scalar(inv_sqrt2());
    SuperFunction zeta = SuperFunction::variable(PT, SVar::zeta);
    DiffOperator eq1 = deriv(PT, SVar::psi) +
                       compose(DiffOperator::multiplication(zeta),
                               deriv(PT, SVar::theta));
    if (proportionality(rewrite_in_psi_theta(pi_R(Gen::dm)), eq1) !=
        std::optional<Scalar>(rt)) {
        detail = "first rewritten equation mismatch";
        return false;
    }
    SuperFunction psi_m_zt = SuperFunction::variable(PT, SVar::psi);
    psi_m_zt.add_term({0, 1, 0, 1}, Scalar(-1));
    DiffOperator eq2 = deriv(PT, SVar::psi) -
                       compose(DiffOperator::multiplication(zeta),
                               deriv(PT, SVar::theta)) +
                       compose(DiffOperator::multiplication(psi_m_zt.scaled(Scalar(2))),
                               deriv(PT, SVar::x));
    if (proportionality(rewrite_in_psi_theta(pi_R(Gen::dp)), eq2) !=
        std::optional<Scalar>(rt)) {
        detail = "second rewritten equation mismatch";
        return false;
    }
    for (long n = 1; n <= 6; ++n) {
        Scalar alpha = Scalar(Poly2(n), poly_f() - Poly2(n));
        if (realize_singular(even_family_vector(n, alpha)) !=
            third_operator(n, alpha)) {
            detail = "even-level realization mismatch at n = " + std::to_string(n);
            return false;
        }
        DiffOperator got = rewrite_in_psi_theta(third_operator(n, alpha));
        auto it = got.terms().find({n - 1, 1, 1});
        if (it == got.terms().end() ||
            it->second != SuperFunction::monomial(PT, {0, 1, 0, 0}, -alpha)) {
            detail = "cross-term coefficient mismatch at n = " + std::to_string(n);
            return false;
        }
        if (rewrite_chart(got, PM) != third_operator(n, alpha)) {
            detail = "chart round trip fails at n = " + std::to_string(n);
            return false;
        }
    }
    detail = "three operator families, both charts, n <= 6";
    return true;
}

// 10. Graded Grassmann numbers from Clifford tensor Grassmann coordinates.
bool grassmann(std::string& detail) {
    int pairs = 0;
    for (Signature s : {Signature{1, 1}, Signature{2, 0}}) {
        GrassmannReport rep = verify_grassmann_realization(s);
        pairs += rep.pairs_checked;
        if (!rep.ok()) {
            detail = "violation for Cl(" + std::to_string(s.p) + "," +
                     std::to_string(s.q) + "): " + rep.violations.front();
            return false;
        }
    }
    detail = std::to_string(pairs) + " bracket pairs, signatures (1,1) and (2,0)";
    return true;
}

// 11. (a+)^2 - (b+)^2 straightens to zero, so monomials in a+, b+ alone
//     cannot carry the module.
bool naive_collapse(std::string& detail) {
    CollapseWitness w = naive_collapse_witness();
    NormalForm ap;
    ap.add_term({Gen::Ap}, Scalar(1));
    if (!w.normal_form.is_zero() || w.square != ap) {
        detail = "collapse witness differs";
        return false;
    }
    detail = "(a+)^2 - (b+)^2 = 0, (a+)^2 = A+";
    return true;
}

// 12. First-order left action: representation property for all 64 pairs,
//     and zero intertwining residual for the realized operators with the
//     derived weight shifts.
bool left_action(std::string& detail) {
    const ColorAlgebra& alg = standard_algebra();
    WeightData w;
    for (Gen x : new_basis())
        for (Gen y : new_basis()) {
            int s = commutation_sign(degree_of(x), degree_of(y));
            DiffOperator lhs = compose(pi_L_first_order(x, w), pi_L_first_order(y, w));
            DiffOperator rhs = compose(pi_L_first_order(y, w), pi_L_first_order(x, w));
            lhs = s > 0 ? lhs - rhs : lhs + rhs;
            DiffOperator want(PM);
            for (const auto& [key, c] : alg.new_basis_bracket(x, y).terms())
                want += pi_L_first_order(key.gen, w).scaled(c);
            if (lhs != want) {
                detail = "representation fails at (" + name_of(x) + ", " +
                         name_of(y) + ")";
                return false;
            }
        }
    auto intertwines = [](const VermaVector& v, const Rat& h0, const Rat& f0) {
        WeightData wd{Scalar(h0), Scalar(f0)};
        DiffOperator op = realize_singular(v, wd).eval_weights(h0, f0);
        return check_invariance(op, wd, shifted_weight(v, wd)).ok();
    };
    if (!intertwines(VermaVector::ket({0, 0, 1}), 2, -2) ||
        !intertwines(VermaVector::ket({0, 1, 0}), 3, 3)) {
        detail = "level-1 intertwining fails";
        return false;
    }
    for (long n = 1; n <= 3; ++n) {
        Rat f0(7, 2);
        Scalar alpha = Scalar(Rat(n) / (f0 - n));
        if (!intertwines(even_family_vector(n, alpha), Rat(-n), f0)) {
            detail = "even-level intertwining fails at n = " + std::to_string(n);
            return false;
        }
    }
    detail = "64 bracket pairs symbolic; intertwining for all three families";
    return true;
}

struct Criterion {
    int number;
    const char* title;
    bool (*run)(std::string&);
    bool optional;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "graded bracket axioms", axioms, false},
        {2, "anti-involution", anti_involution, false},
        {3, "twisted basis via the zeta extension + Clifford oracle", basis_change,
         false},
        {4, "closed-form module action vs straightening oracle", verma_actions,
         false},
        {5, "bracket compatibility on the module", representation, false},
        {6, "symbolic singular-vector classification", classification, false},
        {7, "numeric scan vs symbolic specialization", numeric_scan, false},
        {8, "irreducibility certificates vs scan", irreducibility, false},
        {9, "operator realization and chart rewrite", operator_realization, false},
        {10, "graded Grassmann realization", grassmann, false},
        {11, "naive-construction collapse witness", naive_collapse, false},
        {12, "first-order left action and intertwining (optional)", left_action,
         true},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok && !c.optional) ++failures;
        std::cout << "criterion " << c.number << ": " << (ok ? "PASS" : "FAIL")
                  << "  " << c.title << " (" << detail << ")\n";
    }
    return failures == 0 ? 0 : 1;
}
