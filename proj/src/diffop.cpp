#include "colorsuper/diffop.hpp"

#include <sstream>

namespace colorsuper {

namespace {

SVar chart_v1(Chart c) { return chart_variables(c)[2]; }
SVar chart_v2(Chart c) { return chart_variables(c)[3]; }

Degree mono_degree(Chart c, SuperMono m) {
    Degree d{};
    if (m.z) d = add(d, Degree{1, 1});
    if (m.b1) d = add(d, variable_info(chart_v1(c)).degree);
    if (m.b2) d = add(d, variable_info(chart_v2(c)).degree);
    return d;
}

// Prepends the elementary derivative in v to the canonical word d; the sign
// collects the transpositions needed to restore canonical order.  nullopt
// when a nilpotent derivative repeats.
std::optional<std::pair<DMono, int>> prepend(Chart c, SVar v, DMono d) {
    if (v == SVar::x) return std::pair{DMono{d.dx + 1, d.d1, d.d2}, 1};
    if (v == chart_v1(c)) {
        if (d.d1) return std::nullopt;
        return std::pair{DMono{d.dx, 1, d.d2}, 1};
    }
    if (d.d2) return std::nullopt;
    int sign = d.d1 ? commutation_sign(variable_info(chart_v2(c)).degree,
                                       variable_info(chart_v1(c)).degree)
                    : 1;
    return std::pair{DMono{d.dx, d.d1, 1}, sign};
}

}  // namespace

DiffOperator DiffOperator::multiplication(SuperFunction f) {
    DiffOperator op(f.chart());
    op.add_term({}, f);
    return op;
}

DiffOperator DiffOperator::derivative(Chart c, SVar v) {
    if (!in_chart(v, c) || v == SVar::zeta)
        throw ChartMismatch("no derivative in " + variable_info(v).name +
                            " on chart " + to_string(c));
    DMono d;
    if (v == SVar::x)
        d.dx = 1;
    else if (v == chart_v1(c))
        d.d1 = 1;
    else
        d.d2 = 1;
    DiffOperator op(c);
    op.add_term(d, SuperFunction::constant(c, Scalar(1)));
    return op;
}

void DiffOperator::add_term(DMono d, const SuperFunction& c) {
    if (c.is_zero()) return;
    if (c.chart() != chart_) throw ChartMismatch("mixed charts");
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOperator DiffOperator::operator-() const {
    DiffOperator r(chart_);
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
    return r;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& y) {
    if (chart_ != y.chart_) throw ChartMismatch("mixed charts");
    for (const auto& [d, c] : y.terms_) add_term(d, c);
    return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& y) {
    return *this += -y;
}

DiffOperator operator+(DiffOperator x, const DiffOperator& y) { return x += y; }
DiffOperator operator-(DiffOperator x, const DiffOperator& y) { return x -= y; }

DiffOperator DiffOperator::scaled(const Scalar& c) const {
    DiffOperator r(chart_);
    for (const auto& [d, s] : terms_) r.add_term(d, s.scaled(c));
    return r;
}

DiffOperator DiffOperator::eval_weights(const Rat& h0, const Rat& f0) const {
    DiffOperator r(chart_);
    for (const auto& [d, s] : terms_) r.add_term(d, s.eval_weights(h0, f0));
    return r;
}

SuperFunction apply(const DiffOperator& op, const SuperFunction& f) {
    if (op.chart() != f.chart()) throw ChartMismatch("mixed charts");
    SuperFunction r(f.chart());
    for (const auto& [d, c] : op.terms()) {
        SuperFunction g = f;
        if (d.d2) g = derive(chart_v2(f.chart()), g);
        if (d.d1) g = derive(chart_v1(f.chart()), g);
        for (long i = 0; i < d.dx; ++i) g = derive(SVar::x, g);
        r += super_mul(c, g);
    }
    return r;
}

namespace {

using TermMap = std::map<DMono, SuperFunction>;

// d/dv composed with sum of (coefficient, word) terms: Leibniz with the
// commutation sign of the derivative past each coefficient monomial.
TermMap derivative_compose(Chart ch, SVar v, const TermMap& terms) {
    Degree dv = variable_info(v).degree;
    TermMap out;
    auto add = [&](DMono d, const SuperFunction& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = out.emplace(d, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (const auto& [d, c] : terms) {
        add(d, derive(v, c));
        for (const auto& [m, s] : c.terms()) {
            auto pre = prepend(ch, v, d);
            if (!pre) continue;
            int sign = pre->second *
                       commutation_sign(dv, mono_degree(ch, m));
            add(pre->first, SuperFunction::monomial(
                                ch, m, sign > 0 ? s : -s));
        }
    }
    return out;
}

}  // namespace

DiffOperator compose(const DiffOperator& a, const DiffOperator& b) {
    if (a.chart() != b.chart()) throw ChartMismatch("mixed charts");
    Chart ch = a.chart();
    DiffOperator r(ch);
    for (const auto& [da, ca] : a.terms()) {
        TermMap cur = b.terms();
        if (da.d2) cur = derivative_compose(ch, chart_v2(ch), cur);
        if (da.d1) cur = derivative_compose(ch, chart_v1(ch), cur);
        for (long i = 0; i < da.dx; ++i)
            cur = derivative_compose(ch, SVar::x, cur);
        for (const auto& [d, c] : cur) r.add_term(d, super_mul(ca, c));
    }
    return r;
}

DiffOperator pi_R(Gen g, const WeightData& w) {
    Chart ch = Chart::psi_pm;
    switch (g) {
        using enum Gen;
        case Ap:
            return DiffOperator::derivative(ch, SVar::x);
        case dp: {
            DiffOperator op = DiffOperator::derivative(ch, SVar::psi_plus);
            op.add_term({1, 0, 0},
                        SuperFunction::monomial(ch, {0, 0, 0, 1}, Scalar(2)));
            return op;
        }
        case dm:
            return DiffOperator::derivative(ch, SVar::psi_minus);
        case N:
            return DiffOperator::multiplication(
                SuperFunction::constant(ch, w.h));
        case Ft:
            return DiffOperator::multiplication(
                SuperFunction::constant(ch, w.f));
        case Am:
        case cp:
        case cm:
            throw NotRealized("no coset realization of " + name_of(g));
        default:
            throw UnknownGenerator("not a twisted-basis generator: " +
                                   name_of(g));
    }
}

DiffOperator realize_singular(const VermaVector& v, const WeightData& w) {
    Chart ch = Chart::psi_pm;
    DiffOperator r(ch);
    for (const auto& [ket, coeff] : v.terms()) {
        DiffOperator op =
            DiffOperator::multiplication(SuperFunction::constant(ch, coeff));
        for (long i = 0; i < ket.k; ++i) op = compose(op, pi_R(Gen::Ap, w));
        if (ket.mu) op = compose(op, pi_R(Gen::dp, w));
        if (ket.nu) op = compose(op, pi_R(Gen::dm, w));
        r += op;
    }
    return r;
}

DiffOperator rewrite_chart(const DiffOperator& op, Chart target) {
    if (op.chart() == target) return op;
    Chart ch = target;
    Scalar rt = Scalar(inv_sqrt2());
    SuperFunction zeta = SuperFunction::variable(ch, SVar::zeta);
    DiffOperator img1(ch), img2(ch);
    if (target == Chart::psi_theta) {
        // dpsi+- = (dpsi -+ zeta dtheta)/sqrt2
        DiffOperator dpsi = DiffOperator::derivative(ch, SVar::psi);
        DiffOperator zdth = compose(DiffOperator::multiplication(zeta),
                                    DiffOperator::derivative(ch, SVar::theta));
        img1 = (dpsi - zdth).scaled(rt);
        img2 = (dpsi + zdth).scaled(rt);
    } else {
        // dpsi = (dpsi+ + dpsi-)/sqrt2, dtheta = zeta (dpsi- - dpsi+)/sqrt2
        DiffOperator dp = DiffOperator::derivative(ch, SVar::psi_plus);
        DiffOperator dm = DiffOperator::derivative(ch, SVar::psi_minus);
        img1 = (dp + dm).scaled(rt);
        img2 = compose(DiffOperator::multiplication(zeta),
                       (dm - dp).scaled(rt));
    }
    DiffOperator dx = DiffOperator::derivative(ch, SVar::x);
    DiffOperator r(ch);
    for (const auto& [d, c] : op.terms()) {
        DiffOperator t = DiffOperator::multiplication(change_chart(c, target));
        for (long i = 0; i < d.dx; ++i) t = compose(t, dx);
        if (d.d1) t = compose(t, img1);
        if (d.d2) t = compose(t, img2);
        r += t;
    }
    return r;
}

std::optional<Scalar> proportionality(const DiffOperator& a,
                                      const DiffOperator& b) {
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    const auto& [d0, c0] = *b.terms().begin();
    auto it = a.terms().find(d0);
    if (it == a.terms().end()) return std::nullopt;
    const auto& [m0, s0] = *c0.terms().begin();
    auto jt = it->second.terms().find(m0);
    if (jt == it->second.terms().end()) return std::nullopt;
    Scalar ratio = jt->second / s0;
    if (ratio.is_zero()) return std::nullopt;
    if (!(a == b.scaled(ratio))) return std::nullopt;
    return ratio;
}

namespace {

QSqrt2 constant_value(const Scalar& s) {
    if (!s.num().is_constant() || !s.den().is_constant())
        throw std::domain_error("weight-dependent coefficient; evaluate first");
    return s.eval(0, 0);
}

}  // namespace

std::vector<SuperFunction> kernel_basis(const DiffOperator& op, long max_x) {
    Chart ch = op.chart();
    std::vector<SuperMono> basis;
    std::map<SuperMono, size_t> index;
    for (long a = 0; a <= max_x; ++a)
        for (int b1 : {0, 1})
            for (int b2 : {0, 1}) {
                index[{a, 0, b1, b2}] = basis.size();
                basis.push_back({a, 0, b1, b2});
            }
    size_t n = basis.size();
    std::vector<std::vector<QSqrt2>> m(n, std::vector<QSqrt2>(n));
    for (size_t j = 0; j < n; ++j) {
        SuperFunction img =
            apply(op, SuperFunction::monomial(ch, basis[j], Scalar(1)));
        for (const auto& [mono, s] : img.terms()) {
            auto it = index.find(mono);
            if (it == index.end())
                throw std::domain_error("operator image leaves the span");
            m[it->second][j] = constant_value(s);
        }
    }
    // row echelon over Q(sqrt2)
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < n; ++col) {
        size_t p = row;
        while (p < n && m[p][col].is_zero()) ++p;
        if (p == n) continue;
        std::swap(m[p], m[row]);
        QSqrt2 inv = m[row][col].inverse();
        for (size_t j = col; j < n; ++j) m[row][j] = m[row][j] * inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            QSqrt2 factor = m[i][col];
            for (size_t j = col; j < n; ++j)
                m[i][j] = m[i][j] - factor * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<SuperFunction> kernel;
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    for (size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        SuperFunction v(ch);
        v.add_term(basis[free], Scalar(1));
        for (size_t r = 0; r < pivot_col.size(); ++r)
            if (!m[r][free].is_zero())
                v.add_term(basis[pivot_col[r]], Scalar(-m[r][free]));
        kernel.push_back(v);
    }
    return kernel;
}

namespace {

// Element sum_i f_i X_i of the scalar-extended algebra used for the adjoint
// action of the coset element; coefficients graded-commute with generators,
// so [g X, f Z] = sign(deg X, deg f) g f [X, Z] monomial-wise.
using LieFunc = std::map<Gen, SuperFunction>;

void lf_add(LieFunc& m, Gen g, const SuperFunction& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = m.emplace(g, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) m.erase(it);
    }
}

SuperFunction move_past(Degree d, const SuperFunction& f) {
    SuperFunction r(f.chart());
    for (const auto& [m, s] : f.terms()) {
        int sign = commutation_sign(d, mono_degree(f.chart(), m));
        r.add_term(m, sign > 0 ? s : -s);
    }
    return r;
}

LieFunc lf_bracket(Gen x, const SuperFunction& g, const LieFunc& v) {
    const ColorAlgebra& alg = standard_algebra();
    Degree dx = degree_of(x);
    LieFunc out;
    for (const auto& [z, f] : v) {
        const AlgebraElement& br = alg.new_basis_bracket(x, z);
        if (br.is_zero()) continue;
        SuperFunction coeff = super_mul(g, move_past(dx, f));
        for (const auto& [key, c] : br.terms()) {
            if (key.zeta) throw std::logic_error("zeta term in twisted bracket");
            lf_add(out, key.gen, coeff.scaled(c));
        }
    }
    return out;
}

LieFunc exp_neg_ad(Gen x, const SuperFunction& g, LieFunc v) {
    LieFunc term = v;
    for (int k = 1; k <= 12; ++k) {
        LieFunc br = lf_bracket(x, g, term);
        if (br.empty()) return v;
        term.clear();
        for (const auto& [z, f] : br)
            term.emplace(z, f.scaled(Scalar(Rat(-1, k))));
        for (const auto& [z, f] : term) lf_add(v, z, f);
    }
    throw TruncationFailure("adjoint series did not terminate");
}

}  // namespace

DiffOperator pi_L_first_order(Gen g0, const WeightData& w) {
    bool twisted = false;
    for (Gen g : new_basis()) twisted = twisted || g == g0;
    if (!twisted)
        throw UnknownGenerator("not a twisted-basis generator: " + name_of(g0));
    Chart ch = Chart::psi_pm;
    LieFunc v{{g0, SuperFunction::constant(ch, Scalar(1))}};
    v = exp_neg_ad(Gen::Ap, SuperFunction::variable(ch, SVar::x), v);
    v = exp_neg_ad(Gen::dp, SuperFunction::variable(ch, SVar::psi_plus), v);
    v = exp_neg_ad(Gen::dm, SuperFunction::variable(ch, SVar::psi_minus), v);
    Degree dg = degree_of(g0);
    DiffOperator r(ch);
    for (const auto& [z, f] : v) {
        // in -tau f Z the parameter is already leftmost: strip it directly
        const SuperFunction& coeff = f;
        switch (z) {
            using enum Gen;
            case Ap:
            case dp:
            case dm:
                r += compose(DiffOperator::multiplication(coeff), pi_R(z, w));
                break;
            case N:
                r += DiffOperator::multiplication(coeff.scaled(w.h));
                break;
            case Ft:
                r += DiffOperator::multiplication(coeff.scaled(w.f));
                break;
            default:
                break;  // lowering part: killed by right covariance
        }
    }
    return -r;
}

WeightData shifted_weight(const VermaVector& v, const WeightData& w) {
    if (v.is_zero()) return w;
    const BasisKet& b = v.terms().begin()->first;
    return {w.h + Scalar(b.level()), w.f + Scalar(b.mu - b.nu)};
}

namespace {

// Degree of a homogeneous operator: coefficient monomial plus derivative
// word (a derivative carries the degree of its variable).
Degree operator_degree(const DiffOperator& op) {
    std::optional<Degree> deg;
    for (const auto& [d, c] : op.terms()) {
        Degree dd{};
        if (d.d1) dd = add(dd, variable_info(chart_v1(op.chart())).degree);
        if (d.d2) dd = add(dd, variable_info(chart_v2(op.chart())).degree);
        for (const auto& [m, s] : c.terms()) {
            Degree t = add(dd, mono_degree(op.chart(), m));
            if (deg && !(*deg == t))
                throw std::domain_error("inhomogeneous operator");
            deg = t;
        }
    }
    return deg.value_or(Degree{});
}

}  // namespace

InvarianceReport check_invariance(const DiffOperator& op, const WeightData& w,
                                  const WeightData& w_shift) {
    InvarianceReport rep;
    Degree dop = operator_degree(op);
    for (Gen x : new_basis()) {
        int s = commutation_sign(dop, degree_of(x));
        DiffOperator lhs = compose(op, pi_L_first_order(x, w));
        DiffOperator rhs = compose(pi_L_first_order(x, w_shift), op);
        DiffOperator r = s > 0 ? lhs - rhs : lhs + rhs;
        if (!r.is_zero()) rep.violations.push_back({x, pretty(r)});
    }
    return rep;
}

std::string pretty(const DiffOperator& op) {
    if (op.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : op.terms()) {
        std::vector<std::string> parts;
        std::string cs = pretty(c);
        if (cs != "1" || (d.dx == 0 && !d.d1 && !d.d2))
            parts.push_back(c.terms().size() > 1 ? "(" + cs + ")" : cs);
        if (d.dx == 1) parts.push_back("Dx");
        if (d.dx > 1) parts.push_back("Dx^" + std::to_string(d.dx));
        if (d.d1) parts.push_back("D" + variable_info(chart_v1(op.chart())).name);
        if (d.d2) parts.push_back("D" + variable_info(chart_v2(op.chart())).name);
        os << (first ? "" : " + ");
        for (size_t i = 0; i < parts.size(); ++i)
            os << (i ? "*" : "") << parts[i];
        first = false;
    }
    return os.str();
}

}  // namespace colorsuper
