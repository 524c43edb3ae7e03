#include "colorsuper/superfunc.hpp"

#include <array>
#include <optional>
#include <sstream>

namespace colorsuper {

const GradedVariable& variable_info(SVar v) {
    static const std::array<GradedVariable, 6> info = {{
        {SVar::x, "x", {0, 0}, false},
        {SVar::zeta, "zeta", {1, 1}, false},
        {SVar::psi_plus, "psi+", {0, 1}, true},
        {SVar::psi_minus, "psi-", {0, 1}, true},
        {SVar::psi, "psi", {0, 1}, true},
        {SVar::theta, "theta", {1, 0}, true},
    }};
    return info[static_cast<int>(v)];
}

const std::vector<SVar>& chart_variables(Chart c) {
    static const std::vector<SVar> pm = {SVar::x, SVar::zeta, SVar::psi_plus,
                                         SVar::psi_minus};
    static const std::vector<SVar> pt = {SVar::x, SVar::zeta, SVar::psi,
                                         SVar::theta};
    return c == Chart::psi_pm ? pm : pt;
}

bool in_chart(SVar v, Chart c) {
    for (SVar w : chart_variables(c))
        if (w == v) return true;
    return false;
}

std::string to_string(Chart c) {
    return c == Chart::psi_pm ? "psi_pm" : "psi_theta";
}

namespace {

// Slot of the graded letters inside a canonical monomial: 0 = zeta,
// 1 and 2 = the chart's two nilpotent variables; -1 for x.
int slot_of(Chart c, SVar v) {
    const std::vector<SVar>& vars = chart_variables(c);
    for (int i = 1; i < 4; ++i)
        if (vars[i] == v) return i - 1;
    return v == SVar::x ? -1 : -2;
}

SVar slot_var(Chart c, int slot) { return chart_variables(c)[slot + 1]; }

Degree slot_degree(Chart c, int slot) {
    return variable_info(slot_var(c, slot)).degree;
}

int mono_bit(SuperMono m, int slot) {
    return slot == 0 ? m.z : slot == 1 ? m.b1 : m.b2;
}

void set_bit(SuperMono& m, int slot, int v) {
    (slot == 0 ? m.z : slot == 1 ? m.b1 : m.b2) = v;
}

// Product of two canonical monomials: concatenates the graded letters, sorts
// them back picking up commutation signs, and reduces zeta^2 -> 1 and
// nilpotent squares -> 0 (nullopt).
std::optional<std::pair<SuperMono, int>> mono_mul(Chart c, SuperMono a,
                                                 SuperMono b) {
    std::vector<int> word;
    for (int s = 0; s < 3; ++s)
        if (mono_bit(a, s)) word.push_back(s);
    for (int s = 0; s < 3; ++s)
        if (mono_bit(b, s)) word.push_back(s);
    int sign = 1;
    for (bool moved = true; moved;) {
        moved = false;
        for (size_t i = 0; i + 1 < word.size(); ++i)
            if (word[i] > word[i + 1]) {
                sign *= commutation_sign(slot_degree(c, word[i]),
                                         slot_degree(c, word[i + 1]));
                std::swap(word[i], word[i + 1]);
                moved = true;
            }
    }
    SuperMono r{a.xpow + b.xpow, 0, 0, 0};
    for (size_t i = 0; i < word.size(); ++i) {
        if (i + 1 < word.size() && word[i] == word[i + 1]) {
            if (variable_info(slot_var(c, word[i])).grassmann) return std::nullopt;
            ++i;  // zeta^2 = 1
            continue;
        }
        set_bit(r, word[i], 1);
    }
    return std::pair{r, sign};
}

}  // namespace

SuperFunction SuperFunction::constant(Chart c, Scalar s) {
    SuperFunction f(c);
    f.add_term({}, s);
    return f;
}

SuperFunction SuperFunction::monomial(Chart c, SuperMono m, Scalar s) {
    SuperFunction f(c);
    f.add_term(m, s);
    return f;
}

SuperFunction SuperFunction::variable(Chart c, SVar v) {
    int slot = slot_of(c, v);
    if (slot == -2) throw ChartMismatch(variable_info(v).name +
                                        " is not a variable of chart " +
                                        to_string(c));
    SuperMono m;
    if (slot == -1)
        m.xpow = 1;
    else
        set_bit(m, slot, 1);
    return monomial(c, m, Scalar(1));
}

void SuperFunction::add_term(SuperMono m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SuperFunction SuperFunction::operator-() const {
    SuperFunction r(chart_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SuperFunction& SuperFunction::operator+=(const SuperFunction& y) {
    if (chart_ != y.chart_) throw ChartMismatch("mixed charts");
    for (const auto& [m, c] : y.terms_) add_term(m, c);
    return *this;
}

SuperFunction& SuperFunction::operator-=(const SuperFunction& y) {
    return *this += -y;
}

SuperFunction operator+(SuperFunction x, const SuperFunction& y) {
    return x += y;
}

SuperFunction operator-(SuperFunction x, const SuperFunction& y) {
    return x -= y;
}

SuperFunction SuperFunction::scaled(const Scalar& c) const {
    SuperFunction r(chart_);
    if (c.is_zero()) return r;
    for (const auto& [m, s] : terms_) r.add_term(m, s * c);
    return r;
}

SuperFunction SuperFunction::eval_weights(const Rat& h0, const Rat& f0) const {
    SuperFunction r(chart_);
    for (const auto& [m, s] : terms_) r.add_term(m, Scalar(s.eval(h0, f0)));
    return r;
}

SuperFunction super_mul(const SuperFunction& f, const SuperFunction& g) {
    if (f.chart() != g.chart()) throw ChartMismatch("mixed charts");
    SuperFunction r(f.chart());
    for (const auto& [ma, ca] : f.terms())
        for (const auto& [mb, cb] : g.terms())
            if (auto prod = mono_mul(f.chart(), ma, mb))
                r.add_term(prod->first,
                           prod->second > 0 ? ca * cb : -(ca * cb));
    return r;
}

SuperFunction derive(SVar v, const SuperFunction& f) {
    if (!in_chart(v, f.chart()))
        throw ChartMismatch(variable_info(v).name +
                            " is not a variable of chart " +
                            to_string(f.chart()));
    if (v == SVar::zeta)
        throw std::invalid_argument(
            "zeta^2 = 1 admits no graded derivation in zeta");
    SuperFunction r(f.chart());
    if (v == SVar::x) {
        for (const auto& [m, c] : f.terms())
            if (m.xpow > 0) {
                SuperMono d = m;
                --d.xpow;
                r.add_term(d, c * Scalar(m.xpow));
            }
        return r;
    }
    int slot = slot_of(f.chart(), v);
    Degree dv = variable_info(v).degree;
    for (const auto& [m, c] : f.terms()) {
        if (!mono_bit(m, slot)) continue;
        int sign = 1;
        for (int s = 0; s < slot; ++s)
            if (mono_bit(m, s))
                sign *= commutation_sign(dv, slot_degree(f.chart(), s));
        SuperMono d = m;
        set_bit(d, slot, 0);
        r.add_term(d, sign > 0 ? c : -c);
    }
    return r;
}

SuperFunction change_chart(const SuperFunction& f, Chart target) {
    if (f.chart() == target) return f;
    Scalar rt = Scalar(inv_sqrt2());
    // psi+- = (psi +- zeta theta)/sqrt2 and its inverse
    // psi = (psi+ + psi-)/sqrt2, theta = zeta (psi+ - psi-)/sqrt2.
    std::array<SuperFunction, 3> image = {
        SuperFunction::variable(target, SVar::zeta),
        SuperFunction(target),
        SuperFunction(target),
    };
    if (target == Chart::psi_theta) {
        SuperFunction psi = SuperFunction::variable(target, SVar::psi);
        SuperFunction zt = super_mul(SuperFunction::variable(target, SVar::zeta),
                                     SuperFunction::variable(target, SVar::theta));
        image[1] = (psi + zt).scaled(rt);
        image[2] = (psi - zt).scaled(rt);
    } else {
        SuperFunction pp = SuperFunction::variable(target, SVar::psi_plus);
        SuperFunction pm = SuperFunction::variable(target, SVar::psi_minus);
        image[1] = (pp + pm).scaled(rt);
        image[2] = super_mul(SuperFunction::variable(target, SVar::zeta),
                             (pp - pm).scaled(rt));
    }
    SuperFunction r(target);
    for (const auto& [m, c] : f.terms()) {
        SuperFunction t = SuperFunction::monomial(target, {m.xpow, 0, 0, 0}, c);
        for (int s = 0; s < 3; ++s)
            if (mono_bit(m, s)) t = super_mul(t, image[s]);
        r += t;
    }
    return r;
}

std::string pretty(const SuperFunction& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        std::vector<std::string> parts;
        std::string cs = pretty(c);
        bool unit = cs == "1";
        if (!unit) {
            bool bare = cs.find_first_not_of("0123456789") == std::string::npos ||
                        (cs.front() == '(' && cs.back() == ')');
            parts.push_back(bare ? cs : "(" + cs + ")");
        }
        if (m.xpow == 1) parts.push_back("x");
        if (m.xpow > 1) parts.push_back("x^" + std::to_string(m.xpow));
        for (int s = 0; s < 3; ++s)
            if (mono_bit(m, s))
                parts.push_back(variable_info(slot_var(f.chart(), s)).name);
        if (parts.empty()) parts.push_back(cs);
        os << (first ? "" : " + ");
        for (size_t i = 0; i < parts.size(); ++i)
            os << (i ? "*" : "") << parts[i];
        first = false;
    }
    return os.str();
}

}  // namespace colorsuper
