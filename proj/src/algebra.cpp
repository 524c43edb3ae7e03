#include "colorsuper/algebra.hpp"

#include <sstream>

namespace colorsuper {

Degree degree_of(Gen g) {
    switch (g) {
        case Gen::Am:
        case Gen::Ap:
        case Gen::N:
        case Gen::Ft:
            return {0, 0};
        case Gen::bm:
        case Gen::bp:
            return {1, 0};
        case Gen::am:
        case Gen::ap:
        case Gen::cm:
        case Gen::cp:
        case Gen::dm:
        case Gen::dp:
            return {0, 1};
        case Gen::F:
            return {1, 1};
    }
    throw UnknownGenerator("bad generator id");
}

std::string name_of(Gen g) {
    switch (g) {
        case Gen::Am: return "A-";
        case Gen::Ap: return "A+";
        case Gen::N: return "N";
        case Gen::bm: return "b-";
        case Gen::bp: return "b+";
        case Gen::am: return "a-";
        case Gen::ap: return "a+";
        case Gen::F: return "F";
        case Gen::cm: return "c-";
        case Gen::cp: return "c+";
        case Gen::dm: return "d-";
        case Gen::dp: return "d+";
        case Gen::Ft: return "Ftilde";
    }
    throw UnknownGenerator("bad generator id");
}

Gen gen_from_name(const std::string& name) {
    for (int i = 0; i < kNumGens; ++i) {
        Gen g = static_cast<Gen>(i);
        if (name_of(g) == name) return g;
    }
    if (name == "F~" || name == "Ft") return Gen::Ft;
    throw UnknownGenerator("unknown generator: " + name);
}

bool is_old_basis(Gen g) { return static_cast<int>(g) < kNumOldGens; }

AlgebraElement AlgebraElement::term(int zeta, Gen g, Scalar c) {
    AlgebraElement e;
    e.add_term({zeta, g}, c);
    return e;
}

void AlgebraElement::add_term(TermKey k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement out;
    for (const auto& [k, c] : terms_) out.terms_[k] = -c;
    return out;
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement out = x;
    for (const auto& [k, c] : y.terms_) out.add_term(k, c);
    return out;
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement out = x;
    for (const auto& [k, c] : y.terms_) out.add_term(k, -c);
    return out;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
    AlgebraElement out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : terms_) out.terms_[k] = v * c;
    return out;
}

std::optional<Degree> AlgebraElement::homogeneous_degree() const {
    std::optional<Degree> deg;
    for (const auto& [k, c] : terms_) {
        Degree d = degree_of(k.gen);
        if (k.zeta) d = add(d, {1, 1});
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

std::string pretty(const AlgebraElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : e.terms()) {
        if (!first) os << " + ";
        first = false;
        std::string coeff = pretty(c);
        if (coeff != "1") {
            if (coeff.find(' ') != std::string::npos) coeff = "(" + coeff + ")";
            os << coeff << "*";
        }
        if (k.zeta) os << "zeta*";
        os << name_of(k.gen);
    }
    return os.str();
}

ZetaRule formal_zeta_rule() {
    return {[](Degree d) { return commutation_sign({1, 1}, d); },
            []() { return QSqrt2(1); }};
}

StructureTable::StructureTable() {
    auto set = [&](Gen x, Gen y, std::initializer_list<std::pair<Gen, long>> val) {
        AlgebraElement e;
        for (auto [g, c] : val) e.add_term({0, g}, Scalar(c));
        table_[static_cast<int>(x)][static_cast<int>(y)] = e;
        // fill the transpose by graded antisymmetry
        int s = commutation_sign(degree_of(x), degree_of(y));
        if (!(x == y))
            table_[static_cast<int>(y)][static_cast<int>(x)] = s > 0 ? -e : e;
    };
    using enum Gen;
    set(Am, Ap, {{N, 4}});
    set(Am, N, {{Am, 2}});
    set(Ap, N, {{Ap, -2}});
    set(Am, bp, {{bm, 2}});
    set(Ap, bm, {{bp, -2}});
    set(N, bm, {{bm, -1}});
    set(N, bp, {{bp, 1}});
    set(Am, ap, {{am, 2}});
    set(Ap, am, {{ap, -2}});
    set(N, am, {{am, -1}});
    set(N, ap, {{ap, 1}});
    set(bm, bm, {{Am, 2}});
    set(bm, bp, {{N, 2}});
    set(bp, bp, {{Ap, 2}});
    set(bm, ap, {{F, 1}});
    set(bp, am, {{F, -1}});
    set(bm, F, {{am, 2}});
    set(bp, F, {{ap, 2}});
    set(am, am, {{Am, 2}});
    set(am, ap, {{N, 2}});
    set(ap, ap, {{Ap, 2}});
    set(am, F, {{bm, 2}});
    set(ap, F, {{bp, 2}});
}

const AlgebraElement& StructureTable::entry(Gen x, Gen y) const {
    if (!is_old_basis(x) || !is_old_basis(y))
        throw UnknownGenerator("structure table holds original-basis pairs only");
    return table_[static_cast<int>(x)][static_cast<int>(y)];
}

void StructureTable::set_entry(Gen x, Gen y, AlgebraElement v) {
    table_[static_cast<int>(x)][static_cast<int>(y)] = std::move(v);
}

AxiomReport check_axioms(const StructureTable& t) {
    AxiomReport rep;
    ColorAlgebra alg(t);
    auto gens = old_basis();
    for (Gen x : gens)
        for (Gen y : gens) {
            const AlgebraElement& v = t.entry(x, y);
            ++rep.closure_checks;
            if (!v.is_zero()) {
                auto d = v.homogeneous_degree();
                if (!d || *d != add(degree_of(x), degree_of(y)))
                    rep.violations.push_back(
                        {"closure", {x, y}, pretty(v)});
            }
            ++rep.antisymmetry_checks;
            // v = -(-1)^{a.b} flip  <=>  v + sign*flip = 0
            int s = commutation_sign(degree_of(x), degree_of(y));
            const AlgebraElement& flip = t.entry(y, x);
            AlgebraElement r = s > 0 ? v + flip : v - flip;
            if (!r.is_zero())
                rep.violations.push_back({"antisymmetry", {x, y}, pretty(r)});
        }
    for (Gen x : gens)
        for (Gen y : gens)
            for (Gen z : gens) {
                ++rep.jacobi_checks;
                Degree a = degree_of(x), b = degree_of(y), c = degree_of(z);
                auto X = AlgebraElement::generator(x);
                auto Y = AlgebraElement::generator(y);
                auto Z = AlgebraElement::generator(z);
                AlgebraElement j =
                    alg.bracket_zeta_old(X, alg.bracket_zeta_old(Y, Z))
                        .scaled(Scalar(commutation_sign(a, c))) +
                    alg.bracket_zeta_old(Y, alg.bracket_zeta_old(Z, X))
                        .scaled(Scalar(commutation_sign(b, a))) +
                    alg.bracket_zeta_old(Z, alg.bracket_zeta_old(X, Y))
                        .scaled(Scalar(commutation_sign(c, b)));
                if (!j.is_zero())
                    rep.violations.push_back({"jacobi", {x, y, z}, pretty(j)});
            }
    return rep;
}

ColorAlgebra::ColorAlgebra(StructureTable table, ZetaRule rule)
    : table_(std::move(table)), rule_(std::move(rule)) {}

AlgebraElement ColorAlgebra::expand_to_old(const AlgebraElement& e) const {
    Scalar inv_rt2{Scalar(QSqrt2(Rat(0), Rat(1, 2)))};  // 1/sqrt2
    AlgebraElement out;
    for (const auto& [k, c] : e.terms()) {
        if (is_old_basis(k.gen)) {
            out.add_term(k, c);
            continue;
        }
        if (k.zeta)
            throw UnknownGenerator("zeta-twisted new-basis term is not supported");
        // canonical (zeta-left) expansions; b-zeta = -zeta b- etc. per rule
        int sb = rule_.move_sign(degree_of(Gen::bm));
        switch (k.gen) {
            case Gen::cp:
                out.add_term({0, Gen::am}, c * inv_rt2);
                out.add_term({1, Gen::bm}, c * inv_rt2 * Scalar(sb));
                break;
            case Gen::cm:
                out.add_term({0, Gen::am}, c * inv_rt2);
                out.add_term({1, Gen::bm}, -c * inv_rt2 * Scalar(sb));
                break;
            case Gen::dp:
                out.add_term({0, Gen::ap}, c * inv_rt2);
                out.add_term({1, Gen::bp}, c * inv_rt2);
                break;
            case Gen::dm:
                out.add_term({0, Gen::ap}, c * inv_rt2);
                out.add_term({1, Gen::bp}, -c * inv_rt2);
                break;
            case Gen::Ft:
                out.add_term({1, Gen::F}, c * Scalar(Rat(1, 2)));
                break;
            default:
                throw UnknownGenerator("bad generator id");
        }
    }
    return out;
}

AlgebraElement ColorAlgebra::to_new_basis(const AlgebraElement& e) const {
    Scalar inv_rt2{Scalar(QSqrt2(Rat(0), Rat(1, 2)))};
    int sb = rule_.move_sign(degree_of(Gen::bm));
    AlgebraElement out;
    for (const auto& [k, c] : e.terms()) {
        if (!is_old_basis(k.gen)) {
            out.add_term(k, c);
            continue;
        }
        switch (k.gen) {
            case Gen::Am:
            case Gen::Ap:
            case Gen::N:
                if (k.zeta)
                    throw RelationMismatch("zeta*" + name_of(k.gen) +
                                           " is outside the twisted-basis span");
                out.add_term(k, c);
                break;
            case Gen::am:
                if (k.zeta) throw RelationMismatch("zeta*a- outside span");
                out.add_term({0, Gen::cp}, c * inv_rt2);
                out.add_term({0, Gen::cm}, c * inv_rt2);
                break;
            case Gen::bm:
                if (!k.zeta) throw RelationMismatch("b- outside span");
                // zeta b- = sb*(c+ - c-)/sqrt2
                out.add_term({0, Gen::cp}, c * inv_rt2 * Scalar(sb));
                out.add_term({0, Gen::cm}, -c * inv_rt2 * Scalar(sb));
                break;
            case Gen::ap:
                if (k.zeta) throw RelationMismatch("zeta*a+ outside span");
                out.add_term({0, Gen::dp}, c * inv_rt2);
                out.add_term({0, Gen::dm}, c * inv_rt2);
                break;
            case Gen::bp:
                if (!k.zeta) throw RelationMismatch("b+ outside span");
                out.add_term({0, Gen::dp}, c * inv_rt2);
                out.add_term({0, Gen::dm}, -c * inv_rt2);
                break;
            case Gen::F:
                if (!k.zeta) throw RelationMismatch("F outside span");
                out.add_term({0, Gen::Ft}, c * Scalar(2));
                break;
            default:
                throw UnknownGenerator("bad generator id");
        }
    }
    return out;
}

AlgebraElement ColorAlgebra::bracket_terms(TermKey kx, TermKey ky) const {
    Degree a = degree_of(kx.gen), b = degree_of(ky.gen);
    int p = kx.zeta, q = ky.zeta;
    // uv = m_a^q zeta^{p+q} XY, vu = m_b^p zeta^{p+q} YX; the reduction to the
    // table bracket needs s * m_b^p = sign(a,b) * m_a^q with s the grading
    // sign of the twisted degrees.  This holds for the formal rule and is the
    // content of the Clifford oracle.
    int ma_q = q ? rule_.move_sign(a) : 1;
    int mb_p = p ? rule_.move_sign(b) : 1;
    Degree da = p ? add(a, {1, 1}) : a;
    Degree db = q ? add(b, {1, 1}) : b;
    int s = commutation_sign(da, db);
    if (s * mb_p != commutation_sign(a, b) * ma_q)
        throw RelationMismatch("zeta rule is inconsistent with the grading sign");
    AlgebraElement out;
    QSqrt2 factor = QSqrt2(ma_q);
    int zeta_out = (p + q) % 2;
    if (p + q == 2) factor = factor * rule_.square();
    const AlgebraElement& tab = table_.entry(kx.gen, ky.gen);
    for (const auto& [k, c] : tab.terms()) {
        if (k.zeta != 0)
            throw RelationMismatch("structure table entries must be zeta-free");
        out.add_term({zeta_out, k.gen}, c * Scalar(factor));
    }
    return out;
}

AlgebraElement ColorAlgebra::bracket_zeta_old(const AlgebraElement& x,
                                              const AlgebraElement& y) const {
    AlgebraElement ex = expand_to_old(x), ey = expand_to_old(y);
    AlgebraElement out;
    for (const auto& [kx, cx] : ex.terms())
        for (const auto& [ky, cy] : ey.terms())
            out += bracket_terms(kx, ky).scaled(cx * cy);
    return out;
}

AlgebraElement ColorAlgebra::bracket(const AlgebraElement& x,
                                     const AlgebraElement& y) const {
    auto all_new = [](const AlgebraElement& e) {
        for (const auto& [k, c] : e.terms()) {
            if (k.zeta) return false;
            switch (k.gen) {
                case Gen::Am:
                case Gen::Ap:
                case Gen::N:
                case Gen::cm:
                case Gen::cp:
                case Gen::dm:
                case Gen::dp:
                case Gen::Ft:
                    break;
                default:
                    return false;
            }
        }
        return true;
    };
    AlgebraElement out = bracket_zeta_old(x, y);
    if (all_new(x) && all_new(y)) return to_new_basis(out);
    return out;
}

AlgebraElement ColorAlgebra::omega(const AlgebraElement& e) const {
    auto image = [](Gen g) {
        switch (g) {
            case Gen::Am: return Gen::Ap;
            case Gen::Ap: return Gen::Am;
            case Gen::am: return Gen::ap;
            case Gen::ap: return Gen::am;
            case Gen::bm: return Gen::bp;
            case Gen::bp: return Gen::bm;
            case Gen::N: return Gen::N;
            case Gen::F: return Gen::F;
            case Gen::cm: return Gen::dm;
            case Gen::cp: return Gen::dp;
            case Gen::dm: return Gen::cm;
            case Gen::dp: return Gen::cp;
            case Gen::Ft: return Gen::Ft;
        }
        throw UnknownGenerator("bad generator id");
    };
    AlgebraElement out;
    for (const auto& [k, c] : e.terms()) {
        Gen g = image(k.gen);
        // omega(zeta^p X) = omega(X) zeta^p, then zeta moved back to the left
        int sign = k.zeta ? rule_.move_sign(degree_of(g)) : 1;
        out.add_term({k.zeta, g}, c * Scalar(sign));
    }
    return out;
}

ColorAlgebra::AntiInvolutionReport ColorAlgebra::check_anti_involution() const {
    AntiInvolutionReport rep;
    for (int i = 0; i < kNumGens; ++i) {
        Gen g = static_cast<Gen>(i);
        auto e = AlgebraElement::generator(g);
        if (!(omega(omega(e)) == e)) rep.involution_failures.push_back(g);
    }
    for (Gen x : old_basis())
        for (Gen y : old_basis()) {
            auto lhs = omega(bracket_zeta_old(AlgebraElement::generator(x),
                                              AlgebraElement::generator(y)));
            auto rhs = bracket_zeta_old(omega(AlgebraElement::generator(y)),
                                        omega(AlgebraElement::generator(x)));
            if (!(lhs == rhs)) rep.bracket_failures.push_back({x, y});
        }
    return rep;
}

namespace {

// The relations stated for the twisted generators; pairs among
// {c-, c+, d-, d+, Ftilde} not listed here bracket to zero.
std::map<std::pair<Gen, Gen>, AlgebraElement> stated_new_relations() {
    using enum Gen;
    std::map<std::pair<Gen, Gen>, AlgebraElement> rel;
    auto put = [&](Gen x, Gen y, std::initializer_list<std::pair<Gen, long>> val) {
        AlgebraElement e;
        for (auto [g, c] : val) e.add_term({0, g}, Scalar(c));
        rel[{x, y}] = e;
        int s = commutation_sign(degree_of(x), degree_of(y));
        if (!(x == y)) rel[{y, x}] = s > 0 ? -e : e;
    };
    put(cp, cm, {{Am, 2}});
    put(dp, dm, {{Ap, 2}});
    put(cp, dp, {{N, 2}, {Ft, -2}});
    put(cm, dm, {{N, 2}, {Ft, 2}});
    put(Ft, cp, {{cp, -1}});
    put(Ft, cm, {{cm, 1}});
    put(Ft, dp, {{dp, 1}});
    put(Ft, dm, {{dm, -1}});
    return rel;
}

}  // namespace

std::map<std::pair<Gen, Gen>, AlgebraElement> ColorAlgebra::build_new_basis() const {
    using enum Gen;
    auto expected = stated_new_relations();
    std::map<std::pair<Gen, Gen>, AlgebraElement> got;
    std::array<Gen, 5> gens = {cm, cp, dm, dp, Ft};
    for (Gen x : gens)
        for (Gen y : gens) {
            AlgebraElement v = to_new_basis(bracket_zeta_old(
                AlgebraElement::generator(x), AlgebraElement::generator(y)));
            got[{x, y}] = v;
            auto it = expected.find({x, y});
            AlgebraElement want = it == expected.end() ? AlgebraElement() : it->second;
            if (!(v == want))
                throw RelationMismatch("bracket(" + name_of(x) + ", " + name_of(y) +
                                       ") = " + pretty(v) + ", expected " +
                                       pretty(want));
        }
    return got;
}

const AlgebraElement& ColorAlgebra::new_basis_bracket(Gen x, Gen y) const {
    if (!new_table_) {
        std::map<std::pair<Gen, Gen>, AlgebraElement> t;
        for (Gen a : new_basis())
            for (Gen b : new_basis())
                t[{a, b}] = to_new_basis(bracket_zeta_old(
                    AlgebraElement::generator(a), AlgebraElement::generator(b)));
        new_table_ = std::move(t);
    }
    auto it = new_table_->find({x, y});
    if (it == new_table_->end())
        throw UnknownGenerator("pair outside the twisted basis");
    return it->second;
}

const ColorAlgebra& standard_algebra() {
    static ColorAlgebra instance;
    return instance;
}

}  // namespace colorsuper
