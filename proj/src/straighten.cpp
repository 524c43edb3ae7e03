#include "colorsuper/straighten.hpp"

#include <sstream>
#include <stdexcept>

namespace colorsuper {

NormalForm NormalForm::scalar_multiple(const Scalar& c) {
    NormalForm nf;
    nf.add_term({}, c);
    return nf;
}

void NormalForm::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NormalForm NormalForm::operator-() const {
    NormalForm out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

NormalForm operator+(const NormalForm& x, const NormalForm& y) {
    NormalForm out = x;
    for (const auto& [m, c] : y.terms_) out.add_term(m, c);
    return out;
}

NormalForm operator-(const NormalForm& x, const NormalForm& y) {
    NormalForm out = x;
    for (const auto& [m, c] : y.terms_) out.add_term(m, -c);
    return out;
}

NormalForm NormalForm::scaled(const Scalar& c) const {
    NormalForm out;
    if (c.is_zero()) return out;
    for (const auto& [m, k] : terms_) out.terms_[m] = k * c;
    return out;
}

std::string pretty(const NormalForm& nf) {
    if (nf.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : nf.terms()) {
        if (!first) os << " + ";
        os << "(" << pretty(c) << ")";
        for (Gen g : m) os << " " << name_of(g);
        first = false;
    }
    return os.str();
}

int straighten_rank(Gen g) {
    switch (g) {
        using enum Gen;
        case Ap: return 0;
        case dp: case ap: return 1;
        case dm: case bp: return 2;
        case N: return 3;
        case Ft: case F: return 4;
        case Am: return 5;
        case cp: case am: return 6;
        case cm: case bm: return 7;
    }
    throw UnknownGenerator("no straightening rank");
}

namespace {

// true = original family, false = twisted family; Am/Ap/N fit both.
bool word_uses_twisted(const std::vector<Gen>& factors) {
    bool any_old = false, any_new = false;
    for (Gen g : factors) {
        if (g == Gen::Am || g == Gen::Ap || g == Gen::N) continue;
        (is_old_basis(g) ? any_old : any_new) = true;
    }
    if (any_old && any_new)
        throw std::invalid_argument("word mixes the two basis families");
    return !any_old;
}

struct Engine {
    const ColorAlgebra& alg;
    bool twisted;
    Pivot pivot;
    NormalForm out;

    AlgebraElement bracket(Gen x, Gen y) const {
        if (twisted) return alg.new_basis_bracket(x, y);
        return alg.bracket(AlgebraElement::generator(x),
                           AlgebraElement::generator(y));
    }

    // index of the next rewrite position, or -1 when normal-ordered
    int find_pivot(const Monomial& m) const {
        int n = static_cast<int>(m.size());
        int found = -1;
        for (int i = 0; i + 1 < n; ++i) {
            Gen x = m[i], y = m[i + 1];
            bool bad = straighten_rank(x) > straighten_rank(y) ||
                       (x == y && commutation_sign(degree_of(x), degree_of(x)) < 0);
            if (!bad) continue;
            found = i;
            if (pivot == Pivot::leftmost) break;
        }
        return found;
    }

    void run(Monomial m, Scalar c) {
        std::vector<std::pair<Monomial, Scalar>> work{{std::move(m), std::move(c)}};
        while (!work.empty()) {
            auto [mono, coeff] = std::move(work.back());
            work.pop_back();
            int i = find_pivot(mono);
            if (i < 0) {
                out.add_term(mono, coeff);
                continue;
            }
            Gen x = mono[i], y = mono[i + 1];
            AlgebraElement br = bracket(x, y);
            Scalar bracket_scale(1);
            if (x == y) {
                bracket_scale = Scalar(Poly2(QSqrt2(Rat(1, 2))));  // x^2 = [[x,x]]/2
            } else {
                Monomial swapped = mono;
                std::swap(swapped[i], swapped[i + 1]);
                int s = commutation_sign(degree_of(x), degree_of(y));
                work.emplace_back(std::move(swapped),
                                  s > 0 ? coeff : -coeff);
            }
            for (const auto& [key, bc] : br.terms()) {
                Monomial shorter;
                shorter.reserve(mono.size() - 1);
                shorter.insert(shorter.end(), mono.begin(), mono.begin() + i);
                shorter.push_back(key.gen);
                shorter.insert(shorter.end(), mono.begin() + i + 2, mono.end());
                work.emplace_back(std::move(shorter), coeff * bc * bracket_scale);
            }
        }
    }
};

}  // namespace

NormalForm straighten(const Word& w, Pivot pivot, const ColorAlgebra& alg) {
    Engine e{alg, word_uses_twisted(w.factors), pivot, {}};
    e.run(w.factors, w.coeff);
    return e.out;
}

NormalForm straighten(const std::vector<Word>& ws, Pivot pivot,
                      const ColorAlgebra& alg) {
    NormalForm out;
    for (const Word& w : ws) out += straighten(w, pivot, alg);
    return out;
}

NormalForm nf_mul(const NormalForm& x, const NormalForm& y,
                  const ColorAlgebra& alg) {
    NormalForm out;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) {
            Monomial m = mx;
            m.insert(m.end(), my.begin(), my.end());
            out += straighten(Word{std::move(m), cx * cy}, Pivot::leftmost, alg);
        }
    return out;
}

CollapseWitness naive_collapse_witness(const ColorAlgebra& alg) {
    using enum Gen;
    CollapseWitness w;
    w.element = {Word{{ap, ap}, Scalar(1)}, Word{{bp, bp}, Scalar(-1)}};
    w.normal_form = straighten(w.element, Pivot::leftmost, alg);
    w.square = straighten(Word{{ap, ap}, Scalar(1)}, Pivot::leftmost, alg);
    return w;
}

Word parse_word(const std::string& text) {
    Word w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) w.factors.push_back(gen_from_name(tok));
    return w;
}

}  // namespace colorsuper
