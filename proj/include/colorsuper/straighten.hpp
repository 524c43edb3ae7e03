#pragma once

#include "colorsuper/algebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace colorsuper {

// Product of generators with a scalar prefactor; the empty word is the unit.
struct Word {
    std::vector<Gen> factors;
    Scalar coeff = Scalar(1);
};

// A monomial in normal order.  Raising generators sit leftmost so that a
// normal-form word applied to a lowest weight vector can be read off
// directly: the lowering tail annihilates it, the Cartan factors give
// eigenvalues, the raising head indexes the module basis.
using Monomial = std::vector<Gen>;

class NormalForm {
  public:
    using Terms = std::map<Monomial, Scalar>;

    NormalForm() = default;
    static NormalForm unit() { return scalar_multiple(Scalar(1)); }
    static NormalForm scalar_multiple(const Scalar& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Monomial& m, const Scalar& c);

    friend bool operator==(const NormalForm&, const NormalForm&) = default;
    NormalForm operator-() const;
    friend NormalForm operator+(const NormalForm& x, const NormalForm& y);
    friend NormalForm operator-(const NormalForm& x, const NormalForm& y);
    NormalForm& operator+=(const NormalForm& y) { return *this = *this + y; }
    NormalForm& operator-=(const NormalForm& y) { return *this = *this - y; }
    NormalForm scaled(const Scalar& c) const;

  private:
    Terms terms_;
};

std::string pretty(const NormalForm& nf);

// Which out-of-order pair is rewritten next.  Any choice reaches the same
// normal form; exposing it lets tests check that confluence.
enum class Pivot { leftmost, rightmost };

// Normal-order position of a generator within its basis family.
int straighten_rank(Gen g);

// Rewrites the word into normal order with x y = sign(x,y) y x + [[x, y]]
// (and x^2 = [[x, x]]/2 for the nilpotent-direction generators).  The word
// must stay within one basis family, either {A+-, N, a+-, b+-, F} or
// {A+-, N, Ftilde, c+-, d+-}.
NormalForm straighten(const Word& w, Pivot pivot = Pivot::leftmost,
                      const ColorAlgebra& alg = standard_algebra());
NormalForm straighten(const std::vector<Word>& ws,
                      Pivot pivot = Pivot::leftmost,
                      const ColorAlgebra& alg = standard_algebra());

// Product in the enveloping algebra: concatenate and re-straighten.
NormalForm nf_mul(const NormalForm& x, const NormalForm& y,
                  const ColorAlgebra& alg = standard_algebra());

// The obstruction to building the module on monomials in a+ and b+ alone:
// (a+)^2 - (b+)^2 is identically zero in the enveloping algebra because both
// squares equal A+, so those monomials are not linearly independent.
struct CollapseWitness {
    std::vector<Word> element;  // (a+)^2 - (b+)^2
    NormalForm normal_form;     // straightens to zero
    NormalForm square;          // (a+)^2 alone, straightens to A+
};
CollapseWitness naive_collapse_witness(const ColorAlgebra& alg = standard_algebra());

Word parse_word(const std::string& text);

}  // namespace colorsuper
