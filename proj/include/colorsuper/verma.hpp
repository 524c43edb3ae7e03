#pragma once

#include "colorsuper/straighten.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace colorsuper {

// Module basis vector (A+)^k (d+)^mu (d-)^nu applied to the lowest weight
// vector; level 2k+mu+nu, N-weight h+level, F-weight f+mu-nu.
struct BasisKet {
    long k = 0;
    int mu = 0;
    int nu = 0;

    long level() const { return 2 * k + mu + nu; }
    friend auto operator<=>(const BasisKet&, const BasisKet&) = default;
};

std::string to_string(const BasisKet& b);
BasisKet ket_from_string(const std::string& s);  // "k,mu,nu"

class VermaVector {
  public:
    using Terms = std::map<BasisKet, Scalar>;

    VermaVector() = default;
    static VermaVector ket(const BasisKet& b, Scalar c = Scalar(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const BasisKet& b, const Scalar& c);

    friend bool operator==(const VermaVector&, const VermaVector&) = default;
    VermaVector operator-() const;
    friend VermaVector operator+(const VermaVector& x, const VermaVector& y);
    friend VermaVector operator-(const VermaVector& x, const VermaVector& y);
    VermaVector& operator+=(const VermaVector& y) { return *this = *this + y; }
    VermaVector& operator-=(const VermaVector& y) { return *this = *this - y; }
    VermaVector scaled(const Scalar& c) const;

    // Coefficient-wise substitution of numeric weights.
    VermaVector at_weight(const Rat& h0, const Rat& f0) const;

  private:
    Terms terms_;
};

std::string pretty(const VermaVector& v);

// Closed-form action of a twisted-basis generator, symbolic in h, f.
VermaVector act(Gen g, const BasisKet& b);
VermaVector act(Gen g, const VermaVector& v);

// Independent recomputation through the straightening engine: normal-order
// g (A+)^k (d+)^mu (d-)^nu, drop monomials with a lowering factor, evaluate
// N -> h and Ftilde -> f, read the raising head off as a ket.
VermaVector act_oracle(Gen g, const BasisKet& b,
                       const ColorAlgebra& alg = standard_algebra());

// The two-dimensional (one-dimensional at level 0) weight slice.
std::vector<BasisKet> level_subspace(long m);

}  // namespace colorsuper
