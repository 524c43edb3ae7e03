#pragma once

#include "colorsuper/verma.hpp"

#include <optional>
#include <string>
#include <vector>

namespace colorsuper {

// One equation "constant + alpha * alpha_part = 0" on the even-level ansatz
// |n,0,0> + alpha |n-1,1,1>, with integer-primitive polynomials.
struct AlphaEq {
    Poly2 constant;
    Poly2 alpha_part;
    friend bool operator==(const AlphaEq&, const AlphaEq&) = default;
};

// The four conditions produced by the three lowering generators at level 2n
// (c+ and c- give one target ket each, A- gives two), in that order.
std::vector<AlphaEq> even_level_conditions(long n);

struct SingularHit {
    long level = 0;
    VermaVector vector;  // first nonzero coordinate (subspace order) is 1
    friend bool operator==(const SingularHit&, const SingularHit&) = default;
};

struct SingularReport {
    std::vector<SingularHit> hits;
    bool empty() const { return hits.empty(); }
};

// Exact kernel search of the lowering action on every level <= max_level.
SingularReport find_singular_numeric(const Rat& h0, const Rat& f0,
                                     long max_level);

// A parametric family of singular vectors: valid whenever all of equal_zero
// vanish and none of nonzero do.
struct SingularFamily {
    long level = 0;
    std::vector<Poly2> equal_zero;
    std::vector<Poly2> nonzero;
    VermaVector vector;
    bool holds_at(const Rat& h0, const Rat& f0) const;
};

// Complete case analysis over Q(sqrt2)(h,f) of the singular-vector
// conditions for every level <= max_level.
std::vector<SingularFamily> classify_singular_symbolic(long max_level);

struct IrreducibilityCertificate {
    bool irreducible = true;
    std::string reason;                 // violated condition when reducible
    std::optional<long> level;          // level of a singular vector
};

IrreducibilityCertificate is_irreducible(const Rat& h0, const Rat& f0);

}  // namespace colorsuper
