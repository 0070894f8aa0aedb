#pragma once

#include <utility>
#include <vector>

#include "ellk3/poly.hpp"

namespace ellk3 {

// p = unit * prod factor^mult, factors monic, pairwise coprime, squarefree,
// sorted (degree, then coefficients).
struct SquarefreePart {
    QPoly factor;
    int multiplicity;
};
std::vector<SquarefreePart> squarefree_decomposition(const QPoly& p);

// Full factorization into monic irreducibles over Q.
struct Factorization {
    Rat unit;  // leading coefficient
    std::vector<SquarefreePart> factors;
};
Factorization factor_over_q(const QPoly& p);

bool is_irreducible_over_q(const QPoly& p);

}  // namespace ellk3
