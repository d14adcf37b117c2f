#pragma once

#include "tpalg/algebra.hpp"
#include "tpalg/subspace.hpp"

#include <optional>

namespace tpalg {

// Index bookkeeping for the doubled space P ⊕ Pˢ: source basis first, the
// starred copy at n + i with flipped parity, so the block structure of the
// doubled left multiplications is literal.
struct DoubleLayout {
    int source_dim = 0;
    std::vector<int> parity; // of the double

    int plain(int i) const { return i; }
    int starred(int i) const { return source_dim + i; }
};

DoubleLayout double_layout(const SuperAlgebra& source);

// Kantor double J(P): one supercommutative product * on P ⊕ Pˢ,
//   x*y = x∘y,  xˢ*y = (x∘y)ˢ,  x*yˢ = (-1)^|x| (x∘y)ˢ,
//   xˢ*yˢ = (-1)^|x| {x,y},
// stored in the circ table (bracket empty). Defined for any dot-bracket
// superalgebra; it is a Jordan superalgebra when the source is transposed
// Poisson.
SuperAlgebra kantor_double(const SuperAlgebra& source);

// Second Kantor functor: one bracket on P ⊕ Pˢ,
//   [x,y] = {x,y},  [xˢ,y] = [x,yˢ] = ({x,y})ˢ,  [xˢ,yˢ] = x∘y.
// Ungraded sources only (graded sign rules are not defined here).
SuperAlgebra lie_double(const SuperAlgebra& source);

// If P∘P ≠ P, the subspace P ⊕ (P∘P)ˢ of the Kantor double is a proper
// ideal; returns it (verified), or nullopt when the circ product is perfect.
// The source must pass the transposed Poisson axioms.
std::optional<Subspace> double_simplicity_obstruction(const SuperAlgebra& source);

} // namespace tpalg
