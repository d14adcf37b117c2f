#pragma once

#include "tpalg/algebra.hpp"
#include "tpalg/subspace.hpp"

namespace tpalg {

// Solution space of the ½-derivation equations for one product:
//   2 D(x·y) = D(x)·y + (-1)^{|D||x|} x·D(y)
// for a parity-homogeneous operator D of the given parity (the sign
// collapses to +1 on ungraded algebras). Operators are vectorized row-major;
// `vectorized` is the canonical RREF basis of the solution space in F^(n²).
struct HalfDerivationSpace {
    Product which;
    int parity;
    Subspace vectorized;
    std::vector<Matrix> basis;

    int dim() const { return vectorized.dim(); }
    bool contains_operator(const Matrix& candidate) const {
        return vectorized.contains(candidate.flatten());
    }
};

HalfDerivationSpace half_derivations(const SuperAlgebra& a, Product which,
                                     int parity);

// Every left circ multiplication P_a (a a basis element) must be a
// ½-derivation of the bracket of parity |a| — the operator restatement of
// the transposed Leibniz rule.
bool scalar_half_derivations_check(const SuperAlgebra& a);

// --- brute-force search for compatible circ tables ------------------------

// One unknown coefficient at position e_i∘e_j = (coeff)·e_k. The mirrored
// orientation (j,i,k) is filled in automatically with the supercommutative
// sign.
struct TpSlot {
    int i, j, k;
};

struct TpAssignment {
    std::vector<Scalar> values; // one per slot, in slot order
    SuperAlgebra algebra;
};

// Enumerates every assignment of field scalars to the slots over a finite
// field and keeps those whose completed algebra passes the transposed
// Poisson axioms. Assignments are enumerated with the last slot fastest, so
// the result order is lexicographic in the value tuples.
std::vector<TpAssignment> brute_force_tp_family(const SuperAlgebra& bracket_part,
                                                const std::vector<TpSlot>& slots,
                                                int max_slots = 6);

} // namespace tpalg
