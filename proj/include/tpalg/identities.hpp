#pragma once

#include "tpalg/algebra.hpp"

#include <span>
#include <variant>

namespace tpalg {

// The fixed catalog of multilinear identities and operator relations.
//
//   AssocCirc        (x∘y)∘z = x∘(y∘z)
//   JacobiSuper      (-1)^{xz}{{x,y},z} + cyclic = 0
//   TpLeibnizSuper   2 x∘{y,z} = {x∘y,z} + (-1)^{xy}{y,x∘z}
//   PropEq1..6       consequences of the axioms (3- and 4-linear)
//   JordanSuper      (-1)^{xz}[L_{x∘y},L_z] + cyclic = 0   (operator form)
//   RelPQ1..4        relations between P_a = a∘- and Q_a = {a,-}
//   Rel2_1..6        further P/Q relations (Rel2_5 bundles its two equations)
enum class IdentityId {
    AssocCirc,
    JacobiSuper,
    TpLeibnizSuper,
    PropEq1,
    PropEq2,
    PropEq3,
    PropEq4,
    PropEq5,
    PropEq6,
    JordanSuper,
    RelPQ1,
    RelPQ2,
    RelPQ3,
    RelPQ4,
    Rel2_1,
    Rel2_2,
    Rel2_3,
    Rel2_4,
    Rel2_5,
    Rel2_6,
};

std::vector<IdentityId> all_identities();
std::string identity_name(IdentityId id);           // "TP_LEIBNIZ_SUPER", ...
IdentityId identity_from_name(const std::string&);  // throws ParseError
int identity_arity(IdentityId id);
bool identity_is_operator_valued(IdentityId id);

// Exact left-minus-right value of an identity instance.
using Defect = std::variant<Element, Matrix>;

bool defect_is_zero(const Defect& d);

struct IdentityReport {
    IdentityId identity;
    bool pass = true;
    std::optional<std::vector<int>> counterexample; // lexicographically least
    std::optional<Defect> defect;
};

// Homogeneous argument for an identity instance; parity must match the
// support of the element.
struct HomogeneousArg {
    Element value;
    int parity = 0;
};

// Defect of `id` instantiated at homogeneous elements. Multilinear in every
// slot, so vanishing on all basis tuples is equivalent to vanishing
// everywhere.
Defect evaluate_defect(const SuperAlgebra& a, IdentityId id,
                       std::span<const HomogeneousArg> args);

// Defect at a tuple of basis indices (the arity of `id` many).
Defect defect(const SuperAlgebra& a, IdentityId id, std::span<const int> tuple);

// Evaluates `id` over all basis tuples of the required arity; PASS iff all
// defects vanish, else the lexicographically least failing tuple.
// JordanSuper reads only the circ table (one-product interpretation).
IdentityReport check(const SuperAlgebra& a, IdentityId id);

// AssocCirc, JacobiSuper, TpLeibnizSuper; the algebra is transposed Poisson
// iff all three pass.
std::vector<IdentityReport> check_tp_axioms(const SuperAlgebra& a);
bool is_transposed_poisson(const SuperAlgebra& a);

// RelPQ1-4 and Rel2_1-6 as exact matrix identities.
std::vector<IdentityReport> check_operator_relations(const SuperAlgebra& a);

} // namespace tpalg
