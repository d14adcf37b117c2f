#pragma once

#include "tpalg/algebra.hpp"
#include "tpalg/subspace.hpp"

#include <cstdint>
#include <optional>

namespace tpalg {

// Closure/membership flavours. A quasi-ideal satisfies PI ⊆ I and
// {P,I}P ⊆ I; a transposed quasi-ideal satisfies {P,I} ⊆ I and {PI,P} ⊆ I.
enum class IdealKind {
    TpIdeal,      // closed under circ and bracket
    CircIdeal,
    BracketIdeal,
    QuasiIdeal,
    TransposedQuasiIdeal,
};

// Matrix of v -> v·a for the selected product.
Matrix right_mult_operator(const SuperAlgebra& a, Product which,
                           const Element& x);
Matrix right_mult_operator(const SuperAlgebra& a, Product which,
                           int basis_index);

// span{ s·t : s in S, t in T } for the selected product.
Subspace product_span(const SuperAlgebra& a, Product which, const Subspace& s,
                      const Subspace& t);

// Least subspace containing S closed under the operations of `kind`
// (iterated to a fixpoint; dimension strictly increases each round).
Subspace ideal_closure(const SuperAlgebra& a, const Subspace& s, IdealKind kind);

// Direct membership tests. All require S proper (a full subspace is never an
// ideal in the sense used here).
bool is_ideal(const SuperAlgebra& a, const Subspace& s, IdealKind kind);
bool is_quasi_ideal(const SuperAlgebra& a, const Subspace& s);
bool is_transposed_quasi_ideal(const SuperAlgebra& a, const Subspace& s);

// {x : x∘A = 0 and {x,A} = 0}.
Subspace annihilator(const SuperAlgebra& a);

// Killing-form radical of the bracket: {x : tr(Q_x Q_y) = 0 for all y in
// {P,P}}. Characteristic zero only; throws UnsupportedError over GF(p).
Subspace radical(const SuperAlgebra& a);

// D_{xy}(v) = {v∘x, y} − v∘{x,y}; a derivation of (P,∘) whenever the
// algebra is transposed Poisson.
Matrix distinguished_derivation(const SuperAlgebra& a, const Element& x,
                                const Element& y);

struct StructureSummary {
    Subspace center_circ;
    Subspace center_bracket;
    std::vector<Subspace> derived_series;        // bracket, P^(k)
    std::vector<Subspace> lower_central_bracket; // {P^k, P}
    std::vector<Subspace> circ_powers;           // P^k = P^{k-1}∘P
    std::optional<Subspace> radical;             // rationals only
    std::optional<Element> unit;                 // circ unit, if any
    bool perfect_circ = false;
    bool perfect_bracket = false;
};

// All series/centers/flags in one pass. Series are stored p to the first
// stable term inclusive of the first repeat's predecessor (strictly
// decreasing prefixes); a stable nonzero tail is detectable as back() != 0.
StructureSummary series(const SuperAlgebra& a);

// --- simplicity ----------------------------------------------------------

enum class SimplicityProducts { TP, Circ, Bracket };
enum class SimplicityStrategy { Exhaustive, Meataxe, Auto };

struct SimplicityOptions {
    SimplicityStrategy strategy = SimplicityStrategy::Auto;
    // EXHAUSTIVE is eligible over GF(p) when p^dim − 1 <= bound.
    std::uint64_t bound = 1'000'000;
    std::uint64_t seed = 0; // Norton randomness; runs are reproducible
    int tries = 64;         // Norton retry budget
};

enum class Verdict { Simple, NotSimple, Indeterminate };

struct SimplicityReport {
    Verdict verdict = Verdict::Indeterminate;
    std::optional<Subspace> witness; // proper nonzero ideal when NotSimple
    std::string strategy_used;       // "EXHAUSTIVE" or "MEATAXE"
    std::uint64_t candidates = 0;    // seeds/kernel vectors examined
    std::string note;
};

// Simplicity with respect to the selected products. Graded algebras are
// tested against graded ideals (homogeneous seeds; Norton witnesses are
// replaced by their graded hulls). A zero-dimensional algebra or one with
// identically zero selected products is NotSimple by convention.
SimplicityReport is_simple(const SuperAlgebra& a, SimplicityProducts which,
                           const SimplicityOptions& opts = {});

std::string verdict_name(Verdict v);

} // namespace tpalg
