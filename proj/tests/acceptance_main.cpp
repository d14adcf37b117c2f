// Acceptance suite: every headline property this library is expected to
// certify, one line of output per criterion. Exits nonzero if any fail.

#include "tpalg/catalog.hpp"
#include "tpalg/halfderiv.hpp"
#include "tpalg/identities.hpp"
#include "tpalg/kantor.hpp"
#include "tpalg/structure.hpp"
#include "tpalg/witt.hpp"

#include "claim_check.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace tpalg;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F3 = FieldSpec::prime_field(3);

int g_failures = 0;

void criterion(const std::string& label, const std::string& title,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool pass = false;
    auto start = std::chrono::steady_clock::now();
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (!pass) ++g_failures;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << label << "  " << title
              << " [" << ms << " ms]";
    if (!detail.empty()) std::cout << "\n      " << detail;
    std::cout << "\n";
}

Subspace span_indices(const SuperAlgebra& a, const std::vector<int>& indices) {
    std::vector<std::vector<Scalar>> gens;
    for (int i : indices)
        gens.push_back(Element::basis(a.field(), a.dim(), i).coords);
    return Subspace::span(a.field(), a.dim(), gens);
}

bool within_ms(std::chrono::steady_clock::time_point start, long bound_ms,
               std::string& detail) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (ms <= bound_ms) return true;
    detail = "time budget exceeded: " + std::to_string(ms) + " ms > " +
             std::to_string(bound_ms) + " ms";
    return false;
}

// --- criteria -------------------------------------------------------------

bool c1_halfder_gf3(std::string& detail) {
    // Stated expectation: dimension exactly 3, equal to the parametric
    // family D(e1)=λe1+µe2, D(e2)=νe1+λe2, D(e3)=λe3.
    HalfDerivationSpace space =
        half_derivations(catalog::get("sl2(GF3)"), Product::Bracket, 0);
    auto family_op = [&](long l, long m, long n) {
        Matrix d(F3, 3, 3);
        d.at(0, 0) = d.at(1, 1) = d.at(2, 2) = Scalar::from_int(F3, l);
        d.at(1, 0) = Scalar::from_int(F3, m);
        d.at(0, 1) = Scalar::from_int(F3, n);
        return d.flatten();
    };
    Subspace family = Subspace::span(
        F3, 9, {family_op(1, 0, 0), family_op(0, 1, 0), family_op(0, 0, 1)});
    if (space.dim() != 3 || !(space.vectorized == family)) {
        bool contains_family = true;
        for (int r = 0; r < family.dim(); ++r)
            contains_family = contains_family &&
                              space.vectorized.contains(family.basis_vector(r));
        detail = "solver finds dimension " + std::to_string(space.dim()) +
                 ", confirmed by enumerating all 3^9 candidate matrices "
                 "(3^5 satisfy the law); the three-parameter family is " +
                 (contains_family ? "a proper subspace" : "not contained") +
                 " — e.g. D(e2)=2e3, D(e3)=e1 is a half-derivation outside "
                 "it, so the stated dimension-3 expectation is unattainable";
        return false;
    }
    return true;
}

bool c2_halfder_q(std::string& detail) {
    HalfDerivationSpace space =
        half_derivations(catalog::get("sl2(Q)"), Product::Bracket, 0);
    if (space.dim() != 1) {
        detail = "dimension " + std::to_string(space.dim()) + " != 1";
        return false;
    }
    if (!(space.basis[0] == Matrix::identity(Q, 3))) {
        detail = "basis is not the identity operator";
        return false;
    }
    return true;
}

bool c3_family_enumeration(std::string& detail) {
    auto found = brute_force_tp_family(catalog::get("sl2(GF3)"),
                                       {{0, 0, 1}, {1, 1, 0}});
    std::ostringstream seen;
    int count = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            bool expected = a * b % 3 == 0;
            bool passes = is_transposed_poisson(catalog::get(
                "tp_sl2_gf3(" + std::to_string(a) + "," + std::to_string(b) +
                ")"));
            if (passes != expected) {
                detail = "pair (" + std::to_string(a) + "," +
                         std::to_string(b) + ") " +
                         (passes ? "passes" : "fails") + " unexpectedly";
                return false;
            }
            if (passes) ++count;
        }
    if (count != 5 || found.size() != 5) {
        detail = "expected 5 admissible pairs, enumeration found " +
                 std::to_string(found.size());
        return false;
    }
    for (const auto& hit : found)
        if (!(hit.values[0] * hit.values[1]).is_zero()) {
            detail = "enumerated pair violates a·b = 0";
            return false;
        }
    return true;
}

bool c4_simple_tp10(std::string& detail) {
    auto start = std::chrono::steady_clock::now();
    SuperAlgebra tp10 = catalog::get("tp_sl2_gf3(1,0)");
    SimplicityReport tp = is_simple(tp10, SimplicityProducts::TP);
    if (tp.verdict != Verdict::Simple || tp.candidates != 26) {
        detail = "TP verdict " + verdict_name(tp.verdict) + " over " +
                 std::to_string(tp.candidates) + " seeds";
        return false;
    }
    SimplicityReport bracket = is_simple(tp10, SimplicityProducts::Bracket);
    if (bracket.verdict != Verdict::Simple) {
        detail = "bracket verdict " + verdict_name(bracket.verdict);
        return false;
    }
    return within_ms(start, 1000, detail);
}

bool c5_kantor_double(std::string& detail) {
    auto start = std::chrono::steady_clock::now();
    SuperAlgebra tp10 = catalog::get("tp_sl2_gf3(1,0)");
    SuperAlgebra dbl = kantor_double(tp10);
    if (!check(dbl, IdentityId::JordanSuper).pass) {
        detail = "Jordan superidentity fails on the double";
        return false;
    }
    Subspace ann = annihilator(dbl);
    if (!(ann == span_indices(dbl, {2}))) {
        bool contains_e3 = ann.contains(Element::basis(F3, 6, 2).coords);
        detail = "annihilator has dimension " + std::to_string(ann.dim()) +
                 std::string(contains_e3 ? " and contains e3" : "") +
                 "; it is span{e2, e3} (for β = 0 every double product with "
                 "plain e2 as a factor vanishes), so equality with span{e3} "
                 "is unattainable; only the containment span{e3} ⊆ "
                 "annihilator holds";
        return false;
    }
    SimplicityReport r = is_simple(dbl, SimplicityProducts::TP);
    if (r.verdict != Verdict::NotSimple || !r.witness ||
        !is_ideal(dbl, *r.witness, IdealKind::TpIdeal)) {
        detail = "double not refuted with a verified witness ideal";
        return false;
    }
    auto obstruction = double_simplicity_obstruction(tp10);
    if (!obstruction || !(*obstruction == span_indices(dbl, {0, 1, 2, 4}))) {
        detail = "obstruction ideal P ⊕ (P∘P)ˢ mismatch";
        return false;
    }
    // The affirmative half of the double-simplicity criterion has no
    // finite-dimensional nontrivial instance in characteristic zero (simple
    // finite-dimensional TP algebras there are trivial); it is covered only
    // by this refutation direction plus the Witt window evidence.
    detail = "affirmative direction not reproducible at finite dimension; "
             "refutation direction + Witt evidence only";
    return within_ms(start, 5000, detail);
}

bool c6_lie_double_defect(std::string& detail) {
    SuperAlgebra dbl = lie_double(catalog::get("nonlie_remark_q"));
    if (check(dbl, IdentityId::JacobiSuper).pass) {
        detail = "Jacobi unexpectedly passes";
        return false;
    }
    Defect d = defect(dbl, IdentityId::JacobiSuper, std::array{5, 5, 5});
    Element expected = Element::zero(Q, 6);
    expected.coords[3] = Scalar::from_int(Q, -3);
    expected.coords[4] = Scalar::from_int(Q, -3);
    if (!(std::get<Element>(d) == expected)) {
        detail = "defect at (e3s,e3s,e3s) is not -3(e1+e2)s";
        return false;
    }
    return true;
}

bool c7_solvable3(std::string& detail) {
    SuperAlgebra s3 = catalog::get("solvable3_q");
    if (!is_transposed_poisson(s3)) {
        detail = "axioms fail";
        return false;
    }
    StructureSummary s = series(s3);
    if (claims::dims_of(s.derived_series) != std::vector<int>{3, 2, 0}) {
        detail = "derived series dims differ from [3,2,0]";
        return false;
    }
    if (s.lower_central_bracket.back().is_zero()) {
        detail = "lower central series reached zero (bracket would be "
                 "nilpotent)";
        return false;
    }
    return true;
}

bool c8_radical_demo(std::string& detail) {
    SuperAlgebra demo = catalog::get("radical_demo_q");
    Subspace rad = radical(demo);
    if (!(rad == span_indices(demo, {3, 4, 5}))) {
        detail = "radical is not the solvable summand";
        return false;
    }
    Subspace r1 = product_span(demo, Product::Bracket, rad, rad);
    Subspace r2 = product_span(demo, Product::Bracket, r1, r1);
    if (!is_ideal(demo, rad, IdealKind::TpIdeal) ||
        !is_ideal(demo, r1, IdealKind::TpIdeal) || !r2.is_zero()) {
        detail = "derived radical terms fail the ideal tests";
        return false;
    }
    Subspace full = Subspace::full(Q, demo.dim());
    if (!rad.contains(product_span(demo, Product::Circ, full, full))) {
        detail = "P∘P escapes the radical";
        return false;
    }
    return true;
}

bool c9_witt_windows(std::string& detail) {
    auto start = std::chrono::steady_clock::now();
    for (const char* q_text : {"0:1", "0:1,1:1", "1:2"}) {
        witt::ZAlgebraSpec spec;
        spec.q = witt::ZElement::parse(q_text);
        for (IdentityId id : {IdentityId::AssocCirc, IdentityId::JacobiSuper,
                              IdentityId::TpLeibnizSuper}) {
            witt::WindowReport r = witt::window_check(spec, id, -3, 3);
            if (!r.pass) {
                detail = std::string("window check fails for q = ") + q_text;
                return false;
            }
        }
        auto inverse = witt::laurent_invertible(spec.q);
        bool should_be_unital = spec.q.terms().size() == 1;
        if (inverse.has_value() != should_be_unital) {
            detail = std::string("invertibility mismatch for q = ") + q_text;
            return false;
        }
        if (inverse) {
            for (long long k = -3; k <= 3; ++k)
                if (!(witt::z_product(spec, *inverse,
                                      witt::ZElement::basis(k)) ==
                      witt::ZElement::basis(k))) {
                    detail = "q⁻¹ is not a unit of the mutated product";
                    return false;
                }
        } else {
            // exact finite check: no u supported on [-6,6] acts as a unit
            // on e_-2..e_2
            std::vector<std::vector<Scalar>> rows;
            std::vector<Scalar> rhs;
            for (long long i = -2; i <= 2; ++i)
                for (long long m = -8 + i; m <= 8 + i; ++m) {
                    std::vector<Scalar> row(13, Scalar::zero(Q));
                    bool any = false;
                    for (long long j = -6; j <= 6; ++j) {
                        auto it = spec.q.terms().find(m - i - j);
                        if (it != spec.q.terms().end()) {
                            row[static_cast<int>(j + 6)] = it->second;
                            any = true;
                        }
                    }
                    if (!any && m != i) continue;
                    rows.push_back(std::move(row));
                    rhs.push_back(m == i ? Scalar::one(Q) : Scalar::zero(Q));
                }
            if (solve(Matrix::from_rows(Q, rows), rhs).has_value()) {
                detail = "a window unit exists although q is not invertible";
                return false;
            }
        }
    }
    return within_ms(start, 2000, detail);
}

bool c10_derived_identity_suite(std::string& detail) {
    for (const auto& a : catalog::tp_instances()) {
        for (IdentityId id :
             {IdentityId::PropEq1, IdentityId::PropEq2, IdentityId::PropEq3,
              IdentityId::PropEq4, IdentityId::PropEq5, IdentityId::PropEq6})
            if (!check(a, id).pass) {
                detail = a.name() + " fails " + identity_name(id);
                return false;
            }
        for (const auto& r : check_operator_relations(a))
            if (!r.pass) {
                detail = a.name() + " fails " + identity_name(r.identity);
                return false;
            }
        for (int x = 0; x < a.dim(); ++x)
            for (int y = 0; y < a.dim(); ++y) {
                Matrix d = distinguished_derivation(
                    a, Element::basis(a.field(), a.dim(), x),
                    Element::basis(a.field(), a.dim(), y));
                for (int i = 0; i < a.dim(); ++i)
                    for (int j = 0; j < a.dim(); ++j) {
                        Element ei = Element::basis(a.field(), a.dim(), i);
                        Element ej = Element::basis(a.field(), a.dim(), j);
                        Element lhs = Element{d.apply(
                            a.multiply(Product::Circ, ei, ej).coords)};
                        Element rhs =
                            a.multiply(Product::Circ,
                                       Element{d.apply(ei.coords)}, ej) +
                            a.multiply(Product::Circ, ei,
                                       Element{d.apply(ej.coords)});
                        if (!(lhs == rhs)) {
                            detail = a.name() + ": D_{xy} is not a derivation";
                            return false;
                        }
                    }
            }
    }
    return true;
}

bool c11_oracle_equivalence(std::string& detail) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> dim_pick(1, 4);
    int inconclusive = 0, disagreements = 0;
    const int total = 200;
    for (int trial = 0; trial < total; ++trial) {
        SuperAlgebra a = oracle::random_gf3_algebra(dim_pick(rng), rng);
        SimplicityOptions ex, mx;
        ex.strategy = SimplicityStrategy::Exhaustive;
        mx.strategy = SimplicityStrategy::Meataxe;
        mx.seed = static_cast<std::uint64_t>(trial);
        SimplicityReport ground = is_simple(a, SimplicityProducts::TP, ex);
        SimplicityReport norton = is_simple(a, SimplicityProducts::TP, mx);
        if (norton.verdict == Verdict::Indeterminate) {
            ++inconclusive;
            continue;
        }
        if (norton.verdict != ground.verdict) ++disagreements;
    }
    double rate = 100.0 * inconclusive / total;
    std::ostringstream note;
    note << "disagreements " << disagreements << ", inconclusive "
         << inconclusive << "/" << total << " (" << rate << "%)";
    detail = note.str();
    return disagreements == 0 && rate < 5.0;
}

bool c12_circ_powers_and_containments(std::string& detail) {
    StructureSummary tp10 = series(catalog::get("tp_sl2_gf3(1,0)"));
    if (claims::dims_of(tp10.circ_powers) != std::vector<int>{3, 1, 0}) {
        detail = "circ power dims differ from [3,1,0]";
        return false;
    }
    if (!tp10.perfect_bracket) {
        detail = "bracket of the GF(3) example is not perfect";
        return false;
    }

    // Literal reading of the second half: P^(2^n+1) ⊆ R^(n) on
    // radical_demo_q for n >= 1. The statement this instantiates assumes a
    // perfect bracket, which radical_demo_q lacks; the containment fails at
    // n = 1 (P³ is the whole solvable summand, R^(1) only its derived part),
    // so this half stays red. The conditional form passes on every
    // perfect-bracket catalog instance (see the unit suite).
    SuperAlgebra demo = catalog::get("radical_demo_q");
    Subspace full = Subspace::full(Q, demo.dim());
    Subspace rad_step = radical(demo);
    auto circ_power = [&](int k) {
        Subspace acc = full;
        for (int step = 2; step <= k; ++step)
            acc = product_span(demo, Product::Circ, acc, full);
        return acc;
    };
    for (int n = 1; n <= 2; ++n) {
        rad_step = product_span(demo, Product::Bracket, rad_step, rad_step);
        Subspace power = circ_power((1 << n) + 1);
        if (!rad_step.contains(power)) {
            detail = "P^(2^" + std::to_string(n) + "+1) has dim " +
                     std::to_string(power.dim()) + " but R^(" +
                     std::to_string(n) + ") has dim " +
                     std::to_string(rad_step.dim()) +
                     "; hypothesis {P,P}=P fails on radical_demo_q, so the "
                     "quoted containment is unattainable there";
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    std::cout << "acceptance suite\n";
    criterion("1 ", "sl2/GF(3) half-derivations: dim 3, parametric family",
              c1_halfder_gf3);
    criterion("2 ", "sl2/Q half-derivations: dim 1, identity only",
              c2_halfder_q);
    criterion("3 ", "GF(3) family: TP axioms hold exactly for the 5 pairs "
                    "with a·b = 0", c3_family_enumeration);
    criterion("4 ", "tp_sl2_gf3(1,0) simple as TP (26 seeds) and as bracket",
              c4_simple_tp10);
    criterion("5 ", "Kantor double: Jordan, annihilator span{e3}, not simple "
                    "+ obstruction ideal", c5_kantor_double);
    criterion("6 ", "Lie double of nonlie_remark_q: Jacobi defect "
                    "-3(e1+e2)s at (e3s,e3s,e3s)", c6_lie_double_defect);
    criterion("7 ", "solvable3_q: TP, derived dims [3,2,0], non-nilpotent "
                    "bracket", c7_solvable3);
    criterion("8 ", "radical_demo_q: Killing radical, ideal chain, P∘P ⊆ R",
              c8_radical_demo);
    criterion("9 ", "Witt windows q ∈ {e0, e0+e1, 2e1}: all identities, "
                    "unitality ⟺ invertibility", c9_witt_windows);
    criterion("10", "catalog-wide derived identities, operator relations, "
                    "distinguished derivations", c10_derived_identity_suite);
    criterion("11", "Norton vs exhaustive on 200 random GF(3) algebras",
              c11_oracle_equivalence);
    criterion("12", "circ powers [3,1,0] + literal power/radical containments "
                    "on radical_demo_q", c12_circ_powers_and_containments);

    std::cout << (g_failures == 0
                      ? "all criteria passed"
                      : std::to_string(g_failures) + " criterion(s) failed")
              << "\n";
    return g_failures == 0 ? 0 : 1;
}
