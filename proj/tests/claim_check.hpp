#pragma once

// Dispatches the catalog's machine-checkable claims to the operations that
// validate them. Shared by the regression tests and the acceptance suite.

#include "tpalg/catalog.hpp"
#include "tpalg/halfderiv.hpp"
#include "tpalg/identities.hpp"
#include "tpalg/kantor.hpp"
#include "tpalg/structure.hpp"

#include <string>

namespace tpalg::claims {

inline std::vector<int> dims_of(const std::vector<Subspace>& series) {
    std::vector<int> out;
    for (const auto& s : series) out.push_back(s.dim());
    return out;
}

// True iff the claim holds for the algebra.
inline bool check_claim(const SuperAlgebra& a, const catalog::Claim& claim) {
    const auto& p = claim.payload;
    if (claim.kind == "validate_ok") return a.validate().ok;
    if (claim.kind == "is_tp")
        return is_transposed_poisson(a) == p.at("value").get<bool>();
    if (claim.kind == "simple") {
        std::string which = p.at("which").get<std::string>();
        SimplicityProducts products =
            which == "CIRC"      ? SimplicityProducts::Circ
            : which == "BRACKET" ? SimplicityProducts::Bracket
                                 : SimplicityProducts::TP;
        SimplicityReport r = is_simple(a, products);
        return verdict_name(r.verdict) == p.at("value").get<std::string>();
    }
    if (claim.kind == "halfder_dim") {
        Product which = p.at("product").get<std::string>() == "CIRC"
                            ? Product::Circ
                            : Product::Bracket;
        return half_derivations(a, which, p.at("parity").get<int>()).dim() ==
               p.at("value").get<int>();
    }
    if (claim.kind == "derived_series_dims")
        return dims_of(series(a).derived_series) ==
               p.at("value").get<std::vector<int>>();
    if (claim.kind == "circ_power_dims")
        return dims_of(series(a).circ_powers) ==
               p.at("value").get<std::vector<int>>();
    if (claim.kind == "lower_central_stable_nonzero") {
        auto lcs = series(a).lower_central_bracket;
        return !lcs.back().is_zero() == p.at("value").get<bool>();
    }
    if (claim.kind == "unit") {
        auto unit = series(a).unit;
        return unit.has_value() &&
               *unit == Element::basis(a.field(), a.dim(),
                                       p.at("basis_index").get<int>());
    }
    if (claim.kind == "perfect_circ")
        return series(a).perfect_circ == p.at("value").get<bool>();
    if (claim.kind == "nilpotent_circ")
        return series(a).circ_powers.back().is_zero() ==
               p.at("value").get<bool>();
    if (claim.kind == "radical_series_dims") {
        Subspace step = radical(a);
        std::vector<int> dims{step.dim()};
        while (!step.is_zero()) {
            Subspace next = product_span(a, Product::Bracket, step, step);
            if (next == step) break;
            step = next;
            dims.push_back(step.dim());
        }
        return dims == p.at("value").get<std::vector<int>>();
    }
    if (claim.kind == "circ_square_inside_radical") {
        Subspace full = Subspace::full(a.field(), a.dim());
        return radical(a).contains(
            product_span(a, Product::Circ, full, full));
    }
    if (claim.kind == "lie_double_jacobi_defect") {
        SuperAlgebra dbl = lie_double(a);
        if (check(dbl, IdentityId::JacobiSuper).pass) return false;
        auto tuple = p.at("tuple").get<std::vector<int>>();
        Defect d = defect(dbl, IdentityId::JacobiSuper, tuple);
        Element expected = Element::zero(dbl.field(), dbl.dim());
        auto coords = p.at("coords").get<std::vector<std::string>>();
        for (std::size_t i = 0; i < coords.size(); ++i)
            expected.coords[i] = Scalar::parse(dbl.field(), coords[i]);
        return std::get<Element>(d) == expected;
    }
    if (claim.kind == "kantor_double_jordan") {
        SuperAlgebra dbl = kantor_double(a);
        return dbl.validate().ok && check(dbl, IdentityId::JordanSuper).pass;
    }
    if (claim.kind == "annihilator_of_double") {
        SuperAlgebra dbl = kantor_double(a);
        std::vector<std::vector<Scalar>> gens;
        for (int i : p.at("basis_indices").get<std::vector<int>>())
            gens.push_back(
                Element::basis(dbl.field(), dbl.dim(), i).coords);
        return annihilator(dbl) ==
               Subspace::span(dbl.field(), dbl.dim(), gens);
    }
    throw Error("unknown claim kind '" + claim.kind + "'");
}

} // namespace tpalg::claims
