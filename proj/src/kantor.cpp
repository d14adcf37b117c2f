#include "tpalg/kantor.hpp"

#include "tpalg/identities.hpp"
#include "tpalg/structure.hpp"

namespace tpalg {

DoubleLayout double_layout(const SuperAlgebra& source) {
    DoubleLayout layout;
    layout.source_dim = source.dim();
    layout.parity = source.parities();
    for (int i = 0; i < source.dim(); ++i)
        layout.parity.push_back(1 - source.parity(i));
    return layout;
}

SuperAlgebra kantor_double(const SuperAlgebra& source) {
    const FieldSpec& f = source.field();
    int n = source.dim();
    DoubleLayout layout = double_layout(source);
    StructureTable star;
    auto add = [&](int i, int j, int k, const Scalar& c) {
        if (c.is_zero()) return;
        auto key = std::array<int, 3>{i, j, k};
        auto [it, inserted] = star.emplace(key, c);
        if (!inserted) it->second += c;
    };
    for (const auto& [ijk, c] : source.table(Product::Circ)) {
        auto [i, j, k] = ijk;
        Scalar signed_c =
            source.parity(i) == 1 ? -c : c; // (-1)^{|x|} factor
        add(i, j, k, c);                               // x*y = x∘y
        add(n + i, j, n + k, c);                       // xˢ*y = (x∘y)ˢ
        add(i, n + j, n + k, signed_c);                // x*yˢ = ±(x∘y)ˢ
    }
    for (const auto& [ijk, b] : source.table(Product::Bracket)) {
        auto [i, j, k] = ijk;
        Scalar signed_b = source.parity(i) == 1 ? -b : b;
        add(n + i, n + j, k, signed_b);                // xˢ*yˢ = ±{x,y}
    }
    SuperAlgebra doubled(source.name() + "_kantor_double", f, 2 * n,
                         layout.parity, std::move(star), {});
    ValidationReport check = doubled.validate();
    if (!check.ok)
        throw Error("Kantor double failed validation at (" +
                    std::to_string(check.first_violation->entry[0]) + "," +
                    std::to_string(check.first_violation->entry[1]) + "," +
                    std::to_string(check.first_violation->entry[2]) +
                    "): " + check.first_violation->reason);
    return doubled;
}

SuperAlgebra lie_double(const SuperAlgebra& source) {
    if (source.is_graded())
        throw UnsupportedError(
            "the Lie double is defined for ungraded sources only");
    const FieldSpec& f = source.field();
    int n = source.dim();
    std::vector<int> parity(n, 0);
    parity.insert(parity.end(), n, 1);
    StructureTable bracket;
    auto add = [&](int i, int j, int k, const Scalar& c) {
        if (c.is_zero()) return;
        auto key = std::array<int, 3>{i, j, k};
        auto [it, inserted] = bracket.emplace(key, c);
        if (!inserted) it->second += c;
    };
    for (const auto& [ijk, b] : source.table(Product::Bracket)) {
        auto [i, j, k] = ijk;
        add(i, j, k, b);             // [x,y] = {x,y}
        add(n + i, j, n + k, b);     // [xˢ,y] = ({x,y})ˢ
        add(i, n + j, n + k, b);     // [x,yˢ] = ({x,y})ˢ
    }
    for (const auto& [ijk, c] : source.table(Product::Circ)) {
        auto [i, j, k] = ijk;
        add(n + i, n + j, k, c);     // [xˢ,yˢ] = x∘y
    }
    SuperAlgebra doubled(source.name() + "_lie_double", f, 2 * n, parity, {},
                         std::move(bracket));
    ValidationReport check = doubled.validate();
    if (!check.ok) throw Error("Lie double failed validation");
    return doubled;
}

std::optional<Subspace> double_simplicity_obstruction(
    const SuperAlgebra& source) {
    if (!is_transposed_poisson(source))
        throw Error("double_simplicity_obstruction needs a transposed "
                    "Poisson source");
    const FieldSpec& f = source.field();
    int n = source.dim();
    Subspace full = Subspace::full(f, n);
    Subspace circ_square = product_span(source, Product::Circ, full, full);
    if (circ_square == full) return std::nullopt;

    SuperAlgebra doubled = kantor_double(source);
    std::vector<std::vector<Scalar>> gens;
    for (int i = 0; i < n; ++i)
        gens.push_back(Element::basis(f, 2 * n, i).coords);
    for (int r = 0; r < circ_square.dim(); ++r) {
        std::vector<Scalar> shifted(2 * n, Scalar::zero(f));
        auto v = circ_square.basis_vector(r);
        for (int i = 0; i < n; ++i) shifted[n + i] = v[i];
        gens.push_back(std::move(shifted));
    }
    Subspace obstruction = Subspace::span(f, 2 * n, gens);
    if (!is_ideal(doubled, obstruction, IdealKind::TpIdeal))
        throw Error("obstruction subspace unexpectedly failed the ideal test");
    return obstruction;
}

} // namespace tpalg
