#include "tpalg/subspace.hpp"

namespace tpalg {

Subspace Subspace::zero(const FieldSpec& f, int ambient_dim) {
    return Subspace(Matrix(f, 0, ambient_dim));
}

Subspace Subspace::full(const FieldSpec& f, int ambient_dim) {
    return Subspace(Matrix::identity(f, ambient_dim));
}

Subspace Subspace::span(const FieldSpec& f, int ambient_dim,
                        const std::vector<std::vector<Scalar>>& generators) {
    Matrix m(f, static_cast<int>(generators.size()), ambient_dim);
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(generators[i].size()) != ambient_dim)
            throw DimensionError("generator length != ambient dimension");
        for (int j = 0; j < ambient_dim; ++j) m.set(i, j, generators[i][j]);
    }
    return Subspace(rref(m));
}

Subspace Subspace::from_canonical(Matrix basis) {
    Matrix r = rref(basis);
    if (!(r == basis)) throw Error("basis is not canonical RREF");
    return Subspace(std::move(basis));
}

void Subspace::require_compatible(const Subspace& other) const {
    if (field() != other.field())
        throw FieldMismatchError("subspace field mismatch");
    if (ambient_dim() != other.ambient_dim())
        throw DimensionError("ambient dimension mismatch");
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != ambient_dim())
        throw DimensionError("vector length != ambient dimension");
    // Reduce v against the RREF basis; membership iff the residual vanishes.
    std::vector<Scalar> w = v;
    for (int i = 0; i < dim(); ++i) {
        int c = 0;
        while (c < ambient_dim() && basis_.at(i, c).is_zero()) ++c;
        if (c == ambient_dim() || w[c].is_zero()) continue;
        Scalar factor = w[c];
        for (int j = c; j < ambient_dim(); ++j)
            w[j] = w[j] - factor * basis_.at(i, j);
    }
    for (const auto& e : w)
        if (!e.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    require_compatible(other);
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    require_compatible(other);
    Matrix stacked(field(), dim() + other.dim(), ambient_dim());
    stacked.place_block(0, 0, basis_);
    stacked.place_block(dim(), 0, other.basis_);
    return Subspace(rref(stacked));
}

Subspace Subspace::intersect(const Subspace& other) const {
    require_compatible(other);
    // x in both spans iff x = uᵀA = vᵀB; solve Aᵀu − Bᵀv = 0.
    int a = dim(), b = other.dim(), n = ambient_dim();
    Matrix block(field(), n, a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < n; ++j) block.at(j, i) = basis_.at(i, j);
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < n; ++j) block.at(j, a + i) = -other.basis_.at(i, j);
    Matrix ker = kernel_basis(block);
    std::vector<std::vector<Scalar>> gens;
    for (int r = 0; r < ker.rows(); ++r) {
        std::vector<Scalar> x(n, Scalar::zero(field()));
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < n; ++j) x[j] += ker.at(r, i) * basis_.at(i, j);
        gens.push_back(std::move(x));
    }
    return span(field(), n, gens);
}

} // namespace tpalg
