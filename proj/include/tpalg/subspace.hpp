#pragma once

#include "tpalg/matrix.hpp"

namespace tpalg {

// Subspace of F^n held as a canonical RREF basis (no zero rows). Two
// subspaces are equal iff their bases are identical entry-for-entry, so
// equality of spans is a plain comparison.
class Subspace {
public:
    static Subspace zero(const FieldSpec& f, int ambient_dim);
    static Subspace full(const FieldSpec& f, int ambient_dim);
    static Subspace span(const FieldSpec& f, int ambient_dim,
                         const std::vector<std::vector<Scalar>>& generators);
    static Subspace from_canonical(Matrix basis); // trusts RREF'd input

    int ambient_dim() const { return basis_.cols(); }
    int dim() const { return basis_.rows(); }
    const FieldSpec& field() const { return basis_.field(); }
    const Matrix& basis() const { return basis_; }
    std::vector<Scalar> basis_vector(int i) const { return basis_.row(i); }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_dim(); }

    bool contains(const std::vector<Scalar>& v) const;
    bool contains(const Subspace& other) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
    void require_compatible(const Subspace& other) const;

    Matrix basis_;
};

} // namespace tpalg
