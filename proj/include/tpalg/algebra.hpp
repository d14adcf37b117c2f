#pragma once

#include "tpalg/matrix.hpp"
#include "tpalg/subspace.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tpalg {

// Which of the two structure tables a product refers to.
enum class Product { Circ, Bracket };

// Element of a fixed algebra: coordinates in the standard basis.
struct Element {
    std::vector<Scalar> coords;

    static Element zero(const FieldSpec& f, int dim) {
        return Element{std::vector<Scalar>(dim, Scalar::zero(f))};
    }
    static Element basis(const FieldSpec& f, int dim, int i) {
        Element e = zero(f, dim);
        e.coords[i] = Scalar::one(f);
        return e;
    }

    int dim() const { return static_cast<int>(coords.size()); }
    bool is_zero() const;
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element scaled(const Scalar& c) const;
    bool operator==(const Element& o) const { return coords == o.coords; }
};

// Structure-constant table: (i, j, k) -> coefficient of e_k in e_i·e_j.
// Both orientations (i,j) and (j,i) are stored explicitly; the validator
// checks the symmetry, it never infers it. std::map keeps (i,j,k) sorted,
// which is also the canonical file ordering.
using StructureTable = std::map<std::array<int, 3>, Scalar>;

struct TableViolation {
    std::array<int, 3> entry;
    std::string reason;
};

struct ValidationReport {
    bool ok = true;
    std::optional<TableViolation> first_violation;
};

// Finite-dimensional Z2-graded two-product algebra given by structure
// constants: a supercommutative product (circ) and a super skew-symmetric
// bracket. An all-even parity vector is an ordinary ungraded algebra.
// Immutable after construction; all operations are pure.
class SuperAlgebra {
public:
    SuperAlgebra(std::string name, FieldSpec field, int dim,
                 std::vector<int> parity, StructureTable circ,
                 StructureTable bracket);

    const std::string& name() const { return name_; }
    const FieldSpec& field() const { return field_; }
    int dim() const { return dim_; }
    int parity(int i) const { return parity_[i]; }
    const std::vector<int>& parities() const { return parity_; }
    bool is_graded() const; // any odd basis vector
    const StructureTable& table(Product which) const {
        return which == Product::Circ ? circ_ : bracket_;
    }

    // Range checks, parity homogeneity, supercommutativity of circ and
    // super skew-symmetry of the bracket. Reports the first bad entry.
    ValidationReport validate() const;

    Element multiply_basis(Product which, int i, int j) const;
    Element multiply(Product which, const Element& x, const Element& y) const;

    // Parity of a homogeneous element, nullopt for 0; throws ParityError if
    // the element mixes parities on a graded algebra.
    std::optional<int> homogeneous_parity(const Element& x) const;

    // Matrix of left multiplication v -> a·v. On a graded algebra `a` must
    // be homogeneous (the operator parity is meaningful downstream).
    Matrix left_mult_operator(Product which, const Element& a) const;
    Matrix left_mult_operator(Product which, int basis_index) const;

    SuperAlgebra with_name(std::string name) const;

    bool operator==(const SuperAlgebra& o) const;

private:
    std::string name_;
    FieldSpec field_;
    int dim_;
    std::vector<int> parity_;
    StructureTable circ_, bracket_;
};

// Block-diagonal sum: both tables block-diagonal, parities concatenated,
// cross products zero.
SuperAlgebra direct_sum(const SuperAlgebra& a, const SuperAlgebra& b);

// (-1)^(p·q) as a field scalar.
Scalar parity_sign(const FieldSpec& f, int p, int q);

// --- Interchange file format (JSON) ------------------------------------
//
// {"name": ..., "field": {"kind":"Q"} | {"kind":"GF","p":3}, "dim": n,
//  "parity": [...], "circ": [[i,j,k,"coeff"],...], "bracket": [...]}
//
// Canonical save ordering is lexicographic by (i,j,k) with scalars in
// canonical textual form, so save∘load∘save is byte-identical.

std::string save_algebra(const SuperAlgebra& a);
SuperAlgebra load_algebra(const std::string& json_text);
SuperAlgebra load_algebra_file(const std::string& path);
void save_algebra_file(const SuperAlgebra& a, const std::string& path);

} // namespace tpalg
