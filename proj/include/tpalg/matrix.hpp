#pragma once

#include "tpalg/scalar.hpp"

#include <optional>
#include <vector>

namespace tpalg {

// Dense matrix over a single field, row-major. All arithmetic exact.
class Matrix {
public:
    Matrix(const FieldSpec& f, int rows, int cols)
        : field_(f), rows_(rows), cols_(cols),
          entries_(static_cast<std::size_t>(rows) * cols, Scalar::zero(f)) {}

    static Matrix identity(const FieldSpec& f, int n);
    static Matrix from_rows(const FieldSpec& f,
                            const std::vector<std::vector<Scalar>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(int r, int c) { return entries_[idx(r, c)]; }
    const Scalar& at(int r, int c) const { return entries_[idx(r, c)]; }
    void set(int r, int c, const Scalar& v);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;
    Scalar trace() const;

    bool is_zero() const;
    bool operator==(const Matrix& o) const;

    std::vector<Scalar> row(int r) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const; // M·v

    // Row-major flattening (the canonical operator vectorization).
    std::vector<Scalar> flatten() const { return entries_; }
    static Matrix unflatten(const FieldSpec& f, int rows, int cols,
                            const std::vector<Scalar>& flat);

    // Rows of `block` copied into position with top-left corner (r0, c0).
    void place_block(int r0, int c0, const Matrix& block);

    std::string str() const; // for diagnostics

private:
    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r) * cols_ + c;
    }
    void require_same_shape(const Matrix& o) const;

    FieldSpec field_;
    int rows_, cols_;
    std::vector<Scalar> entries_;
};

// Canonical reduced row echelon form: pivots 1, pivot columns otherwise zero,
// pivot columns strictly increasing, zero rows dropped.
Matrix rref(const Matrix& m);

// Rank = number of RREF rows.
int rank(const Matrix& m);

// Basis of the right null space {v : m·v = 0}, returned as the rows of a
// canonical (RREF) matrix. kernel rows + rank == cols.
Matrix kernel_basis(const Matrix& m);

// One exact solution x of m·x = rhs, if any.
std::optional<std::vector<Scalar>> solve(const Matrix& m,
                                         const std::vector<Scalar>& rhs);

} // namespace tpalg
