#include "tpalg/matrix.hpp"

#include <sstream>

namespace tpalg {

Matrix Matrix::identity(const FieldSpec& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& f,
                         const std::vector<std::vector<Scalar>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(f, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw DimensionError("ragged rows");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void Matrix::set(int r, int c, const Scalar& v) {
    if (v.field() != field_)
        throw FieldMismatchError("matrix entry field mismatch");
    entries_[idx(r, c)] = v;
}

void Matrix::require_same_shape(const Matrix& o) const {
    if (field_ != o.field_)
        throw FieldMismatchError("matrix field mismatch");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("matrix shape mismatch");
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same_shape(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_same_shape(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] = entries_[i] - o.entries_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (field_ != o.field_)
        throw FieldMismatchError("matrix field mismatch");
    if (cols_ != o.rows_) throw DimensionError("inner dimension mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r = *this;
    for (auto& e : r.entries_) e = e * c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Scalar Matrix::trace() const {
    if (rows_ != cols_) throw DimensionError("trace of non-square matrix");
    Scalar t = Scalar::zero(field_);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           entries_ == o.entries_;
}

std::vector<Scalar> Matrix::row(int r) const {
    std::vector<Scalar> out;
    out.reserve(cols_);
    for (int j = 0; j < cols_; ++j) out.push_back(at(r, j));
    return out;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw DimensionError("vector length mismatch");
    std::vector<Scalar> out(rows_, Scalar::zero(field_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero())
                out[i] += at(i, j) * v[j];
    return out;
}

Matrix Matrix::unflatten(const FieldSpec& f, int rows, int cols,
                         const std::vector<Scalar>& flat) {
    if (static_cast<int>(flat.size()) != rows * cols)
        throw DimensionError("flat length mismatch");
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.set(i, j, flat[static_cast<std::size_t>(i) * cols + j]);
    return m;
}

void Matrix::place_block(int r0, int c0, const Matrix& block) {
    if (block.field() != field_)
        throw FieldMismatchError("block field mismatch");
    if (r0 + block.rows() > rows_ || c0 + block.cols() > cols_)
        throw DimensionError("block out of range");
    for (int i = 0; i < block.rows(); ++i)
        for (int j = 0; j < block.cols(); ++j)
            at(r0 + i, c0 + j) = block.at(i, j);
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j)
            os << (j ? " " : "[") << at(i, j).str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

Matrix rref(const Matrix& m) {
    const FieldSpec& f = m.field();
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));

    int pivot_row = 0;
    for (int col = 0; col < m.cols() && pivot_row < static_cast<int>(rows.size());
         ++col) {
        int sel = -1;
        for (int r = pivot_row; r < static_cast<int>(rows.size()); ++r)
            if (!rows[r][col].is_zero()) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[pivot_row], rows[sel]);
        Scalar inv = rows[pivot_row][col].inv();
        for (int j = col; j < m.cols(); ++j)
            rows[pivot_row][j] = rows[pivot_row][j] * inv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == pivot_row || rows[r][col].is_zero()) continue;
            Scalar factor = rows[r][col];
            for (int j = col; j < m.cols(); ++j)
                rows[r][j] = rows[r][j] - factor * rows[pivot_row][j];
        }
        ++pivot_row;
    }
    rows.resize(pivot_row, std::vector<Scalar>{});
    Matrix out(f, pivot_row, m.cols());
    for (int i = 0; i < pivot_row; ++i)
        for (int j = 0; j < m.cols(); ++j) out.set(i, j, rows[i][j]);
    return out;
}

int rank(const Matrix& m) { return rref(m).rows(); }

Matrix kernel_basis(const Matrix& m) {
    Matrix r = rref(m);
    const FieldSpec& f = m.field();
    int n = m.cols();
    std::vector<int> pivot_col_of_row(r.rows());
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < r.rows(); ++i) {
        int c = 0;
        while (c < n && r.at(i, c).is_zero()) ++c;
        pivot_col_of_row[i] = c;
        is_pivot[c] = true;
    }
    std::vector<std::vector<Scalar>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(n, Scalar::zero(f));
        v[free] = Scalar::one(f);
        for (int i = 0; i < r.rows(); ++i)
            v[pivot_col_of_row[i]] = -r.at(i, free);
        basis.push_back(std::move(v));
    }
    Matrix out(f, static_cast<int>(basis.size()), n);
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < n; ++j) out.set(i, j, basis[i][j]);
    return rref(out);
}

std::optional<std::vector<Scalar>> solve(const Matrix& m,
                                         const std::vector<Scalar>& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows())
        throw DimensionError("rhs length mismatch");
    const FieldSpec& f = m.field();
    Matrix aug(f, m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    Matrix r = rref(aug);
    std::vector<Scalar> x(m.cols(), Scalar::zero(f));
    for (int i = 0; i < r.rows(); ++i) {
        int c = 0;
        while (c <= m.cols() && r.at(i, c).is_zero()) ++c;
        if (c == m.cols()) return std::nullopt; // pivot in rhs column
        x[c] = r.at(i, m.cols());
    }
    return x;
}

} // namespace tpalg
