#include "liecent/matrix.hpp"

#include "liecent/errors.hpp"

namespace liecent {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw InputError("ragged matrix literal");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Rational(1);
    }
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw InputError("row length mismatch");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns)
{
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) {
            throw InputError("column length mismatch");
        }
        for (std::size_t r = 0; r < rows; ++r) {
            m(r, c) = columns[c][r];
        }
    }
    return m;
}

Matrix Matrix::unflatten(std::size_t rows, std::size_t cols, std::span<const Rational> entries)
{
    if (entries.size() != rows * cols) {
        throw InputError("unflatten: entry count mismatch");
    }
    Matrix m(rows, cols);
    std::copy(entries.begin(), entries.end(), m.data_.begin());
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

Rational Matrix::trace() const
{
    if (!is_square()) {
        throw InputError("trace of a non-square matrix");
    }
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

bool Matrix::is_zero() const { return liecent::is_zero(data_); }

Matrix Matrix::power(unsigned k) const
{
    if (!is_square()) {
        throw InputError("power of a non-square matrix");
    }
    Matrix result = identity(rows_);
    for (unsigned i = 0; i < k; ++i) {
        result = result * (*this);
    }
    return result;
}

bool Matrix::is_nilpotent() const { return power(static_cast<unsigned>(rows_)).is_zero(); }

Matrix& Matrix::operator+=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw InputError("matrix sum: shape mismatch");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += o.data_[i];
    }
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw InputError("matrix difference: shape mismatch");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= o.data_[i];
    }
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s)
{
    for (auto& x : data_) {
        x *= s;
    }
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_) {
        throw InputError("matrix product: shape mismatch");
    }
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (!b(k, j).is_zero()) {
                    p(i, j) += aik * b(k, j);
                }
            }
        }
    }
    return p;
}

Vector operator*(const Matrix& a, const Vector& v)
{
    if (a.cols_ != v.size()) {
        throw InputError("matrix-vector product: shape mismatch");
    }
    Vector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (!a(i, k).is_zero() && !v[k].is_zero()) {
                out[i] += a(i, k) * v[k];
            }
        }
    }
    return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix kron(const Matrix& a, const Matrix& b)
{
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) {
                continue;
            }
            for (std::size_t r = 0; r < b.rows(); ++r) {
                for (std::size_t c = 0; c < b.cols(); ++c) {
                    k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
                }
            }
        }
    }
    return k;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks)
{
    std::size_t n = 0;
    for (const auto& b : blocks) {
        if (!b.is_square()) {
            throw InputError("block_diagonal: non-square block");
        }
        n += b.rows();
    }
    Matrix m(n, n);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r) {
            for (std::size_t c = 0; c < b.cols(); ++c) {
                m(offset + r, offset + c) = b(r, c);
            }
        }
        offset += b.rows();
    }
    return m;
}

} // namespace liecent
