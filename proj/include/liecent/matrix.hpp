#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "liecent/rational.hpp"

namespace liecent {

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);
    static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
    /// Inverse of flatten(): a rows x cols matrix from a row-major vector.
    static Matrix unflatten(std::size_t rows, std::size_t cols, std::span<const Rational> entries);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] Vector row(std::size_t r) const;
    [[nodiscard]] Vector column(std::size_t c) const;
    [[nodiscard]] const Vector& flatten() const { return data_; }

    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] Rational trace() const;
    [[nodiscard]] bool is_zero() const;
    /// m^k with m^0 = identity.
    [[nodiscard]] Matrix power(unsigned k) const;
    [[nodiscard]] bool is_nilpotent() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rational& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
    friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
    friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vector data_;
};

/// a*b - b*a
Matrix commutator(const Matrix& a, const Matrix& b);
/// Kronecker product; index (i, a) of the result is i * b.rows() + a.
Matrix kron(const Matrix& a, const Matrix& b);
/// Block-diagonal matrix with the given square blocks.
Matrix block_diagonal(const std::vector<Matrix>& blocks);

} // namespace liecent
