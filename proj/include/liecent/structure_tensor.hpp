#pragma once

#include <cstddef>

#include "liecent/matrix.hpp"

namespace liecent {

/// Bilinear product on Q^n given by e_i * e_j = sum_k t(i, j, k) e_k.
class StructureTensor {
public:
    StructureTensor() = default;
    explicit StructureTensor(std::size_t n) : n_(n), data_(n * n * n) {}

    [[nodiscard]] std::size_t dim() const { return n_; }
    Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
    const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const
    {
        return data_[(i * n_ + j) * n_ + k];
    }

    [[nodiscard]] Vector product(const Vector& x, const Vector& y) const;
    [[nodiscard]] Vector basis_product(std::size_t i, std::size_t j) const;
    /// Matrix of y -> x * y.
    [[nodiscard]] Matrix left_multiplication(const Vector& x) const;
    [[nodiscard]] Matrix left_multiplication(std::size_t i) const;
    /// Matrix of y -> y * x.
    [[nodiscard]] Matrix right_multiplication(std::size_t i) const;

    friend bool operator==(const StructureTensor& a, const StructureTensor& b) = default;

private:
    std::size_t n_ = 0;
    Vector data_;
};

/// Basis of the derivations of the product, D(xy) = D(x)y + xD(y), as n x n matrices.
/// `symmetric` restricts the equations to pairs i <= j (valid for commutative or
/// anticommutative products).
std::vector<Matrix> derivations_of(const StructureTensor& t, bool symmetric);

} // namespace liecent
