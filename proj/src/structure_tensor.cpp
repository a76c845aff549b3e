#include "liecent/structure_tensor.hpp"

#include "liecent/errors.hpp"
#include "liecent/linalg.hpp"

namespace liecent {

Vector StructureTensor::product(const Vector& x, const Vector& y) const
{
    if (x.size() != n_ || y.size() != n_) {
        throw InputError("product: coordinate vectors must have length " + std::to_string(n_));
    }
    Vector out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < n_; ++j) {
            if (y[j].is_zero()) {
                continue;
            }
            const Rational xy = x[i] * y[j];
            for (std::size_t k = 0; k < n_; ++k) {
                if (!(*this)(i, j, k).is_zero()) {
                    out[k] += xy * (*this)(i, j, k);
                }
            }
        }
    }
    return out;
}

Vector StructureTensor::basis_product(std::size_t i, std::size_t j) const
{
    Vector out(n_);
    for (std::size_t k = 0; k < n_; ++k) {
        out[k] = (*this)(i, j, k);
    }
    return out;
}

Matrix StructureTensor::left_multiplication(const Vector& x) const
{
    if (x.size() != n_) {
        throw InputError("left_multiplication: coordinate vector must have length " + std::to_string(n_));
    }
    Matrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < n_; ++j) {
            for (std::size_t k = 0; k < n_; ++k) {
                if (!(*this)(i, j, k).is_zero()) {
                    m(k, j) += x[i] * (*this)(i, j, k);
                }
            }
        }
    }
    return m;
}

Matrix StructureTensor::left_multiplication(std::size_t i) const
{
    Matrix m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
        for (std::size_t k = 0; k < n_; ++k) {
            m(k, j) = (*this)(i, j, k);
        }
    }
    return m;
}

Matrix StructureTensor::right_multiplication(std::size_t i) const
{
    Matrix m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
        for (std::size_t k = 0; k < n_; ++k) {
            m(k, j) = (*this)(j, i, k);
        }
    }
    return m;
}

std::vector<Matrix> derivations_of(const StructureTensor& t, bool symmetric)
{
    const std::size_t n = t.dim();
    const auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
    LinearSystem system(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = symmetric ? i : 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                // D(e_i e_j)_k - (D(e_i) e_j)_k - (e_i D(e_j))_k
                Vector eq(n * n);
                for (std::size_t l = 0; l < n; ++l) {
                    eq[var(k, l)] += t(i, j, l);
                    eq[var(l, i)] -= t(l, j, k);
                    eq[var(l, j)] -= t(i, l, k);
                }
                if (!is_zero(eq)) {
                    system.add_equation(std::move(eq));
                }
            }
        }
    }
    const Subspace sol = system.solutions();
    std::vector<Matrix> out;
    out.reserve(sol.dim());
    for (std::size_t i = 0; i < sol.dim(); ++i) {
        out.push_back(Matrix::unflatten(n, n, sol.vector(i)));
    }
    return out;
}

} // namespace liecent
