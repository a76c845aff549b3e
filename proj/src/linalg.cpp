#include "liecent/linalg.hpp"

#include <bit>

#include "liecent/errors.hpp"

namespace liecent {

RowEchelon row_reduce(Matrix m)
{
    RowEchelon out;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m(pivot, c).is_zero()) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        if (pivot != r) {
            for (std::size_t k = 0; k < cols; ++k) {
                std::swap(m(pivot, k), m(r, k));
            }
        }
        const Rational inv = Rational(1) / m(r, c);
        for (std::size_t k = c; k < cols; ++k) {
            m(r, k) *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) {
                continue;
            }
            const Rational f = m(i, c);
            for (std::size_t k = c; k < cols; ++k) {
                if (!m(r, k).is_zero()) {
                    m(i, k) -= f * m(r, k);
                }
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.rref = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank; }

Subspace kernel_basis(const Matrix& m)
{
    LinearSystem system(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        system.add_equation(m.row(r));
    }
    return system.solutions();
}

std::optional<Vector> solve(const Matrix& m, const Vector& b)
{
    if (b.size() != m.rows()) {
        throw InputError("solve: right-hand side has length " + std::to_string(b.size())
                         + ", expected " + std::to_string(m.rows()));
    }
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            aug(r, c) = m(r, c);
        }
        aug(r, m.cols()) = b[r];
    }
    const RowEchelon e = row_reduce(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) {
        return std::nullopt;
    }
    Vector x(m.cols());
    for (std::size_t i = 0; i < e.rank; ++i) {
        x[e.pivots[i]] = e.rref(i, m.cols());
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m)
{
    if (!m.is_square()) {
        throw InputError("inverse of a non-square matrix");
    }
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            aug(r, c) = m(r, c);
        }
        aug(r, n + r) = Rational(1);
    }
    const RowEchelon e = row_reduce(std::move(aug));
    if (e.rank < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
        return std::nullopt;
    }
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            inv(r, c) = e.rref(r, n + c);
        }
    }
    return inv;
}

Rational determinant(const Matrix& m)
{
    if (!m.is_square()) {
        throw InputError("determinant of a non-square matrix");
    }
    // det(-m) relation to the constant term of det(tI - m).
    const Polynomial p = char_poly(m);
    Rational c = p.coefficient(0);
    return m.rows() % 2 == 0 ? c : -c;
}

Polynomial char_poly(const Matrix& m)
{
    if (!m.is_square()) {
        throw InputError("char_poly of a non-square matrix");
    }
    // Faddeev-LeVerrier: M_k = m M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(m M_k) / k.
    const std::size_t n = m.rows();
    Vector c(n + 1);
    c[n] = Rational(1);
    Matrix mk(n, n);
    const Matrix id = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk + c[n - k + 1] * id;
        c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
    }
    return Polynomial(std::move(c));
}

Polynomial min_poly(const Matrix& m) { return min_poly(m, Matrix::identity(m.rows())); }

Polynomial min_poly(const Matrix& m, const Matrix& unit)
{
    if (!m.is_square()) {
        throw InputError("min_poly of a non-square matrix");
    }
    if (unit.rows() != m.rows() || unit.cols() != m.cols()) {
        throw InputError("min_poly: unit shape mismatch");
    }
    // Find the first power of m that depends linearly on the lower ones.
    std::vector<Vector> powers{unit.flatten()};
    Matrix current = unit;
    const std::size_t limit = m.rows() * m.rows() + 1;
    for (std::size_t d = 1; d <= limit; ++d) {
        current = current * m;
        const Matrix basis = Matrix::from_columns(current.flatten().size(), powers);
        if (auto x = solve(basis, current.flatten())) {
            Vector coeffs(d + 1);
            for (std::size_t k = 0; k < d; ++k) {
                coeffs[k] = -(*x)[k];
            }
            coeffs[d] = Rational(1);
            return Polynomial(std::move(coeffs));
        }
        powers.push_back(current.flatten());
    }
    throw AlgebraError("min_poly: no annihilating polynomial found");
}

JordanChevalley jordan_chevalley(const Matrix& m)
{
    if (!m.is_square()) {
        throw InputError("jordan_chevalley of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return {m, m};
    }
    const Polynomial f = squarefree_part(char_poly(m));
    const Polynomial df = f.derivative();
    const unsigned bound = static_cast<unsigned>(std::bit_width(n - 1)) + 1; // ceil(log2 n) + 1
    Matrix a = m;
    for (unsigned it = 0; it <= bound; ++it) {
        const Matrix fa = f.evaluate(a);
        if (fa.is_zero()) {
            return {a, m - a};
        }
        const auto inv = inverse(df.evaluate(a));
        if (!inv) {
            throw AlgebraError("jordan_chevalley: f'(a) is singular");
        }
        a = a - fa * (*inv);
    }
    throw AlgebraError("jordan_chevalley: Newton iteration did not converge");
}

bool LinearSystem::add_equation(Vector coeffs)
{
    if (coeffs.size() != unknowns_) {
        throw InputError("LinearSystem: equation has the wrong number of coefficients");
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (coeffs[p].is_zero()) {
            continue;
        }
        const Rational f = coeffs[p];
        const Vector& row = rows_[i];
        for (std::size_t k = 0; k < unknowns_; ++k) {
            if (!row[k].is_zero()) {
                coeffs[k] -= f * row[k];
            }
        }
    }
    std::size_t lead = 0;
    while (lead < unknowns_ && coeffs[lead].is_zero()) {
        ++lead;
    }
    if (lead == unknowns_) {
        return false;
    }
    const Rational inv = Rational(1) / coeffs[lead];
    for (std::size_t k = lead; k < unknowns_; ++k) {
        if (!coeffs[k].is_zero()) {
            coeffs[k] *= inv;
        }
    }
    for (auto& row : rows_) {
        if (row[lead].is_zero()) {
            continue;
        }
        const Rational f = row[lead];
        for (std::size_t k = 0; k < unknowns_; ++k) {
            if (!coeffs[k].is_zero()) {
                row[k] -= f * coeffs[k];
            }
        }
    }
    rows_.push_back(std::move(coeffs));
    pivots_.push_back(lead);
    return true;
}

Subspace LinearSystem::solutions() const
{
    std::vector<bool> is_pivot(unknowns_, false);
    for (auto p : pivots_) {
        is_pivot[p] = true;
    }
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < unknowns_; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        Vector v(unknowns_);
        v[f] = Rational(1);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            v[pivots_[i]] = -rows_[i][f];
        }
        basis.push_back(std::move(v));
    }
    return Subspace::span(unknowns_, basis);
}

} // namespace liecent
