#include "liecent/subspace.hpp"

#include "liecent/errors.hpp"
#include "liecent/linalg.hpp"

namespace liecent {

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, Matrix(0, ambient_dim), {}); }

Subspace Subspace::full(std::size_t ambient_dim)
{
    std::vector<std::size_t> pivots(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        pivots[i] = i;
    }
    return Subspace(ambient_dim, Matrix::identity(ambient_dim), std::move(pivots));
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors)
{
    return row_space(Matrix::from_rows(ambient_dim, vectors));
}

Subspace Subspace::row_space(const Matrix& m)
{
    RowEchelon e = row_reduce(m);
    Matrix basis(e.rank, m.cols());
    for (std::size_t r = 0; r < e.rank; ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            basis(r, c) = e.rref(r, c);
        }
    }
    return Subspace(m.cols(), std::move(basis), std::move(e.pivots));
}

Subspace Subspace::column_space(const Matrix& m) { return row_space(m.transpose()); }

std::vector<Vector> Subspace::vectors() const
{
    std::vector<Vector> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        out.push_back(basis_.row(i));
    }
    return out;
}

std::vector<std::size_t> Subspace::free_coordinates() const
{
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
        if (p < pivots_.size() && pivots_[p] == c) {
            ++p;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

Vector Subspace::reduce(const Vector& v) const
{
    if (v.size() != ambient_) {
        throw InputError("subspace: vector has the wrong length");
    }
    Vector r = v;
    for (std::size_t i = 0; i < dim(); ++i) {
        const Rational f = r[pivots_[i]];
        if (f.is_zero()) {
            continue;
        }
        for (std::size_t c = 0; c < ambient_; ++c) {
            if (!basis_(i, c).is_zero()) {
                r[c] -= f * basis_(i, c);
            }
        }
    }
    return r;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const
{
    if (!liecent::is_zero(reduce(v))) {
        return std::nullopt;
    }
    Vector coords(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        coords[i] = v[pivots_[i]];
    }
    return coords;
}

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_ != ambient_) {
        throw InputError("subspace containment: ambient dimensions differ");
    }
    for (std::size_t i = 0; i < other.dim(); ++i) {
        if (!contains(other.vector(i))) {
            return false;
        }
    }
    return true;
}

Subspace Subspace::operator+(const Subspace& other) const
{
    if (other.ambient_ != ambient_) {
        throw InputError("subspace sum: ambient dimensions differ");
    }
    auto vs = vectors();
    auto ws = other.vectors();
    vs.insert(vs.end(), ws.begin(), ws.end());
    return span(ambient_, vs);
}

Subspace Subspace::intersect(const Subspace& other) const
{
    if (other.ambient_ != ambient_) {
        throw InputError("subspace intersection: ambient dimensions differ");
    }
    // Solve sum a_i u_i = sum b_j w_j; the intersection is spanned by sum a_i u_i.
    std::vector<Vector> columns = vectors();
    for (auto w : other.vectors()) {
        for (auto& x : w) {
            x = -x;
        }
        columns.push_back(std::move(w));
    }
    const Subspace relations = kernel_basis(Matrix::from_columns(ambient_, columns));
    std::vector<Vector> out;
    for (std::size_t k = 0; k < relations.dim(); ++k) {
        const Vector rel = relations.vector(k);
        Vector x(ambient_);
        for (std::size_t i = 0; i < dim(); ++i) {
            if (rel[i].is_zero()) {
                continue;
            }
            for (std::size_t c = 0; c < ambient_; ++c) {
                x[c] += rel[i] * basis_(i, c);
            }
        }
        out.push_back(std::move(x));
    }
    return span(ambient_, out);
}

} // namespace liecent
