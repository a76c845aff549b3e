#include "liecent/lie_algebra.hpp"

#include <sstream>

#include "liecent/errors.hpp"
#include "liecent/linalg.hpp"

namespace liecent {

namespace {

std::vector<std::string> default_names(std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("e" + std::to_string(i + 1));
    }
    return names;
}

std::string format_vector(const Vector& v)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? ", " : "") << v[i];
    }
    os << ")";
    return os.str();
}

void validate(const std::vector<std::string>& names, const StructureTensor& c)
{
    const std::size_t n = c.dim();
    if (names.size() != n) {
        throw InputError("expected " + std::to_string(n) + " basis names, got " + std::to_string(names.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (c(i, j, k) != -c(j, i, k)) {
                    throw ValidationError("bracket is not alternating on (" + names[i] + ", " + names[j] + ")");
                }
            }
        }
    }
    std::vector<Matrix> ad(n);
    for (std::size_t i = 0; i < n; ++i) {
        ad[i] = c.left_multiplication(i);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                Vector defect = ad[i] * c.basis_product(j, k);
                const Vector b = ad[j] * c.basis_product(k, i);
                const Vector d = ad[k] * c.basis_product(i, j);
                for (std::size_t l = 0; l < n; ++l) {
                    defect[l] += b[l] + d[l];
                }
                if (!is_zero(defect)) {
                    std::ostringstream os;
                    os << "Jacobi identity fails on basis triple (" << i << ", " << j << ", " << k << ") = ("
                       << names[i] << ", " << names[j] << ", " << names[k] << "); defect " << format_vector(defect);
                    throw ValidationError(os.str());
                }
            }
        }
    }
}

} // namespace

LieAlgebra::LieAlgebra(std::vector<std::string> names, StructureTensor c) : names_(std::move(names)), c_(std::move(c))
{
    ad_.reserve(c_.dim());
    for (std::size_t i = 0; i < c_.dim(); ++i) {
        ad_.push_back(c_.left_multiplication(i));
    }
}

LieAlgebra LieAlgebra::build(std::size_t dim, std::vector<std::string> basis_names,
                             const std::vector<BracketEntry>& table)
{
    if (basis_names.empty()) {
        basis_names = default_names(dim);
    }
    StructureTensor c(dim);
    std::vector<bool> seen(dim * dim, false);
    for (const auto& entry : table) {
        if (entry.left >= entry.right || entry.right >= dim) {
            throw InputError("bracket entry (" + std::to_string(entry.left) + ", " + std::to_string(entry.right)
                             + ") must satisfy left < right < dim");
        }
        if (entry.value.size() != dim) {
            throw InputError("bracket value for (" + std::to_string(entry.left) + ", "
                             + std::to_string(entry.right) + ") has the wrong length");
        }
        if (seen[entry.left * dim + entry.right]) {
            throw InputError("duplicate bracket entry (" + std::to_string(entry.left) + ", "
                             + std::to_string(entry.right) + ")");
        }
        seen[entry.left * dim + entry.right] = true;
        for (std::size_t k = 0; k < dim; ++k) {
            c(entry.left, entry.right, k) = entry.value[k];
            c(entry.right, entry.left, k) = -entry.value[k];
        }
    }
    return from_tensor(std::move(basis_names), std::move(c));
}

LieAlgebra LieAlgebra::from_tensor(std::vector<std::string> basis_names, StructureTensor c)
{
    if (basis_names.empty()) {
        basis_names = default_names(c.dim());
    }
    validate(basis_names, c);
    return LieAlgebra(std::move(basis_names), std::move(c));
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return from_tensor(default_names(dim), StructureTensor(dim)); }

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const { return c_.product(x, y); }

Matrix LieAlgebra::ad(const Vector& x) const { return c_.left_multiplication(x); }

std::vector<BracketEntry> LieAlgebra::bracket_table() const
{
    std::vector<BracketEntry> out;
    for (std::size_t i = 0; i < dim(); ++i) {
        for (std::size_t j = i + 1; j < dim(); ++j) {
            Vector v = bracket(i, j);
            if (!is_zero(v)) {
                out.push_back({i, j, std::move(v)});
            }
        }
    }
    return out;
}

Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y) { return g.bracket(x, y); }

Matrix ad_matrix(const LieAlgebra& g, const Vector& x) { return g.ad(x); }

Subspace center(const LieAlgebra& g)
{
    // Stack ad(e_i) for all i: x is central iff ad(e_i) x = 0 for every i.
    const std::size_t n = g.dim();
    LinearSystem system(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix& a = g.ad_basis()[i];
        for (std::size_t r = 0; r < n; ++r) {
            Vector row = a.row(r);
            if (!is_zero(row)) {
                system.add_equation(std::move(row));
            }
        }
    }
    return system.solutions();
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != g.dim() || b.ambient_dim() != g.dim()) {
        throw InputError("bracket_span: subspaces must live in the algebra");
    }
    std::vector<Vector> brackets;
    const auto av = a.vectors();
    const auto bv = b.vectors();
    for (const auto& x : av) {
        const Matrix adx = g.ad(x);
        for (const auto& y : bv) {
            Vector v = adx * y;
            if (!is_zero(v)) {
                brackets.push_back(std::move(v));
            }
        }
    }
    return Subspace::span(g.dim(), brackets);
}

Subspace commutator(const LieAlgebra& g)
{
    const Subspace full = Subspace::full(g.dim());
    return bracket_span(g, full, full);
}

bool is_ideal(const LieAlgebra& g, const Subspace& s)
{
    return s.contains(bracket_span(g, Subspace::full(g.dim()), s));
}

std::vector<Subspace> series(const LieAlgebra& g, SeriesKind kind)
{
    const Subspace full = Subspace::full(g.dim());
    std::vector<Subspace> out{full};
    while (true) {
        const Subspace& last = out.back();
        Subspace next = kind == SeriesKind::lower_central ? bracket_span(g, full, last) : bracket_span(g, last, last);
        if (next == last) {
            break;
        }
        out.push_back(std::move(next));
    }
    return out;
}

Matrix killing_form(const LieAlgebra& g)
{
    const std::size_t n = g.dim();
    Matrix k(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Rational t = (g.ad_basis()[i] * g.ad_basis()[j]).trace();
            k(i, j) = t;
            k(j, i) = t;
        }
    }
    return k;
}

bool is_semisimple(const LieAlgebra& g) { return !determinant(killing_form(g)).is_zero(); }

LieAlgebra quotient(const LieAlgebra& g, const Subspace& ideal)
{
    if (ideal.ambient_dim() != g.dim()) {
        throw InputError("quotient: ideal does not live in the algebra");
    }
    for (std::size_t x = 0; x < g.dim(); ++x) {
        for (std::size_t i = 0; i < ideal.dim(); ++i) {
            const Vector v = g.ad_basis()[x] * ideal.vector(i);
            if (!ideal.contains(v)) {
                throw PreconditionError("not an ideal: [" + g.basis_names()[x] + ", ideal basis vector "
                                        + std::to_string(i) + "] leaves the subspace");
            }
        }
    }
    const auto keep = ideal.free_coordinates();
    const std::size_t q = keep.size();
    StructureTensor c(q);
    std::vector<std::string> names;
    for (std::size_t a = 0; a < q; ++a) {
        names.push_back(g.basis_names()[keep[a]]);
        for (std::size_t b = 0; b < q; ++b) {
            const Vector r = ideal.reduce(g.bracket(keep[a], keep[b]));
            for (std::size_t k = 0; k < q; ++k) {
                c(a, b, k) = r[keep[k]];
            }
        }
    }
    return LieAlgebra::from_tensor(std::move(names), std::move(c));
}

LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& s)
{
    if (s.ambient_dim() != g.dim()) {
        throw InputError("restrict_to: subspace does not live in the algebra");
    }
    const std::size_t r = s.dim();
    const auto vs = s.vectors();
    std::vector<std::string> names;
    for (std::size_t a = 0; a < r; ++a) {
        // A basis vector that is a coordinate vector keeps its name.
        const std::size_t p = s.pivots()[a];
        bool unit = true;
        for (std::size_t k = 0; k < g.dim() && unit; ++k) {
            unit = (k == p) || vs[a][k].is_zero();
        }
        names.push_back(unit ? g.basis_names()[p] : "v" + std::to_string(a + 1));
    }
    StructureTensor c(r);
    for (std::size_t a = 0; a < r; ++a) {
        const Matrix ada = g.ad(vs[a]);
        for (std::size_t b = 0; b < r; ++b) {
            const auto coords = s.coordinates(ada * vs[b]);
            if (!coords) {
                throw PreconditionError("restrict_to: subspace is not a subalgebra");
            }
            for (std::size_t k = 0; k < r; ++k) {
                c(a, b, k) = (*coords)[k];
            }
        }
    }
    return LieAlgebra::from_tensor(std::move(names), std::move(c));
}

} // namespace liecent
