#include "liecent/constructions.hpp"

#include "liecent/errors.hpp"
#include "liecent/linalg.hpp"
#include "liecent/multi_index.hpp"

namespace liecent {

CommutativeAlgebra CommutativeAlgebra::from_tensor(std::vector<std::string> names, StructureTensor c, Vector unit)
{
    const std::size_t n = c.dim();
    if (names.size() != n || unit.size() != n) {
        throw InputError("commutative algebra: names and unit must match the dimension");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (c.basis_product(i, j) != c.basis_product(j, i)) {
                throw ValidationError("product is not commutative on (" + names[i] + ", " + names[j] + ")");
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Vector ij = c.basis_product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                const Vector left = c.product(ij, unit_vector(n, k));
                const Vector right = c.product(unit_vector(n, i), c.basis_product(j, k));
                if (left != right) {
                    throw ValidationError("product is not associative on (" + names[i] + ", " + names[j] + ", "
                                          + names[k] + ")");
                }
            }
        }
        if (c.product(unit, unit_vector(n, i)) != unit_vector(n, i)) {
            throw ValidationError("unit does not act as the identity on " + names[i]);
        }
    }
    CommutativeAlgebra a;
    a.names_ = std::move(names);
    a.c_ = std::move(c);
    a.unit_ = std::move(unit);
    return a;
}

namespace {

Matrix unit_matrix(std::size_t n, std::size_t r, std::size_t c)
{
    Matrix m(n, n);
    m(r, c) = Rational(1);
    return m;
}

std::string idx(std::size_t i, std::size_t j) { return std::to_string(i + 1) + std::to_string(j + 1); }

/// [[A, -B], [B, A]] for the complex matrix A + iB.
Matrix realify(const Matrix& re, const Matrix& im)
{
    const std::size_t n = re.rows();
    Matrix m(2 * n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m(r, c) = re(r, c);
            m(r, n + c) = -im(r, c);
            m(n + r, c) = im(r, c);
            m(n + r, n + c) = re(r, c);
        }
    }
    return m;
}

void require_size(bool ok, const std::string& what)
{
    if (!ok) {
        throw InputError("invalid size for " + what);
    }
}

} // namespace

LieAlgebra from_matrix_basis(std::vector<std::string> names, const std::vector<Matrix>& basis)
{
    const std::size_t d = basis.size();
    if (names.size() != d) {
        throw InputError("from_matrix_basis: one name per basis matrix required");
    }
    if (d == 0) {
        return LieAlgebra::from_tensor({}, StructureTensor(0));
    }
    const std::size_t n = basis.front().rows();
    std::vector<Vector> cols;
    for (const auto& b : basis) {
        if (b.rows() != n || b.cols() != n) {
            throw InputError("from_matrix_basis: matrices must be square of equal size");
        }
        cols.push_back(b.flatten());
    }
    const Matrix system = Matrix::from_columns(n * n, cols);
    if (rank(system) != d) {
        throw InputError("from_matrix_basis: matrices are linearly dependent");
    }
    StructureTensor c(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            const auto coords = solve(system, commutator(basis[i], basis[j]).flatten());
            if (!coords) {
                throw InputError("from_matrix_basis: span is not closed under commutators");
            }
            for (std::size_t k = 0; k < d; ++k) {
                c(i, j, k) = (*coords)[k];
                c(j, i, k) = -(*coords)[k];
            }
        }
    }
    return LieAlgebra::from_tensor(std::move(names), std::move(c));
}

LieAlgebra classical(ClassicalKind kind, std::size_t n)
{
    std::vector<std::string> names;
    std::vector<Matrix> basis;
    switch (kind) {
    case ClassicalKind::sl: {
        require_size(n >= 2, "sl(n), need n >= 2");
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) {
                    names.push_back("E" + idx(i, j));
                    basis.push_back(unit_matrix(n, i, j));
                }
            }
        }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            names.push_back("H" + std::to_string(i + 1));
            basis.push_back(unit_matrix(n, i, i) - unit_matrix(n, i + 1, i + 1));
        }
        if (n == 2) {
            names = {"e", "f", "h"};
        }
        break;
    }
    case ClassicalKind::gl:
        require_size(n >= 1, "gl(n), need n >= 1");
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                names.push_back("E" + idx(i, j));
                basis.push_back(unit_matrix(n, i, j));
            }
        }
        break;
    case ClassicalKind::so:
        require_size(n >= 2, "so(n), need n >= 2");
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                names.push_back("A" + idx(i, j));
                basis.push_back(unit_matrix(n, i, j) - unit_matrix(n, j, i));
            }
        }
        break;
    case ClassicalKind::sp: {
        require_size(n >= 2 && n % 2 == 0, "sp(2m), need an even size >= 2");
        const std::size_t m = n / 2;
        // [[A, B], [C, -A^T]] with B, C symmetric.
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                names.push_back("A" + idx(i, j));
                basis.push_back(unit_matrix(n, i, j) - unit_matrix(n, m + j, m + i));
            }
        }
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j) {
                names.push_back("B" + idx(i, j));
                Matrix b = unit_matrix(n, i, m + j);
                if (i != j) {
                    b += unit_matrix(n, j, m + i);
                }
                basis.push_back(std::move(b));
            }
        }
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j) {
                names.push_back("C" + idx(i, j));
                Matrix c = unit_matrix(n, m + i, j);
                if (i != j) {
                    c += unit_matrix(n, m + j, i);
                }
                basis.push_back(std::move(c));
            }
        }
        break;
    }
    case ClassicalKind::u:
    case ClassicalKind::su: {
        const bool special = kind == ClassicalKind::su;
        require_size(special ? n >= 2 : n >= 1, special ? "su(n), need n >= 2" : "u(n), need n >= 1");
        const Matrix zero(n, n);
        // Skew-hermitian A + iB: A real skew-symmetric, B real symmetric.
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                names.push_back("R" + idx(i, j));
                basis.push_back(realify(unit_matrix(n, i, j) - unit_matrix(n, j, i), zero));
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                names.push_back("I" + idx(i, j));
                basis.push_back(realify(zero, unit_matrix(n, i, j) + unit_matrix(n, j, i)));
            }
        }
        if (special) {
            for (std::size_t i = 0; i + 1 < n; ++i) {
                names.push_back("D" + std::to_string(i + 1));
                basis.push_back(realify(zero, unit_matrix(n, i, i) - unit_matrix(n, i + 1, i + 1)));
            }
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                names.push_back("I" + idx(i, i));
                basis.push_back(realify(zero, unit_matrix(n, i, i)));
            }
        }
        break;
    }
    }
    return from_matrix_basis(std::move(names), basis);
}

ExampleTable example_table(ExampleAlgebra which)
{
    if (which == ExampleAlgebra::two_dim) {
        return {2, {"x1", "x2"}, {{0, 1, {1, 0}}}};
    }
    const auto y = [](std::size_t k) { return unit_vector(5, k); };
    return {5,
            {"y1", "y2", "y3", "y4", "y5"},
            {{0, 1, y(0)}, {0, 2, y(1)}, {0, 3, y(2)}, {1, 2, y(3)}, {1, 3, y(4)}}};
}

LieAlgebra example_algebra(ExampleAlgebra which)
{
    ExampleTable t = example_table(which);
    return LieAlgebra::build(t.dim, std::move(t.names), t.table);
}

LieAlgebra direct_sum(const std::vector<LieAlgebra>& parts)
{
    if (parts.empty()) {
        throw InputError("direct_sum of an empty list");
    }
    if (parts.size() == 1) {
        return parts.front();
    }
    std::size_t n = 0;
    for (const auto& p : parts) {
        n += p.dim();
    }
    StructureTensor c(n);
    std::vector<std::string> names;
    std::size_t offset = 0;
    for (std::size_t s = 0; s < parts.size(); ++s) {
        const auto& p = parts[s];
        for (std::size_t i = 0; i < p.dim(); ++i) {
            names.push_back(p.basis_names()[i] + "_" + std::to_string(s + 1));
            for (std::size_t j = 0; j < p.dim(); ++j) {
                for (std::size_t k = 0; k < p.dim(); ++k) {
                    c(offset + i, offset + j, offset + k) = p.c(i, j, k);
                }
            }
        }
        offset += p.dim();
    }
    return LieAlgebra::from_tensor(std::move(names), std::move(c));
}

LieAlgebra permute_basis(const LieAlgebra& g, const std::vector<std::size_t>& perm)
{
    const std::size_t n = g.dim();
    std::vector<bool> seen(n, false);
    if (perm.size() != n) {
        throw InputError("permutation has the wrong length");
    }
    for (auto p : perm) {
        if (p >= n || seen[p]) {
            throw InputError("not a permutation of the basis");
        }
        seen[p] = true;
    }
    std::vector<std::size_t> inv(n);
    for (std::size_t i = 0; i < n; ++i) {
        inv[perm[i]] = i;
    }
    StructureTensor c(n);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(g.basis_names()[perm[i]]);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                c(i, j, inv[k]) = g.c(perm[i], perm[j], k);
            }
        }
    }
    return LieAlgebra::from_tensor(std::move(names), std::move(c));
}

CommutativeAlgebra truncated_poly(std::size_t vars, unsigned order)
{
    if (vars < 1 || order < 1) {
        throw InputError("truncated_poly: need at least one variable and order >= 1");
    }
    const auto monomials = graded_monomials(vars, order);
    const std::size_t n = monomials.size();
    std::vector<std::string> var_names;
    if (vars == 1) {
        var_names = {"t"};
    } else {
        for (std::size_t i = 0; i < vars; ++i) {
            var_names.push_back("x" + std::to_string(i + 1));
        }
    }
    std::vector<std::string> names;
    for (const auto& m : monomials) {
        names.push_back(m.monomial_name(var_names));
    }
    StructureTensor c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const MultiIndex prod = monomials[i] + monomials[j];
            if (prod.order() >= order) {
                continue;
            }
            for (std::size_t k = 0; k < n; ++k) {
                if (monomials[k] == prod) {
                    c(i, j, k) = Rational(1);
                }
            }
        }
    }
    return CommutativeAlgebra::from_tensor(std::move(names), std::move(c), unit_vector(n, 0));
}

CommutativeAlgebra point_functions(std::size_t points)
{
    if (points < 1) {
        throw InputError("point_functions: need at least one point");
    }
    StructureTensor c(points);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < points; ++i) {
        names.push_back("p" + std::to_string(i + 1));
        c(i, i, i) = Rational(1);
    }
    return CommutativeAlgebra::from_tensor(std::move(names), std::move(c), Vector(points, Rational(1)));
}

CommutativeAlgebra gaussian_rationals()
{
    StructureTensor c(2);
    c(0, 0, 0) = Rational(1);
    c(0, 1, 1) = Rational(1);
    c(1, 0, 1) = Rational(1);
    c(1, 1, 0) = Rational(-1);
    return CommutativeAlgebra::from_tensor({"1", "i"}, std::move(c), unit_vector(2, 0));
}

LieAlgebra current_algebra(const LieAlgebra& k, const CommutativeAlgebra& a)
{
    const std::size_t dk = k.dim();
    const std::size_t da = a.dim();
    StructureTensor c(dk * da);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dk; ++i) {
        for (std::size_t p = 0; p < da; ++p) {
            names.push_back(k.basis_names()[i] + "*" + a.basis_names()[p]);
        }
    }
    for (std::size_t i = 0; i < dk; ++i) {
        for (std::size_t j = 0; j < dk; ++j) {
            for (std::size_t l = 0; l < dk; ++l) {
                const Rational& kc = k.c(i, j, l);
                if (kc.is_zero()) {
                    continue;
                }
                for (std::size_t p = 0; p < da; ++p) {
                    for (std::size_t q = 0; q < da; ++q) {
                        for (std::size_t r = 0; r < da; ++r) {
                            const Rational& ac = a.structure()(p, q, r);
                            if (!ac.is_zero()) {
                                c(i * da + p, j * da + q, l * da + r) += kc * ac;
                            }
                        }
                    }
                }
            }
        }
    }
    return LieAlgebra::from_tensor(std::move(names), std::move(c));
}

Vector tensor(const Vector& x, const Vector& a)
{
    Vector v(x.size() * a.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t p = 0; p < a.size(); ++p) {
            v[i * a.size() + p] = x[i] * a[p];
        }
    }
    return v;
}

namespace {

/// Columns are the Killing-dual basis vectors x^i.
Matrix killing_dual(const LieAlgebra& k)
{
    const auto inv = inverse(killing_form(k));
    if (!inv) {
        throw PreconditionError("Killing form is degenerate; the algebra is not semisimple");
    }
    return *inv;
}

} // namespace

Matrix casimir_adjoint(const LieAlgebra& k)
{
    const Matrix dual = killing_dual(k);
    Matrix c(k.dim(), k.dim());
    for (std::size_t i = 0; i < k.dim(); ++i) {
        c += k.ad_basis()[i] * k.ad(dual.column(i));
    }
    return c;
}

Matrix casimir_coefficient_action(const LieAlgebra& k, const CommutativeAlgebra& a, const Vector& coeff)
{
    const Matrix dual = killing_dual(k);
    const LieAlgebra g = current_algebra(k, a);
    Matrix f(g.dim(), g.dim());
    for (std::size_t i = 0; i < k.dim(); ++i) {
        f += g.ad(tensor(unit_vector(k.dim(), i), coeff)) * g.ad(tensor(dual.column(i), a.unit()));
    }
    return f;
}

Matrix coefficient_multiplication(const LieAlgebra& k, const CommutativeAlgebra& a, const Vector& coeff)
{
    return kron(Matrix::identity(k.dim()), a.multiplication(coeff));
}

} // namespace liecent
