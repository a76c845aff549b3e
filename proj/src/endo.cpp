#include "liecent/endo.hpp"

#include "liecent/errors.hpp"
#include "liecent/linalg.hpp"

namespace liecent {

std::string to_string(EndoKind kind)
{
    switch (kind) {
    case EndoKind::derivations: return "derivations";
    case EndoKind::inner: return "inner";
    case EndoKind::centroid: return "centroid";
    case EndoKind::j_space: return "j_space";
    case EndoKind::nilpotent_part: return "nilpotent_part";
    case EndoKind::semisimple_part: return "semisimple_part";
    case EndoKind::commutant: return "commutant";
    }
    return "unknown";
}

namespace {

std::vector<Vector> flatten_all(std::size_t n, const std::vector<Matrix>& ms)
{
    std::vector<Vector> out;
    out.reserve(ms.size());
    for (const auto& m : ms) {
        if (m.rows() != n || m.cols() != n) {
            throw InputError("endomorphism has the wrong shape");
        }
        out.push_back(m.flatten());
    }
    return out;
}

std::vector<Matrix> to_matrices(std::size_t n, const Subspace& s)
{
    std::vector<Matrix> out;
    out.reserve(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        out.push_back(Matrix::unflatten(n, n, s.vector(i)));
    }
    return out;
}

} // namespace

EndoSpace::EndoSpace(EndoKind kind, std::size_t space_dim, const std::vector<Matrix>& spanning)
    : kind_(kind), n_(space_dim), span_(Subspace::span(space_dim * space_dim, flatten_all(space_dim, spanning))),
      basis_(to_matrices(space_dim, span_))
{
}

bool EndoSpace::contains(const Matrix& m) const { return coordinates(m).has_value(); }

std::optional<Vector> EndoSpace::coordinates(const Matrix& m) const
{
    if (m.rows() != n_ || m.cols() != n_) {
        throw InputError("EndoSpace: matrix has the wrong shape");
    }
    return span_.coordinates(m.flatten());
}

Matrix EndoSpace::element(const Vector& coords) const
{
    if (coords.size() != dim()) {
        throw InputError("EndoSpace: coordinate vector has the wrong length");
    }
    Matrix m(n_, n_);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!coords[i].is_zero()) {
            m += coords[i] * basis_[i];
        }
    }
    return m;
}

EndoSpace derivations(const LieAlgebra& g)
{
    return EndoSpace(EndoKind::derivations, g.dim(), derivations_of(g.structure(), true));
}

EndoSpace inner_derivations(const LieAlgebra& g) { return EndoSpace(EndoKind::inner, g.dim(), g.ad_basis()); }

std::size_t outer_dimension(const LieAlgebra& g) { return derivations(g).dim() - inner_derivations(g).dim(); }

EndoSpace module_commutant(std::span<const Matrix> rep)
{
    if (rep.empty()) {
        throw InputError("module_commutant: empty representation; the module size is unknown");
    }
    const std::size_t n = rep.front().rows();
    for (const auto& r : rep) {
        if (r.rows() != n || r.cols() != n) {
            throw InputError("module_commutant: representation matrices must all be " + std::to_string(n) + "x"
                             + std::to_string(n));
        }
    }
    const auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
    LinearSystem system(n * n);
    for (const auto& rho : rep) {
        // (T rho - rho T)(r, c) = sum_l T(r, l) rho(l, c) - rho(r, l) T(l, c)
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                Vector eq(n * n);
                for (std::size_t l = 0; l < n; ++l) {
                    eq[var(r, l)] += rho(l, c);
                    eq[var(l, c)] -= rho(r, l);
                }
                if (!is_zero(eq)) {
                    system.add_equation(std::move(eq));
                }
            }
        }
    }
    return EndoSpace(EndoKind::commutant, n, to_matrices(n, system.solutions()));
}

EndoSpace centroid(const LieAlgebra& g)
{
    if (g.dim() == 0) {
        return EndoSpace(EndoKind::centroid, 0, {});
    }
    const EndoSpace c = module_commutant(g.ad_basis());
    return EndoSpace(EndoKind::centroid, g.dim(), c.basis());
}

EndoSpace j_space(const LieAlgebra& g)
{
    const std::size_t n = g.dim();
    const auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
    LinearSystem system(n * n);
    for (const auto& a : g.ad_basis()) {
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                Vector left(n * n);  // (ad phi)(r, c)
                Vector right(n * n); // (phi ad)(r, c)
                for (std::size_t l = 0; l < n; ++l) {
                    left[var(l, c)] += a(r, l);
                    right[var(r, l)] += a(l, c);
                }
                if (!is_zero(left)) {
                    system.add_equation(std::move(left));
                }
                if (!is_zero(right)) {
                    system.add_equation(std::move(right));
                }
            }
        }
    }
    // Such maps commute with every ad trivially, so they already lie in the centroid.
    return EndoSpace(EndoKind::j_space, n, to_matrices(n, system.solutions()));
}

std::size_t hom_abelianization_to_center_dim(const LieAlgebra& g)
{
    return (g.dim() - commutator(g).dim()) * center(g).dim();
}

std::optional<std::pair<std::size_t, std::size_t>> noncommuting_pair(std::span<const Matrix> basis)
{
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (!commutator(basis[i], basis[j]).is_zero()) {
                return std::make_pair(i, j);
            }
        }
    }
    return std::nullopt;
}

CentroidSplit split_commutative(std::size_t space_dim, std::span<const Matrix> basis)
{
    if (auto pair = noncommuting_pair(basis)) {
        throw PreconditionError("centroid is not abelian: basis elements " + std::to_string(pair->first) + " and "
                                + std::to_string(pair->second) + " do not commute");
    }
    std::vector<Matrix> nil;
    std::vector<Matrix> semi;
    std::vector<Matrix> all(basis.begin(), basis.end());
    for (const auto& f : basis) {
        auto jc = jordan_chevalley(f);
        nil.push_back(std::move(jc.nilpotent));
        semi.push_back(std::move(jc.semisimple));
    }
    CentroidSplit out{EndoSpace(EndoKind::nilpotent_part, space_dim, nil),
                      EndoSpace(EndoKind::semisimple_part, space_dim, semi)};
    const EndoSpace whole(EndoKind::commutant, space_dim, all);
    if (out.nilpotent.dim() + out.semisimple.dim() != whole.dim()
        || !(out.nilpotent.span() + out.semisimple.span() == whole.span())) {
        throw AlgebraError("split_centroid: N + S does not reproduce the centroid");
    }
    return out;
}

CentroidSplit split_centroid(const LieAlgebra& g)
{
    const EndoSpace c = centroid(g);
    return split_commutative(g.dim(), c.basis());
}

} // namespace liecent
