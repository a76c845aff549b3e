#include "liecent/decomposition.hpp"

#include <algorithm>
#include <bit>

#include "liecent/errors.hpp"
#include "liecent/linalg.hpp"

namespace liecent {

std::string to_string(SplitStatus status)
{
    switch (status) {
    case SplitStatus::split: return "split";
    case SplitStatus::nonsplit_real: return "nonsplit_real";
    case SplitStatus::nonsplit_unknown: return "nonsplit_unknown";
    }
    return "unknown";
}

namespace {

Subspace trace_form_kernel(std::span<const Matrix> basis)
{
    const std::size_t d = basis.size();
    Matrix gram(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            const Rational t = (basis[i] * basis[j]).trace();
            gram(i, j) = t;
            gram(j, i) = t;
        }
    }
    return kernel_basis(gram);
}

unsigned lift_bound(std::size_t n) { return static_cast<unsigned>(std::bit_width(n > 1 ? n - 1 : 1)) + 1; }

Matrix lift_idempotent(Matrix e, std::size_t n)
{
    for (unsigned it = 0; it <= lift_bound(n) + 1; ++it) {
        const Matrix e2 = e * e;
        if (e2 == e) {
            return e;
        }
        e = Rational(3) * e2 - Rational(2) * (e2 * e);
    }
    throw AlgebraError("idempotent lifting did not converge");
}

SplitStatus worse(SplitStatus a, SplitStatus b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

/// A piece e*C of the commutative algebra with its own unit e.
struct Piece {
    Matrix unit;
    Matrix spectral;
    std::vector<Matrix> basis;
};

class IdempotentSearch {
public:
    IdempotentSearch(std::size_t n) : n_(n) {}

    void run(Piece piece)
    {
        const std::size_t dim = piece.basis.size();
        const std::size_t rad = trace_form_kernel(piece.basis).dim();
        const std::size_t semisimple_dim = dim - rad;
        if (semisimple_dim <= 1) {
            finish(std::move(piece), SplitStatus::split);
            return;
        }
        const std::size_t combos = dim * dim + 1;
        for (std::size_t attempt = 0; attempt < dim + combos; ++attempt) {
            const Matrix f = candidate(piece.basis, attempt);
            const Polynomial q = squarefree_part(min_poly(f, piece.unit));
            const SmallFactorization fac = factor_small(q);
            std::vector<Polynomial> blocks;
            for (const auto& [root, mult] : fac.roots) {
                blocks.push_back(Polynomial::linear(root));
            }
            SplitStatus quad_status = SplitStatus::split;
            for (const auto& quad : fac.quadratics) {
                blocks.push_back(quad.factor);
                quad_status = quad.discriminant().sign() < 0 ? SplitStatus::nonsplit_real
                                                             : SplitStatus::nonsplit_unknown;
            }
            if (fac.remainder.degree() >= 1) {
                blocks.push_back(fac.remainder.monic());
                quad_status = SplitStatus::nonsplit_unknown;
            }
            if (blocks.size() >= 2) {
                split(piece, f, q, blocks);
                return;
            }
            if (static_cast<std::size_t>(q.degree()) == semisimple_dim) {
                // f generates the semisimple quotient, which is the single field Q[t]/(q).
                finish(std::move(piece), quad_status);
                return;
            }
        }
        throw AlgebraError("no separating element found in a centroid piece of dimension " + std::to_string(dim));
    }

    IdempotentSet result() { return std::move(result_); }

private:
    static Matrix candidate(const std::vector<Matrix>& basis, std::size_t attempt)
    {
        if (attempt < basis.size()) {
            return basis[attempt];
        }
        // sum_k j^k b_k for j = 1, 2, ...
        const Rational j(static_cast<long>(attempt - basis.size() + 1));
        Matrix f = basis.front() * Rational(0);
        Rational w(1);
        for (const auto& b : basis) {
            w *= j;
            f += w * b;
        }
        return f;
    }

    void split(const Piece& piece, const Matrix& f, const Polynomial& q, const std::vector<Polynomial>& blocks)
    {
        for (const auto& b : blocks) {
            // Chinese remainder: u = 1 mod b and u = 0 mod q / b.
            const Polynomial cofactor = divmod(q, b).first;
            const Polynomial u = divmod(cofactor * inverse_mod(cofactor, b), q).second;
            const Matrix spectral = u.evaluate(f, piece.unit);
            const Matrix e = lift_idempotent(spectral, n_);
            Piece sub{e, spectral, {}};
            std::vector<Vector> flat;
            for (const auto& c : piece.basis) {
                flat.push_back((e * c).flatten());
            }
            const Subspace s = Subspace::span(n_ * n_, flat);
            for (std::size_t i = 0; i < s.dim(); ++i) {
                sub.basis.push_back(Matrix::unflatten(n_, n_, s.vector(i)));
            }
            run(std::move(sub));
        }
    }

    void finish(Piece piece, SplitStatus status)
    {
        result_.projections.push_back(std::move(piece.unit));
        result_.spectral.push_back(std::move(piece.spectral));
        result_.status = worse(result_.status, status);
    }

    std::size_t n_;
    IdempotentSet result_;
};

Matrix sum_of(const std::vector<Matrix>& ms, std::size_t n)
{
    Matrix s(n, n);
    for (const auto& m : ms) {
        s += m;
    }
    return s;
}

} // namespace

Subspace centroid_radical(const EndoSpace& c)
{
    if (auto pair = noncommuting_pair(c.basis())) {
        throw PreconditionError("centroid is not abelian: basis elements " + std::to_string(pair->first) + " and "
                                + std::to_string(pair->second) + " do not commute");
    }
    return trace_form_kernel(c.basis());
}

IdempotentSet primitive_idempotents(const EndoSpace& c) { return primitive_idempotents(c.space_dim(), c.basis()); }

IdempotentSet primitive_idempotents(std::size_t space_dim, std::span<const Matrix> basis)
{
    if (auto pair = noncommuting_pair(basis)) {
        throw PreconditionError("centroid is not abelian: basis elements " + std::to_string(pair->first) + " and "
                                + std::to_string(pair->second) + " do not commute");
    }
    const Matrix id = Matrix::identity(space_dim);
    if (space_dim == 0) {
        return {};
    }
    std::vector<Vector> flat;
    for (const auto& b : basis) {
        flat.push_back(b.flatten());
    }
    if (!Subspace::span(space_dim * space_dim, flat).contains(id.flatten())) {
        throw PreconditionError("primitive_idempotents: the algebra does not contain the identity");
    }
    IdempotentSearch search(space_dim);
    search.run(Piece{id, id, std::vector<Matrix>(basis.begin(), basis.end())});
    IdempotentSet out = search.result();

    for (std::size_t i = 0; i < out.projections.size(); ++i) {
        for (std::size_t j = 0; j < out.projections.size(); ++j) {
            const Matrix p = out.projections[i] * out.projections[j];
            const bool ok = i == j ? p == out.projections[i] : p.is_zero();
            if (!ok) {
                throw AlgebraError("idempotents are not orthogonal");
            }
        }
    }
    if (sum_of(out.projections, space_dim) != id) {
        throw AlgebraError("idempotents do not sum to the identity");
    }
    return out;
}

DecompositionReport indecompose(const LieAlgebra& g)
{
    const Subspace z = center(g);
    const Subspace gg = commutator(g);
    for (std::size_t i = 0; i < z.dim(); ++i) {
        if (!gg.contains(z.vector(i))) {
            std::string v;
            for (const auto& x : z.vector(i)) {
                v += (v.empty() ? "" : ", ") + x.str();
            }
            throw PreconditionError("center is not contained in [g,g]: central vector (" + v
                                    + ") lies outside the commutator");
        }
    }
    const EndoSpace cent = centroid(g);
    DecompositionReport report;
    report.idempotents = primitive_idempotents(cent);
    report.status = report.idempotents.status;
    const auto& ps = report.idempotents.projections;
    const std::size_t count = ps.size();

    std::vector<LieAlgebra> parts;
    for (const auto& p : ps) {
        report.ideals.push_back(Subspace::column_space(p));
        parts.push_back(restrict_to(g, report.ideals.back()));
    }

    report.blocks.assign(count, std::vector<std::size_t>(count, 0));
    report.hom_dims.assign(count, std::vector<std::size_t>(count, 0));
    std::size_t block_total = 0;
    report.off_diagonal_matches_hom = true;
    report.unique = true;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            std::vector<Matrix> span;
            for (const auto& c : cent.basis()) {
                span.push_back(ps[i] * c * ps[j]);
            }
            report.blocks[i][j] = EndoSpace(EndoKind::centroid, g.dim(), span).dim();
            block_total += report.blocks[i][j];
            if (i != j) {
                const LieAlgebra& gi = parts[i];
                const LieAlgebra& gj = parts[j];
                report.hom_dims[i][j] = (gj.dim() - commutator(gj).dim()) * center(gi).dim();
                report.off_diagonal_matches_hom =
                    report.off_diagonal_matches_hom && report.hom_dims[i][j] == report.blocks[i][j];
                report.unique = report.unique && report.hom_dims[i][j] == 0;
            }
        }
    }
    report.blocks_sum_to_centroid = block_total == cent.dim();
    report.local_centroids_match = true;
    for (std::size_t i = 0; i < count; ++i) {
        report.local_centroid_dims.push_back(centroid(parts[i]).dim());
        report.j_dims.push_back(j_space(parts[i]).dim());
        report.local_centroids_match =
            report.local_centroids_match && report.local_centroid_dims[i] == report.blocks[i][i];
    }
    return report;
}

std::optional<ComplexStructure> complex_structure(const LieAlgebra& g)
{
    const DecompositionReport dec = indecompose(g);
    if (dec.ideals.size() != 1) {
        throw PreconditionError("complex_structure: the algebra decomposes into " + std::to_string(dec.ideals.size())
                                + " ideals");
    }
    const CentroidSplit split = split_centroid(g);
    const std::size_t s = split.semisimple.dim();
    if (s == 1) {
        return std::nullopt;
    }
    if (s > 2) {
        throw AlgebraError("complex_structure: S(g) has dimension " + std::to_string(s)
                           + ", impossible for an indecomposable algebra");
    }
    const std::size_t n = g.dim();
    const Matrix id = Matrix::identity(n);
    const Subspace ones = Subspace::span(n * n, {id.flatten()});
    const Matrix* f = nullptr;
    for (const auto& b : split.semisimple.basis()) {
        if (!ones.contains(b.flatten())) {
            f = &b;
            break;
        }
    }
    if (f == nullptr) {
        throw AlgebraError("complex_structure: no element of S(g) independent of the identity");
    }
    const Polynomial mp = min_poly(*f);
    if (mp.degree() != 2) {
        throw AlgebraError("complex_structure: expected a quadratic minimal polynomial, got " + mp.str());
    }
    // t^2 - 2a t + (a^2 + b^2)
    const Rational a = -mp.coefficient(1) / Rational(2);
    const Rational b2 = mp.coefficient(0) - a * a;
    if (b2.sign() <= 0) {
        throw AlgebraError("complex_structure: " + mp.str() + " splits over the reals; g is decomposable over R");
    }
    if (!b2.is_square()) {
        throw AlgebraError("complex_structure: J exists over the reals but b = sqrt(" + b2.str()
                           + ") is irrational, so J has no rational matrix");
    }
    const Rational b = b2.sqrt();
    Matrix j = (Rational(1) / b) * (*f - a * id);
    if (j * j != -id || !centroid(g).contains(j)) {
        throw AlgebraError("complex_structure: constructed J fails J^2 = -1");
    }
    return ComplexStructure{std::move(j), mp};
}

} // namespace liecent
