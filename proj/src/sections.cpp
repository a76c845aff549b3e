#include "liecent/sections.hpp"

#include "liecent/decomposition.hpp"
#include "liecent/errors.hpp"
#include "liecent/linalg.hpp"

namespace liecent {

void CheckReport::set(const std::string& key, long long value)
{
    for (auto& [k, v] : values_) {
        if (k == key) {
            v = value;
            return;
        }
    }
    values_.emplace_back(key, value);
}

long long CheckReport::get(const std::string& key) const
{
    for (const auto& [k, v] : values_) {
        if (k == key) {
            return v;
        }
    }
    throw InputError("CheckReport: no value named '" + key + "'");
}

void CheckReport::expect(bool ok, const std::string& what)
{
    if (!ok) {
        failures_.push_back(what);
    }
}

std::size_t JetAlgebra::index_of(const MultiIndex& m) const
{
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        if (monomials[i] == m) {
            return i;
        }
    }
    throw InputError("monomial outside the jet truncation");
}

JetAlgebra jet_algebra(std::size_t vars, unsigned order)
{
    JetAlgebra jet;
    jet.vars = vars;
    jet.order = order;
    if (vars == 0) {
        StructureTensor c(1);
        c(0, 0, 0) = Rational(1);
        jet.algebra = CommutativeAlgebra::from_tensor({"1"}, std::move(c), Vector{Rational(1)});
        jet.monomials = {MultiIndex{}};
        jet.eval = Vector{Rational(1)};
        return jet;
    }
    jet.algebra = truncated_poly(vars, order);
    jet.monomials = graded_monomials(vars, order);
    const std::size_t n = jet.monomials.size();
    jet.eval = unit_vector(n, 0);
    for (std::size_t v = 0; v < vars; ++v) {
        Matrix d(n, n);
        for (std::size_t b = 0; b < n; ++b) {
            const MultiIndex& beta = jet.monomials[b];
            if (beta.components[v] == 0) {
                continue;
            }
            MultiIndex lower = beta;
            lower.components[v] -= 1;
            d(jet.index_of(lower), b) = Rational(static_cast<long>(beta.components[v]));
        }
        jet.partials.push_back(std::move(d));
    }
    return jet;
}

bool jet_invariants_hold(const JetAlgebra& jet)
{
    const std::size_t n = jet.algebra.dim();
    Rational at_unit;
    for (std::size_t i = 0; i < n; ++i) {
        at_unit += jet.eval[i] * jet.algebra.unit()[i];
    }
    if (!at_unit.is_one()) {
        return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (jet.monomials[i].order() >= 1 && !jet.eval[i].is_zero()) {
            return false;
        }
    }
    for (const auto& d : jet.partials) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = 0; q < n; ++q) {
                const Vector ep = unit_vector(n, p);
                const Vector eq = unit_vector(n, q);
                Vector defect = d * jet.algebra.product(ep, eq);
                const Vector a = jet.algebra.product(d * ep, eq);
                const Vector b = jet.algebra.product(ep, d * eq);
                for (std::size_t r = 0; r < n; ++r) {
                    defect[r] -= a[r] + b[r];
                    // The partial lands in jets of order - 1.
                    if (jet.monomials[r].order() + 1 < jet.order && !defect[r].is_zero()) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

namespace {

bool perfect_or_centerfree(const LieAlgebra& k, bool& perfect, bool& centerfree)
{
    perfect = commutator(k).is_full();
    centerfree = center(k).is_zero();
    return perfect || centerfree;
}

void require_perfect_or_centerfree(const LieAlgebra& k, const std::string& op)
{
    bool perfect = false;
    bool centerfree = false;
    if (!perfect_or_centerfree(k, perfect, centerfree)) {
        throw PreconditionError(op + " requires k perfect or centerfree (perfect=false, centerfree=false)");
    }
}

Subspace tensor_with_algebra(const Subspace& s, std::size_t dim_a)
{
    std::vector<Vector> vs;
    for (const auto& v : s.vectors()) {
        for (std::size_t p = 0; p < dim_a; ++p) {
            vs.push_back(tensor(v, unit_vector(dim_a, p)));
        }
    }
    return Subspace::span(s.ambient_dim() * dim_a, vs);
}

Subspace matrix_span(std::size_t n, const std::vector<Matrix>& ms)
{
    std::vector<Vector> flat;
    for (const auto& m : ms) {
        flat.push_back(m.flatten());
    }
    return Subspace::span(n * n, flat);
}

std::vector<Matrix> regular_representation(const CommutativeAlgebra& a)
{
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        out.push_back(a.multiplication(i));
    }
    return out;
}

std::size_t hom_dim(const LieAlgebra& k) { return hom_abelianization_to_center_dim(k); }

} // namespace

CheckReport section_center_check(const LieAlgebra& k, const CommutativeAlgebra& a)
{
    CheckReport r("center");
    const LieAlgebra g = current_algebra(k, a);
    const Subspace lhs = center(g);
    const Subspace rhs = tensor_with_algebra(center(k), a.dim());
    r.set("dim_center_sections", static_cast<long long>(lhs.dim()));
    r.set("dim_sections_of_center", static_cast<long long>(rhs.dim()));
    r.expect(lhs == rhs, "z(k(x)A) differs from z(k)(x)A");
    return r;
}

CheckReport section_commutator_check(const LieAlgebra& k, const CommutativeAlgebra& a)
{
    CheckReport r("commutator");
    const LieAlgebra g = current_algebra(k, a);
    const Subspace lhs = commutator(g);
    const Subspace rhs = tensor_with_algebra(commutator(k), a.dim());
    r.set("dim_commutator_sections", static_cast<long long>(lhs.dim()));
    r.set("dim_sections_of_commutator", static_cast<long long>(rhs.dim()));
    r.expect(lhs == rhs, "[k(x)A, k(x)A] differs from [k,k](x)A");
    r.expect(lhs.is_full() == commutator(k).is_full(), "perfectness of k(x)A and k disagree");
    return r;
}

XDerivationSpace x_derivations(const LieAlgebra& k, std::size_t m)
{
    require_perfect_or_centerfree(k, "x_derivations");
    XDerivationSpace out;
    out.jet = jet_algebra(m, 2);
    const CommutativeAlgebra& a = out.jet.algebra;
    const LieAlgebra g = current_algebra(k, a);
    const std::size_t dk = k.dim();
    const std::size_t da = a.dim();
    const std::size_t dg = g.dim();
    const auto var = [dg](std::size_t r, std::size_t c) { return r * dg + c; };

    // ev(e_(i,p)) = eval[p] e_i, so ad(ev e_P) = eval[p] ad(e_i).
    std::vector<Matrix> ad_ev(dg);
    for (std::size_t i = 0; i < dk; ++i) {
        for (std::size_t p = 0; p < da; ++p) {
            ad_ev[i * da + p] = out.jet.eval[p] * k.ad_basis()[i];
        }
    }

    LinearSystem system(dk * dg);
    for (std::size_t pp = 0; pp < dg; ++pp) {
        for (std::size_t qq = pp + 1; qq < dg; ++qq) {
            const Vector pq = g.bracket(pp, qq);
            for (std::size_t r = 0; r < dk; ++r) {
                // delta[P,Q]_r - [delta P, ev Q]_r - [ev P, delta Q]_r
                Vector eq(dk * dg);
                for (std::size_t c = 0; c < dg; ++c) {
                    if (!pq[c].is_zero()) {
                        eq[var(r, c)] += pq[c];
                    }
                }
                for (std::size_t l = 0; l < dk; ++l) {
                    eq[var(l, pp)] += ad_ev[qq](r, l);
                    eq[var(l, qq)] -= ad_ev[pp](r, l);
                }
                if (!is_zero(eq)) {
                    system.add_equation(std::move(eq));
                }
            }
        }
    }
    out.deltas = system.solutions();

    const EndoSpace der = derivations(k);
    const EndoSpace cent = centroid(k);
    const std::size_t constant = out.jet.index_of(out.jet.monomials.front());
    for (std::size_t b = 0; b < out.deltas.dim(); ++b) {
        const Matrix delta = Matrix::unflatten(dk, dg, out.deltas.vector(b));
        XDerivation x{Matrix(dk, dk), {}};
        for (std::size_t r = 0; r < dk; ++r) {
            for (std::size_t i = 0; i < dk; ++i) {
                x.d(r, i) = delta(r, i * da + constant);
            }
        }
        for (std::size_t v = 0; v < m; ++v) {
            MultiIndex mono{std::vector<unsigned>(m, 0)};
            mono.components[v] = 1;
            const std::size_t col = out.jet.index_of(mono);
            Matrix s(dk, dk);
            for (std::size_t r = 0; r < dk; ++r) {
                for (std::size_t i = 0; i < dk; ++i) {
                    s(r, i) = delta(r, i * da + col);
                }
            }
            x.s.push_back(std::move(s));
        }
        if (!der.contains(x.d)) {
            throw AlgebraError("x_derivations: extracted D is not a derivation of k");
        }
        for (const auto& s : x.s) {
            if (!cent.contains(s)) {
                throw AlgebraError("x_derivations: extracted S is not in the centroid of k");
            }
        }
        out.basis.push_back(std::move(x));
    }
    return out;
}

CheckReport symbol_check(const LieAlgebra& k, std::size_t m)
{
    CheckReport r("symbol");
    const XDerivationSpace xs = x_derivations(k, m);
    const EndoSpace der = derivations(k);
    const EndoSpace cent = centroid(k);
    const std::size_t dk = k.dim();
    const std::size_t da = xs.jet.algebra.dim();
    const std::size_t dg = dk * da;
    const std::size_t sym_len = m * dk * dk;

    // Symbol of each basis x-derivation, stacked (S^1, ..., S^m).
    std::vector<Vector> symbols;
    for (const auto& x : xs.basis) {
        Vector v;
        v.reserve(sym_len);
        for (const auto& s : x.s) {
            v.insert(v.end(), s.flatten().begin(), s.flatten().end());
        }
        symbols.push_back(std::move(v));
    }
    const Subspace image = Subspace::span(sym_len, symbols);
    const Subspace coeff_kernel =
        symbols.empty() ? Subspace::zero(0) : kernel_basis(Matrix::from_columns(sym_len, symbols));
    std::vector<Vector> kernel_deltas;
    for (std::size_t i = 0; i < coeff_kernel.dim(); ++i) {
        const Vector coeffs = coeff_kernel.vector(i);
        Vector delta(dk * dg);
        for (std::size_t b = 0; b < xs.deltas.dim(); ++b) {
            if (coeffs[b].is_zero()) {
                continue;
            }
            const Vector db = xs.deltas.vector(b);
            for (std::size_t c = 0; c < delta.size(); ++c) {
                delta[c] += coeffs[b] * db[c];
            }
        }
        kernel_deltas.push_back(std::move(delta));
    }
    const Subspace kernel = Subspace::span(dk * dg, kernel_deltas);

    // Natural injection D -> D o ev.
    std::vector<Vector> embedded;
    for (const auto& d : der.basis()) {
        Matrix delta(dk, dg);
        for (std::size_t r = 0; r < dk; ++r) {
            for (std::size_t i = 0; i < dk; ++i) {
                for (std::size_t p = 0; p < da; ++p) {
                    delta(r, i * da + p) = d(r, i) * xs.jet.eval[p];
                }
            }
        }
        embedded.push_back(delta.flatten());
    }
    const Subspace der_embedded = Subspace::span(dk * dg, embedded);

    std::vector<Vector> cent_m;
    for (std::size_t v = 0; v < m; ++v) {
        for (const auto& c : cent.basis()) {
            Vector w(sym_len);
            for (std::size_t e = 0; e < dk * dk; ++e) {
                w[v * dk * dk + e] = c.flatten()[e];
            }
            cent_m.push_back(std::move(w));
        }
    }
    const Subspace cent_power = Subspace::span(sym_len, cent_m);

    r.set("dim_x_derivations", static_cast<long long>(xs.deltas.dim()));
    r.set("dim_der", static_cast<long long>(der.dim()));
    r.set("dim_cent", static_cast<long long>(cent.dim()));
    r.set("kernel_dim", static_cast<long long>(kernel.dim()));
    r.set("image_dim", static_cast<long long>(image.dim()));
    r.expect(xs.deltas.dim() == der.dim() + m * cent.dim(), "dim of x-derivations differs from dim Der + m dim Cent");
    r.expect(kernel == der_embedded, "kernel of the symbol differs from the embedded Der(k)");
    r.expect(image == cent_power, "image of the symbol differs from Cent(k)^m");
    return r;
}

CheckReport current_der_decomposition(const LieAlgebra& k, const CommutativeAlgebra& a)
{
    require_perfect_or_centerfree(k, "current_der_decomposition");
    CheckReport r("derdecomp");
    const LieAlgebra g = current_algebra(k, a);
    const EndoSpace der_g = derivations(g);
    const EndoSpace der_k = derivations(k);
    const EndoSpace cent_k = centroid(k);
    const std::vector<Matrix> der_a = derivations_of(a.structure(), true);

    std::vector<Matrix> inner_part;
    for (const auto& d : der_k.basis()) {
        for (std::size_t p = 0; p < a.dim(); ++p) {
            inner_part.push_back(kron(d, a.multiplication(p)));
        }
    }
    std::vector<Matrix> connection_part;
    for (const auto& s : cent_k.basis()) {
        for (const auto& d : der_a) {
            connection_part.push_back(kron(s, d));
        }
    }
    const Subspace first = matrix_span(g.dim(), inner_part);
    const Subspace second = matrix_span(g.dim(), connection_part);
    const Subspace sum = first + second;

    r.set("dim_der_sections", static_cast<long long>(der_g.dim()));
    r.set("dim_der_k_tensor_a", static_cast<long long>(first.dim()));
    r.set("dim_cent_k_tensor_der_a", static_cast<long long>(second.dim()));
    r.set("dim_der_a", static_cast<long long>(der_a.size()));
    r.expect(first.dim() + second.dim() == sum.dim(), "the two parts intersect");
    r.expect(sum == der_g.span(), "Der(k)(x)A + Cent(k)(x)Der(A) differs from Der(k(x)A)");
    return r;
}

CheckReport centroid_of_sections_check(const LieAlgebra& k, const CommutativeAlgebra& a)
{
    require_perfect_or_centerfree(k, "centroid_of_sections_check");
    CheckReport r("centroid");
    const LieAlgebra g = current_algebra(k, a);
    const EndoSpace cent_g = centroid(g);
    const EndoSpace cent_k = centroid(k);
    std::vector<Matrix> products;
    for (const auto& c : cent_k.basis()) {
        for (std::size_t p = 0; p < a.dim(); ++p) {
            products.push_back(kron(c, a.multiplication(p)));
        }
    }
    r.set("dim_centroid_sections", static_cast<long long>(cent_g.dim()));
    r.set("dim_centroid_k", static_cast<long long>(cent_k.dim()));
    r.set("dim_a", static_cast<long long>(a.dim()));
    r.expect(cent_g.dim() == cent_k.dim() * a.dim(), "dim Cent(k(x)A) differs from dim Cent(k) * dim A");
    r.expect(matrix_span(g.dim(), products) == cent_g.span(), "Cent(k)(x)A does not span Cent(k(x)A)");
    return r;
}

CheckReport indecomposability_of_sections_check(const LieAlgebra& k, const CommutativeAlgebra& a)
{
    if (hom_dim(k) != 0) {
        throw PreconditionError("indecomposability check requires Hom(k/[k,k], z(k)) = 0");
    }
    if (indecompose(k).ideals.size() != 1) {
        throw PreconditionError("indecomposability check requires k indecomposable");
    }
    CheckReport r("indec");
    const auto regular = regular_representation(a);
    const IdempotentSet points = primitive_idempotents(a.dim(), regular);
    const LieAlgebra g = current_algebra(k, a);
    const DecompositionReport dec = indecompose(g);
    r.set("primitive_idempotents_of_a", static_cast<long long>(points.projections.size()));
    r.set("local", points.projections.size() == 1 ? 1 : 0);
    r.set("ideals", static_cast<long long>(dec.ideals.size()));
    r.expect(points.status == SplitStatus::split, "coefficient algebra is not split over Q");
    r.expect(dec.ideals.size() == points.projections.size(),
             "number of ideals differs from the number of primitive idempotents of A");
    for (std::size_t i = 0; i < dec.ideals.size(); ++i) {
        r.expect(dec.ideals[i].dim() % k.dim() == 0, "ideal dimension is not a multiple of dim k");
    }
    return r;
}

CheckReport s_part_of_sections_check(const LieAlgebra& k, const CommutativeAlgebra& a)
{
    if (hom_dim(k) != 0) {
        throw PreconditionError("S-part check requires Hom(k/[k,k], z(k)) = 0");
    }
    if (split_centroid(k).semisimple.dim() != 1) {
        throw PreconditionError("S-part check requires S(k) = Q * 1");
    }
    CheckReport r("spart");
    const LieAlgebra g = current_algebra(k, a);
    const CentroidSplit split_g = split_centroid(g);
    const auto regular = regular_representation(a);
    const CentroidSplit split_a = split_commutative(a.dim(), regular);
    std::vector<Matrix> expected;
    for (const auto& s : split_a.semisimple.basis()) {
        expected.push_back(kron(Matrix::identity(k.dim()), s));
    }
    r.set("dim_s_sections", static_cast<long long>(split_g.semisimple.dim()));
    r.set("dim_n_sections", static_cast<long long>(split_g.nilpotent.dim()));
    r.set("dim_s_a", static_cast<long long>(split_a.semisimple.dim()));
    r.expect(split_g.semisimple.span() == matrix_span(g.dim(), expected),
             "S(Cent(k(x)A)) differs from the multiplications by semisimple elements of A");
    return r;
}

Rational multinomial_sum(const MultiIndex& alpha)
{
    Rational sum;
    for (const auto& gamma : dominated(alpha)) {
        const MultiIndex rest = alpha - gamma;
        const Rational term = Rational(1) / (gamma.factorial() * rest.factorial());
        sum += rest.order() % 2 == 0 ? term : -term;
    }
    return sum;
}

namespace {

Rational falling(const MultiIndex& beta, const MultiIndex& alpha)
{
    return beta.factorial() / (beta - alpha).factorial();
}

void check_jet_shape(const JetAlgebra& jet, const MultiIndex& alpha, std::size_t coefficients)
{
    if (coefficients != jet.monomials.size()) {
        throw InputError("jet has the wrong number of coefficients");
    }
    if (alpha.size() != jet.vars) {
        throw InputError("multi-index has the wrong number of variables");
    }
}

MatrixJet derive_matrices(const JetAlgebra& jet, const MultiIndex& alpha, const MatrixJet& t)
{
    check_jet_shape(jet, alpha, t.size());
    MatrixJet out(t.size(), Matrix(t.front().rows(), t.front().cols()));
    for (std::size_t b = 0; b < t.size(); ++b) {
        const MultiIndex& beta = jet.monomials[b];
        if (alpha.dominated_by(beta)) {
            out[jet.index_of(beta - alpha)] += falling(beta, alpha) * t[b];
        }
    }
    return out;
}

VectorJet multiply(const JetAlgebra& jet, const MatrixJet& t, const VectorJet& f)
{
    const std::size_t rows = t.front().rows();
    VectorJet out(f.size(), Vector(rows));
    for (std::size_t b = 0; b < t.size(); ++b) {
        for (std::size_t c = 0; c < f.size(); ++c) {
            const Vector term = t[b] * f[c];
            if (is_zero(term)) {
                continue;
            }
            const MultiIndex sum = jet.monomials[b] + jet.monomials[c];
            if (sum.order() >= jet.order) {
                throw InputError("truncation overflow: T f has a term of degree " + std::to_string(sum.order()) +
                                 " >= order " + std::to_string(jet.order));
            }
            Vector& slot = out[jet.index_of(sum)];
            for (std::size_t r = 0; r < rows; ++r) {
                slot[r] += term[r];
            }
        }
    }
    return out;
}

} // namespace

VectorJet jet_derivative(const JetAlgebra& jet, const MultiIndex& alpha, const VectorJet& f)
{
    check_jet_shape(jet, alpha, f.size());
    const std::size_t len = f.empty() ? 0 : f.front().size();
    VectorJet out(f.size(), Vector(len));
    for (std::size_t b = 0; b < f.size(); ++b) {
        const MultiIndex& beta = jet.monomials[b];
        if (!alpha.dominated_by(beta)) {
            continue;
        }
        const Rational c = falling(beta, alpha);
        Vector& slot = out[jet.index_of(beta - alpha)];
        for (std::size_t r = 0; r < len; ++r) {
            slot[r] += c * f[b][r];
        }
    }
    return out;
}

VectorJet leibniz_expand(const MultiIndex& alpha, const MatrixJet& t, const VectorJet& f, const JetAlgebra& jet)
{
    check_jet_shape(jet, alpha, t.size());
    check_jet_shape(jet, alpha, f.size());
    for (const auto& v : f) {
        if (v.size() != t.front().cols()) {
            throw InputError("vector jet does not match the matrix jet");
        }
    }
    const VectorJet direct = jet_derivative(jet, alpha, multiply(jet, t, f));
    VectorJet expanded(f.size(), Vector(t.front().rows()));
    for (const auto& gamma : dominated(alpha)) {
        const VectorJet term = multiply(jet, derive_matrices(jet, gamma, t), jet_derivative(jet, alpha - gamma, f));
        const Rational c = binomial(alpha, gamma);
        for (std::size_t b = 0; b < term.size(); ++b) {
            for (std::size_t r = 0; r < term[b].size(); ++r) {
                expanded[b][r] += c * term[b][r];
            }
        }
    }
    if (expanded != direct) {
        throw AlgebraError("Leibniz expansion differs from the direct derivative");
    }
    return expanded;
}

JetAutomorphism jet_reparametrization_automorphism(const LieAlgebra& k, const JetAlgebra& jet, const Vector& n)
{
    if (jet.vars != 1) {
        throw InputError("jet reparametrization needs jets in one variable");
    }
    const CommutativeAlgebra& a = jet.algebra;
    if (n.size() != a.dim()) {
        throw InputError("shift has " + std::to_string(n.size()) + " coefficients, expected " +
                         std::to_string(a.dim()));
    }
    Rational value;
    for (std::size_t i = 0; i < n.size(); ++i) {
        value += jet.eval[i] * n[i];
    }
    if (!value.is_zero()) {
        throw PreconditionError("shift must vanish at the marked point, eval(n) = " + value.str());
    }

    JetAutomorphism out;
    const std::size_t da = a.dim();
    const Matrix ln = a.multiplication(n);
    Matrix power_n = Matrix::identity(da);
    Matrix power_d = Matrix::identity(da);
    out.coefficient_map = Matrix(da, da);
    for (unsigned j = 0; j < jet.order; ++j) {
        out.coefficient_map += (Rational(1) / factorial(j)) * (power_n * power_d);
        power_n = power_n * ln;
        power_d = power_d * jet.partials.front();
    }
    out.mu = kron(Matrix::identity(k.dim()), out.coefficient_map);

    out.invertible = !determinant(out.coefficient_map).is_zero();
    out.unipotent = (out.coefficient_map - Matrix::identity(da)).is_nilpotent();
    out.triangular = true;
    for (std::size_t r = 0; r < da; ++r) {
        for (std::size_t c = r + 1; c < da; ++c) {
            out.triangular = out.triangular && out.coefficient_map(r, c).is_zero();
        }
    }
    const LieAlgebra g = current_algebra(k, a);
    out.bracket_preserving = true;
    for (std::size_t p = 0; p < g.dim() && out.bracket_preserving; ++p) {
        const Vector mp = out.mu.column(p);
        for (std::size_t q = p + 1; q < g.dim(); ++q) {
            if (out.mu * g.bracket(p, q) != g.bracket(mp, out.mu.column(q))) {
                out.bracket_preserving = false;
                break;
            }
        }
    }
    return out;
}

} // namespace liecent
