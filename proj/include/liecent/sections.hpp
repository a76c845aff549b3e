#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liecent/constructions.hpp"
#include "liecent/endo.hpp"
#include "liecent/multi_index.hpp"

namespace liecent {

/// Outcome of one finite-model check: named integer measurements plus the
/// list of assertions that failed.
class CheckReport {
public:
    explicit CheckReport(std::string check) : check_(std::move(check)) {}

    void set(const std::string& key, long long value);
    [[nodiscard]] long long get(const std::string& key) const;
    /// Records `what` as a failure unless `ok`.
    void expect(bool ok, const std::string& what);

    [[nodiscard]] const std::string& check() const { return check_; }
    [[nodiscard]] bool passed() const { return failures_.empty(); }
    [[nodiscard]] const std::vector<std::pair<std::string, long long>>& values() const { return values_; }
    [[nodiscard]] const std::vector<std::string>& failures() const { return failures_; }

private:
    std::string check_;
    std::vector<std::pair<std::string, long long>> values_;
    std::vector<std::string> failures_;
};

/// Truncated polynomial algebra with the value-at-the-marked-point functional and
/// coordinate partial derivatives. The partials are derivations into the next
/// lower truncation: Leibniz holds modulo monomials of degree >= order - 1.
struct JetAlgebra {
    CommutativeAlgebra algebra;
    std::size_t vars = 0;
    unsigned order = 1;
    std::vector<MultiIndex> monomials;
    Vector eval;
    std::vector<Matrix> partials;

    [[nodiscard]] std::size_t index_of(const MultiIndex& m) const;
};

/// Jets of order < `order` in `vars` variables (vars = 0 gives Q).
JetAlgebra jet_algebra(std::size_t vars, unsigned order);
/// eval(1) = 1, eval kills the maximal ideal, and the partials satisfy Leibniz
/// modulo degree >= order - 1.
bool jet_invariants_hold(const JetAlgebra& jet);

/// Sub-space of z(k (x) A) and z(k) (x) A, compared as subspaces.
CheckReport section_center_check(const LieAlgebra& k, const CommutativeAlgebra& a);
CheckReport section_commutator_check(const LieAlgebra& k, const CommutativeAlgebra& a);

struct XDerivation {
    Matrix d;              ///< restriction to constant sections, a derivation of k
    std::vector<Matrix> s; ///< first-order coefficients, elements of Cent(k)
};

struct XDerivationSpace {
    JetAlgebra jet;
    /// Flattened delta: k (x) A -> k, row-major dim k x (dim k * dim A).
    Subspace deltas;
    std::vector<XDerivation> basis;
};

/// Linear maps delta: k (x) J -> k with delta[X, Y] = [delta X, ev Y] + [ev X, delta Y],
/// J the first-order jets in m variables. Requires k perfect or centerfree.
XDerivationSpace x_derivations(const LieAlgebra& k, std::size_t m);
/// Exactness of Der(k) -> x-derivations -> Cent(k)^m at the marked point.
CheckReport symbol_check(const LieAlgebra& k, std::size_t m);
/// Der(k (x) A) = Der(k) (x) A  +  Cent(k) (x) Der(A), direct.
CheckReport current_der_decomposition(const LieAlgebra& k, const CommutativeAlgebra& a);
CheckReport centroid_of_sections_check(const LieAlgebra& k, const CommutativeAlgebra& a);
/// k (x) A has as many indecomposable ideals as A has primitive idempotents.
CheckReport indecomposability_of_sections_check(const LieAlgebra& k, const CommutativeAlgebra& a);
/// S(Cent(k (x) A)) = {1 (x) L_a : a in S(A)}.
CheckReport s_part_of_sections_check(const LieAlgebra& k, const CommutativeAlgebra& a);

/// sum_{gamma <= alpha} (-1)^{|alpha - gamma|} / (gamma! (alpha - gamma)!)
Rational multinomial_sum(const MultiIndex& alpha);

/// Matrix- and vector-valued jets, one coefficient per monomial of the jet algebra.
using MatrixJet = std::vector<Matrix>;
using VectorJet = std::vector<Vector>;

/// sum_{gamma <= alpha} C(alpha, gamma) d^gamma T * d^(alpha - gamma) f, checked
/// against d^alpha (T f) computed directly. Throws InputError when T f does not fit
/// below the truncation order.
VectorJet leibniz_expand(const MultiIndex& alpha, const MatrixJet& t, const VectorJet& f, const JetAlgebra& jet);
/// d^alpha of a vector jet.
VectorJet jet_derivative(const JetAlgebra& jet, const MultiIndex& alpha, const VectorJet& f);

struct JetAutomorphism {
    Matrix coefficient_map; ///< a -> sum_j n^j d^j a / j! on A
    Matrix mu;              ///< 1 (x) coefficient_map on k (x) A
    bool bracket_preserving = false;
    bool invertible = false;
    bool triangular = false; ///< mu(t^j) only involves t^i with i >= j
    bool unipotent = false;  ///< mu - 1 nilpotent
};

/// The reparametrization a(t) -> a(t + n) written as sum_{j < order} (1/j!) n^j d^j a,
/// tensored with the identity of k. Requires one variable and eval(n) = 0.
JetAutomorphism jet_reparametrization_automorphism(const LieAlgebra& k, const JetAlgebra& jet, const Vector& n);

} // namespace liecent
