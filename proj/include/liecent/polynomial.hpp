#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liecent/matrix.hpp"
#include "liecent/rational.hpp"

namespace liecent {

/// Univariate polynomial, coefficients lowest degree first. The zero polynomial
/// has no coefficients; otherwise the leading coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Vector coefficients);
    Polynomial(std::initializer_list<Rational> coefficients) : Polynomial(Vector(coefficients)) {}

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t degree);
    /// t - root
    static Polynomial linear(const Rational& root);

    [[nodiscard]] const Vector& coefficients() const { return coeffs_; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] Rational coefficient(std::size_t k) const;
    [[nodiscard]] Rational leading() const;
    [[nodiscard]] Polynomial monic() const;
    [[nodiscard]] Polynomial derivative() const;

    [[nodiscard]] Rational operator()(const Rational& x) const;
    /// p(m) with constant term times `unit`; unit defaults to the identity.
    [[nodiscard]] Matrix evaluate(const Matrix& m) const;
    [[nodiscard]] Matrix evaluate(const Matrix& m, const Matrix& unit) const;

    [[nodiscard]] std::string str(const std::string& var = "t") const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    void trim();
    Vector coeffs_;
};

/// Euclidean division; throws InputError when dividing by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero only when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// s with s*a = 1 mod m; requires gcd(a, m) = 1.
Polynomial inverse_mod(const Polynomial& a, const Polynomial& m);
Polynomial power(const Polynomial& p, unsigned k);

/// p / gcd(p, p'), monic.
Polynomial squarefree_part(const Polynomial& p);

struct QuadraticFactor {
    Polynomial factor; ///< monic, irreducible over the rationals
    unsigned multiplicity = 0;
    /// b^2 - 4c of t^2 + b t + c
    [[nodiscard]] Rational discriminant() const;
};

struct SmallFactorization {
    std::vector<std::pair<Rational, unsigned>> roots; ///< sorted ascending
    std::vector<QuadraticFactor> quadratics;
    Polynomial remainder; ///< includes the leading coefficient of the input
};

/// Rational roots and, for remainders of degree <= 4, monic rational quadratic
/// factors. Anything else stays in the remainder.
SmallFactorization factor_small(const Polynomial& p);

} // namespace liecent
