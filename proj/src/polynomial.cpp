#include "liecent/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "liecent/errors.hpp"

namespace liecent {

Polynomial::Polynomial(Vector coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(Vector{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree)
{
    Vector v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& root) { return Polynomial(Vector{-root, Rational(1)}); }

Rational Polynomial::coefficient(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Polynomial Polynomial::monic() const
{
    if (is_zero()) {
        return *this;
    }
    const Rational lead = leading();
    Vector v = coeffs_;
    for (auto& c : v) {
        c /= lead;
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() <= 1) {
        return {};
    }
    Vector v(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        v[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    }
    return Polynomial(std::move(v));
}

Rational Polynomial::operator()(const Rational& x) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Matrix Polynomial::evaluate(const Matrix& m) const { return evaluate(m, Matrix::identity(m.rows())); }

Matrix Polynomial::evaluate(const Matrix& m, const Matrix& unit) const
{
    if (!m.is_square()) {
        throw InputError("polynomial evaluated at a non-square matrix");
    }
    // Horner with the unit in place of the identity.
    Matrix acc(m.rows(), m.cols());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * m + (*it) * unit;
    }
    return acc;
}

std::string Polynomial::str(const std::string& var) const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) {
            continue;
        }
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || !mag.is_one()) {
            os << mag.str();
        }
        if (k >= 1) {
            os << var;
        }
        if (k >= 2) {
            os << "^" << k;
        }
    }
    return os.str();
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] -= o.coeffs_[k];
    }
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    Vector v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& s, const Polynomial& p) { return Polynomial::constant(s) * p; }

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero()) {
        throw InputError("polynomial division by zero");
    }
    Polynomial rem = a;
    Vector quot(a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree() + 1) : 0);
    const Rational lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
        const Rational c = rem.leading() / lead;
        quot[shift] = c;
        rem -= Polynomial::monomial(c, shift) * b;
    }
    return {Polynomial(std::move(quot)), rem};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b)
{
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Polynomial inverse_mod(const Polynomial& a, const Polynomial& m)
{
    // Extended Euclid tracking only the coefficient of a.
    Polynomial r0 = m;
    Polynomial r1 = divmod(a, m).second;
    Polynomial s0;
    Polynomial s1 = Polynomial::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Polynomial s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0) {
        throw AlgebraError("inverse_mod: polynomials are not coprime");
    }
    return divmod(Rational(1) / r0.leading() * s0, m).second;
}

Polynomial power(const Polynomial& p, unsigned k)
{
    Polynomial result = Polynomial::constant(Rational(1));
    for (unsigned i = 0; i < k; ++i) {
        result = result * p;
    }
    return result;
}

Polynomial squarefree_part(const Polynomial& p)
{
    if (p.is_zero()) {
        throw InputError("squarefree_part of the zero polynomial");
    }
    const Polynomial g = gcd(p, p.derivative());
    return divmod(p, g).first.monic();
}

Rational QuadraticFactor::discriminant() const
{
    const Rational b = factor.coefficient(1);
    const Rational c = factor.coefficient(0);
    return b * b - Rational(4) * c;
}

namespace {

mpz_class lcm_of_denominators(const Polynomial& p)
{
    mpz_class l = 1;
    for (const auto& c : p.coefficients()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
    }
    return l;
}

/// Positive divisors of |n| (n nonzero).
std::vector<mpz_class> divisors(mpz_class n)
{
    n = abs(n);
    std::vector<mpz_class> small;
    std::vector<mpz_class> large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Divides p by q as often as it goes evenly.
unsigned strip_factor(Polynomial& p, const Polynomial& q)
{
    unsigned mult = 0;
    while (p.degree() >= q.degree()) {
        auto [quot, rem] = divmod(p, q);
        if (!rem.is_zero()) {
            break;
        }
        p = std::move(quot);
        ++mult;
    }
    return mult;
}

/// Searches a monic rational quadratic factor of a quartic without rational roots.
std::optional<Polynomial> quadratic_factor_of_quartic(const Polynomial& quartic)
{
    // Rescale to a monic integer polynomial q(s) = L^4 p(s / L); by Gauss's lemma a
    // rational factorization of q is an integer one.
    const Polynomial p = quartic.monic();
    const mpz_class lcm = lcm_of_denominators(p);
    const Rational scale(lcm);
    std::vector<mpz_class> q(5);
    for (unsigned k = 0; k <= 4; ++k) {
        const Rational c = p.coefficient(k) * pow(scale, 4 - k);
        q[k] = c.numerator();
    }
    if (q[0] == 0) {
        return std::nullopt;
    }
    // (s^2 + a s + b)(s^2 + c s + d): a + c = q3, b + d + ac = q2, ad + bc = q1, bd = q0.
    for (const auto& bpos : divisors(q[0])) {
        for (int sgn : {1, -1}) {
            const mpz_class b = bpos * sgn;
            const mpz_class d = q[0] / b;
            std::vector<mpz_class> candidates;
            if (d != b) {
                const mpz_class num = q[1] - q[3] * b;
                const mpz_class den = d - b;
                if (num % den != 0) {
                    continue;
                }
                candidates.push_back(num / den);
            } else {
                if (q[1] != q[3] * b) {
                    continue;
                }
                // a + c = q3, ac = q2 - 2b
                const mpz_class disc = q[3] * q[3] - 4 * (q[2] - 2 * b);
                if (disc < 0 || mpz_perfect_square_p(disc.get_mpz_t()) == 0) {
                    continue;
                }
                const mpz_class root = ::sqrt(disc);
                for (const mpz_class& twice_a : {mpz_class(q[3] + root), mpz_class(q[3] - root)}) {
                    if (twice_a % 2 == 0) {
                        candidates.push_back(twice_a / 2);
                    }
                }
            }
            for (const auto& a : candidates) {
                const mpz_class c = q[3] - a;
                if (b + d + a * c != q[2] || a * d + b * c != q[1]) {
                    continue;
                }
                // Undo the rescaling: s^2 + a s + b  ->  t^2 + (a/L) t + b/L^2.
                return Polynomial{Rational(b) / (scale * scale), Rational(a) / scale, Rational(1)};
            }
        }
    }
    return std::nullopt;
}

} // namespace

SmallFactorization factor_small(const Polynomial& p)
{
    if (p.is_zero()) {
        throw InputError("factor_small of the zero polynomial");
    }
    SmallFactorization out;
    Polynomial rest = p;

    if (const unsigned m0 = strip_factor(rest, Polynomial::linear(Rational(0))); m0 > 0) {
        out.roots.emplace_back(Rational(0), m0);
    }
    if (rest.degree() >= 1) {
        const mpz_class l = lcm_of_denominators(rest);
        const Rational lc = rest.coefficient(0) * Rational(l);
        const Rational ln = rest.leading() * Rational(l);
        std::set<Rational> candidates;
        for (const auto& r : divisors(lc.numerator())) {
            for (const auto& s : divisors(ln.numerator())) {
                const Rational c(mpq_class(r, s));
                candidates.insert(c);
                candidates.insert(-c);
            }
        }
        for (const auto& c : candidates) {
            if (rest.degree() < 1) {
                break;
            }
            if (const unsigned m = strip_factor(rest, Polynomial::linear(c)); m > 0) {
                out.roots.emplace_back(c, m);
            }
        }
    }
    std::sort(out.roots.begin(), out.roots.end());

    if (rest.degree() == 2) {
        out.quadratics.push_back({rest.monic(), 1});
        rest = Polynomial::constant(rest.leading());
    } else if (rest.degree() == 4) {
        if (auto quad = quadratic_factor_of_quartic(rest)) {
            const unsigned m = strip_factor(rest, *quad);
            out.quadratics.push_back({*quad, m});
            if (rest.degree() == 2) {
                out.quadratics.push_back({rest.monic(), 1});
                rest = Polynomial::constant(rest.leading());
            }
        }
    }
    out.remainder = rest;
    return out;
}

} // namespace liecent
