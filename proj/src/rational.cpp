#include "liecent/rational.hpp"

#include <cctype>

#include "liecent/errors.hpp"

namespace liecent {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(long num, long den)
{
    if (den == 0) {
        throw InputError("rational with zero denominator");
    }
    value_ = mpq_class(num, 1);
    value_ /= den;
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text)) {
        throw InputError("malformed rational '" + std::string(text) + "'");
    }
    mpq_class q(parse_integer(num_text));
    if (slash != std::string_view::npos) {
        const auto den_text = text.substr(slash + 1);
        if (!is_integer_literal(den_text) || den_text.front() == '-') {
            throw InputError("malformed rational '" + std::string(text) + "'");
        }
        const mpz_class den = parse_integer(den_text);
        if (den == 0) {
            throw InputError("rational with zero denominator '" + std::string(text) + "'");
        }
        q /= den;
    }
    return Rational(q);
}

std::string Rational::str() const
{
    if (value_.get_den() == 1) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

bool Rational::is_square() const
{
    return sign() >= 0 && mpz_perfect_square_p(value_.get_num_mpz_t()) != 0
        && mpz_perfect_square_p(value_.get_den_mpz_t()) != 0;
}

Rational Rational::sqrt() const
{
    if (!is_square()) {
        throw AlgebraError(str() + " has no rational square root");
    }
    mpz_class n = ::sqrt(value_.get_num());
    mpz_class d = ::sqrt(value_.get_den());
    return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw InputError("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational pow(const Rational& base, unsigned exponent)
{
    Rational result(1);
    for (unsigned i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return Rational(0);
    }
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i)
{
    Vector v(n);
    v.at(i) = Rational(1);
    return v;
}

bool is_zero(const Vector& v)
{
    for (const auto& x : v) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

} // namespace liecent
