#include <jcas/rational.hpp>

#include <limits>
#include <numeric>

#include <jcas/error.hpp>

namespace jcas {

Rational make_rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) {
        throw DomainError("zero denominator");
    }
    Rational q{Integer(std::to_string(num)), Integer(std::to_string(den))};
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(s));
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) {
            throw ParseError("zero denominator in '" + s + "'");
        }
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument &) {
        throw ParseError("not a rational number: '" + s + "'");
    }
}

std::string to_string(const Rational &q) { return q.get_str(); }

bool is_integer(const Rational &q) { return q.get_den() == 1; }

Integer floor(const Rational &q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil(const Rational &q)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

std::int64_t to_int64(const Integer &z)
{
    if (!z.fits_slong_p()) {
        throw DomainError("integer does not fit in 64 bits: " + z.get_str());
    }
    return z.get_si();
}

std::int64_t to_int64(const Rational &q)
{
    if (!is_integer(q)) {
        throw DomainError("expected an integer, got " + q.get_str());
    }
    return to_int64(q.get_num());
}

namespace {

std::optional<Integer> integer_root(const Integer &z, unsigned long k)
{
    if (z < 0) {
        if (k % 2 == 0) {
            return std::nullopt;
        }
        auto r = integer_root(-z, k);
        if (!r) {
            return std::nullopt;
        }
        return Integer(-*r);
    }
    Integer r;
    if (mpz_root(r.get_mpz_t(), z.get_mpz_t(), k) == 0) {
        return std::nullopt;
    }
    return r;
}

} // namespace

std::optional<Rational> rational_root(const Rational &q, unsigned long k)
{
    if (k == 0) {
        throw DomainError("zeroth root");
    }
    auto num = integer_root(q.get_num(), k);
    if (!num) {
        return std::nullopt;
    }
    auto den = integer_root(q.get_den(), k);
    if (!den) {
        return std::nullopt;
    }
    Rational r(*num, *den);
    r.canonicalize();
    return r;
}

Rational binomial(const Rational &a, unsigned long k)
{
    Rational result = 1;
    for (unsigned long j = 0; j < k; ++j) {
        result *= (a - j);
        result /= static_cast<long>(j + 1);
    }
    return result;
}

Rational pow(const Rational &q, long e)
{
    if (e < 0) {
        if (q == 0) {
            throw DomainError("negative power of zero");
        }
        Rational inv = 1 / q;
        return pow(inv, -e);
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

} // namespace jcas
