#ifndef JCAS_RATIONAL_HPP
#define JCAS_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace jcas {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// Accepts "p", "-p", "p/q". Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational &q);

bool is_integer(const Rational &q);

// Exact floor of a rational.
Integer floor(const Rational &q);
Integer ceil(const Rational &q);

// Converts an integral rational to int64; throws DomainError if it is not an
// integer or does not fit.
std::int64_t to_int64(const Rational &q);
std::int64_t to_int64(const Integer &z);

// Exact k-th root of a rational (k >= 1) if it exists in Q. For even k the
// positive root is returned.
std::optional<Rational> rational_root(const Rational &q, unsigned long k);

// Generalized binomial coefficient A(A-1)...(A-k+1)/k!.
Rational binomial(const Rational &a, unsigned long k);

// q^e for integer e (e may be negative if q != 0).
Rational pow(const Rational &q, long e);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

// Floor division for signed 64-bit integers.
std::int64_t floor_div(std::int64_t a, std::int64_t b);

} // namespace jcas

#endif
