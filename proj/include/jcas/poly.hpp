#ifndef JCAS_POLY_HPP
#define JCAS_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <jcas/rational.hpp>

namespace jcas {

// Variable names plus the exponent denominator D: every exponent is stored as
// an integer numerator over D, so the exponent lattice is (1/D)Z per variable.
class Ring {
public:
    explicit Ring(std::vector<std::string> vars, std::int64_t denom = 1);

    std::size_t nvars() const noexcept { return vars_.size(); }
    const std::vector<std::string> &vars() const noexcept { return vars_; }
    std::int64_t denom() const noexcept { return denom_; }

    std::optional<std::size_t> find(std::string_view name) const;
    // Throws ContextError for an unknown variable.
    std::size_t index(std::string_view name) const;

    bool operator==(const Ring &other) const
    {
        return denom_ == other.denom_ && vars_ == other.vars_;
    }

private:
    std::vector<std::string> vars_;
    std::int64_t denom_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars, std::int64_t denom = 1);

bool same_ring(const RingPtr &a, const RingPtr &b);

// Exponent numerators, one per ring variable.
using Exponents = std::vector<std::int64_t>;

struct ExponentsHash {
    std::size_t operator()(const Exponents &e) const noexcept;
};

// Canonical term order: graded lexicographic, descending.
bool grlex_greater(const Exponents &a, const Exponents &b);

struct Term {
    Exponents exps;
    Rational coeff;

    bool operator==(const Term &o) const { return coeff == o.coeff && exps == o.exps; }
};

// Sparse multivariate Laurent polynomial with rational coefficients and
// exponents on the ring lattice. Immutable value type; terms are kept sorted
// in descending grlex order with no zero coefficients, so structural equality
// is mathematical equality.
class Poly {
public:
    explicit Poly(RingPtr ring);

    static Poly constant(RingPtr ring, const Rational &c);
    static Poly variable(RingPtr ring, std::string_view name);
    static Poly monomial(RingPtr ring, Exponents exps, const Rational &c = 1);
    // Combines duplicate exponents and drops zeros.
    static Poly from_terms(RingPtr ring, std::vector<Term> terms);
    // Terms must already be canonical (sorted, distinct, nonzero).
    static Poly from_sorted_unchecked(RingPtr ring, std::vector<Term> terms);

    const RingPtr &ring() const noexcept { return ring_; }
    const std::vector<Term> &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    Rational coeff(const Exponents &exps) const;
    Rational constant_term() const;
    // Leading term in grlex order; throws DomainError on zero.
    const Term &leading_term() const;

    Poly operator-() const;
    Poly &operator+=(const Poly &o);
    Poly &operator-=(const Poly &o);
    Poly &operator*=(const Poly &o);
    Poly &operator*=(const Rational &c);
    Poly &operator/=(const Rational &c);

    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator*(const Poly &a, const Poly &b);
    friend Poly operator*(Poly a, const Rational &c) { return a *= c; }
    friend Poly operator*(const Rational &c, Poly a) { return a *= c; }
    friend Poly operator/(Poly a, const Rational &c) { return a /= c; }

    bool operator==(const Poly &o) const;
    bool operator!=(const Poly &o) const { return !(*this == o); }

    Poly pow(unsigned long k) const;
    // Integer power allowing negative exponents for monomials only.
    Poly ipow(long k) const;

    // Inverse of a monomial (a unit of the Laurent ring).
    Poly monomial_inverse() const;

    // Multiplies by a monomial given by exponent numerators.
    Poly shift(const Exponents &exps) const;

private:
    void check_ring(const Poly &o) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

// Accumulates terms in a hash map; used by multiplication and builders.
class PolyAccumulator {
public:
    explicit PolyAccumulator(RingPtr ring) : ring_(std::move(ring)) {}
    void add(const Exponents &exps, const Rational &c);
    void add_product(const Exponents &exps, const Rational &a, const Rational &b);
    void add(const Poly &p, const Rational &scale = 1);
    Poly finish();

private:
    RingPtr ring_;
    std::unordered_map<Exponents, Rational, ExponentsHash> acc_;
    Rational tmp_;
};

// ---- Free operations ----

// Partial derivative with respect to a variable (exponents may be rational).
Poly derivative(const Poly &f, std::string_view var);

// Ring homomorphism x_v -> images[v]. Every variable of f with a nonzero
// exponent must have an image in `target`. Negative integer exponents need a
// monomial image; fractional exponents need a monomial image whose root stays
// on the target lattice (LatticeError otherwise).
Poly substitute(const Poly &f, const std::map<std::string, Poly> &images, const RingPtr &target);

// Re-expresses f in another ring, matching variables by name. The target
// denominator must be a multiple of the source one.
Poly change_ring(const Poly &f, const RingPtr &target);

// Rational power of a monomial c*x^e: requires an exact root of c and lattice
// exponents. Throws RootError / LatticeError.
Poly monomial_power(const Poly &mono, const Rational &power);

// Groups f by the exponent numerator of `var`; the returned polynomials do
// not contain `var`.
std::map<std::int64_t, Poly> collect(const Poly &f, std::size_t var);

// Sets some variables to rational values. Fractional exponents need exact roots.
Poly evaluate(const Poly &f, const std::map<std::string, Rational> &values);

// Full evaluation to a rational number.
Rational evaluate_all(const Poly &f, const std::map<std::string, Rational> &values);

// Weighted degree of an exponent vector: sum_i w_i * e_i / D.
Rational weighted_degree(const Exponents &exps, const std::vector<Rational> &weights, std::int64_t denom);

// Maximum/minimum exponent (as rational) of a variable; f must be nonzero.
Rational max_exponent(const Poly &f, std::size_t var);
Rational min_exponent(const Poly &f, std::size_t var);

bool has_negative_exponents(const Poly &f);
bool has_fractional_exponents(const Poly &f);

// Human-readable form, e.g. "x^2*y - 1/2*x^(1/3) + 3".
std::string to_string(const Poly &f);

} // namespace jcas

#endif
