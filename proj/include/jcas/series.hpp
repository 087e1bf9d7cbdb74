#ifndef JCAS_SERIES_HPP
#define JCAS_SERIES_HPP

#include <cstddef>
#include <vector>

#include <jcas/poly.hpp>

namespace jcas {

// Power series in an implicit variable t, truncated at t^order (exclusive),
// with ExactPoly coefficients from one ring.
class TruncSeries {
public:
    TruncSeries(RingPtr ring, std::size_t order);
    TruncSeries(RingPtr ring, std::size_t order, std::vector<Poly> coeffs);

    const RingPtr &ring() const noexcept { return ring_; }
    std::size_t order() const noexcept { return coeffs_.size(); }
    const std::vector<Poly> &coeffs() const noexcept { return coeffs_; }

    // [S]_{t^j}; throws TruncationError if j >= order.
    const Poly &coeff(std::size_t j) const;
    void set_coeff(std::size_t j, Poly p);

    TruncSeries truncated(std::size_t order) const;

    TruncSeries &operator+=(const TruncSeries &o);
    TruncSeries &operator-=(const TruncSeries &o);
    TruncSeries &operator*=(const Rational &c);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries &b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries &b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries &a, const TruncSeries &b);
    friend TruncSeries operator*(TruncSeries a, const Rational &c) { return a *= c; }

    bool operator==(const TruncSeries &o) const;

    TruncSeries pow(unsigned long k) const;

private:
    RingPtr ring_;
    std::vector<Poly> coeffs_;
};

enum class FracPowerMethod {
    // sum_s binom(A, s) Z^s with Z = sum_{j>=1} (y_j / y_0) t^j; expands to the
    // falling-factorial multinomial weights term by term.
    Multinomial,
    // J.C.P. Miller's recurrence for powers of a series; much cheaper.
    Recurrence,
};

// (sum_j y_j t^j)^A truncated at t^order. y_0 must be a monomial whose
// coefficient has a rational root of the denominator of A (RootError
// otherwise); resulting exponents must stay on the ring lattice (LatticeError).
TruncSeries frac_power_series(const std::vector<Poly> &y, const Rational &A, std::size_t order,
                              FracPowerMethod method = FracPowerMethod::Recurrence);

// Coefficient of var^(num/D) in f, as a polynomial without that variable.
Poly coeff_in(const Poly &f, std::size_t var, std::int64_t num);

} // namespace jcas

#endif
