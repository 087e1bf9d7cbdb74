#ifndef JCAS_LAURENT_HPP
#define JCAS_LAURENT_HPP

#include <cstdint>
#include <map>

#include <jcas/poly.hpp>

namespace jcas {

// Element of Q[y]((x^-1)) known down to x^trunc_order (inclusive). Stored as
// a polynomial in the ring of the input; terms with x-exponent below the
// truncation order are never kept.
class LaurentSeriesX {
public:
    LaurentSeriesX(Poly poly, std::int64_t trunc_order, std::string x_name = "x");

    const Poly &poly() const noexcept { return poly_; }
    std::int64_t trunc_order() const noexcept { return trunc_; }
    std::size_t x_index() const noexcept { return xi_; }

    // x-exponent -> coefficient in the remaining variables.
    std::map<std::int64_t, Poly> coefficients() const;
    // Largest x-exponent present; nullopt for the zero series.
    std::optional<std::int64_t> leading_exponent() const;

    LaurentSeriesX operator+(const LaurentSeriesX &o) const;
    LaurentSeriesX operator-(const LaurentSeriesX &o) const;
    LaurentSeriesX operator*(const LaurentSeriesX &o) const;
    LaurentSeriesX operator*(const Rational &c) const;
    LaurentSeriesX pow(unsigned long k) const;

    // Drops terms below the given order (which must not be below the current one).
    LaurentSeriesX truncated(std::int64_t order) const;

private:
    Poly poly_;
    std::int64_t trunc_;
    std::size_t xi_;
};

// C with C^a = G above x^order and C = x + C_0 + C_{-1}x^{-1} + ...
// G must have integer x-exponents, x-degree a and x-leading coefficient 1.
LaurentSeriesX laurent_root(const Poly &G, unsigned a, std::int64_t order);

} // namespace jcas

#endif
