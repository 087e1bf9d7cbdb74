#ifndef JCAS_DIVISION_HPP
#define JCAS_DIVISION_HPP

#include <optional>

#include <jcas/poly.hpp>

namespace jcas {

// Cofactor g with f = L^k g, or nullopt. L must be x + c with c free of x
// (in practice x+1 or x+y). Laurent and fractional exponents in f are
// allowed; x is a unit coprime to L, so negative x-powers are cleared first.
std::optional<Poly> divide_by_binomial_power(const Poly &f, const Poly &L, unsigned k);

// Largest l with L^l | f (capped at cap); f = 0 gives cap.
unsigned binomial_multiplicity(const Poly &f, const Poly &L, unsigned cap);

Poly binomial_L(const RingPtr &ring, bool x_plus_y);

// Exact quotient f / g of polynomials with nonnegative exponents, or nullopt
// when g does not divide f.
std::optional<Poly> exact_divide(const Poly &f, const Poly &g);

} // namespace jcas

#endif
