#ifndef JCAS_TSCHIRNHAUSEN_HPP
#define JCAS_TSCHIRNHAUSEN_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <jcas/polygon.hpp>

namespace jcas {

// Monic univariate polynomial z^k + e_{k-2} z^{k-2} + ... + e_0 (the
// coefficient of z^{k-1} vanishes).
class Tschirnhausen {
public:
    // coeffs[j] is the coefficient of z^j; throws DomainError unless the
    // polynomial is monic of degree >= 1 with zero subleading coefficient.
    explicit Tschirnhausen(std::vector<Rational> coeffs);

    static Tschirnhausen monomial(std::size_t k);

    std::size_t degree() const noexcept { return c_.size() - 1; }
    const std::vector<Rational> &coeffs() const noexcept { return c_; }
    const Rational &coeff(std::size_t j) const { return c_.at(j); }

    // Adds lambda z^j; j must be at most degree - 2.
    Tschirnhausen plus_monomial(std::size_t j, const Rational &lambda) const;
    Tschirnhausen power(unsigned long a) const;
    // alpha(-z) scaled to stay monic; only valid for even degree.
    Tschirnhausen reflected() const;

    Poly compose(const Poly &E) const;
    // Composition from precomputed powers E^0..E^k.
    Poly compose(const std::vector<Poly> &powers) const;

    bool operator==(const Tschirnhausen &o) const { return c_ == o.c_; }

    std::string to_string(const std::string &var = "z") const;
    nlohmann::json to_json() const;

private:
    std::vector<Rational> c_;
};

// Q with unit corner x^{m/a} y^{n/a}, N0(Q) inside T_{m/a,n/a} and
// supp(F - Q^a) disjoint from the translated region N''. Preconditions:
// a | m, a | n, N0(F) inside T_{m,n} (PreconditionError) and unit corner
// coefficient (NormalizationError).
Poly extract_Q(const Poly &F, long a, long m, long n);

struct Decomposition {
    Poly E;
    long delta;
    Tschirnhausen alpha;
};

// Deepest decomposition Q = alpha(E) with rational E. If `corner` is given
// (a point of Q with coefficient 1), E is normalized so that its coefficient
// at corner/delta is +1; otherwise the grlex-leading coefficient of E is
// positive. FieldExtensionError when a deeper decomposition exists only over
// an extension of Q.
Decomposition decompose_principal(const Poly &Q, std::optional<std::pair<std::int64_t, std::int64_t>> corner = {});

struct RemainderResult {
    Poly Q;
    Poly R; // F - Q^a
    Poly Ecirc;
    long delta;
    Tschirnhausen alphaQ;
    Tschirnhausen alphaCirc;
    Poly Fcirc;
    LatticePolygon Vcirc;
    // Number of accepted single-coefficient moves after the start alpha_Q^a.
    int moves = 0;
};

// F = alphaCirc(Ecirc) + Fcirc with supp(Fcirc) in N0(F) minus N'' and
// N0(Fcirc) not reducible by any single-coefficient move.
RemainderResult minimize_remainder(const Poly &F, long a, long m, long n);

nlohmann::json remainder_to_json(const RemainderResult &r);

// True iff supp(P) avoids N'' and lies in N0(F).
bool in_tschirnhausen_window(const Poly &P, const LatticePolygon &N0F, const LatticePolygon &Nsecond);

struct StructureCheck {
    std::string name;
    bool ok;
    std::string witness; // empty when ok
};

std::vector<StructureCheck> verify_leading_structure(const Poly &Q, const Poly &E, long delta, const Poly *R, long a,
                                                     long m, long n);
std::vector<StructureCheck> verify_leading_structure(const RemainderResult &r, long a, long m, long n);

nlohmann::json structure_to_json(const std::vector<StructureCheck> &checks);

} // namespace jcas

#endif
