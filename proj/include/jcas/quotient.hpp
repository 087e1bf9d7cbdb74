#ifndef JCAS_QUOTIENT_HPP
#define JCAS_QUOTIENT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include <jcas/poly.hpp>

namespace jcas {

// Element of R2 / L^k written as sum_{j<k} coeffs[j] L^j. For L = x+1 the
// coefficients are Laurent polynomials in y (x rewritten as L - 1); for
// L = x+y they are Laurent polynomials in x (y rewritten as L - x). The
// representation is canonical, so equality is structural.
class QuotientElem {
public:
    QuotientElem(RingPtr ring, bool x_plus_y, unsigned k);

    unsigned k() const noexcept { return static_cast<unsigned>(coeffs_.size()); }
    bool x_plus_y() const noexcept { return xy_; }
    const std::vector<Poly> &coeffs() const noexcept { return coeffs_; }
    const RingPtr &ring() const noexcept { return ring_; }
    bool is_zero() const;

    QuotientElem operator+(const QuotientElem &o) const;
    QuotientElem operator-(const QuotientElem &o) const;
    QuotientElem operator*(const QuotientElem &o) const;
    bool operator==(const QuotientElem &o) const;

    // Back to R2 as sum coeffs[j] L^j.
    Poly lift() const;

    std::string to_string() const;

private:
    friend QuotientElem reduce_Pk(const Poly &f, bool x_plus_y, unsigned k);
    void check(const QuotientElem &o) const;

    RingPtr ring_;
    bool xy_;
    std::vector<Poly> coeffs_;
};

// P_k(f) for f in a ring with variables x and y. The rewritten variable (x for
// L = x+1, y for L = x+y) must have integer exponents (LatticeError).
QuotientElem reduce_Pk(const Poly &f, bool x_plus_y, unsigned k);

nlohmann::json quotient_to_json(const QuotientElem &q);

} // namespace jcas

#endif
